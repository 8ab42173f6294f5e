//! Camina-pair decisions by three independent criteria, plus the character
//! criterion when a table is available.

mod bounds;
mod census;

pub use bounds::{
    bound_report, script_c, verify_bounds, z2_commutes_with_derived, BoundReport, Check, CheckStatus, ScriptC,
    CHECK_IDS,
};
pub use census::{census, search_counterexample, summarize, CensusReport, GroupSummary, Predicate, SearchReport};

use crate::characters::{dixon_character_table, vanishes_off, CharacterTable};
use crate::error::CaminaError;
use crate::exec;
use crate::group::{ElementId, FiniteGroup, Subgroup};

/// A failing pair for one criterion: `g` outside `N` and, where the criterion
/// names one, the element of `N` it fails on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub g: ElementId,
    pub n: Option<ElementId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CriterionOutcome {
    fn from_witness(witness: Option<Witness>) -> Self {
        CriterionOutcome {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn validate_target(g: &FiniteGroup, n: &Subgroup) -> Result<(), CaminaError> {
    if n.is_trivial() {
        return Err(CaminaError::InvalidPairTarget("N is trivial"));
    }
    if n.is_whole() {
        return Err(CaminaError::InvalidPairTarget("N is the whole group"));
    }
    if !g.is_normal(n) {
        return Err(CaminaError::InvalidPairTarget("N is not normal"));
    }
    Ok(())
}

/// Every `g` outside `N` is conjugate to all of `gN`.
pub fn camina_by_classes(g: &FiniteGroup, n: &Subgroup) -> Result<CriterionOutcome, CaminaError> {
    validate_target(g, n)?;
    let classes = g.conjugacy_classes();
    let witness = exec::find_first(g.order(), |i| {
        let x = ElementId::from(i);
        if n.contains(x) {
            return None;
        }
        let cx = classes.class_of(x);
        n.members()
            .iter()
            .find(|&&m| classes.class_of(g.mul(x, m)) != cx)
            .map(|&m| Witness { g: x, n: Some(m) })
    });
    Ok(CriterionOutcome::from_witness(witness))
}

/// For every `g` outside `N`, each element of `N` is a commutator `[y, g]`.
pub fn camina_by_commutators(g: &FiniteGroup, n: &Subgroup) -> Result<CriterionOutcome, CaminaError> {
    validate_target(g, n)?;
    let witness = exec::find_first(g.order(), |i| {
        let x = ElementId::from(i);
        if n.contains(x) {
            return None;
        }
        let mut hit = vec![false; g.order()];
        for y in g.elements() {
            hit[g.commutator(y, x).index()] = true;
        }
        n.members()
            .iter()
            .find(|m| !hit[m.index()])
            .map(|&m| Witness { g: x, n: Some(m) })
    });
    Ok(CriterionOutcome::from_witness(witness))
}

/// `|C_G(g)| = |C_{G/N}(gN)|` for every `g` outside `N`.
pub fn camina_by_centralizers(g: &FiniteGroup, n: &Subgroup) -> Result<CriterionOutcome, CaminaError> {
    validate_target(g, n)?;
    let q = g.quotient(n)?;
    let witness = exec::find_first(g.order(), |i| {
        let x = ElementId::from(i);
        if n.contains(x) {
            return None;
        }
        (g.centralizer_order(x) != q.group.centralizer_order(q.project(x))).then_some(Witness { g: x, n: None })
    });
    Ok(CriterionOutcome::from_witness(witness))
}

/// Every character in `Irr(G|N)` vanishes on `G \ N`. The witness names the
/// representative of the first class where some such character is nonzero.
pub fn camina_by_characters(
    g: &FiniteGroup,
    n: &Subgroup,
    table: &CharacterTable,
) -> Result<CriterionOutcome, CaminaError> {
    validate_target(g, n)?;
    let witness = vanishes_off(table, g, n).map(|(_, class)| Witness {
        g: table.classes[class].0,
        n: None,
    });
    Ok(CriterionOutcome::from_witness(witness))
}

/// The outcome of all criteria for one pair `(G, N)`.
#[derive(Clone, Debug)]
pub struct CaminaVerdict {
    pub pair_target: Subgroup,
    pub by_classes: bool,
    pub by_commutators: bool,
    pub by_centralizers: bool,
    /// Present when a character table was supplied.
    pub by_characters: Option<bool>,
    /// First failing pair of the class criterion.
    pub witness: Option<Witness>,
    /// `(G, G')` is a Camina pair; false when `G'` is trivial or all of `G`.
    pub is_camina_group: bool,
}

impl CaminaVerdict {
    pub fn holds(&self) -> bool {
        self.by_classes
    }
}

/// Runs every criterion on `(G, N)` and insists they agree.
pub fn camina_pair_verdict(
    g: &FiniteGroup,
    n: &Subgroup,
    table: Option<&CharacterTable>,
) -> Result<CaminaVerdict, CaminaError> {
    let (by_classes, by_commutators, by_centralizers, by_characters, witness) = decide(g, n, table)?;
    Ok(CaminaVerdict {
        pair_target: n.clone(),
        by_classes,
        by_commutators,
        by_centralizers,
        by_characters,
        witness,
        is_camina_group: is_camina_group(g)?,
    })
}

type Decision = (bool, bool, bool, Option<bool>, Option<Witness>);

fn decide(g: &FiniteGroup, n: &Subgroup, table: Option<&CharacterTable>) -> Result<Decision, CaminaError> {
    let classes = camina_by_classes(g, n)?;
    let commutators = camina_by_commutators(g, n)?;
    let centralizers = camina_by_centralizers(g, n)?;
    let characters = table.map(|t| camina_by_characters(g, n, t)).transpose()?;
    let agree = classes.holds == commutators.holds
        && classes.holds == centralizers.holds
        && characters.is_none_or(|c| c.holds == classes.holds);
    if !agree {
        return Err(CaminaError::EquivalenceViolation {
            by_classes: classes.holds,
            by_commutators: commutators.holds,
            by_centralizers: centralizers.holds,
            by_characters: characters.map(|c| c.holds),
        });
    }
    Ok((
        classes.holds,
        commutators.holds,
        centralizers.holds,
        characters.map(|c| c.holds),
        classes.witness,
    ))
}

/// `(G, G')` is a Camina pair, with `1 < G' < G`.
pub fn is_camina_group(g: &FiniteGroup) -> Result<bool, CaminaError> {
    let derived = g.derived_subgroup();
    if derived.is_trivial() || derived.is_whole() {
        return Ok(false);
    }
    Ok(decide(g, &derived, None)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Character tables (and the character criterion) are computed only up to this order.
    pub character_table_max_order: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            character_table_max_order: 256,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CenterPairAnalysis {
    pub verdict: CaminaVerdict,
    /// Filled for true verdicts only.
    pub report: Option<BoundReport>,
    pub table: Option<CharacterTable>,
}

/// Decides whether `(G, Z(G))` is a Camina pair and, if it is, checks every bound.
pub fn analyze_center_pair(g: &FiniteGroup, opts: &AnalysisOptions) -> Result<CenterPairAnalysis, CaminaError> {
    let z = g.center();
    if z.is_trivial() {
        return Err(CaminaError::NotApplicable("the center is trivial"));
    }
    if z.is_whole() {
        return Err(CaminaError::NotApplicable("the group is abelian"));
    }
    let table = if g.order() <= opts.character_table_max_order {
        Some(dixon_character_table(g)?)
    } else {
        None
    };
    let verdict = camina_pair_verdict(g, &z, table.as_ref())?;
    let report = verdict
        .holds()
        .then(|| verify_bounds(g, &verdict, bound_report(g), table.as_ref()));
    Ok(CenterPairAnalysis { verdict, report, table })
}
