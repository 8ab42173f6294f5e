//! Per-group evaluation of every inequality and implication known for
//! center Camina pairs.

use std::fmt;

use super::CaminaVerdict;
use crate::characters::{verify_fully_ramified, CharacterTable};
use crate::error::CaminaError;
use crate::exec;
use crate::group::{prime_power, ElementId, FiniteGroup, Subgroup};
use crate::structure::{
    lower_central_series, quotient_exponent_over_center, section_exponent, subgroups_commute, upper_central_series,
    Nilpotency, QuotientExponent,
};

/// Column order of the checks in every report.
pub const CHECK_IDS: [&str; 22] = [
    "T1.1",
    "T1.2",
    "T1.3",
    "T1.4",
    "T1.5",
    "Texp",
    "L2.1",
    "L2.2",
    "L2.3",
    "L2.4",
    "Lcents",
    "LZ2Gp",
    "Cor2grp",
    "Cor2grpEq",
    "Cm2",
    "CGpZ",
    "T5.1",
    "LDquo",
    "Lidxp",
    "LidxpConv",
    "Csmall",
    "LscriptC",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Vacuous => "VACUOUS",
        })
    }
}

/// One implication: the hypothesis and conclusion are both recorded so a
/// vacuous pass is distinguishable from a real one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: &'static str,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Check {
    pub fn status(&self) -> CheckStatus {
        match (self.hypothesis, self.conclusion) {
            (false, _) => CheckStatus::Vacuous,
            (true, true) => CheckStatus::Pass,
            (true, false) => CheckStatus::Fail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status() != CheckStatus::Fail
    }
}

/// `|G:Z| = p^n`, `|Z| = p^m`, `|G':Z| = p^l`, plus the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub p: usize,
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub class_c: Nilpotency,
    /// `G/Z` has exponent `p^quotient_exponent_n`.
    pub quotient_exponent_n: Option<u32>,
    pub checks: Vec<Check>,
}

impl BoundReport {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn exact_log(x: usize, p: usize) -> Option<u32> {
    let mut k = 0;
    let mut y = x;
    while y > 1 {
        if p < 2 || !y.is_multiple_of(p) {
            return None;
        }
        y /= p;
        k += 1;
    }
    Some(k)
}

fn log_or_zero(x: usize, p: usize) -> u32 {
    exact_log(x, p).unwrap_or(0)
}

/// The numeric invariants, with no checks yet. `p` is the smallest prime
/// dividing `|G|`.
pub fn bound_report(g: &FiniteGroup) -> BoundReport {
    let z = g.center();
    let derived = g.derived_subgroup();
    let p = (2..=g.order()).find(|d| g.order().is_multiple_of(*d)).unwrap_or(1);
    let zd = g.join(&z, &derived);
    BoundReport {
        p,
        n: log_or_zero(z.index(), p),
        m: log_or_zero(z.order(), p),
        l: log_or_zero(zd.order() / z.order(), p),
        class_c: lower_central_series(g).class,
        quotient_exponent_n: match quotient_exponent_over_center(g) {
            QuotientExponent::PrimePower { p: q, n } if q == p => Some(n),
            QuotientExponent::Trivial => Some(0),
            _ => None,
        },
        checks: Vec::new(),
    }
}

/// `𝓒 = { x : C(x) ∩ G' > Z }`, compared elementwise with the union of the
/// centralizers of elements of `G' \ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptC {
    pub members: Vec<ElementId>,
    pub matches_union: bool,
}

pub fn script_c(g: &FiniteGroup, z: &Subgroup, derived: &Subgroup) -> Result<ScriptC, CaminaError> {
    if !z.is_subset_of(derived) || z.order() == derived.order() {
        return Err(CaminaError::NotApplicable(
            "the center is not properly inside the derived subgroup",
        ));
    }
    let inside = exec::map_range(g.order(), |i| {
        let x = ElementId::from(i);
        derived.members().iter().filter(|&&a| g.commutes(x, a)).count() > z.order()
    });
    let mut union = vec![false; g.order()];
    for &a in derived.members().iter().filter(|&&a| !z.contains(a)) {
        for y in g.elements().filter(|&y| g.commutes(a, y)) {
            union[y.index()] = true;
        }
    }
    Ok(ScriptC {
        members: g.elements().filter(|x| inside[x.index()]).collect(),
        matches_union: inside == union,
    })
}

/// `C(g)` and `D(g)` for one representative of each noncentral coset of
/// `Z`; both are constant on cosets.
struct CosetData {
    rep: ElementId,
    c: Subgroup,
    d: Subgroup,
}

fn coset_data(g: &FiniteGroup, z: &Subgroup) -> Vec<CosetData> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen[x.index()] {
            continue;
        }
        for &w in z.members() {
            seen[g.mul(x, w).index()] = true;
        }
        if !z.contains(x) {
            reps.push(x);
        }
    }
    exec::map_range(reps.len(), |i| {
        let rep = reps[i];
        let d = crate::structure::d_subgroup(g, rep, z).expect("representatives are noncentral");
        CosetData {
            rep,
            c: g.centralizer(rep),
            d,
        }
    })
}

fn quotient_is_abelian(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> bool {
    let gens = a.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &x)| gens[i + 1..].iter().all(|&y| b.contains(g.commutator(x, y))))
}

fn normalizes(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> bool {
    a.generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| b.contains(g.conjugate(y, x))))
}

/// `D(g)/C(g)` has the order of `Z` and is elementary abelian.
fn cents_holds(g: &FiniteGroup, local: &CosetData, z: &Subgroup, p: usize) -> bool {
    local.d.order() == local.c.order() * z.order()
        && local.c.is_subset_of(&local.d)
        && normalizes(g, &local.d, &local.c)
        && quotient_is_abelian(g, &local.d, &local.c)
        && local
            .d
            .generators()
            .iter()
            .all(|&x| local.c.contains(g.pow(x, p as u64)))
}

/// Evaluates every check against `(G, Z(G))`, assuming the verdict holds.
pub fn verify_bounds(
    g: &FiniteGroup,
    verdict: &CaminaVerdict,
    mut report: BoundReport,
    table: Option<&CharacterTable>,
) -> BoundReport {
    let z = g.center();
    let derived = g.derived_subgroup();
    let upper = upper_central_series(g);
    let lower = lower_central_series(g);
    let z2 = upper
        .terms
        .get(2)
        .cloned()
        .unwrap_or_else(|| upper.terms.last().expect("nonempty").clone());
    let locals = coset_data(g, &z);
    let p = report.p;
    let (n, m, l) = (report.n as i64, report.m as i64, report.l as i64);
    let proper = z.is_subset_of(&derived) && z.order() < derived.order();
    let mut checks = Vec::with_capacity(CHECK_IDS.len());
    let mut push = |id: &'static str, hypothesis: bool, conclusion: bool| {
        checks.push(Check {
            id,
            hypothesis,
            conclusion,
        })
    };

    push("T1.1", true, z.order() <= derived.index());
    push("T1.2", proper, m < 3 * l);
    push("T1.3", true, 4 * m < 3 * n);
    push("T1.4", proper, 2 * m <= n || m + 4 <= n);
    let qexp = report.quotient_exponent_n;
    push("T1.5", qexp.is_some_and(|e| e >= 2), 2 * m < n);
    push(
        "Texp",
        qexp.is_some_and(|e| e >= 1),
        qexp.is_some_and(|e| m * e as i64 + e as i64 <= n),
    );

    let p_group = prime_power(g.order()).is_some_and(|(q, _)| q == p)
        && g.elements().all(|x| exact_log(g.element_order(x), p).is_some());
    push("L2.1", true, p_group);

    let layers_exponent_p =
        upper.class.class().is_some() && upper.terms.windows(2).all(|w| section_exponent(g, &w[1], &w[0]) == p);
    push("L2.2", true, layers_exponent_p);

    let center_is_last_term = match lower.class {
        Nilpotency::Class(c) if c >= 1 => lower.term(c) == Some(&z),
        _ => false,
    };
    push("L2.3", true, center_is_last_term);

    let ramified = table.is_none_or(|t| verify_fully_ramified(t, g, &z).holds);
    push("L2.4", true, n % 2 == 0 && ramified);

    let z_elementary = z.generators().iter().all(|&w| g.pow(w, p as u64).is_identity());
    let cents = z_elementary && locals.iter().all(|loc| cents_holds(g, loc, &z, p));
    push("Lcents", true, cents);

    let g_mod_z_nonabelian = !derived.is_subset_of(&z);
    let gp_z2 = g.join(&derived, &z2);
    push("LZ2Gp", g_mod_z_nonabelian, gp_z2.index() >= z.order());

    push("Cor2grp", p == 2, 2 * m <= n);
    push("Cor2grpEq", p == 2 && 2 * m == n, verdict.is_camina_group);
    push("Cm2", true, 2 * m <= n || m + 3 <= n);
    push("CGpZ", l == 1, 2 * m <= n);
    push("T5.1", proper && l >= 1, m < 3 * l);

    let d_mod_z_abelian: Vec<bool> = locals.iter().map(|loc| quotient_is_abelian(g, &loc.d, &z)).collect();
    let meets_derived_in_center: Vec<bool> = locals
        .iter()
        .map(|loc| loc.c.intersection(g, &derived).order() == z.order())
        .collect();
    push(
        "LDquo",
        meets_derived_in_center.iter().any(|&b| b),
        meets_derived_in_center
            .iter()
            .zip(&d_mod_z_abelian)
            .all(|(&hyp, &ab)| !hyp || ab),
    );

    let index_p: Vec<bool> = locals.iter().map(|loc| loc.d.index() == p).collect();
    push(
        "Lidxp",
        index_p.iter().zip(&d_mod_z_abelian).any(|(&ip, &ab)| ip && ab),
        2 * m <= n,
    );
    push(
        "LidxpConv",
        2 * m > n,
        index_p.iter().zip(&d_mod_z_abelian).all(|(&ip, &ab)| !ip || !ab),
    );

    let in_derived: Vec<&CosetData> = locals.iter().filter(|loc| derived.contains(loc.rep)).collect();
    let small_hypothesis = proper
        && in_derived
            .iter()
            .any(|a| z2.contains(a.rep) && in_derived.iter().all(|b| b.c.is_subset_of(&a.c)));
    push("Csmall", small_hypothesis, 3 * m + 2 <= 2 * n);

    let script = script_c(g, &z, &derived).ok();
    let centralizer_of_derived = g.centralizer_of_subgroup(&derived);
    let script_ok = script.as_ref().is_some_and(|s| {
        let mut mask = vec![false; g.order()];
        for &x in &s.members {
            mask[x.index()] = true;
        }
        s.matches_union
            && derived.members().iter().all(|x| mask[x.index()])
            && centralizer_of_derived.members().iter().all(|x| mask[x.index()])
    });
    push("LscriptC", proper, script_ok);

    debug_assert_eq!(checks.iter().map(|c| c.id).collect::<Vec<_>>(), CHECK_IDS);
    report.checks = checks;
    report
}

/// `[Z_2, G'] = 1`, which holds in every group.
pub fn z2_commutes_with_derived(g: &FiniteGroup) -> bool {
    let upper = upper_central_series(g);
    let z2 = upper
        .terms
        .get(2)
        .unwrap_or_else(|| upper.terms.last().expect("nonempty"));
    subgroups_commute(g, z2, &g.derived_subgroup())
}
