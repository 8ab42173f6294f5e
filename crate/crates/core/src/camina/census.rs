//! Counting and scanning over collections of groups.

use std::fmt;
use std::str::FromStr;

use super::{analyze_center_pair, camina_pair_verdict, is_camina_group, AnalysisOptions, BoundReport};
use crate::error::CaminaError;
use crate::exec;
use crate::group::FiniteGroup;

/// Light per-group data that every census predicate is computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub order: usize,
    pub center_order: usize,
    /// `None` when `Z(G)` is trivial or all of `G`.
    pub center_pair: Option<bool>,
    pub camina_group: bool,
}

impl GroupSummary {
    fn center_index(&self) -> usize {
        self.order / self.center_order
    }
}

pub fn summarize(g: &FiniteGroup) -> Result<GroupSummary, CaminaError> {
    let z = g.center();
    let center_pair = if z.is_trivial() || z.is_whole() {
        None
    } else {
        Some(camina_pair_verdict(g, &z, None)?.holds())
    };
    Ok(GroupSummary {
        order: g.order(),
        center_order: z.order(),
        center_pair,
        camina_group: is_camina_group(g)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// `(G, Z(G))` is a Camina pair.
    CenterPair,
    /// ... and `G` is not a Camina group.
    CenterPairNotCaminaGroup,
    /// `(G, G')` is a Camina pair.
    CaminaGroup,
    /// Center pair with `|Z|^2 > |G:Z|`.
    CenterPairStrict,
    /// Center pair with `|Z|^2 = |G:Z|`.
    CenterPairEquality,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::CenterPair,
        Predicate::CenterPairNotCaminaGroup,
        Predicate::CaminaGroup,
        Predicate::CenterPairStrict,
        Predicate::CenterPairEquality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::CenterPair => "center-pair",
            Predicate::CenterPairNotCaminaGroup => "center-pair-not-camina-group",
            Predicate::CaminaGroup => "camina-group",
            Predicate::CenterPairStrict => "center-pair-strict",
            Predicate::CenterPairEquality => "center-pair-equality",
        }
    }

    pub fn eval(self, s: &GroupSummary) -> bool {
        let pair = s.center_pair == Some(true);
        let z2 = s.center_order * s.center_order;
        match self {
            Predicate::CenterPair => pair,
            Predicate::CenterPairNotCaminaGroup => pair && !s.camina_group,
            Predicate::CaminaGroup => s.camina_group,
            Predicate::CenterPairStrict => pair && z2 > s.center_index(),
            Predicate::CenterPairEquality => pair && z2 == s.center_index(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Predicate::ALL.iter().map(|p| p.name()).collect();
            format!("unknown predicate {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport<L> {
    pub order: Option<usize>,
    pub predicate: Predicate,
    pub scanned: usize,
    pub hits: Vec<L>,
}

/// Labels of the groups (of the given order, if any) satisfying `predicate`,
/// in input order.
pub fn census<L>(
    groups: &[(L, FiniteGroup)],
    order: Option<usize>,
    predicate: Predicate,
    workers: usize,
) -> Result<CensusReport<L>, CaminaError>
where
    L: Clone + Send + Sync,
{
    let selected: Vec<&(L, FiniteGroup)> = groups
        .iter()
        .filter(|(_, g)| order.is_none_or(|o| g.order() == o))
        .collect();
    let summaries = exec::run_batch(&selected, workers, |(_, g)| summarize(g));
    let mut hits = Vec::new();
    for ((label, _), summary) in selected.iter().zip(summaries) {
        if predicate.eval(&summary?) {
            hits.push(label.clone());
        }
    }
    Ok(CensusReport {
        order,
        predicate,
        scanned: selected.len(),
        hits,
    })
}

#[derive(Clone, Debug)]
pub struct SearchReport<L> {
    pub scanned: usize,
    /// Center Camina pairs with `|Z|^2 > |G:Z|`.
    pub strict: Vec<(L, BoundReport)>,
    /// Center Camina pairs with `|Z|^2 = |G:Z|`.
    pub equality: Vec<(L, BoundReport)>,
}

/// Scans every group up to `max_order` for center Camina pairs with a large center.
pub fn search_counterexample<L>(
    groups: &[(L, FiniteGroup)],
    max_order: usize,
    workers: usize,
    opts: &AnalysisOptions,
) -> Result<SearchReport<L>, CaminaError>
where
    L: Clone + Send + Sync,
{
    let selected: Vec<&(L, FiniteGroup)> = groups.iter().filter(|(_, g)| g.order() <= max_order).collect();
    let results = exec::run_batch(&selected, workers, |(_, g)| match analyze_center_pair(g, opts) {
        Ok(a) => Ok(a.report),
        Err(CaminaError::NotApplicable(_)) => Ok(None),
        Err(e) => Err(e),
    });
    let mut strict = Vec::new();
    let mut equality = Vec::new();
    for ((label, _), result) in selected.iter().zip(results) {
        let Some(report) = result? else { continue };
        if 2 * report.m > report.n {
            strict.push((label.clone(), report));
        } else if 2 * report.m == report.n {
            equality.push((label.clone(), report));
        }
    }
    Ok(SearchReport {
        scanned: selected.len(),
        strict,
        equality,
    })
}
