//! The verification harness: one TSV row per group.

use std::fmt::Write as _;

use crate::camina::{
    analyze_center_pair, bound_report, z2_commutes_with_derived, AnalysisOptions, BoundReport, CheckStatus, CHECK_IDS,
};
use crate::corpus::GroupLabel;
use crate::error::CaminaError;
use crate::exec;
use crate::group::{prime_power, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    CaminaPair,
    NotCaminaPair,
    /// `Z(G)` is trivial or all of `G`.
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CaminaPair => "camina",
            Verdict::NotCaminaPair => "not_camina",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HarnessRow {
    pub label: GroupLabel,
    pub order: usize,
    pub verdict: Verdict,
    /// Numbers are filled for every `p`-group; checks only for Camina pairs.
    pub report: Option<BoundReport>,
    /// `[Z_2, G'] = 1`, evaluated on every group.
    pub z2_commutes: bool,
}

impl HarnessRow {
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self
            .report
            .iter()
            .flat_map(|r| r.checks.iter())
            .filter(|c| c.status() == CheckStatus::Fail)
            .map(|c| c.id)
            .collect();
        if !self.z2_commutes {
            out.push("Z2Gcomm");
        }
        out
    }
}

pub fn analyze_row(label: GroupLabel, g: &FiniteGroup, opts: &AnalysisOptions) -> Result<HarnessRow, CaminaError> {
    let (verdict, report) = match analyze_center_pair(g, opts) {
        Ok(a) if a.verdict.holds() => (Verdict::CaminaPair, a.report),
        Ok(_) => (Verdict::NotCaminaPair, None),
        Err(CaminaError::NotApplicable(_)) => (Verdict::NotApplicable, None),
        Err(e) => return Err(e),
    };
    let report = report.or_else(|| prime_power(g.order()).map(|_| bound_report(g)));
    Ok(HarnessRow {
        label,
        order: g.order(),
        verdict,
        report,
        z2_commutes: z2_commutes_with_derived(g),
    })
}

/// Analyzes every group on `workers` threads. Rows come back sorted by label.
pub fn run_harness(
    groups: &[(GroupLabel, FiniteGroup)],
    workers: usize,
    opts: &AnalysisOptions,
) -> Result<Vec<HarnessRow>, (GroupLabel, CaminaError)> {
    let results = exec::run_batch(groups, workers, |(label, g)| {
        analyze_row(label.clone(), g, opts).map_err(|e| (label.clone(), e))
    });
    let mut rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(rows)
}

pub fn tsv_header() -> String {
    let mut cols = vec!["group_id", "order", "p", "n", "m", "l", "class_c", "verdict"];
    cols.extend(CHECK_IDS);
    cols.push("Z2Gcomm");
    cols.join("\t")
}

pub fn tsv_row(row: &HarnessRow) -> String {
    let mut s = format!("{}\t{}", row.label, row.order);
    match &row.report {
        Some(r) => {
            let class = r.class_c.class().map_or("-".to_string(), |c| c.to_string());
            write!(s, "\t{}\t{}\t{}\t{}\t{}", r.p, r.n, r.m, r.l, class).expect("string write");
        }
        None => s.push_str("\t-\t-\t-\t-\t-"),
    }
    write!(s, "\t{}", row.verdict.as_str()).expect("string write");
    let checks = row.report.as_ref().filter(|_| row.verdict == Verdict::CaminaPair);
    for id in CHECK_IDS {
        let status = checks
            .and_then(|r| r.check(id))
            .map_or(CheckStatus::Vacuous, |c| c.status());
        write!(s, "\t{status}").expect("string write");
    }
    let z2 = if row.z2_commutes {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    write!(s, "\t{z2}").expect("string write");
    s
}

pub fn tsv(rows: &[HarnessRow]) -> String {
    let mut out = tsv_header();
    out.push('\n');
    for row in rows {
        out.push_str(&tsv_row(row));
        out.push('\n');
    }
    out
}
