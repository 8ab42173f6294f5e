use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use camina_core::camina::{
    analyze_center_pair, census, search_counterexample, AnalysisOptions, BoundReport, CheckStatus, Predicate,
};
use camina_core::characters::dixon_character_table;
use camina_core::corpus::{builtin_families, parse_corpus, FamilySpec, GroupLabel};
use camina_core::error::CaminaError;
use camina_core::exec::default_workers;
use camina_core::report::{run_harness, tsv};
use camina_core::structure::{lower_central_series, upper_central_series};
use camina_core::FiniteGroup;

const FAMILY_HELP: &str = "\
Family specs are name:params, joined with * for direct products:
  cyclic:n  dihedral:n  quaternion:n (n = 2^k >= 8)  elementary_abelian:p,k
  extraspecial_p:p[,r]  extraspecial_p2:p[,r]  heisenberg:p[,k] (alias sl3_sylow)
  T:p,k (= heisenberg:p,k * cyclic:p)
Examples: quaternion:8  heisenberg:3  extraspecial_p:5  T:3,1  dihedral:8*cyclic:2

Exit status: 0 when every check passes or is vacuous, 2 when any check fails,
1 on an operational error.";

#[derive(Parser, Debug)]
#[command(name = "camina", version, about = "Decide when (G, Z(G)) is a Camina pair and check the bounds such pairs obey", after_help = FAMILY_HELP)]
struct Cli {
    /// Corpus file to load (repeatable).
    #[arg(long = "input", global = true)]
    inputs: Vec<PathBuf>,
    /// Largest group order that will be built.
    #[arg(long, global = true, default_value_t = 2048, value_parser = clap::value_parser!(u64).range(1..))]
    order_cap: u64,
    /// Worker threads for batch commands [default: available cores].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Character tables are only computed up to this order.
    #[arg(long, global = true, default_value_t = 256)]
    chartable_max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one group.
    Analyze(Target),
    /// Run every check on every loaded group and write a TSV report.
    Verify {
        /// Include the built-in families.
        #[arg(long)]
        families: bool,
        /// Largest order of built-in families to include.
        #[arg(long, default_value_t = 625)]
        max_order: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Count the loaded groups of one order satisfying a predicate.
    Census {
        #[arg(long)]
        order: Option<usize>,
        /// center-pair, center-pair-not-camina-group, camina-group,
        /// center-pair-strict, or center-pair-equality.
        #[arg(long)]
        predicate: Predicate,
        /// Include the built-in families.
        #[arg(long)]
        families: bool,
    },
    /// Look for center Camina pairs with |Z(G)|^2 > |G:Z(G)|.
    Search {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Include the built-in families.
        #[arg(long)]
        families: bool,
    },
    /// Print the character table of one group.
    Chartable(Target),
    /// List the built-in families.
    Families {
        #[arg(long, default_value_t = 625)]
        max_order: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Target {
    /// Library id order:index from a loaded corpus.
    #[arg(long)]
    id: Option<GroupLabel>,
    /// Built-in family spec.
    #[arg(long)]
    family: Option<String>,
}

struct Context_ {
    order_cap: usize,
    workers: usize,
    opts: AnalysisOptions,
    inputs: Vec<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Context_ {
        order_cap: usize::try_from(cli.order_cap)?,
        workers: cli.workers.map_or_else(default_workers, |w| w as usize),
        opts: AnalysisOptions {
            character_table_max_order: cli.chartable_max_order,
        },
        inputs: cli.inputs,
    };
    let mut out = String::new();
    let code = match cli.command {
        Command::Analyze(target) => {
            let (label, name, g) = resolve(&ctx, &target)?;
            cmd_analyze(&mut out, &ctx, &label, &name, &g)?
        }
        Command::Verify {
            families,
            max_order,
            report,
        } => {
            if ctx.inputs.is_empty() && !families {
                bail!("verify needs at least one --input or --families");
            }
            let groups = load(&ctx, families.then_some(max_order))?;
            let rows = run_harness(&groups, ctx.workers, &ctx.opts).map_err(|(label, e)| anyhow!("{label}: {e}"))?;
            let text = tsv(&rows);
            match report {
                Some(path) => std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?,
                None => out.push_str(&text),
            }
            let camina = rows
                .iter()
                .filter(|r| r.verdict == camina_core::report::Verdict::CaminaPair)
                .count();
            let failing: Vec<String> = rows
                .iter()
                .filter(|r| !r.failures().is_empty())
                .map(|r| format!("{} ({})", r.label, r.failures().join(",")))
                .collect();
            eprintln!(
                "rows: {}, camina pairs: {camina}, failing rows: {}",
                rows.len(),
                failing.len()
            );
            for f in &failing {
                eprintln!("FAIL {f}");
            }
            if failing.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Command::Census {
            order,
            predicate,
            families,
        } => {
            let groups = load(&ctx, families.then_some(ctx.order_cap))?;
            let report = census(&groups, order, predicate, ctx.workers)?;
            let scope = order.map_or("all orders".to_string(), |o| format!("order {o}"));
            writeln!(
                out,
                "{scope}, predicate {predicate}: {} of {}",
                report.hits.len(),
                report.scanned
            )?;
            for label in &report.hits {
                writeln!(out, "{label}")?;
            }
            ExitCode::SUCCESS
        }
        Command::Search { max_order, families } => {
            let groups = load(&ctx, families.then_some(max_order))?;
            let report = search_counterexample(&groups, max_order, ctx.workers, &ctx.opts)?;
            writeln!(out, "scanned {} groups of order at most {max_order}", report.scanned)?;
            if report.strict.is_empty() {
                writeln!(out, "no strict counterexample")?;
            }
            for (label, r) in &report.strict {
                writeln!(out, "STRICT {label}: p={} n={} m={} l={}", r.p, r.n, r.m, r.l)?;
            }
            let eq: Vec<String> = report.equality.iter().map(|(l, _)| l.to_string()).collect();
            writeln!(
                out,
                "equality cases: {}",
                if eq.is_empty() { "none".into() } else { eq.join(", ") }
            )?;
            if report.strict.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Command::Chartable(target) => {
            let (label, _, g) = resolve(&ctx, &target)?;
            cmd_chartable(&mut out, &label, &g)?;
            ExitCode::SUCCESS
        }
        Command::Families { max_order } => {
            for spec in builtin_families(max_order) {
                writeln!(out, "{spec}\t{}", spec.order().unwrap_or(0))?;
            }
            ExitCode::SUCCESS
        }
    };
    print!("{out}");
    Ok(code)
}

/// Every group in the inputs, plus the built-in families up to `families` when given.
fn load(ctx: &Context_, families: Option<usize>) -> Result<Vec<(GroupLabel, FiniteGroup)>> {
    let mut groups = Vec::new();
    for path in &ctx.inputs {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let entries = parse_corpus(&text, ctx.order_cap).with_context(|| format!("parsing {}", path.display()))?;
        groups.extend(entries.into_iter().map(|e| (e.label(), e.group)));
    }
    if let Some(max) = families {
        for spec in builtin_families(max.min(ctx.order_cap)) {
            let g = spec.build(ctx.order_cap)?;
            groups.push((GroupLabel::Family(spec.to_string()), g));
        }
    }
    Ok(groups)
}

fn resolve(ctx: &Context_, target: &Target) -> Result<(GroupLabel, String, FiniteGroup)> {
    if let Some(spec) = &target.family {
        let spec: FamilySpec = spec.parse()?;
        let g = spec.build(ctx.order_cap)?;
        return Ok((GroupLabel::Family(spec.to_string()), String::new(), g));
    }
    let id = target.id.clone().expect("clap enforces one target");
    for path in &ctx.inputs {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let entries = parse_corpus(&text, ctx.order_cap).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(e) = entries.into_iter().find(|e| e.label() == id) {
            return Ok((id, e.name, e.group));
        }
    }
    bail!("unknown group id {id}")
}

fn orders(terms: &[camina_core::Subgroup]) -> String {
    terms
        .iter()
        .map(|t| t.order().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_analyze(out: &mut String, ctx: &Context_, label: &GroupLabel, name: &str, g: &FiniteGroup) -> Result<ExitCode> {
    let z = g.center();
    let derived = g.derived_subgroup();
    let lower = lower_central_series(g);
    writeln!(out, "{}", format!("group {label} {name}").trim_end())?;
    writeln!(
        out,
        "order {}, center {}, derived {}, exponent {}",
        g.order(),
        z.order(),
        derived.order(),
        g.exponent()
    )?;
    writeln!(out, "nilpotency class: {}", lower.class)?;
    writeln!(out, "lower central series: {}", orders(&lower.terms))?;
    writeln!(out, "upper central series: {}", orders(&upper_central_series(g).terms))?;
    let analysis = match analyze_center_pair(g, &ctx.opts) {
        Ok(a) => a,
        Err(CaminaError::NotApplicable(why)) => {
            writeln!(out, "verdict: not applicable ({why})")?;
            return Ok(ExitCode::SUCCESS);
        }
        Err(e) => return Err(e.into()),
    };
    let v = &analysis.verdict;
    let chars = v.by_characters.map_or("not computed".to_string(), |b| b.to_string());
    writeln!(
        out,
        "verdict: {} (classes {}, commutators {}, centralizers {}, characters {chars})",
        if v.holds() {
            "(G, Z(G)) is a Camina pair"
        } else {
            "(G, Z(G)) is not a Camina pair"
        },
        v.by_classes,
        v.by_commutators,
        v.by_centralizers,
    )?;
    if let Some(w) = v.witness {
        match w.n {
            Some(n) => writeln!(
                out,
                "witness: {} is not conjugate to {}",
                g.label(w.g),
                g.label(g.mul(w.g, n))
            )?,
            None => writeln!(out, "witness: {}", g.label(w.g))?,
        }
    }
    writeln!(out, "camina group: {}", if v.is_camina_group { "yes" } else { "no" })?;
    let Some(report) = &analysis.report else {
        return Ok(ExitCode::SUCCESS);
    };
    write_report(out, report)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn write_report(out: &mut String, r: &BoundReport) -> Result<()> {
    let qexp = r.quotient_exponent_n.map_or("-".to_string(), |e| format!("p^{e}"));
    writeln!(
        out,
        "p={} n={} m={} l={} class={} exp(G/Z)={qexp}",
        r.p, r.n, r.m, r.l, r.class_c
    )?;
    for c in &r.checks {
        let status = c.status();
        let marker = if status == CheckStatus::Fail { "  <--" } else { "" };
        writeln!(out, "  {:<10} {status}{marker}", c.id)?;
    }
    Ok(())
}

fn cmd_chartable(out: &mut String, label: &GroupLabel, g: &FiniteGroup) -> Result<()> {
    let t = dixon_character_table(g)?;
    t.check_orthogonality()?;
    writeln!(
        out,
        "character table of {label} (order {}, {} classes, prime {})",
        g.order(),
        t.num_characters(),
        t.modulus
    )?;
    let reps: Vec<String> = t.classes.iter().map(|(r, _)| g.label(*r)).collect();
    let sizes: Vec<String> = t.classes.iter().map(|(_, s)| s.to_string()).collect();
    let ords: Vec<String> = t.classes.iter().map(|(r, _)| g.element_order(*r).to_string()).collect();
    writeln!(out, "class\t{}", reps.join("\t"))?;
    writeln!(out, "size\t{}", sizes.join("\t"))?;
    writeln!(out, "order\t{}", ords.join("\t"))?;
    let degrees: Vec<String> = t.degrees.iter().map(ToString::to_string).collect();
    writeln!(out, "degrees {}", degrees.join(","))?;
    for (i, row) in t.values.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "X.{}\t{}", i + 1, vals.join("\t"))?;
    }
    Ok(())
}
