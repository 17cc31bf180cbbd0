//! Command-line front end: closed-form series, oracle verification, identity
//! and log-concavity checks, and ideal comparisons.

pub mod render;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matching_harmonics::formulas::{
    check_stratification_identity, check_truncation_identity, grfrob_conjugacy, grfrob_matchings, grfrob_pm,
    hilb_conjugacy, hilb_matchings, hilb_pm,
};
use matching_harmonics::oracle::{
    compare_ideal_vs_gr, default_max_deg, grfrob_oracle, search_strict_containment, ArithmeticMode, IdealComparison,
    IdealKind, OracleConfig, Verdict,
};
use matching_harmonics::repr::{equivariant_log_concave, table};
use matching_harmonics::{Error, LocusKind, LocusSpec, QPoly, SchurSeries};
use rayon::prelude::*;
use serde::Serialize;

use render::{render_qpoly, render_series, series_to_json, to_json, Format, SeriesJson, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(Error::Domain(_)) => 2,
            CliError::Core(Error::Resource(_)) => 3,
            CliError::Core(Error::Invariant(_)) => 1,
            CliError::Io(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mharm", version, about = "Graded Frobenius and Hilbert series of involution loci")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Compute oracle ranks modulo a large prime, re-verified exactly for n ≤ 5.
    #[arg(long, global = true)]
    pub modular: bool,
    /// Largest n accepted by the oracle.
    #[arg(long, global = true, default_value_t = 6)]
    pub oracle_max_n: usize,
    /// Largest n for character tables.
    #[arg(long, global = true, default_value_t = 15)]
    pub table_max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LocusArg {
    Matchings,
    Pm,
    Fixed,
}

#[derive(Debug, Clone, Args)]
pub struct LocusArgs {
    #[arg(long, value_enum)]
    pub locus: LocusArg,
    #[arg(long)]
    pub n: usize,
    /// Number of fixed points (required for `--locus fixed`).
    #[arg(long)]
    pub a: Option<usize>,
    /// Largest degree examined by the oracle (default ⌊n/2⌋ + 1).
    #[arg(long)]
    pub max_deg: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Closed-form graded Frobenius image.
    Grfrob(LocusArgs),
    /// Closed-form Hilbert series.
    Hilb(LocusArgs),
    /// Compare the closed form with the brute-force oracle, grade by grade.
    Verify(LocusArgs),
    /// Check the first-row stratification and truncation identities.
    Identities {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Check log-concavity of Hilbert series, or of graded modules with
    /// `--equivariant`.
    Logconcave {
        #[arg(long, value_enum, default_value_t = LocusArg::Matchings)]
        locus: LocusArg,
        /// Check a single n instead of the range 0..=n-max.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        equivariant: bool,
    },
    /// Compare the explicit generating ideal with the oracle's quotient.
    IdealCheck {
        #[arg(long, value_enum)]
        locus: Option<LocusArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        max_deg: Option<usize>,
        /// Search fixed-point ideals for the smallest strict containment.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

/// Validated settings for one locus-based command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub spec: LocusSpec,
    pub max_deg: usize,
    pub oracle: OracleConfig,
    pub threads: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn locus_kind(locus: LocusArg, a: Option<usize>) -> Result<LocusKind, CliError> {
    match (locus, a) {
        (LocusArg::Fixed, Some(a)) => Ok(LocusKind::FixedCount(a)),
        (LocusArg::Fixed, None) => Err(CliError::Usage("--locus fixed needs --a".into())),
        (_, Some(_)) => Err(CliError::Usage("--a only applies to --locus fixed".into())),
        (LocusArg::Matchings, None) => Ok(LocusKind::AllInvolutions),
        (LocusArg::Pm, None) => Ok(LocusKind::PerfectMatchings),
    }
}

impl GlobalArgs {
    pub fn oracle_config(&self) -> OracleConfig {
        OracleConfig {
            max_n: self.oracle_max_n,
            mode: if self.modular { ArithmeticMode::Modular } else { ArithmeticMode::Exact },
            table_bound: self.table_max_n,
            ..OracleConfig::default()
        }
    }
}

impl RunConfig {
    pub fn new(args: &LocusArgs, global: &GlobalArgs) -> Result<Self, CliError> {
        let kind = locus_kind(args.locus, args.a)?;
        let spec = LocusSpec::new(kind, args.n).map_err(|e| CliError::Usage(e.to_string()))?;
        if global.threads == Some(0) {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        Ok(RunConfig {
            spec,
            max_deg: args.max_deg.unwrap_or_else(|| default_max_deg(args.n)),
            oracle: global.oracle_config(),
            threads: global.threads,
            format: global.format,
            out: global.out.clone(),
        })
    }
}

/// Whether a command's mathematical check passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub status: Status,
}

impl Outcome {
    fn pass(body: String) -> Self {
        Outcome { body, status: Status::Pass }
    }

    fn checked(body: String, ok: bool) -> Self {
        Outcome { body, status: if ok { Status::Pass } else { Status::Fail } }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

pub fn formula_series(spec: &LocusSpec) -> Result<SchurSeries, Error> {
    match spec.kind {
        LocusKind::AllInvolutions => Ok(grfrob_matchings(spec.n)),
        LocusKind::PerfectMatchings => grfrob_pm(spec.n),
        LocusKind::FixedCount(a) => grfrob_conjugacy(spec.n, a),
    }
}

pub fn formula_hilbert(spec: &LocusSpec) -> Result<QPoly, Error> {
    match spec.kind {
        LocusKind::AllInvolutions => Ok(hilb_matchings(spec.n)),
        LocusKind::PerfectMatchings => hilb_pm(spec.n),
        LocusKind::FixedCount(a) => hilb_conjugacy(spec.n, a),
    }
}

pub fn cmd_grfrob(cfg: &RunConfig) -> Result<Outcome, CliError> {
    Ok(Outcome::pass(render_series(&formula_series(&cfg.spec)?, cfg.format)))
}

pub fn cmd_hilb(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let h = formula_hilbert(&cfg.spec)?;
    Ok(Outcome::pass(render_qpoly(cfg.spec.n, &h, cfg.format)?))
}

#[derive(Debug, Serialize)]
struct GradeReport {
    q: usize,
    equal: bool,
    formula: SeriesJson,
    oracle: SeriesJson,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    locus: String,
    n: usize,
    max_deg: usize,
    pass: bool,
    grades: Vec<GradeReport>,
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let formula = formula_series(&cfg.spec)?;
    let oracle = match grfrob_oracle(&cfg.spec, cfg.max_deg, &cfg.oracle) {
        Ok(s) => s,
        Err(Error::Resource(msg)) => {
            // partial report: the closed form is still available
            let partial = format!(
                "{msg}\nclosed form for {} (oracle not run):\n{}",
                cfg.spec,
                render::series_text(&formula)
            );
            return Err(CliError::Core(Error::Resource(partial)));
        }
        Err(e) => return Err(e.into()),
    };
    let top = cfg.max_deg.max(formula.max_grade().unwrap_or(0));
    let grades: Vec<GradeReport> = (0..=top)
        .map(|d| {
            let f = formula.grade(d);
            let o = oracle.grade(d);
            GradeReport { q: d, equal: f == o, formula: series_to_json(&f), oracle: series_to_json(&o) }
        })
        .collect();
    // grades above max_deg are not covered by the oracle
    let pass = grades.iter().all(|g| g.equal) && formula.max_grade().unwrap_or(0) <= cfg.max_deg;
    let report = VerifyReport { locus: cfg.spec.to_string(), n: cfg.spec.n, max_deg: cfg.max_deg, pass, grades };
    let body = match cfg.format {
        Format::Json => to_json(&report),
        Format::Csv | Format::Text => {
            let mut t = Table::new(&["q", "equal", "formula", "oracle"]);
            for g in &report.grades {
                let f = render::series_from_json(&g.formula)?;
                let o = render::series_from_json(&g.oracle)?;
                t.push(vec![g.q.to_string(), g.equal.to_string(), grade_cell(&f), grade_cell(&o)]);
            }
            let verdict = if pass { "PASS" } else { "FAIL" };
            if cfg.format == Format::Csv {
                t.csv()
            } else {
                format!("{verdict} {} (degrees 0..={})\n{}", cfg.spec, cfg.max_deg, t.text())
            }
        }
    };
    Ok(Outcome::checked(body, pass))
}

fn grade_cell(s: &SchurSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> =
        s.terms().map(|(_, l, c)| if *c == 1.into() { format!("s{l}") } else { format!("{c}·s{l}") }).collect();
    terms.join(" + ")
}

#[derive(Debug, Serialize)]
struct IdentityRow {
    n: usize,
    a: Option<usize>,
    identity: &'static str,
    holds: bool,
}

pub fn cmd_identities(n_max: usize, format: Format) -> Result<Outcome, CliError> {
    let jobs: Vec<(usize, Option<usize>)> = (0..=n_max)
        .flat_map(|n| (0..=n).filter(move |a| (n - a) % 2 == 0).map(move |a| (n, Some(a))).chain([(n, None)]))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(n, a)| {
            Ok(match a {
                Some(a) => IdentityRow { n, a: Some(a), identity: "stratification", holds: check_stratification_identity(n, a)? },
                None => IdentityRow { n, a: None, identity: "truncation", holds: check_truncation_identity(n) },
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = rows.iter().all(|r| r.holds);
    let body = match format {
        Format::Json => to_json(&rows),
        Format::Csv | Format::Text => {
            let mut t = Table::new(&["identity", "n", "a", "holds"]);
            for r in &rows {
                let a = r.a.map_or_else(|| "-".to_string(), |a| a.to_string());
                t.push(vec![r.identity.into(), r.n.to_string(), a, r.holds.to_string()]);
            }
            if format == Format::Csv {
                t.csv()
            } else {
                t.text()
            }
        }
    };
    Ok(Outcome::checked(body, ok))
}

#[derive(Debug, Serialize)]
struct LogConcaveRow {
    locus: String,
    n: usize,
    holds: bool,
    /// `(grade, partition)` witnessing a failure of the equivariant check.
    witness: Option<(usize, Vec<usize>)>,
}

pub fn cmd_logconcave(
    locus: LocusArg,
    ns: &[usize],
    equivariant: bool,
    global: &GlobalArgs,
) -> Result<Outcome, CliError> {
    let mut specs = Vec::new();
    for &n in ns {
        match locus {
            LocusArg::Matchings => specs.push(LocusSpec::all(n)),
            LocusArg::Pm if n % 2 == 0 => specs.push(LocusSpec::new(LocusKind::PerfectMatchings, n)?),
            LocusArg::Pm => {}
            LocusArg::Fixed => {
                for a in (0..=n).filter(|a| (n - a) % 2 == 0) {
                    specs.push(LocusSpec::new(LocusKind::FixedCount(a), n)?);
                }
            }
        }
    }
    if specs.is_empty() {
        return Err(CliError::Usage("no locus in the requested range".into()));
    }
    let rows = specs
        .par_iter()
        .map(|spec| {
            if equivariant {
                let t = table(spec.n, global.table_max_n)?;
                let verdict = equivariant_log_concave(&t, &formula_series(spec)?)?;
                Ok(LogConcaveRow {
                    locus: spec.to_string(),
                    n: spec.n,
                    holds: verdict.holds,
                    witness: verdict.witness.map(|(d, l)| (d, l.parts().to_vec())),
                })
            } else {
                let holds = formula_hilbert(spec)?.is_log_concave();
                Ok(LogConcaveRow { locus: spec.to_string(), n: spec.n, holds, witness: None })
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = rows.iter().all(|r| r.holds);
    let body = match global.format {
        Format::Json => to_json(&rows),
        Format::Csv | Format::Text => {
            let mut t = Table::new(&["locus", "n", "holds", "witness"]);
            for r in &rows {
                let w = r.witness.as_ref().map_or_else(String::new, |(d, l)| format!("q^{d} {l:?}"));
                t.push(vec![r.locus.clone(), r.n.to_string(), r.holds.to_string(), w]);
            }
            if global.format == Format::Csv {
                t.csv()
            } else {
                t.text()
            }
        }
    };
    Ok(Outcome::checked(body, ok))
}

#[derive(Debug, Serialize)]
struct IdealRow {
    degree: usize,
    ideal: String,
    oracle: String,
}

#[derive(Debug, Serialize)]
struct IdealReport {
    ideal: String,
    n: usize,
    equal: bool,
    first_difference: Option<usize>,
    degrees: Vec<IdealRow>,
}

fn ideal_name(kind: IdealKind, n: usize) -> String {
    match kind {
        IdealKind::Matchings => format!("I^M_{n}"),
        IdealKind::PerfectMatchings => format!("I^PM_{n}"),
        IdealKind::FixedCount(a) => format!("I^M_{{{n},{a}}}"),
    }
}

fn ideal_report(c: &IdealComparison) -> IdealReport {
    let first_difference = match c.verdict {
        Verdict::Equal => None,
        Verdict::Unequal { first_degree } => Some(first_degree),
    };
    IdealReport {
        ideal: ideal_name(c.kind, c.n),
        n: c.n,
        equal: first_difference.is_none(),
        first_difference,
        degrees: c
            .rows
            .iter()
            .map(|r| IdealRow { degree: r.degree, ideal: r.ideal.to_string(), oracle: r.oracle.to_string() })
            .collect(),
    }
}

fn render_ideal_report(r: &IdealReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv | Format::Text => {
            let mut t = Table::new(&["degree", "ideal", "oracle"]);
            for row in &r.degrees {
                t.push(vec![row.degree.to_string(), row.ideal.clone(), row.oracle.clone()]);
            }
            if format == Format::Csv {
                t.csv()
            } else {
                let verdict = match r.first_difference {
                    None => "equal".to_string(),
                    Some(d) => format!("unequal (first difference in degree {d})"),
                };
                format!("{} vs gr I: {verdict}\n{}", r.ideal, t.text())
            }
        }
    }
}

pub fn cmd_ideal_check(
    locus: LocusArg,
    n: usize,
    a: Option<usize>,
    max_deg: Option<usize>,
    global: &GlobalArgs,
) -> Result<Outcome, CliError> {
    let kind = match locus_kind(locus, a)? {
        LocusKind::AllInvolutions => IdealKind::Matchings,
        LocusKind::PerfectMatchings => IdealKind::PerfectMatchings,
        LocusKind::FixedCount(a) => IdealKind::FixedCount(a),
    };
    kind.locus(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let cmp = compare_ideal_vs_gr(kind, n, max_deg.unwrap_or_else(|| default_max_deg(n)), &global.oracle_config())?;
    Ok(Outcome::pass(render_ideal_report(&ideal_report(&cmp), global.format)))
}

pub fn cmd_ideal_search(n_max: usize, global: &GlobalArgs) -> Result<Outcome, CliError> {
    let body = match search_strict_containment(n_max, &global.oracle_config())? {
        Some(c) => render_ideal_report(&ideal_report(&c), global.format),
        None => match global.format {
            Format::Json => to_json(&serde_json::json!({ "n_max": n_max, "found": null })),
            _ => format!("no strict containment for n ≤ {n_max}\n"),
        },
    };
    Ok(Outcome::pass(body))
}

fn configure_threads(threads: Option<usize>) -> Result<(), CliError> {
    match threads {
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(t) => {
            // a second configuration in the same process keeps the first pool
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            Ok(())
        }
        None => Ok(()),
    }
}

/// Runs one command. The caller writes `body` and exits with the code.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    configure_threads(g.threads)?;
    match &cli.command {
        Command::Grfrob(args) => cmd_grfrob(&RunConfig::new(args, g)?),
        Command::Hilb(args) => cmd_hilb(&RunConfig::new(args, g)?),
        Command::Verify(args) => cmd_verify(&RunConfig::new(args, g)?),
        Command::Identities { n_max } => cmd_identities(*n_max, g.format),
        Command::Logconcave { locus, n, n_max, equivariant } => {
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (0..=*n_max).collect(),
            };
            cmd_logconcave(*locus, &ns, *equivariant, g)
        }
        Command::IdealCheck { search: true, n_max, .. } => cmd_ideal_search(*n_max, g),
        Command::IdealCheck { locus, n, a, max_deg, .. } => {
            let (Some(locus), Some(n)) = (locus, n) else {
                return Err(CliError::Usage("ideal-check needs --locus and --n, or --search".into()));
            };
            cmd_ideal_check(*locus, *n, *a, *max_deg, g)
        }
    }
}

/// Runs and writes the result; returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let start = Instant::now();
    let result = run(cli).and_then(|outcome| {
        match &cli.global.out {
            Some(path) => std::fs::write(path, &outcome.body)?,
            None => print!("{}", outcome.body),
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            if std::env::var_os("MHARM_TIMING").is_some() {
                eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("mharm").chain(args.iter().copied())).unwrap()
    }

    fn body(args: &[&str]) -> Outcome {
        run(&parse(args)).unwrap()
    }

    #[test]
    fn hilb_commands() {
        assert_eq!(body(&["hilb", "--locus", "matchings", "--n", "4"]).body, "1,6,3\n");
        assert_eq!(body(&["hilb", "--locus", "matchings", "--n", "0"]).body, "1\n");
        assert_eq!(body(&["hilb", "--locus", "fixed", "--n", "4", "--a", "0"]).body, "1,2\n");
    }

    #[test]
    fn grfrob_commands() {
        assert_eq!(body(&["grfrob", "--locus", "pm", "--n", "4"]).body, "q^0: s(4)\nq^1: s(2,2)\n");
        assert_eq!(body(&["grfrob", "--locus", "fixed", "--n", "4", "--a", "4"]).body, "q^0: s(4)\n");
    }

    #[test]
    fn usage_errors() {
        let err = run(&parse(&["grfrob", "--locus", "pm", "--n", "5"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = run(&parse(&["grfrob", "--locus", "fixed", "--n", "5"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = run(&parse(&["hilb", "--locus", "matchings", "--n", "3", "--a", "1"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn verify_commands() {
        for args in [
            &["verify", "--locus", "pm", "--n", "4"][..],
            &["verify", "--locus", "fixed", "--n", "5", "--a", "1"],
            &["verify", "--locus", "matchings", "--n", "2"],
        ] {
            let out = body(args);
            assert_eq!(out.status, Status::Pass, "{}", out.body);
            assert!(out.body.starts_with("PASS"));
        }
        let err = run(&parse(&["verify", "--locus", "matchings", "--n", "7"])).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("closed form"));
    }

    #[test]
    fn identities_and_logconcavity() {
        assert_eq!(body(&["identities", "--n-max", "6"]).status, Status::Pass);
        assert_eq!(body(&["logconcave", "--n", "6"]).status, Status::Pass);
        assert_eq!(body(&["logconcave", "--n", "4", "--equivariant"]).status, Status::Pass);
        let err = run(&parse(&["logconcave", "--n", "16", "--equivariant"])).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn ideal_commands() {
        let out = body(&["ideal-check", "--locus", "matchings", "--n", "4"]);
        assert!(out.body.starts_with("I^M_4 vs gr I: equal"), "{}", out.body);
        let out = body(&["ideal-check", "--locus", "pm", "--n", "4"]);
        assert!(out.body.contains("equal"));
    }
}
