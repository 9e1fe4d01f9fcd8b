//! Command-line front end.
//!
//! [`run`] parses arguments and returns the full stdout, stderr and exit code
//! instead of printing, so the binary stays a thin wrapper and every command
//! can be exercised from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 not a p-group, 4 resource cap exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write;

use clap::{Parser, Subcommand};
use itertools::Itertools;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::correspondence::{
    verify_lattice, verify_subspace_theorem, CorrespondenceError, TheoremReport,
};
use crate::fplinalg::{all_subspaces, enumerate_subspaces, LinalgError, PrimeModulus};
use crate::grouptheory::{
    FiniteGroup, GroupError, SubgroupLattice, DEFAULT_ORDER_CAP, MAX_ORDER_CAP,
};
use crate::qexact::{gauss_binom, gauss_binom_poly, gauss_sum, noncomm_expand, ExactInt, QError};

pub mod dot;
pub mod groupspec;

pub use groupspec::{BuildError, GroupSpec, ParseError};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_P_GROUP: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Groups checked by `verify-corpus`.
pub const CORPUS: [&str; 10] = [
    "Q8",
    "D(8)",
    "C(4)xC(2)",
    "E(2,3)",
    "C(8)",
    "C(9)xC(3)",
    "Heis(3)",
    "Heis(5)",
    "E(2,4)",
    "C(27)",
];

/// Primes and dimensions for the subspace half of `verify-corpus`.
pub const SUBSPACE_PRIMES: [u64; 3] = [2, 3, 5];
pub const SUBSPACE_MAX_DIM: usize = 4;

#[derive(Debug, Parser)]
#[command(
    name = "qlattice",
    version,
    about = "Gaussian binomials, subspace lattices over F_p and Frattini lattices of p-groups"
)]
struct Cli {
    /// Largest group order for lattice enumeration (at most 1024)
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gaussian binomial coefficient [n k]_q
    Qbinom {
        n: usize,
        k: usize,
        #[arg(required_unless_present = "poly", allow_hyphen_values = true)]
        q: Option<String>,
        /// Print the coefficient as a polynomial in q
        #[arg(long)]
        poly: bool,
    },
    /// Sum of [n k]_q over k = 0..=n
    Qsum {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Expand (x + y)^n under xy = q yx
    Expand {
        n: usize,
        /// Evaluate each coefficient at this q
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Count or list subspaces of F_p^n
    Subspaces {
        n: usize,
        p: u64,
        k: Option<usize>,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Subgroup lattice and Frattini analysis of a group
    Analyze {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the counting results on the built-in corpus
    VerifyCorpus {
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram in DOT of a group's intersections of maximal subgroups,
    /// or of the subspace lattice of F_p^n
    Dot {
        #[arg(required_unless_present = "space")]
        group: Option<String>,
        #[arg(long, num_args = 2, value_names = ["N", "P"], conflicts_with = "group")]
        space: Option<Vec<u64>>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse group: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Exact(#[from] QError),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
}

fn group_exit_code(e: &GroupError) -> i32 {
    match e {
        GroupError::OrderCap { .. } | GroupError::CapTooLarge(_) => EXIT_CAP,
        GroupError::NotPGroup(_) => EXIT_NOT_P_GROUP,
        _ => EXIT_USAGE,
    }
}

fn linalg_exit_code(e: &LinalgError) -> i32 {
    match e {
        LinalgError::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn exact_exit_code(e: &QError) -> i32 {
    match e {
        QError::Domain { .. } => EXIT_USAGE,
        QError::ExpansionCap { .. } => EXIT_CAP,
        QError::InexactDivision { .. } => EXIT_VERIFICATION_FAILED,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::Build(BuildError::Io { .. }) => EXIT_USAGE,
            CliError::Build(BuildError::Group(e)) | CliError::Group(e) => group_exit_code(e),
            CliError::Linalg(e) => linalg_exit_code(e),
            CliError::Exact(e) => exact_exit_code(e),
            CliError::Correspondence(e) => match e {
                CorrespondenceError::Group(e) => group_exit_code(e),
                CorrespondenceError::Linalg(e) => linalg_exit_code(e),
                CorrespondenceError::Exact(e) => exact_exit_code(e),
                CorrespondenceError::MissingFrattini => EXIT_USAGE,
                CorrespondenceError::Internal(_) => EXIT_VERIFICATION_FAILED,
            },
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Context {
    cap: usize,
    color: bool,
    stdout: String,
    stderr: String,
}

impl Context {
    fn verdict(&self, pass: bool) -> String {
        match (pass, self.color) {
            (true, true) => "\x1b[32mPASS\x1b[0m".into(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
            (true, false) => "PASS".into(),
            (false, false) => "FAIL".into(),
        }
    }

    fn out(&mut self, line: impl AsRef<str>) {
        self.stdout.push_str(line.as_ref());
        self.stdout.push('\n');
    }
}

/// Runs one invocation. `args` includes the program name. `color` enables
/// ANSI colors on PASS/FAIL markers.
pub fn run<I, T>(args: I, color: bool) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_SUCCESS
            };
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                stdout,
                stderr,
                code,
            };
        }
    };
    let mut ctx = Context {
        cap: cli.cap,
        color,
        stdout: String::new(),
        stderr: String::new(),
    };
    let code = match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            writeln!(ctx.stderr, "error: {e}").unwrap();
            e.exit_code()
        }
    };
    Outcome {
        stdout: ctx.stdout,
        stderr: ctx.stderr,
        code,
    }
}

fn parse_int(text: &str, what: &str) -> Result<ExactInt, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be an integer, got {text:?}")))
}

fn check_cap(ctx: &mut Context) -> Result<(), CliError> {
    if ctx.cap == 0 || ctx.cap > MAX_ORDER_CAP {
        return Err(CliError::Usage(format!(
            "--cap must be between 1 and {MAX_ORDER_CAP}, got {}",
            ctx.cap
        )));
    }
    if ctx.cap > DEFAULT_ORDER_CAP {
        writeln!(
            ctx.stderr,
            "warning: order cap {} is above the default {DEFAULT_ORDER_CAP}; lattice enumeration may be slow",
            ctx.cap
        )
        .unwrap();
    }
    Ok(())
}

fn dispatch(ctx: &mut Context, command: Command) -> Result<i32, CliError> {
    match command {
        Command::Qbinom { n, k, q, poly } => {
            if poly {
                ctx.out(gauss_binom_poly(n, k).to_string());
            } else {
                let q = parse_int(q.as_deref().unwrap_or_default(), "q")?;
                ctx.out(gauss_binom(n, k, q)?.to_string());
            }
            Ok(EXIT_SUCCESS)
        }
        Command::Qsum { n, q } => {
            ctx.out(gauss_sum(n, parse_int(&q, "q")?)?.to_string());
            Ok(EXIT_SUCCESS)
        }
        Command::Expand { n, at } => {
            let at = at.map(|q| parse_int(&q, "q")).transpose()?;
            if let Some(q) = &at {
                if *q < ExactInt::from(1) {
                    return Err(QError::Domain {
                        q: q.clone(),
                        min: 1,
                    }
                    .into());
                }
            }
            for term in noncomm_expand(n)? {
                let coefficient = match &at {
                    Some(q) => term.coefficient.evaluate(q).to_string(),
                    None => term.coefficient.to_string(),
                };
                // Both monomial orders carry the same coefficient, by symmetry
                // of the Gaussian binomials.
                ctx.out(format!(
                    "{}\t{}\t{}\t{}",
                    term.x_degree,
                    coefficient,
                    term.canonical_monomial(),
                    term.x_first_monomial()
                ));
            }
            Ok(EXIT_SUCCESS)
        }
        Command::Subspaces {
            n,
            p,
            k,
            count: _,
            list,
        } => subspaces(ctx, n, p, k, list),
        Command::Analyze { group, json } => {
            check_cap(ctx)?;
            let group = GroupSpec::parse(&group)?.build()?;
            analyze(ctx, &group, json)
        }
        Command::VerifyCorpus { json } => {
            check_cap(ctx)?;
            verify_corpus(ctx, json)
        }
        Command::Dot { group, space } => {
            check_cap(ctx)?;
            let text = match (group, space) {
                (_, Some(space)) => {
                    let n = usize::try_from(space[0])
                        .map_err(|_| CliError::Usage("dimension too large".into()))?;
                    dot::subspace_dot(n, PrimeModulus::new(space[1])?)?
                }
                (Some(group), None) => {
                    dot::group_dot(&GroupSpec::parse(&group)?.build()?, ctx.cap)?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            ctx.stdout.push_str(&text);
            Ok(EXIT_SUCCESS)
        }
    }
}

fn subspaces(
    ctx: &mut Context,
    n: usize,
    p: u64,
    k: Option<usize>,
    list: bool,
) -> Result<i32, CliError> {
    let p = PrimeModulus::new(p)?;
    let found = match k {
        Some(k) => enumerate_subspaces(n, p, k)?,
        None => all_subspaces(n, p)?,
    };
    if list {
        for s in &found {
            ctx.out(s.to_string());
        }
    } else if k.is_some() {
        ctx.out(found.len().to_string());
    } else {
        for (dim, group) in &found.iter().chunk_by(|s| s.dim()) {
            ctx.out(format!("{dim}\t{}", group.count()));
        }
        ctx.out(format!("total\t{}", found.len()));
    }
    Ok(EXIT_SUCCESS)
}

fn histogram_text<V: ToString>(histogram: &BTreeMap<usize, V>) -> String {
    histogram
        .iter()
        .map(|(k, v)| format!("{k}:{}", v.to_string()))
        .join(" ")
}

fn exact_json(value: &ExactInt) -> Value {
    match value.to_u64() {
        Some(v) => json!(v),
        None => json!(value.to_string()),
    }
}

fn histogram_json<V>(histogram: &BTreeMap<usize, V>, value: impl Fn(&V) -> Value) -> Value {
    Value::Object(
        histogram
            .iter()
            .map(|(k, v)| (k.to_string(), value(v)))
            .collect(),
    )
}

/// JSON object for one report; field names are stable.
pub fn report_json(report: &TheoremReport) -> Value {
    json!({
        "group": report.group,
        "order": report.order,
        "p": report.p.get(),
        "rank": report.rank,
        "frattini_order": report.frattini_order,
        "maximal_observed": report.maximal_observed,
        "maximal_expected": exact_json(&report.maximal_expected),
        "histogram_observed": histogram_json(&report.histogram_observed, |v| json!(v)),
        "histogram_expected": histogram_json(&report.histogram_expected, exact_json),
        "dimension_observed": histogram_json(&report.dimension_observed, |v| json!(v)),
        "dimension_expected": histogram_json(&report.dimension_expected, exact_json),
        "total_observed": report.total_observed,
        "total_expected": exact_json(&report.total_expected),
        "clauses": report
            .clauses
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass}))
            .collect::<Vec<_>>(),
        "pass": report.passed(),
    })
}

fn report_text(ctx: &mut Context, report: &TheoremReport) {
    ctx.out(format!("group: {}", report.group));
    ctx.out(format!("order: {}", report.order));
    ctx.out(format!("p: {}", report.p));
    ctx.out(format!("rank: {}", report.rank));
    ctx.out(format!("frattini order: {}", report.frattini_order));
    ctx.out(format!(
        "maximal subgroups: {} (expected {})",
        report.maximal_observed, report.maximal_expected
    ));
    ctx.out(format!(
        "subgroups containing frattini: {} (expected {})",
        report.total_observed, report.total_expected
    ));
    ctx.out(format!(
        "intersection numbers: {} (expected {})",
        histogram_text(&report.histogram_observed),
        histogram_text(&report.histogram_expected)
    ));
    ctx.out(format!(
        "quotient dimensions: {} (expected {})",
        histogram_text(&report.dimension_observed),
        histogram_text(&report.dimension_expected)
    ));
    for clause in &report.clauses {
        let verdict = ctx.verdict(clause.pass);
        ctx.out(format!("  {verdict} {}", clause.name));
    }
    let verdict = ctx.verdict(report.passed());
    ctx.out(verdict);
}

fn analyze(ctx: &mut Context, group: &FiniteGroup, json: bool) -> Result<i32, CliError> {
    let lattice = SubgroupLattice::with_cap(group, ctx.cap)?;
    let intersections = lattice.intersection_numbers();
    match lattice.p_group_data() {
        Ok(_) => {
            let report = verify_lattice(&lattice, None)?;
            if json {
                let mut value = report_json(&report);
                value["p_group"] = json!(true);
                value["unexpressible"] = json!(Vec::<Vec<usize>>::new());
                ctx.out(value.to_string());
            } else {
                report_text(ctx, &report);
            }
            Ok(if report.passed() {
                EXIT_SUCCESS
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Err(GroupError::NotPGroup(order)) => {
            let histogram: BTreeMap<usize, usize> = intersections.histogram();
            let unexpressible = &intersections.unexpressible;
            let containing = lattice.subgroups_containing_frattini().count();
            if json {
                let value = json!({
                    "group": group.name(),
                    "order": group.order(),
                    "p": Value::Null,
                    "rank": Value::Null,
                    "p_group": false,
                    "frattini_order": lattice.frattini().order(),
                    "maximal_observed": lattice.maximal_subgroups().len(),
                    "histogram_observed": histogram_json(&histogram, |v| json!(v)),
                    "histogram_expected": Value::Null,
                    "total_observed": containing,
                    "total_expected": Value::Null,
                    "clauses": Vec::<Value>::new(),
                    "unexpressible": unexpressible
                        .iter()
                        .map(|h| h.elements().collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "pass": false,
                });
                ctx.out(value.to_string());
            } else {
                ctx.out(format!("group: {}", group.name()));
                ctx.out(format!("order: {}", group.order()));
                ctx.out(format!("subgroups: {}", lattice.subgroups().len()));
                ctx.out(format!(
                    "maximal subgroups: {}",
                    lattice.maximal_subgroups().len()
                ));
                ctx.out(format!("frattini order: {}", lattice.frattini().order()));
                ctx.out(format!("subgroups containing frattini: {containing}"));
                ctx.out(format!(
                    "intersection numbers: {}",
                    histogram_text(&histogram)
                ));
                ctx.out(format!(
                    "not expressible as an intersection of maximal subgroups: {}",
                    unexpressible.len()
                ));
                for h in unexpressible {
                    ctx.out(format!("  order {}: {}", h.order(), h.describe(group)));
                }
            }
            writeln!(ctx.stderr, "error: group of order {order} is not a p-group").unwrap();
            Ok(EXIT_NOT_P_GROUP)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify_corpus(ctx: &mut Context, json: bool) -> Result<i32, CliError> {
    let mut group_reports = Vec::new();
    for text in CORPUS {
        let group = GroupSpec::parse(text)?.build()?;
        let lattice = SubgroupLattice::with_cap(&group, ctx.cap)?;
        group_reports.push(verify_lattice(&lattice, None)?);
    }
    let mut space_reports = Vec::new();
    for p in SUBSPACE_PRIMES {
        for n in 0..=SUBSPACE_MAX_DIM {
            space_reports.push(verify_subspace_theorem(n, PrimeModulus::new(p)?)?);
        }
    }
    let all_pass = group_reports
        .iter()
        .chain(&space_reports)
        .all(TheoremReport::passed);
    if json {
        let value = json!({
            "groups": group_reports.iter().map(report_json).collect::<Vec<_>>(),
            "subspaces": space_reports.iter().map(report_json).collect::<Vec<_>>(),
            "pass": all_pass,
        });
        ctx.out(value.to_string());
    } else {
        for report in group_reports.iter().chain(&space_reports) {
            let verdict = ctx.verdict(report.passed());
            ctx.out(format!(
                "{verdict} {} (p={}, rank={}, total={}, intersection numbers {})",
                report.group,
                report.p,
                report.rank,
                report.total_observed,
                histogram_text(&report.histogram_observed)
            ));
        }
        let verdict = ctx.verdict(all_pass);
        ctx.out(verdict);
    }
    Ok(if all_pass {
        EXIT_SUCCESS
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(
            std::iter::once("qlattice").chain(args.iter().copied()),
            false,
        )
    }

    #[test]
    fn qbinom_and_qsum() {
        assert_eq!(run_args(&["qbinom", "2", "1", "2"]).stdout, "3\n");
        assert_eq!(run_args(&["qbinom", "3", "0", "5"]).stdout, "1\n");
        assert_eq!(run_args(&["qbinom", "4", "2", "2"]).stdout, "35\n");
        assert_eq!(
            run_args(&["qbinom", "3", "1", "--poly"]).stdout,
            "1 + q + q^2\n"
        );
        assert_eq!(run_args(&["qsum", "2", "2"]).stdout, "5\n");
        assert_eq!(run_args(&["qsum", "0", "9"]).stdout, "1\n");
        assert_eq!(run_args(&["qsum", "3", "2"]).stdout, "16\n");
    }

    #[test]
    fn domain_errors_exit_two() {
        let out = run_args(&["qbinom", "2", "1", "0"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("q must be"));
        assert_eq!(run_args(&["qsum", "2", "-4"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["qsum", "2", "two"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["subspaces", "2", "4"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).code, EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, EXIT_SUCCESS);
        assert!(out.stdout.contains("verify-corpus"));
    }

    #[test]
    fn expand_lines() {
        let out = run_args(&["expand", "2"]);
        assert_eq!(
            out.stdout,
            "2\t1\ty^0 x^2\tx^2 y^0\n1\t1 + q\ty^1 x^1\tx^1 y^1\n0\t1\ty^2 x^0\tx^0 y^2\n"
        );
        let out = run_args(&["expand", "5", "--at", "2"]);
        let values: Vec<&str> = out
            .stdout
            .lines()
            .map(|l| l.split('\t').nth(1).unwrap())
            .collect();
        assert_eq!(values, ["1", "31", "155", "155", "31", "1"]);
        assert_eq!(run_args(&["expand", "13"]).code, EXIT_CAP);
    }

    #[test]
    fn subspace_counts_and_lists() {
        assert_eq!(run_args(&["subspaces", "3", "2", "1"]).stdout, "7\n");
        assert_eq!(
            run_args(&["subspaces", "2", "2"]).stdout,
            "0\t1\n1\t3\n2\t1\ntotal\t5\n"
        );
        assert_eq!(
            run_args(&["subspaces", "2", "2", "1", "--list"]).stdout,
            "[(0,1)]\n[(1,0)]\n[(1,1)]\n"
        );
        assert_eq!(run_args(&["subspaces", "30", "2"]).code, EXIT_CAP);
    }

    #[test]
    fn analyze_exit_codes() {
        assert_eq!(run_args(&["analyze", "Q8"]).code, EXIT_SUCCESS);
        assert_eq!(run_args(&["analyze", "S(4)"]).code, EXIT_NOT_P_GROUP);
        assert_eq!(run_args(&["analyze", "Q9"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["analyze", "C(300)"]).code, EXIT_CAP);
        assert_eq!(
            run_args(&["analyze", "--cap", "512", "C(2)"]).code,
            EXIT_SUCCESS
        );
        assert_eq!(
            run_args(&["analyze", "--cap", "2048", "C(2)"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn cap_warning() {
        let out = run_args(&["--cap", "300", "analyze", "C(2)"]);
        assert!(out.stderr.starts_with("warning:"));
        assert!(run_args(&["analyze", "C(2)"]).stderr.is_empty());
    }

    #[test]
    fn color_only_when_asked() {
        let plain = run_args(&["analyze", "Q8"]);
        assert!(!plain.stdout.contains('\x1b'));
        let colored = run(["qlattice", "analyze", "Q8"], true);
        assert!(colored.stdout.contains("\x1b[32mPASS"));
    }
}
