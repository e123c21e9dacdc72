//! Subcommands of the `gcenter` tool.
//!
//! Every command produces a [`CommandOutcome`]: JSON (or the requested graph
//! format) for standard output, diagnostics for standard error, and an exit
//! code where 1 means a verification found a counterexample and 2 means the
//! input or parameters were unusable.

use std::fs;
use std::io::{self, BufReader, Read};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use graph_center::codec::{dot_export, edges_export, graph6_encode, parse_graph, report_json};
use graph_center::search::{
    corpus_scan, enumerate_labeled, reduce_to_bridges, scan_lemma, unique_among, unique_up_to_iso,
    with_workers, EnumerationSummary, Lemma, MAX_ENUMERATION_ORDER,
};
use graph_center::{
    metric_profile, omega_contains, omega_set, ratio_witness, validate_witness, witness,
    CentralRatio, Error,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gcenter",
    version,
    about = "Graph center sizes: formula, witnesses, exhaustive checks"
)]
pub struct Cli {
    /// Worker threads for exhaustive scans (defaults to available parallelism)
    #[arg(long, global = true, env = "GCENTER_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Dot,
    Edges,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaCheck {
    InducedPath,
    GeodesicCycle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the attainable center sizes for order n and radius r
    Omega {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Build a graph of order n, radius r and center size s
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Metric profile of a graph read as graph6 or an edge list
    Analyze {
        /// Input file; standard input when omitted or "-"
        input: Option<PathBuf>,
    },
    /// Compare exhaustive enumeration against the formula for orders n..=max-n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Check that every graph with (n, r, s) is isomorphic to the constructed witness
    Unique {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        /// graph6 catalog to scan instead of enumerating labeled graphs
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Tabulate a graph6 catalog and compare it against the formula
    Corpus { file: PathBuf },
    /// Check the induced-path or geodesic-cycle lemma on all graphs up to order n
    Lemmas {
        #[arg(long, value_enum)]
        check: LemmaCheck,
        #[arg(long)]
        n: usize,
    },
    /// A graph whose central ratio is exactly a/b
    Ratio {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Delete edges until every edge leaving the given induced cycle is a bridge
    Reduce {
        /// Comma-separated cycle vertices in cyclic order
        #[arg(long, value_delimiter = ',')]
        cycle: Vec<usize>,
        /// Input file; standard input when omitted or "-"
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        Self {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(passed: bool, stdout: String, what: &str) -> Self {
        Self {
            exit_code: if passed { EXIT_OK } else { EXIT_VIOLATION },
            stderr: if passed {
                String::new()
            } else {
                format!("verification failed: {what}\n")
            },
            stdout,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

impl From<Error> for CommandOutcome {
    fn from(err: Error) -> Self {
        CommandOutcome::usage(err)
    }
}

type CmdResult = Result<CommandOutcome, CommandOutcome>;

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => CommandOutcome {
            exit_code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
            stdout: if e.use_stderr() {
                String::new()
            } else {
                e.to_string()
            },
            stderr: if e.use_stderr() {
                e.to_string()
            } else {
                String::new()
            },
        },
    }
}

pub fn run(cli: Cli) -> CommandOutcome {
    let jobs = cli.jobs;
    let command = cli.command;
    let result = with_workers(jobs, move || match command {
        Command::Omega { n, r } => cmd_omega(n, r),
        Command::Witness { n, r, s, format } => cmd_witness(n, r, s, format),
        Command::Analyze { input } => cmd_analyze(input),
        Command::Verify { n, max_n } => cmd_verify(n, max_n.unwrap_or(n)),
        Command::Unique { n, r, s, corpus } => cmd_unique(n, r, s, corpus),
        Command::Corpus { file } => cmd_corpus(file),
        Command::Lemmas { check, n } => cmd_lemmas(check, n),
        Command::Ratio { a, b } => cmd_ratio(a, b),
        Command::Reduce { cycle, input } => cmd_reduce(cycle, input),
    });
    result.unwrap_or_else(|e| e)
}

fn read_input(input: Option<PathBuf>) -> Result<String, CommandOutcome> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(&path)
            .map_err(|e| CommandOutcome::usage(format!("{}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CommandOutcome::usage(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn cmd_omega(n: usize, r: usize) -> CmdResult {
    let set = omega_set(n, r)?;
    Ok(CommandOutcome::ok(
        serde_json::to_string(&set).expect("json") + "\n",
    ))
}

fn cmd_witness(n: usize, r: usize, s: usize, format: GraphFormat) -> CmdResult {
    let (g, recipe) = witness(n, r, s)?;
    let validation = validate_witness(&g, n, r, s);
    let stdout = match format {
        GraphFormat::Graph6 => graph6_encode(&g)? + "\n",
        GraphFormat::Edges => edges_export(&g),
        GraphFormat::Dot => {
            let center = metric_profile(&g).map(|p| p.center).unwrap_or_default();
            dot_export(&g, Some(&center))
        }
        GraphFormat::Json => {
            report_json(&json!({
                "recipe": recipe,
                "graph6": graph6_encode(&g)?,
                "graph": g,
                "validation": validation,
            })) + "\n"
        }
    };
    Ok(CommandOutcome::verdict(
        validation.passed,
        stdout,
        "witness validation",
    ))
}

fn cmd_analyze(input: Option<PathBuf>) -> CmdResult {
    let text = read_input(input)?;
    let g = parse_graph(&text)?;
    let profile = metric_profile(&g)?;
    Ok(CommandOutcome::ok(report_json(&profile) + "\n"))
}

#[derive(Serialize)]
struct Mismatch {
    r: usize,
    formula: Vec<usize>,
    observed: Vec<usize>,
}

#[derive(Serialize)]
struct OrderVerdict {
    n: usize,
    agrees: bool,
    mismatches: Vec<Mismatch>,
    summary: EnumerationSummary,
}

/// Compares observed center sizes with the formula for every radius, and
/// flags radii the formula does not admit.
fn compare(summary: &EnumerationSummary, exact: bool) -> Result<Vec<Mismatch>, Error> {
    let n = summary.n;
    let mut mismatches = Vec::new();
    for r in 1..=n / 2 {
        let formula = omega_set(n, r)?;
        let observed = summary.observed(r);
        let ok = if exact {
            observed == formula
        } else {
            observed.iter().all(|s| formula.contains(s))
        };
        if !ok {
            mismatches.push(Mismatch {
                r,
                formula,
                observed,
            });
        }
    }
    for (&r, _) in summary
        .table
        .range(n / 2 + 1..)
        .chain(summary.table.range(..1))
    {
        mismatches.push(Mismatch {
            r,
            formula: Vec::new(),
            observed: summary.observed(r),
        });
    }
    Ok(mismatches)
}

fn cmd_verify(n: usize, max_n: usize) -> CmdResult {
    if n < 3 || max_n < n {
        return Err(CommandOutcome::usage(format!(
            "verify needs 3 <= n <= max-n, got n={n}, max-n={max_n}"
        )));
    }
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(CommandOutcome::usage(format!(
            "{}; orders above {MAX_ENUMERATION_ORDER} need an external catalog, see `gcenter corpus`",
            Error::OrderTooLarge {
                order: max_n,
                max: MAX_ENUMERATION_ORDER
            }
        )));
    }
    let mut orders = Vec::new();
    for k in n..=max_n {
        let summary = enumerate_labeled(k)?;
        let mismatches = compare(&summary, true)?;
        orders.push(OrderVerdict {
            n: k,
            agrees: mismatches.is_empty(),
            mismatches,
            summary,
        });
    }
    let agrees = orders.iter().all(|o| o.agrees);
    let stdout = report_json(&json!({ "agrees": agrees, "orders": orders })) + "\n";
    Ok(CommandOutcome::verdict(
        agrees,
        stdout,
        "enumeration disagrees with the formula",
    ))
}

fn cmd_corpus(file: PathBuf) -> CmdResult {
    let reader = fs::File::open(&file)
        .map_err(|e| CommandOutcome::usage(format!("{}: {e}", file.display())))?;
    let scan = corpus_scan(BufReader::new(reader), |_, _, _| false)?;
    let summary = scan.summary;
    if summary.n < 3 {
        let stdout = report_json(&json!({ "consistent": true, "summary": summary })) + "\n";
        return Ok(CommandOutcome::ok(stdout));
    }
    let outside = compare(&summary, false)?;
    let exact = compare(&summary, true)?.is_empty();
    let consistent = outside.is_empty();
    let stdout = report_json(&json!({
        "consistent": consistent,
        "matches_formula_exactly": exact,
        "outside_formula": outside,
        "summary": summary,
    })) + "\n";
    Ok(CommandOutcome::verdict(
        consistent,
        stdout,
        "corpus contains a center size the formula excludes",
    ))
}

fn cmd_unique(n: usize, r: usize, s: usize, corpus: Option<PathBuf>) -> CmdResult {
    if !omega_contains(n, r, s)? {
        return Err(Error::InfeasibleTarget { n, r, s }.into());
    }
    let (reference, recipe) = witness(n, r, s)?;
    let report = match corpus {
        Some(path) => {
            let reader = fs::File::open(&path)
                .map_err(|e| CommandOutcome::usage(format!("{}: {e}", path.display())))?;
            let scan = corpus_scan(BufReader::new(reader), |_, gr, gs| gr == r && gs == s)?;
            if scan.summary.n != n {
                return Err(CommandOutcome::usage(format!(
                    "corpus has order {}, expected {n}",
                    scan.summary.n
                )));
            }
            unique_among(n, r, s, &reference, &scan.matches)?
        }
        None => {
            if n > MAX_ENUMERATION_ORDER {
                return Err(CommandOutcome::usage(format!(
                    "{}; pass --corpus with a graph6 catalog",
                    Error::OrderTooLarge {
                        order: n,
                        max: MAX_ENUMERATION_ORDER
                    }
                )));
            }
            unique_up_to_iso(n, r, s, &reference)?
        }
    };
    let passed = report.is_unique;
    let stdout = report_json(&json!({ "reference_recipe": recipe, "report": report })) + "\n";
    Ok(CommandOutcome::verdict(
        passed,
        stdout,
        "a non-isomorphic graph was found",
    ))
}

fn cmd_lemmas(check: LemmaCheck, n: usize) -> CmdResult {
    let lemma = match check {
        LemmaCheck::InducedPath => Lemma::InducedPath,
        LemmaCheck::GeodesicCycle => Lemma::GeodesicCycle,
    };
    let report = scan_lemma(lemma, n)?;
    let stdout = report_json(&report) + "\n";
    Ok(CommandOutcome::verdict(
        report.holds,
        stdout,
        "lemma violated",
    ))
}

fn cmd_ratio(a: usize, b: usize) -> CmdResult {
    let g = ratio_witness(a, b)?;
    let profile = metric_profile(&g)?;
    let target = CentralRatio::new(a as u64, b as u64);
    let passed = profile.central_ratio == target;
    let stdout = report_json(&json!({
        "target": target,
        "order": g.order(),
        "center_size": profile.center_size(),
        "central_ratio": profile.central_ratio,
        "graph6": graph6_encode(&g)?,
    })) + "\n";
    Ok(CommandOutcome::verdict(
        passed,
        stdout,
        "central ratio mismatch",
    ))
}

fn cmd_reduce(cycle: Vec<usize>, input: Option<PathBuf>) -> CmdResult {
    let text = read_input(input)?;
    let g = parse_graph(&text)?;
    let (reduced, report) = reduce_to_bridges(&g, &cycle)?;
    let before = metric_profile(&g)?.radius;
    let after = metric_profile(&reduced)?.radius;
    let stdout = report_json(&json!({
        "radius_before": before,
        "radius_after": after,
        "reduced_graph6": graph6_encode(&reduced)?,
        "report": report,
    })) + "\n";
    Ok(CommandOutcome::verdict(
        after >= before,
        stdout,
        "reduction decreased the radius",
    ))
}
