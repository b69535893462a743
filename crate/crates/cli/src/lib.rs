//! The `domcrit` command-line front end.
//!
//! Every subcommand writes JSON lines (or graph6 lines for `enumerate`) to the
//! given writer and returns a process exit code:
//! 0 success, 1 counterexample found, 2 input error, 64 usage error,
//! 70 internal inconsistency.

pub mod random;
pub mod report;
pub mod selftest;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use domcrit_core::catalog::{named_graph, NamedGraph};
use domcrit_core::{
    are_isomorphic, domination_number, from_graph6, has_perfect_matching, is_factor_critical,
    is_k_vertex_critical, k2n_minus_pm, to_graph6, EnumFilter, Graph, TheoremStatus,
};
use serde::Serialize;
use serde_json::json;

use report::{analyze_graph, ReportLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<domcrit_core::Error> for CliError {
    fn from(e: domcrit_core::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
            // a closed pipe downstream (e.g. `| head`) is not a failure
            CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
            CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "domcrit", version, about = "Exact domination-criticality and factor-criticality checks on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze graph6 lines from FILE (or standard input), one JSON record per graph.
    Analyze {
        file: Option<PathBuf>,
    },
    /// Check the theorem on every graph of odd order 3..=max-n.
    VerifyTheorem(VerifyArgs),
    /// Print the named graphs and K_2m minus a perfect matching for m <= 4.
    Catalog {
        /// Print only the graph6 strings.
        #[arg(long)]
        graph6: bool,
    },
    /// Stream one graph6 line per isomorphism class matching the filter.
    Enumerate(EnumerateArgs),
    /// Cross-check blossom matching and Lemma-1 certificates against exhaustive oracles.
    OracleSelftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_n: usize,
    /// Enumerate only 2-connected, K_{1,5}-free graphs with minimum degree 3.
    #[arg(long)]
    pub prune: bool,
    /// Random multi-edge perturbations of G1/G2, on top of all single-edge ones.
    #[arg(long, default_value_t = 1000)]
    pub perturbations: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub biconnected: bool,
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    #[arg(long)]
    pub k15_free: bool,
    /// Print only the number of classes.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Exhaustive suites cover all classes up to this order.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Size of each random suite.
    #[arg(long, default_value_t = 1000)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if help {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return if help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Analyze { file } => cmd_analyze(file, stdin, out, err),
        Command::VerifyTheorem(args) => cmd_verify_theorem(&args, out, err),
        Command::Catalog { graph6 } => cmd_catalog(graph6, out),
        Command::Enumerate(args) => cmd_enumerate(&args, out),
        Command::OracleSelftest(args) => cmd_oracle_selftest(&args, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = e.exit_code();
            if code != EXIT_OK {
                let _ = writeln!(err, "domcrit: {e}");
            }
            code
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

pub fn cmd_analyze(
    file: Option<PathBuf>,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut owned;
    let input: &mut dyn BufRead = match &file {
        Some(path) => {
            let f = File::open(path)
                .map_err(|e| CliError::Input(format!("cannot open {}: {e}", path.display())))?;
            owned = BufReader::new(f);
            &mut owned
        }
        None => stdin,
    };

    let mut input_errors = 0;
    let mut inconsistent = 0;
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| CliError::Input(format!("line {line_no}: {e}")))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let analyzed = from_graph6(text)
            .map_err(|e| CliError::Input(e.to_string()))
            .and_then(|g| analyze_graph(&g).map(|r| (g, r)));
        match analyzed {
            Ok((g, record)) => {
                if let Some(reason) = record.consistency_error(&g) {
                    writeln!(err, "domcrit: line {line_no}: internal inconsistency: {reason}")?;
                    inconsistent += 1;
                }
                emit(out, &record)?;
            }
            Err(e) => {
                input_errors += 1;
                writeln!(err, "domcrit: line {line_no}: {e}")?;
                emit(out, &json!({ "line": line_no, "error": e.to_string() }))?;
            }
        }
    }
    Ok(if inconsistent > 0 {
        EXIT_INTERNAL
    } else if input_errors > 0 {
        EXIT_INPUT
    } else {
        EXIT_OK
    })
}

pub fn cmd_verify_theorem(
    args: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    verify::check_scale(args.max_n, args.prune)?;
    let mut internal = false;

    for (name, status) in verify::catalog_verdicts()? {
        emit(out, &json!({ "catalog": name.to_string(), "status": status }))?;
        if status != TheoremStatus::ListedException {
            writeln!(err, "domcrit: {name} classified as {}", status.as_str())?;
            internal = true;
        }
    }

    let scan = verify::scan(args.max_n, args.prune)?;
    for summary in &scan.orders {
        emit(out, summary)?;
    }
    for (g6, reason) in &scan.facts_failures {
        emit(out, &json!({ "facts_failure": g6, "reason": reason }))?;
        internal = true;
    }

    let perturbed = verify::perturbations(args.perturbations, args.seed)?;
    emit(out, &json!({ "perturbations": perturbed }))?;

    let counterexamples: Vec<&String> = scan
        .counterexamples
        .iter()
        .chain(&perturbed.counterexamples)
        .collect();
    for g6 in &counterexamples {
        emit(out, &json!({ "counterexample": g6 }))?;
    }
    emit(out, &json!({ "counterexamples": counterexamples.len() }))?;

    Ok(if internal {
        EXIT_INTERNAL
    } else if !counterexamples.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

#[derive(Debug, Serialize)]
struct NamedRecord {
    name: String,
    #[serde(flatten)]
    report: ReportLine,
    distinguished_vertex: usize,
    gamma_without_distinguished: usize,
    distinguished_deletion_has_perfect_matching: bool,
    /// Least vertex whose deletion leaves no perfect matching.
    factor_critical_witness: Option<usize>,
    /// Least vertex whose deletion keeps the domination number.
    criticality_failing_vertex: Option<usize>,
}

#[derive(Debug, Serialize)]
struct FamilyRecord {
    name: String,
    m: usize,
    #[serde(flatten)]
    report: ReportLine,
    two_critical: bool,
}

pub fn cmd_catalog(graph6_only: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut named: Vec<(NamedGraph, Graph)> = Vec::new();
    let mut inconsistent = false;

    for name in NamedGraph::ALL {
        let entry = named_graph(name);
        let g = entry.graph;
        let report = analyze_graph(&g)?;
        inconsistent |= report.consistency_error(&g).is_some();
        let v = entry.distinguished;
        let without = g.delete_vertex(v)?;
        let record = NamedRecord {
            name: name.to_string(),
            distinguished_vertex: v,
            gamma_without_distinguished: domination_number(&without)?.gamma,
            distinguished_deletion_has_perfect_matching: has_perfect_matching(&without),
            factor_critical_witness: is_factor_critical(&g).1,
            criticality_failing_vertex: is_k_vertex_critical(&g, 3)?.failing_vertex,
            report,
        };
        if graph6_only {
            writeln!(out, "{}", record.report.graph6)?;
        } else {
            emit(out, &record)?;
        }
        named.push((name, g));
    }

    for m in 1..=4 {
        let g = k2n_minus_pm(m)?;
        let report = analyze_graph(&g)?;
        inconsistent |= report.consistency_error(&g).is_some();
        let record = FamilyRecord {
            name: format!("K{}-PM", 2 * m),
            m,
            two_critical: is_k_vertex_critical(&g, 2)?.is_k_critical,
            report,
        };
        if graph6_only {
            writeln!(out, "{}", record.report.graph6)?;
        } else {
            emit(out, &record)?;
        }
    }

    let mut distinct = true;
    for i in 0..named.len() {
        for j in i + 1..named.len() {
            distinct &= !are_isomorphic(&named[i].1, &named[j].1)?;
        }
    }
    if !graph6_only {
        emit(
            out,
            &json!({ "named_graphs": named.len(), "pairwise_non_isomorphic": distinct }),
        )?;
    }
    Ok(if distinct && !inconsistent {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    })
}

pub fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut filter = EnumFilter::new(args.n).min_degree(args.min_degree);
    if args.connected {
        filter = filter.connected();
    }
    if args.biconnected {
        filter = filter.biconnected();
    }
    if args.k15_free {
        filter = filter.k15_free();
    }
    filter
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let graphs = domcrit_core::enumerate_graphs(&filter)?;
    if args.count {
        writeln!(out, "{}", graphs.len())?;
    } else {
        for g in &graphs {
            writeln!(out, "{}", to_graph6(g))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_oracle_selftest(args: &SelftestArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.max_n == 0 || args.max_n > 9 {
        return Err(CliError::Usage(format!(
            "--max-n must lie in 1..=9, got {}",
            args.max_n
        )));
    }
    let suites = [
        selftest::matching_on_classes(args.max_n)?,
        selftest::matching_on_random(args.random, 12, args.seed),
        selftest::lemma1_on_classes(args.max_n)?,
        selftest::lemma1_on_random(args.random, 10, args.seed.wrapping_add(1)),
    ];
    let mut all_passed = true;
    for suite in &suites {
        emit(out, suite)?;
        all_passed &= suite.passed();
    }
    emit(out, &json!({ "all_passed": all_passed }))?;
    Ok(if all_passed { EXIT_OK } else { EXIT_INTERNAL })
}
