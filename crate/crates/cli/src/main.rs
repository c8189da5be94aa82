//! `antiramsey`: formulas, constructions, detection and exact searches for
//! anti-Ramsey and Turán numbers of linear forests.
//!
//! Every subcommand prints one JSON object on stdout. Exit codes: 0 success
//! (or no copy found), 1 `verify` found a copy, 2 usage or input error, 3 a
//! search ran out of budget.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use antiramsey_core::constructions::InteriorArrangement;
use antiramsey_core::LinearForest;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "antiramsey", version, about = "Anti-Ramsey and Turan numbers of linear forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a closed-form value.
    Formula(FormulaArgs),
    /// Build an extremal coloring or graph and write it to a file.
    Construct(ConstructArgs),
    /// Look for a rainbow copy in a coloring, or a copy in a graph.
    Verify(VerifyArgs),
    /// Exact anti-Ramsey number by exhaustive search.
    SearchAr(SearchArgs),
    /// Exact Turan number by exhaustive search.
    SearchEx(SearchExArgs),
    /// Enumerate or sample representing graphs of a coloring.
    Representing(RepresentingArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormulaName {
    ArPath,
    ArMatching,
    ArMain,
    ArAsymptotic,
    EgBound,
    ExKp3,
    ExForest,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long, value_enum)]
    name: FormulaName,
    #[arg(long)]
    n: Option<u64>,
    /// Path length (ar-path, eg-bound) or number of disjoint triangles (ex-kp3).
    #[arg(long)]
    k: Option<u64>,
    /// Matching size (ar-matching).
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    forest: Option<LinearForest>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    /// Extremal coloring for a linear forest with an even component.
    ArForest,
    /// Extremal coloring for a single path.
    ArPath,
    /// Turan-extremal graph for a linear forest.
    Turan,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long, required_if_eq_any([("family", "ar-forest"), ("family", "turan")]))]
    forest: Option<LinearForest>,
    /// Path length for `ar-path`.
    #[arg(long, required_if_eq("family", "ar-path"))]
    k: Option<usize>,
    #[arg(long, default_value = "single-edge")]
    arrangement: InteriorArrangement,
    /// Coloring file (or graph6 file for `turan`); a `.json` sidecar is written
    /// next to it.
    #[arg(long)]
    out: PathBuf,
    /// Run the detector on the result when n is at most this.
    #[arg(long, default_value_t = 12)]
    verify_limit: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "input")]
struct VerifyInput {
    /// Coloring file: rainbow detection.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// graph6 file (first line): plain containment.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: VerifyInput,
    #[arg(long)]
    forest: LinearForest,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    #[arg(long, env = "ANTIRAMSEY_MAX_NODES", default_value_t = 50_000_000_000)]
    max_nodes: u64,
    #[arg(long, env = "ANTIRAMSEY_MAX_MILLIS", default_value_t = 600_000)]
    max_millis: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "ANTIRAMSEY_WORKERS")]
    workers: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    forest: LinearForest,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the witness (coloring file or graph6) here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchExArgs {
    #[command(flatten)]
    search: SearchArgs,
    /// Do not use the Erdos-Gallai bound for single paths.
    #[arg(long)]
    no_eg_bound: bool,
}

#[derive(Args, Debug)]
struct RepresentingArgs {
    #[arg(long)]
    coloring: PathBuf,
    /// Enumerate at most this many.
    #[arg(long, default_value_t = 1000)]
    cap: usize,
    /// Sample one uniformly instead of enumerating.
    #[arg(long)]
    seed: Option<u64>,
    /// Also report whether some enumerated member contains this forest.
    #[arg(long)]
    forest: Option<LinearForest>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            commands::print_error("usage", &e.render().to_string());
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Formula(a) => commands::formula(a),
        Command::Construct(a) => commands::construct(a),
        Command::Verify(a) => commands::verify(a),
        Command::SearchAr(a) => commands::search_ar(a),
        Command::SearchEx(a) => commands::search_ex(a),
        Command::Representing(a) => commands::representing(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            commands::print_error(e.kind, &e.message);
            ExitCode::from(2)
        }
    }
}
