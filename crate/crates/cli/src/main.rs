//! grasscode: enumerate subspaces and non-degenerate codes, export their
//! graphs, and run the verification suites.
//!
//! Exit codes: 0 all assertions pass, 1 an assertion failed, 2 usage error,
//! 3 vertex or time budget exceeded.

use clap::{Args, Parser, Subcommand};
use grasscode_core::code_graph::{is_nondegenerate, GraphHandle, GraphVariant};
use grasscode_core::error::Error;
use grasscode_core::export;
use grasscode_core::grassmannian::{
    enumerate_grassmannian, GrassmannianParams, DEFAULT_VERTEX_BUDGET,
};
use grasscode_core::suites::{run_suite, SuiteConfig, SUITE_CENSUS_CAP, SUITE_VERTEX_BUDGET};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_ASSERTION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "grasscode",
    version,
    about = "Grassmann graphs of linear [n,k]_q codes: enumeration, export, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate k-dimensional subspaces of GF(q)^n, one per line, with a
    /// trailing count line.
    Enum(EnumArgs),
    /// Build a graph variant and write it in graph6 or DIMACS form plus a
    /// vertex-label sidecar.
    Graph(GraphArgs),
    /// Run a verification suite and emit its JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    q: u16,
    #[arg(long)]
    n: u16,
    #[arg(long)]
    k: u16,
    /// Keep only non-degenerate codes.
    #[arg(long)]
    nondeg: bool,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Vertex budget; defaults to GRASSCODE_BUDGET or 2000000.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    q: u16,
    #[arg(long)]
    n: u16,
    #[arg(long)]
    k: u16,
    /// Vertex set: full, nondeg, or dual-nondeg.
    #[arg(long, default_value = "nondeg")]
    variant: String,
    /// Output format: graph6 or dimacs.
    #[arg(long, default_value = "graph6")]
    format: String,
    /// Output file for the graph; labels go to <out>.labels.
    #[arg(long, short)]
    out: PathBuf,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for graph construction.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: counts, star-formula, prop-star, prop-top, connectivity,
    /// distance, census, automorphisms, orthocomplement, counterexample, or
    /// all.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    q: Option<u16>,
    #[arg(long)]
    n: Option<u16>,
    #[arg(long)]
    k: Option<u16>,
    /// Seed for randomized map sampling; recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent anchors and sources.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    budget: Option<u64>,
    /// Vertex cap for the clique census.
    #[arg(long, default_value_t = SUITE_CENSUS_CAP)]
    census_cap: usize,
    /// Time budget in seconds for witness searches.
    #[arg(long)]
    time_budget: Option<u64>,
    /// Include the long distance-witness case (q=2, n=9, k=2).
    #[arg(long)]
    long: bool,
    /// Report file (single suite) or directory (suite all); stdout when
    /// omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

fn env_budget() -> Option<u64> {
    std::env::var("GRASSCODE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } | Error::TimeBudget { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_for(&err))
}

fn write_output(path: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn run_enum(args: EnumArgs) -> ExitCode {
    let params = match GrassmannianParams::new(args.q, args.n, args.k) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let budget = args
        .budget
        .or_else(env_budget)
        .unwrap_or(DEFAULT_VERTEX_BUDGET);
    let iter = match enumerate_grassmannian(params, budget) {
        Ok(it) => it,
        Err(e) => return fail(e),
    };
    let mut out = String::new();
    let mut count = 0u64;
    for s in iter {
        if args.nondeg && !is_nondegenerate(&s) {
            continue;
        }
        out.push_str(&s.to_line());
        out.push('\n');
        count += 1;
    }
    out.push_str(&format!("count={count}\n"));
    if let Err(e) = write_output(&args.out, &out) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::SUCCESS
}

fn run_graph(args: GraphArgs) -> ExitCode {
    let params = match GrassmannianParams::new(args.q, args.n, args.k) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let variant = match GraphVariant::parse(&args.variant) {
        Ok(GraphVariant::Custom) => {
            eprintln!("error: custom graphs cannot be built from the command line");
            return ExitCode::from(EXIT_USAGE);
        }
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let budget = args
        .budget
        .or_else(env_budget)
        .unwrap_or(DEFAULT_VERTEX_BUDGET);
    let g = match GraphHandle::build(params, variant, budget, args.jobs) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    if g.is_complete_regime() {
        eprintln!(
            "note: complete-graph regime (k = 1 or k = n-1): any two distinct vertices are adjacent"
        );
    }
    let rendered = match args.format.as_str() {
        "graph6" => match export::to_graph6(&g) {
            Ok(s) => s + "\n",
            Err(e) => return fail(e),
        },
        "dimacs" => export::to_dimacs(&g),
        other => {
            eprintln!("error: unknown format {other:?}; expected graph6 or dimacs");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let labels = export::labels(&g);
    let labels_path = {
        let mut p = args.out.clone().into_os_string();
        p.push(".labels");
        PathBuf::from(p)
    };
    if let Err(e) =
        std::fs::write(&args.out, rendered).and_then(|_| std::fs::write(&labels_path, labels))
    {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::SUCCESS
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let point = match (args.q, args.n, args.k) {
        (None, None, None) => None,
        (Some(q), Some(n), Some(k)) => match GrassmannianParams::new(q, n, k) {
            Ok(p) => Some(p),
            Err(e) => return fail(e),
        },
        _ => {
            eprintln!("error: --q, --n, --k must be given together");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let cfg = SuiteConfig {
        point,
        budget: args
            .budget
            .or_else(env_budget)
            .unwrap_or(SUITE_VERTEX_BUDGET),
        census_cap: args.census_cap,
        seed: args.seed,
        jobs: args.jobs.max(1),
        long: args.long,
        time_budget_secs: args.time_budget,
        map_samples: grasscode_core::suites::MAP_SAMPLES,
    };
    let outcomes = match run_suite(&args.suite, &cfg) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };

    let multi = outcomes.len() > 1;
    if let Some(out) = &args.out {
        if multi {
            if let Err(e) = std::fs::create_dir_all(out) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
        for o in &outcomes {
            let path = if multi {
                out.join(format!("{}.json", o.name))
            } else {
                out.clone()
            };
            if let Err(e) = std::fs::write(&path, &o.json) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    } else {
        let mut stdout = std::io::stdout();
        for o in &outcomes {
            let _ = writeln!(stdout, "{}", o.json);
        }
    }
    for o in &outcomes {
        eprintln!(
            "suite {}: {}",
            o.name,
            if o.passed { "pass" } else { "fail" }
        );
    }
    if outcomes.iter().all(|o| o.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ASSERTION)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enum(args) => run_enum(args),
        Command::Graph(args) => run_graph(args),
        Command::Verify(args) => run_verify(args),
    }
}
