//! Command-line interface: generate mops, run the constructive algorithm,
//! solve domination numbers exactly, verify vertex sets, and sweep the
//! bounds over enumerated or random instances.
//!
//! Exit codes: 0 success (or property verified), 1 property fails (a
//! non-secure set for `verify`, violations for `sweep`), 2 usage or
//! format errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mopdom::domination::classify;
use mopdom::exact::{solve, Kind, SolveOptions};
use mopdom::families::{for_each_mop, make_g_k, make_h_k, random_mop};
use mopdom::json::{set_from_ids, ConstructJson, GraphJson, SolveJson};
use mopdom::sweep::{run_sweep, SweepConfig, SweepMode};
use mopdom::{build_stds, VertexSet};

#[derive(Parser)]
#[command(
    name = "mopdom",
    version,
    about = "Secure total domination on maximal outerplanar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph: a named family member, a random mop, or all
    /// triangulations of a given order (one JSON object per line)
    Gen(GenArgs),
    /// Build a secure total dominating set of size at most floor(2n/3)
    Construct(ConstructArgs),
    /// Compute a domination number exactly (small graphs)
    Solve(SolveArgs),
    /// Classify a vertex set; exits 0 iff it is secure total dominating
    Verify(VerifyArgs),
    /// Check the bounds over many graphs and write one CSV row per graph
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Hub-linked triangles, n = 3k (upper bound tight)
    H,
    /// Fan, n = 3k + 1 (lower bound tight)
    G,
    /// Uniformly random triangulation
    Random,
    /// Every triangulation of the n-gon
    All,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Family size parameter for h and g
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count for random and all
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Graph JSON file ({"n", "diagonals"} or {"n", "edges"})
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Dominating,
    Total,
    Two,
    #[value(alias = "secure_total")]
    SecureTotal,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Dominating => Kind::Dominating,
            KindArg::Total => Kind::Total,
            KindArg::Two => Kind::Two,
            KindArg::SecureTotal => Kind::SecureTotal,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "secure-total")]
    kind: KindArg,
    /// Keep degree-2 vertices out of the set
    #[arg(long = "exclude-degree-2")]
    exclude_degree_two: bool,
    /// Largest admissible vertex count
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    /// Vertex set JSON file (sorted integer array)
    set: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    /// Sample count in random mode
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Solve exactly for graphs up to this order (at most 14)
    #[arg(long, default_value_t = 14)]
    cap: usize,
    /// CSV output path; without it rows go to stdout and the summary to
    /// stderr
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn out_writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn read_graph(path: &PathBuf) -> Result<GraphJson> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing graph JSON {}", path.display()))
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let mut w = out_writer(&args.out)?;
    match args.family {
        FamilyArg::H | FamilyArg::G => {
            let k = args.k.context("--k is required for families h and g")?;
            if k == 0 {
                bail!("--k must be at least 1");
            }
            let m = match args.family {
                FamilyArg::H => make_h_k(k),
                _ => make_g_k(k),
            };
            writeln!(w, "{}", serde_json::to_string(&GraphJson::from_mop(&m))?)?;
        }
        FamilyArg::Random => {
            let n = args.n.context("--n is required for random generation")?;
            if n < 3 {
                bail!("--n must be at least 3");
            }
            let m = random_mop(n, args.seed);
            writeln!(w, "{}", serde_json::to_string(&GraphJson::from_mop(&m))?)?;
        }
        FamilyArg::All => {
            let n = args
                .n
                .context("--n is required for exhaustive generation")?;
            let mut failed = None;
            for_each_mop(n, |m| {
                if failed.is_none() {
                    if let Err(e) = serde_json::to_string(&GraphJson::from_mop(&m))
                        .map_err(anyhow::Error::from)
                        .and_then(|line| writeln!(w, "{line}").map_err(anyhow::Error::from))
                    {
                        failed = Some(e);
                    }
                }
            })?;
            if let Some(e) = failed {
                return Err(e);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode> {
    let mop = read_graph(&args.graph)?.to_mop()?;
    let (set, trace) = build_stds(&mop)?;
    let json = ConstructJson::new(mop.n(), &set, &trace);
    let mut w = out_writer(&args.out)?;
    writeln!(w, "{}", serde_json::to_string(&json)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.graph)?.to_graph()?;
    let kind: Kind = args.kind.into();
    let opts = SolveOptions {
        cap: args.cap,
        exclude_degree_two: args.exclude_degree_two,
    };
    let result = solve(&graph, kind, &opts)?;
    let mut w = out_writer(&args.out)?;
    writeln!(
        w,
        "{}",
        serde_json::to_string(&SolveJson::new(kind, &result))?
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.graph)?.to_graph()?;
    let text =
        fs::read_to_string(&args.set).with_context(|| format!("reading {}", args.set.display()))?;
    let ids: Vec<usize> = serde_json::from_str(&text)
        .with_context(|| format!("parsing set JSON {}", args.set.display()))?;
    let set: VertexSet = set_from_ids(&ids, graph.n())?;
    let verdict = classify(&set, &graph);
    println!("{}", serde_json::to_string(&verdict)?);
    Ok(if verdict.secure_total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let cfg = SweepConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        mode: match args.mode {
            ModeArg::Exhaustive => SweepMode::Exhaustive,
            ModeArg::Random => SweepMode::Random,
        },
        samples: args.samples,
        seed: args.seed,
        exact_cap: args.cap,
    };
    let (rows, summary) = run_sweep(&cfg)?;

    let mut csv_writer = csv::Writer::from_writer(out_writer(&args.out)?);
    for row in &rows {
        csv_writer.serialize(row)?;
    }
    csv_writer.flush()?;
    drop(csv_writer);

    let summary_json = serde_json::to_string(&summary)?;
    if args.out.is_some() {
        println!("{summary_json}");
    } else {
        eprintln!("{summary_json}");
    }
    Ok(if summary.violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
