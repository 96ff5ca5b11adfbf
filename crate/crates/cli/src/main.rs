//! Command-line front end for hub/authority ranking of directed graphs.

mod input;
mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qwrank_core::classical::{bek_scores, hits_scores_detailed, pagerank_result, IterationConfig};
use qwrank_core::graph::write_edgelist;
use qwrank_core::ranking::{comparison_report, Side};
use qwrank_core::walk::{cqau_scores, cqaw_scores, cqg_scores};
use qwrank_core::{CentralityResult, DirectedGraph, WalkConfig};

use input::{load_graph, parse_generator_spec, GeneratorSpec, InputFormat};
use output::{GraphInfo, OutputFormat};

#[derive(Parser)]
#[command(
    name = "qwrank",
    version,
    about = "Hub and authority centrality for directed graphs: continuous-time quantum walks \
             (CQAu, CQAw, CQG), classical baselines (HITS, PageRank, BEK) and ranking comparison"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-node hub and authority scores
    Rank(RankArgs),
    /// Compare method rankings via Kendall tau and top-k overlap
    Compare(CompareArgs),
    /// Generate a graph and write it as an edge list
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Graph file to load
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "generate",
        required_unless_present = "generate"
    )]
    input: Option<PathBuf>,

    /// Input format; by default inferred from the extension
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    /// Generator spec: path:N, diamond:N, star:N, tailed:N1,N2, example5,
    /// scalefree:N,ALPHA,BETA,GAMMA
    #[arg(long, value_name = "SPEC", value_parser = parse_generator_spec)]
    generate: Option<GeneratorSpec>,

    /// Seed for random generators
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// In-degree attachment shift for scalefree
    #[arg(long, default_value_t = 0.0)]
    delta_in: f64,

    /// Out-degree attachment shift for scalefree
    #[arg(long, default_value_t = 0.0)]
    delta_out: f64,
}

#[derive(Args)]
struct MethodArgs {
    /// Comma-separated methods to run
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    methods: Vec<MethodArg>,

    /// Teleportation parameter shared by CQA, CQG and PageRank
    #[arg(long, env = "QWRANK_ALPHA", default_value_t = 0.85)]
    alpha: f64,

    /// Absolute score gap below which nodes count as tied
    #[arg(long, default_value_t = 1e-8)]
    tie_tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Cqau,
    Cqaw,
    Cqg,
    Hits,
    Pagerank,
    Bek,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    methods: MethodArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    methods: MethodArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Top-list size for the overlap counts
    #[arg(short, long, default_value_t = 10)]
    k: usize,
}

#[derive(Args)]
struct GenerateArgs {
    /// Generator spec, as for --generate
    #[arg(value_parser = parse_generator_spec)]
    spec: GeneratorSpec,
    /// Edge-list file to write
    #[arg(short, long, value_name = "PATH")]
    output: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    delta_in: f64,
    #[arg(long, default_value_t = 0.0)]
    delta_out: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Rank(args) => cmd_rank(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Generate(args) => cmd_generate(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<qwrank_core::Error> for Failure {
    fn from(e: qwrank_core::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn resolve_graph(source: &GraphSource) -> Result<(DirectedGraph, GraphInfo), Failure> {
    let (graph, self_loops_dropped) = match (&source.generate, &source.input) {
        (Some(spec), None) => {
            let graph = spec.build(source.seed, source.delta_in, source.delta_out)?;
            (graph, None)
        }
        (None, Some(path)) => {
            let loaded = load_graph(path, source.input_format)?;
            if !loaded.weakly_connected {
                eprintln!("warning: graph is not weakly connected");
            }
            if loaded.self_loops_dropped > 0 {
                eprintln!(
                    "warning: dropped {} self-loop(s) from the input",
                    loaded.self_loops_dropped
                );
            }
            (loaded.graph, Some(loaded.self_loops_dropped))
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    let info = GraphInfo {
        n: graph.n(),
        edges: graph.edge_count(),
        weakly_connected: graph.is_weakly_connected(),
        self_loops_dropped,
    };
    Ok((graph, info))
}

fn run_methods(graph: &DirectedGraph, args: &MethodArgs) -> Result<Vec<CentralityResult>, Failure> {
    if !(0.0..=1.0).contains(&args.alpha) {
        return Err(Failure::Usage(format!(
            "--alpha must be in [0, 1], got {}",
            args.alpha
        )));
    }
    let walk_cfg = WalkConfig {
        alpha: args.alpha,
        ..WalkConfig::default()
    };
    let iter_cfg = IterationConfig {
        alpha: args.alpha,
        ..IterationConfig::default()
    };
    args.methods
        .iter()
        .map(|method| -> Result<CentralityResult, Failure> {
            let result = match method {
                MethodArg::Cqau => cqau_scores(graph, &walk_cfg)?,
                MethodArg::Cqaw => cqaw_scores(graph, &walk_cfg)?,
                MethodArg::Cqg => cqg_scores(graph, &walk_cfg)?,
                MethodArg::Hits => {
                    let (result, diag) = hits_scores_detailed(graph, &iter_cfg)?;
                    if !diag.converged {
                        eprintln!(
                            "warning: hits stopped after {} iterations without meeting the tolerance",
                            diag.iterations
                        );
                    }
                    if diag.degenerate_dominant {
                        eprintln!(
                            "warning: hits dominant eigenvalue is degenerate; \
                             scores are the uniform-start limit"
                        );
                    }
                    result
                }
                MethodArg::Pagerank => pagerank_result(graph, &iter_cfg)?,
                MethodArg::Bek => bek_scores(graph)?,
            };
            Ok(result)
        })
        .collect()
}

fn cmd_rank(args: RankArgs) -> Result<(), Failure> {
    let (graph, info) = resolve_graph(&args.source)?;
    let results = run_methods(&graph, &args.methods)?;
    let rendered = match args.format {
        OutputFormat::Table => output::render_rank_table(&info, &results, graph.labels()),
        OutputFormat::Csv => output::render_rank_csv(&results),
        OutputFormat::Json => output::render_json(&info, &results, None),
    };
    print!("{rendered}");
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<(), Failure> {
    if args.methods.methods.len() < 2 {
        return Err(Failure::Usage(
            "compare needs at least two --methods entries".into(),
        ));
    }
    let (graph, info) = resolve_graph(&args.source)?;
    if args.k > graph.n() {
        eprintln!(
            "warning: k={} exceeds the node count {}; using whole rankings",
            args.k,
            graph.n()
        );
    }
    let results = run_methods(&graph, &args.methods)?;
    let hub = comparison_report(&results, Side::Hub, args.k, args.methods.tie_tol)?;
    let authority = comparison_report(&results, Side::Authority, args.k, args.methods.tie_tol)?;
    let rendered = match args.format {
        OutputFormat::Table => output::render_compare_table(&info, &hub, &authority),
        OutputFormat::Csv => output::render_compare_csv(&hub, &authority),
        OutputFormat::Json => output::render_json(&info, &results, Some((&hub, &authority))),
    };
    print!("{rendered}");
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Failure> {
    let graph = args.spec.build(args.seed, args.delta_in, args.delta_out)?;
    let file = File::create(&args.output)
        .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", args.output.display())))?;
    let mut writer = BufWriter::new(file);
    write_edgelist(&graph, &mut writer).map_err(|e| Failure::Compute(e.to_string()))?;
    writer
        .flush()
        .map_err(|e| Failure::Compute(e.to_string()))?;
    println!("n={} edges={}", graph.n(), graph.edge_count());
    Ok(())
}
