//! Command-line front end. One thin binary; all logic lives in the library.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or format error,
//! 3 hypothesis violation, 4 inequality violation (with a reproducer on
//! stderr).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{evaluate_bound, BoundParams, BoundVariant};
use crate::constructions::{
    bipartite_chain, c4_chain, clique_chain, modified_polarity_graph, polarity_graph, ChainLabels,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::{enumerate_connected_graphs_uncapped, sweep, verify_batch, SweepConfig};
use crate::io::{from_graph6, read_graph_file, to_edge_list, to_graph6, write_graph_file, GraphFormat};
use crate::metrics::MetricReport;
use crate::pipeline::{certify, TheoremVariant};
use crate::ratio::decimal_str;

#[derive(Parser)]
#[command(
    name = "meandist",
    version,
    about = "Exact graph distance invariants, degree-based bounds, extremal constructions, and bound certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, degrees, structural flags, Wiener index and average distance
    Compute(ComputeArgs),
    /// Generate an extremal construction
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Evaluate a closed-form bound at given parameters
    Bound(BoundArgs),
    /// Replay a bounding argument on a graph and emit the certificate
    Certify(CertifyArgs),
    /// Verify bounds exhaustively over all small connected graphs
    VerifySmall(VerifySmallArgs),
    /// Produce a CSV gap report over a construction grid
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (edge list or graph6, auto-detected)
    #[arg(long = "in", value_name = "FILE", conflicts_with = "g6")]
    input: Option<PathBuf>,
    /// Inline graph6 string
    #[arg(long, value_name = "STR")]
    g6: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.input, &self.g6) {
            (Some(path), None) => read_graph_file(path, None),
            (None, Some(s)) => from_graph6(s),
            _ => Err(Error::InvalidParameters(
                "provide exactly one of --in FILE or --g6 STR".into(),
            )),
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct ConstructOut {
    /// Write the graph here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Output encoding
    #[arg(long, value_enum, default_value_t = FileFormat::Edges)]
    format: FileFormat,
    /// Write block labels / port vertices as a JSON sidecar
    #[arg(long, value_name = "FILE")]
    labels_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Edges,
    G6,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Clique chain of order n with maximum degree Delta, minimum degree delta
    CliqueChain {
        n: usize,
        #[arg(value_name = "DELTA_MAX")]
        max_deg: usize,
        #[arg(value_name = "DELTA_MIN")]
        min_deg: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Triangle-free bipartite chain of order n
    BipartiteChain {
        n: usize,
        #[arg(value_name = "DELTA_MAX")]
        max_deg: usize,
        #[arg(value_name = "DELTA_MIN")]
        min_deg: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Orthogonality graph on the projective points over GF(q)
    Polarity {
        q: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Modified orthogonality graph with its two far-apart ports
    PolarityMod {
        q: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// C4-free chain with k hub lobes, ell blocks, field order q
    C4Chain {
        k: usize,
        ell: usize,
        q: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
}

#[derive(Args)]
struct BoundArgs {
    /// plesnik | kouider_winkler | thm4_upper | thm4_lower | thm5_upper |
    /// thm5_lower | thm6_upper | thm63_lower
    variant: String,
    #[arg(long)]
    n: u64,
    /// minimum degree
    #[arg(long)]
    delta: u64,
    /// maximum degree
    #[arg(long = "Delta", value_name = "DELTA_MAX")]
    max_degree: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct CertifyArgs {
    /// thm4 | thm5 | thm6
    variant: String,
    #[command(flatten)]
    graph: GraphInput,
    /// Write the certificate JSON here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifySmallArgs {
    /// Largest order to enumerate (8 allowed but slow)
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Bound variants to check (default: plesnik and kouider_winkler)
    #[arg(long = "variant")]
    variants: Vec<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON grid description; see SweepConfig in the library docs
    #[arg(long, value_name = "FILE")]
    config: PathBuf,
}

/// Parses and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Bound(args) => run_bound(args),
        Command::Certify(args) => run_certify(args),
        Command::VerifySmall(args) => run_verify_small(args),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn run_compute(args: ComputeArgs) -> Result<i32> {
    let g = args.graph.load()?;
    let stats = g.degree_stats()?;
    let (triangle_free, c4_free) = g.structural_predicates();
    let report = MetricReport::for_graph(&g)?;
    match args.format {
        OutputFormat::Text => {
            println!("n {}", g.order());
            println!("edges {}", g.edge_count());
            println!("delta {}", stats.min);
            println!("Delta {}", stats.max);
            println!("connected {}", g.is_connected());
            println!("triangle_free {triangle_free}");
            println!("c4_free {c4_free}");
            println!("wiener {}", report.wiener);
            println!(
                "mu {} (~{})",
                report.avg_distance, report.avg_distance_decimal
            );
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": g.order(),
                "edge_count": g.edge_count(),
                "min_degree": stats.min,
                "max_degree": stats.max,
                "connected": g.is_connected(),
                "triangle_free": triangle_free,
                "c4_free": c4_free,
                "wiener": report.wiener,
                "avg_distance": report.avg_distance,
                "avg_distance_decimal": report.avg_distance_decimal,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(0)
}

fn run_construct(cmd: ConstructCmd) -> Result<i32> {
    let (graph, labels, ports, out) = match cmd {
        ConstructCmd::CliqueChain {
            n,
            max_deg,
            min_deg,
            out,
        } => {
            let (g, labels) = clique_chain(n, max_deg, min_deg)?;
            (g, Some(labels), None, out)
        }
        ConstructCmd::BipartiteChain {
            n,
            max_deg,
            min_deg,
            out,
        } => {
            let (g, labels) = bipartite_chain(n, max_deg, min_deg)?;
            (g, Some(labels), None, out)
        }
        ConstructCmd::Polarity { q, out } => (polarity_graph(q)?, None, None, out),
        ConstructCmd::PolarityMod { q, out } => {
            let (g, u, v) = modified_polarity_graph(q)?;
            (g, None, Some((u, v)), out)
        }
        ConstructCmd::C4Chain { k, ell, q, out } => {
            let (g, labels) = c4_chain(k, ell, q)?;
            (g, Some(labels), None, out)
        }
    };
    emit_graph(&graph, &out)?;
    if let Some(path) = &out.labels_out {
        let json = labels_json(labels.as_ref(), ports)?;
        std::fs::write(path, json)?;
    }
    Ok(0)
}

fn labels_json(labels: Option<&ChainLabels>, ports: Option<(usize, usize)>) -> Result<String> {
    let value = match (labels, ports) {
        (Some(labels), None) => serde_json::to_value(labels)?,
        (None, Some((u, v))) => serde_json::json!({ "u": u, "v": v }),
        _ => {
            return Err(Error::InvalidParameters(
                "this construction has no labels to write".into(),
            ))
        }
    };
    Ok(serde_json::to_string_pretty(&value)?)
}

fn emit_graph(g: &Graph, out: &ConstructOut) -> Result<()> {
    match (&out.out, out.format) {
        (Some(path), FileFormat::Edges) => write_graph_file(path, g, GraphFormat::EdgeList),
        (Some(path), FileFormat::G6) => write_graph_file(path, g, GraphFormat::Graph6),
        (None, FileFormat::Edges) => {
            print!("{}", to_edge_list(g));
            Ok(())
        }
        (None, FileFormat::G6) => {
            println!("{}", to_graph6(g));
            Ok(())
        }
    }
}

fn run_bound(args: BoundArgs) -> Result<i32> {
    let variant = BoundVariant::parse(&args.variant).ok_or_else(|| {
        Error::InvalidParameters(format!("unknown bound variant {:?}", args.variant))
    })?;
    let params = BoundParams::new(args.n, args.delta, args.max_degree)?;
    let bound = evaluate_bound(variant, &params);
    match args.format {
        OutputFormat::Text => {
            println!("variant {}", variant.name());
            println!(
                "value {} (~{})",
                crate::ratio::exact_str(&bound.value),
                decimal_str(&bound.value)
            );
            for h in &bound.hypotheses {
                println!("hypothesis {}: {}", h.name, if h.met { "met" } else { "NOT met" });
            }
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "variant": variant.name(),
                "value": crate::ratio::exact_str(&bound.value),
                "value_decimal": decimal_str(&bound.value),
                "hypotheses": bound.hypotheses,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(0)
}

fn run_certify(args: CertifyArgs) -> Result<i32> {
    let variant = TheoremVariant::parse(&args.variant).ok_or_else(|| {
        Error::InvalidParameters(format!(
            "unknown variant {:?}; expected thm4, thm5, or thm6",
            args.variant
        ))
    })?;
    let g = args.graph.load()?;
    let cert = certify(&g, variant)?;
    let json = cert.to_json();
    match &args.out {
        Some(path) => std::fs::write(path, &json)?,
        None => println!("{json}"),
    }
    if cert.all_hold() {
        Ok(0)
    } else {
        let names: Vec<_> = cert.failed_checks().iter().map(|c| c.name.clone()).collect();
        eprintln!(
            "error: inequality violated on {}: {}",
            to_graph6(&g),
            names.join(" ")
        );
        Ok(4)
    }
}

fn run_verify_small(args: VerifySmallArgs) -> Result<i32> {
    let variants: Vec<BoundVariant> = if args.variants.is_empty() {
        vec![BoundVariant::Plesnik, BoundVariant::KouiderWinkler]
    } else {
        args.variants
            .iter()
            .map(|s| {
                BoundVariant::parse(s).ok_or_else(|| {
                    Error::InvalidParameters(format!("unknown bound variant {s:?}"))
                })
            })
            .collect::<Result<_>>()?
    };
    for n in 1..=args.n_max {
        // verify in chunks so the row buffers stay small at n = 7 and 8
        let mut stream = enumerate_connected_graphs_uncapped(n)?.enumerate();
        let mut total = 0usize;
        loop {
            let chunk: Vec<(String, Graph)> = stream
                .by_ref()
                .take(1 << 16)
                .map(|(i, g)| (format!("n{n}:{i}"), g))
                .collect();
            if chunk.is_empty() {
                break;
            }
            total += verify_batch(chunk, &variants, &[])?.len();
        }
        println!(
            "n={n} graphs={total} variants={} violations=0",
            variants.len()
        );
    }
    println!("all bounds verified");
    Ok(0)
}

fn run_sweep(args: SweepArgs) -> Result<i32> {
    let text = std::fs::read_to_string(&args.config)?;
    let config: SweepConfig = serde_json::from_str(&text)?;
    let csv = sweep(&config)?;
    match &config.output {
        Some(path) => std::fs::write(resolve_output(&args.config, path), csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

/// Relative output paths resolve against the config file's directory.
fn resolve_output(config_path: &Path, output: &Path) -> PathBuf {
    if output.is_absolute() {
        output.to_path_buf()
    } else {
        config_path
            .parent()
            .unwrap_or_else(|| Path::new("."))
            .join(output)
    }
}
