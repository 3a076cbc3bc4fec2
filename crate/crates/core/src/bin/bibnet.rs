//! Command-line front end: build, rank, sweep, contributions, synth.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use bibnet::export::{format_weight, write_network};
use bibnet::ingest::{parse_credits, write_corpus};
use bibnet::pipeline::incidence_for;
use bibnet::report::{write_contributions, write_ranking, write_sweep};
use bibnet::{
    contributions, generate, parse_corpus, project, rank_related, sweep, CountingScheme, Execution,
    Format, IncidenceMatrix, NetworkKind, ProjectionConfig, SynthConfig, UnitKind,
};

#[derive(Parser)]
#[command(
    name = "bibnet",
    version,
    about = "Full and fractional counting bibliometric networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a network and write it to a file
    Build(BuildArgs),
    /// Rank the units most strongly linked to a focal unit
    Rank(RankArgs),
    /// Link counts when columns above each threshold are dropped
    Sweep(SweepArgs),
    /// Per-item breakdown of the link between two units
    Contributions(ContributionArgs),
    /// Write a seeded synthetic corpus
    Synth(SynthArgs),
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus file, one JSON record per line
    #[arg(long)]
    input: PathBuf,
    /// Unit of analysis: author, affiliation or venue
    #[arg(long = "unit", default_value = "author")]
    unit: UnitKind,
    /// Co-citation credit sidecar (`item<TAB>unit` lines)
    #[arg(long)]
    credits: Option<PathBuf>,
}

#[derive(Args)]
struct NetworkArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// coauthorship, coupling or cocitation
    #[arg(long, default_value = "coauthorship")]
    network: NetworkKind,
    /// full, fractional, frac-nk, frac-nk2 or frac-self
    #[arg(long, default_value = "full")]
    counting: CountingScheme,
    /// Skip publications with more than this many contributing units
    #[arg(long)]
    max_coauthors: Option<usize>,
    /// Project on a single thread
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    net: NetworkArgs,
    /// Output path; the network goes to standard output when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    /// edgelist, pajek or records
    #[arg(long, default_value = "edgelist")]
    format: Format,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    net: NetworkArgs,
    #[arg(long)]
    focal: String,
    #[arg(long = "top", default_value_t = 20)]
    top: usize,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Strictly increasing, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    thresholds: Vec<usize>,
}

#[derive(Args)]
struct ContributionArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// coupling or cocitation
    #[arg(long, default_value = "coupling")]
    network: NetworkKind,
    #[arg(long)]
    focal: String,
    #[arg(long)]
    partner: String,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    units: usize,
    #[arg(long, default_value_t = 10_000)]
    records: usize,
    #[arg(long, default_value_t = 0.7)]
    p_single: f64,
    #[arg(long, default_value_t = 4.0)]
    mean_team: f64,
    #[arg(long, default_value_t = 0.001)]
    hyper_fraction: f64,
    #[arg(long, default_value_t = 100)]
    hyper_min: usize,
    #[arg(long, default_value_t = 150)]
    hyper_max: usize,
    #[arg(long, default_value_t = 5)]
    refs_min: usize,
    #[arg(long, default_value_t = 30)]
    refs_max: usize,
    #[arg(long, default_value_t = 1.0)]
    zipf: f64,
    #[arg(long, default_value_t = 0)]
    venues: usize,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Build(args) => cmd_build(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Contributions(args) => cmd_contributions(args),
        Command::Synth(args) => cmd_synth(args),
    }
}

fn load(args: &CorpusArgs, kind: NetworkKind) -> Result<IncidenceMatrix> {
    let corpus = parse_corpus(&args.input)?;
    let credits = args.credits.as_deref().map(parse_credits).transpose()?;
    Ok(incidence_for(&corpus, kind, args.unit, credits.as_ref())?)
}

fn projection_config(args: &NetworkArgs) -> ProjectionConfig {
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    ProjectionConfig {
        max_column_margin: args.max_coauthors,
        ..ProjectionConfig::new(args.counting).with_execution(execution)
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let m = load(&args.net.corpus, args.net.network)?;
    let net = project(&m, &projection_config(&args.net))?;
    let summary = format!(
        "units={} columns={} links={} total_weight={}",
        net.size(),
        m.n_cols(),
        net.link_count(),
        format_weight(net.total_weight(), net.scheme())
    );
    match &args.output {
        Some(path) => {
            let mut out = create(path)?;
            write_network(&net, args.format, &mut out)?;
            out.flush()?;
            println!("{summary}");
        }
        None => {
            let mut out = io::stdout().lock();
            write_network(&net, args.format, &mut out)?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_rank(args: RankArgs) -> Result<()> {
    if args.top == 0 {
        return Err(UsageError("--top must be positive".into()).into());
    }
    let m = load(&args.net.corpus, args.net.network)?;
    let net = project(&m, &projection_config(&args.net))?;
    let ranked = rank_related(&net, &args.focal, args.top)?;
    write_ranking(&ranked, net.scheme(), io::stdout().lock())?;
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    if args.thresholds.contains(&0) || args.thresholds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(
            UsageError("--thresholds must be positive and strictly increasing".into()).into(),
        );
    }
    let m = load(&args.corpus, NetworkKind::Coauthorship)?;
    write_sweep(&sweep(&m, &args.thresholds)?, io::stdout().lock())?;
    Ok(())
}

fn cmd_contributions(args: ContributionArgs) -> Result<()> {
    if args.network == NetworkKind::Coauthorship {
        return Err(
            UsageError("contributions need --network coupling or cocitation".into()).into(),
        );
    }
    let m = load(&args.corpus, args.network)?;
    let c = contributions(&m, &args.focal, &args.partner)?;
    write_contributions(&c, io::stdout().lock())?;
    Ok(())
}

fn cmd_synth(args: SynthArgs) -> Result<()> {
    let cfg = SynthConfig {
        seed: args.seed,
        n_units: args.units,
        n_records: args.records,
        p_single: args.p_single,
        mean_small_team: args.mean_team,
        hyper_fraction: args.hyper_fraction,
        hyper_size: (args.hyper_min, args.hyper_max),
        references: (args.refs_min, args.refs_max),
        citation_skew: args.zipf,
        item_universe: None,
        n_venues: args.venues,
    };
    let corpus = generate(&cfg)?;
    let mut out = create(&args.output)?;
    write_corpus(&corpus, &mut out)?;
    out.flush()?;
    println!("records={}", corpus.len());
    Ok(())
}
