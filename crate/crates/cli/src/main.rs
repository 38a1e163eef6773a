//! `token-alpha`: cross-check closed forms, constructions and the exact
//! solver for independence numbers of 2-token graphs.
//!
//! Exit codes: 0 all rows agree, 1 some row disagrees (or a lemma trial
//! failed), 2 usage or I/O error, 3 only budget aborts.

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use token_alpha::harness::{
    alpha_row, run_lemma_check, run_sweep, AlphaReport, LemmaConfig, Methods, OutputFormat, RowOptions, Source,
    SweepConfig,
};
use token_alpha::io::{read_graph, write_dimacs, write_edge_list, write_token_graph};
use token_alpha::token::build_f2;
use token_alpha::{Error, FamilySpec};

const THREADS_ENV: &str = "TOKEN_ALPHA_THREADS";

#[derive(Parser)]
#[command(name = "token-alpha", version, about = "Independence numbers of 2-token graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one instance.
    Alpha(AlphaArgs),
    /// Evaluate every instance of a parameter grid.
    Sweep(SweepArgs),
    /// Check that associated sets dominate random independent sets of F2(E_n + H).
    LemmaCheck(LemmaArgs),
    /// Write a family graph (or its 2-token graph) as an edge list.
    Export(ExportArgs),
    /// Read an edge-list or DIMACS file and re-emit it 0-indexed.
    Import(ImportArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// path, cycle, empty, complete, path-union, fan, wheel, split, complete-bipartite
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated part sizes for path-union.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Tsv => OutputFormat::Tsv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    /// Comma-separated subset of formula,construction,solver.
    #[arg(long, default_value = "formula,construction,solver")]
    methods: String,
    /// Branch-and-bound node budget.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Sequential evaluation; no timings; solver witnesses included.
    #[arg(long)]
    deterministic: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AlphaArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Edge-list or DIMACS file to use instead of a family.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    family: String,
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    n_range: Option<RangeInclusive<usize>>,
    /// Inclusive range `A..B`; total order for path-union.
    #[arg(long, value_parser = parse_range)]
    m_range: Option<RangeInclusive<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args)]
struct LemmaArgs {
    #[arg(long)]
    n: usize,
    /// Family of H: path, cycle or complete.
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dimacs,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Export F2 of the graph, with `c pair` header lines.
    #[arg(long)]
    token: bool,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ImportArgs {
    path: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, Error> {
    let family = args.family.as_deref().ok_or_else(|| usage("--family or --graph is required"))?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("{family} requires --{flag}")));
    let spec = match family {
        "path" => FamilySpec::Path(need(args.m, "m")?),
        "cycle" => FamilySpec::Cycle(need(args.m, "m")?),
        "empty" => FamilySpec::Empty(need(args.n, "n")?),
        "complete" => FamilySpec::Complete(need(args.n, "n")?),
        "path-union" => FamilySpec::PathUnion(args.parts.clone().ok_or_else(|| usage("path-union requires --parts"))?),
        "fan" => FamilySpec::Fan(need(args.n, "n")?, need(args.m, "m")?),
        "wheel" => FamilySpec::Wheel(need(args.n, "n")?, need(args.m, "m")?),
        "split" => FamilySpec::Split(need(args.n, "n")?, need(args.m, "m")?),
        "complete-bipartite" => FamilySpec::CompleteBipartite(need(args.n, "n")?, need(args.m, "m")?),
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    spec.validate()?;
    Ok(spec)
}

fn threads_from_env() -> Result<Option<usize>, Error> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn row_options(r: &ReportArgs) -> Result<RowOptions, Error> {
    if r.budget == Some(0) {
        return Err(usage("--budget must be positive"));
    }
    Ok(RowOptions {
        methods: r.methods.parse::<Methods>()?,
        budget: r.budget,
        deterministic: r.deterministic,
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Alpha(args) => {
            let opts = row_options(&args.report)?;
            let source = match &args.graph {
                Some(path) => Source::Graph {
                    label: format!("graph:{}", path.display()),
                    graph: read_graph(path)?,
                },
                None => Source::Family(family_spec(&args.family)?),
            };
            let row = alpha_row(&source, &opts)?;
            let report = AlphaReport::from_rows(&row.family.clone(), 0, opts.methods, vec![row]);
            emit(&report.render(args.report.format.into()), args.report.out.as_deref())?;
            Ok(report.exit_code() as u8)
        }
        Command::Sweep(args) => {
            let opts = row_options(&args.report)?;
            let config = SweepConfig {
                family: args.family,
                n_range: args.n_range,
                m_range: args.m_range,
                methods: opts.methods,
                budget: opts.budget,
                seed: args.seed,
                format: args.report.format.into(),
                deterministic: opts.deterministic,
                threads: threads_from_env()?,
            };
            let report = run_sweep(&config)?;
            emit(&report.render(config.format), args.report.out.as_deref())?;
            Ok(report.exit_code() as u8)
        }
        Command::LemmaCheck(args) => {
            let h = match args.family.as_str() {
                "path" => FamilySpec::Path(args.m),
                "cycle" => FamilySpec::Cycle(args.m),
                "complete" => FamilySpec::Complete(args.m),
                other => return Err(usage(format!("lemma-check supports path, cycle, complete; got {other:?}"))),
            };
            let report = run_lemma_check(&LemmaConfig {
                n: args.n,
                h,
                trials: args.trials,
                seed: args.seed,
            })?;
            let text = match args.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Tsv => {
                    let mut text = String::new();
                    for f in &report.failures {
                        text.push_str(&format!(
                            "FAIL\ttrial={}\tseed={}\t{}\t{}\n",
                            f.trial,
                            f.seed,
                            serde_json::to_string(&f.set).expect("pairs serialize"),
                            f.reason
                        ));
                    }
                    text + &report.summary_line() + "\n"
                }
            };
            emit(&text, args.out.as_deref())?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Export(args) => {
            let graph = match &args.graph {
                Some(path) => read_graph(path)?,
                None => family_spec(&args.family)?.generate()?,
            };
            let text = match (args.token, args.format) {
                (true, GraphFormat::Edgelist) => write_token_graph(&build_f2(&graph)?),
                (true, GraphFormat::Dimacs) => write_dimacs(build_f2(&graph)?.graph()),
                (false, GraphFormat::Edgelist) => write_edge_list(&graph),
                (false, GraphFormat::Dimacs) => write_dimacs(&graph),
            };
            emit(&text, args.out.as_deref())?;
            Ok(0)
        }
        Command::Import(args) => {
            let graph = read_graph(&args.path)?;
            match &args.out {
                Some(out) => {
                    fs::write(out, write_edge_list(&graph))?;
                    println!("order={} edges={}", graph.order(), graph.edge_count());
                }
                None => print!("{}", write_edge_list(&graph)),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
