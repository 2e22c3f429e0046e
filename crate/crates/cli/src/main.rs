use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orient_core::algorithms::parse_ratio;
use orient_core::bench::{
    self, read_records, replay, run_matrix, write_metadata, write_profile, write_records, Instance,
    Metric, RunOptions,
};
use orient_core::exact::exact_optimum;
use orient_core::io_ingest::{
    final_graph, gen_random_graph, normalize, parse_edits, parse_metis, static_to_stream,
    write_edits, write_metis, IngestError,
};
use orient_core::{AlgorithmConfig, AlgorithmKind, EditSequence, StaticGraph};

#[derive(Parser)]
#[command(
    name = "orient",
    version,
    about = "Dynamic low out-degree edge orientation benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay an update stream with one algorithm and write per-repetition results.
    Run(RunArgs),
    /// Compute the exact minimum maximum out-degree of a graph.
    Exact(ExactArgs),
    /// Turn a METIS graph into a randomly ordered insertion stream.
    Convert(ConvertArgs),
    /// Compute performance profiles from a results file.
    Profile(ProfileArgs),
    /// Generate a uniform random simple graph in METIS format.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Naive,
    Bfs,
    Rpath,
    Descdeg,
    Kflips,
    Bf,
    BfAdaptive,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputType {
    Metis,
    Edits,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Delta,
    Time,
    Flips,
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    /// Search depth (bfs, rpath).
    #[arg(long, default_value_t = 20)]
    depth: u32,
    /// Random walks per insertion (rpath).
    #[arg(long, default_value_t = 3)]
    reps: u32,
    /// Flips per update (kflips).
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Bound scaling factor, decimal or p/q (bf-adaptive).
    #[arg(long, default_value = "2")]
    beta: String,
    /// Arboricity bound (bf, required).
    #[arg(long)]
    alpha_bound: Option<u32>,
    #[arg(long)]
    input: PathBuf,
    /// Defaults to metis for .metis/.graph files and edits otherwise.
    #[arg(long, value_enum)]
    input_type: Option<InputType>,
    /// Base seed; also orders the insertions of a METIS input.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    repetitions: u32,
    /// Run one discarded warm-up repetition first (the default).
    #[arg(long, overrides_with = "no_warmup")]
    warmup: bool,
    /// Skip the warm-up repetition.
    #[arg(long)]
    no_warmup: bool,
    /// Worker threads for repetitions.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the maximum out-degree after every update of repetition 0.
    #[arg(long)]
    trajectory: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct ExactArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    input_type: Option<InputType>,
    /// Write an optimal orientation as `source target` lines.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ConvertArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct ProfileArgs {
    #[arg(long)]
    results: PathBuf,
    #[arg(long, value_enum, default_value = "delta")]
    metric: MetricArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

enum CliError {
    Usage(String),
    Parse(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Runtime(m) => m,
        }
    }
}

impl From<IngestError> for CliError {
    fn from(e: IngestError) -> Self {
        match e {
            IngestError::Io { .. } => CliError::Runtime(e.to_string()),
            IngestError::TooDense { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(format!("{}: {e}", path.display()))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| io_err(path, e))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

fn input_type(path: &Path, given: Option<InputType>) -> InputType {
    given.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("metis" | "graph") => InputType::Metis,
        _ => InputType::Edits,
    })
}

fn build_config(args: &RunArgs) -> Result<AlgorithmConfig, CliError> {
    let kind = match args.algo {
        Algo::Naive => AlgorithmKind::Naive,
        Algo::Bfs => AlgorithmKind::Bfs { depth: args.depth },
        Algo::Rpath => AlgorithmKind::RandomPath {
            depth: args.depth,
            repetitions: args.reps,
        },
        Algo::Descdeg => AlgorithmKind::DescendingDegrees,
        Algo::Kflips => AlgorithmKind::KFlips { k: args.k },
        Algo::Bf => AlgorithmKind::BrodalFagerberg {
            alpha_bound: args
                .alpha_bound
                .ok_or_else(|| CliError::Usage("--algo bf needs --alpha-bound".into()))?,
        },
        Algo::BfAdaptive => AlgorithmKind::AdaptiveBrodalFagerberg {
            beta: parse_ratio(&args.beta)
                .ok_or_else(|| CliError::Usage(format!("bad --beta {:?}", args.beta)))?,
        },
    };
    let config = AlgorithmConfig::new(kind);
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

fn label_of(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let config = build_config(&args)?;
    let kind = input_type(&args.input, args.input_type);
    let raw = match kind {
        InputType::Metis => static_to_stream(&parse_metis(&args.input)?, args.seed),
        InputType::Edits => parse_edits(&args.input)?,
    };
    let (sequence, report) = normalize(&raw);
    let instance = Instance {
        label: label_of(&args.input),
        sequence,
    };
    let opts = RunOptions {
        repetitions: args.repetitions,
        base_seed: args.seed,
        warmup: !args.no_warmup,
        jobs: args.jobs.max(1),
    };
    let outcome = run_matrix(
        std::slice::from_ref(&config),
        std::slice::from_ref(&instance),
        &opts,
    );

    let mut out = create(&args.out)?;
    write_records(&mut out, &outcome.records).map_err(|e| io_err(&args.out, e))?;
    out.flush().map_err(|e| io_err(&args.out, e))?;

    let mut meta: Vec<(String, String)> = vec![
        ("input".into(), args.input.display().to_string()),
        (
            "input_type".into(),
            if matches!(kind, InputType::Metis) {
                "metis"
            } else {
                "edits"
            }
            .into(),
        ),
        ("provenance".into(), instance.sequence.provenance.clone()),
        ("algorithm".into(), config.label()),
        ("repetitions".into(), args.repetitions.to_string()),
        ("base_seed".into(), args.seed.to_string()),
        ("warmup".into(), opts.warmup.to_string()),
    ];
    meta.extend(
        report
            .entries()
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string())),
    );
    meta.push((
        "quality_aggregation".into(),
        "geometric mean of final_delta over repetitions; per-repetition values in the results file"
            .into(),
    ));
    meta.push((
        "time_aggregation".into(),
        "arithmetic mean of total_time_s over repetitions".into(),
    ));
    meta.push((
        "failed_repetitions".into(),
        outcome.failures.len().to_string(),
    ));
    let meta_path = sidecar(&args.out);
    write_metadata(create(&meta_path)?, &meta).map_err(|e| io_err(&meta_path, e))?;

    if let Some(path) = &args.trajectory {
        let mut algo = config
            .clone()
            .with_seed(bench::derive_seed(args.seed, 0))
            .build(instance.sequence.n)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let mut deltas = Vec::with_capacity(instance.sequence.len());
        let result = replay(algo.as_mut(), &instance.sequence, Some(&mut deltas));
        let mut w = create(path)?;
        let text: String = std::iter::once("update,delta\n".to_string())
            .chain(deltas.iter().enumerate().map(|(i, d)| format!("{i},{d}\n")))
            .collect();
        w.write_all(text.as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| io_err(path, e))?;
        result.map_err(|e| CliError::Runtime(format!("trajectory replay: {e}")))?;
    }

    for r in &outcome.records {
        eprintln!(
            "{} rep {}: delta {} flips {} time {:.6}s",
            r.algorithm, r.repetition, r.final_delta, r.flips, r.total_time_s
        );
    }
    if let Some(f) = outcome.failures.first() {
        return Err(CliError::Runtime(format!(
            "{} of {} repetitions failed; first: repetition {}: {}",
            outcome.failures.len(),
            args.repetitions,
            f.repetition,
            f.error
        )));
    }
    Ok(())
}

/// `results.csv` -> `results.csv.meta`.
fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".meta");
    PathBuf::from(name)
}

fn load_graph(path: &Path, given: Option<InputType>) -> Result<StaticGraph, CliError> {
    Ok(match input_type(path, given) {
        InputType::Metis => parse_metis(path)?,
        InputType::Edits => final_graph(&parse_edits(path)?),
    })
}

fn cmd_exact(args: ExactArgs) -> Result<(), CliError> {
    let g = load_graph(&args.input, args.input_type)?;
    let result = exact_optimum(&g);
    println!("n:{}", g.n());
    println!("m:{}", g.m());
    println!("phi:{}", result.phi);
    if let Some(path) = &args.witness {
        let text: String = result
            .witness
            .iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect();
        write_text(path, &text)?;
    }
    Ok(())
}

fn cmd_convert(args: ConvertArgs) -> Result<(), CliError> {
    let g = parse_metis(&args.input)?;
    let seq: EditSequence = static_to_stream(&g, args.seed);
    write_text(&args.out, &write_edits(&seq))
}

fn cmd_profile(args: ProfileArgs) -> Result<(), CliError> {
    let file = File::open(&args.results).map_err(|e| io_err(&args.results, e))?;
    let records = read_records(file)
        .map_err(|e| CliError::Parse(format!("{}: {e}", args.results.display())))?;
    let metric = match args.metric {
        MetricArg::Delta => Metric::Delta,
        MetricArg::Time => Metric::Time,
        MetricArg::Flips => Metric::Flips,
    };
    let profile = bench::performance_profile(&records, metric)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut out = create(&args.out)?;
    write_profile(&mut out, &profile).map_err(|e| io_err(&args.out, e))?;
    out.flush().map_err(|e| io_err(&args.out, e))
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let g = gen_random_graph(args.n, args.m, args.seed)?;
    write_text(&args.out, &write_metis(&g))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Convert(a) => cmd_convert(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
