//! Batch command-line front end: `score` evaluates hypothesis files
//! against references, `meta-eval` correlates score series, and `tune`
//! grid-searches parameters against human judgments.
//!
//! Exit codes are a stable contract for scripting: 0 on success, 1 for
//! input/format errors (missing or malformed data files), 2 for invalid
//! configuration (flags, parameter files, grid files).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lepor::io::{
    load_manifest, load_score_series, parse_grid_file, parse_param_config, ConfigError,
    CorpusFiles, LoadError,
};
use lepor::tune::TuneError;
use lepor::{
    delta_avg, emit_report, emit_tune_report, grid_search, kendall_tau, mae, pearson, rmse,
    score_corpus_opts, spearman, system_score, Corpus, GridSpec, MetricError, MetricKind,
    Objective, ParamSet, ReportFormat, ScoreOptions, StatsError, Strategy,
};

#[derive(Parser)]
#[command(
    name = "lepor",
    version,
    about = "Machine translation evaluation with the LEPOR metric family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score a hypothesis file against one or more reference files.
    Score(ScoreArgs),
    /// Correlate a metric score series with human scores.
    #[command(name = "meta-eval")]
    MetaEval(MetaEvalArgs),
    /// Grid-search parameters maximizing a correlation with human scores.
    Tune(TuneArgs),
}

#[derive(Args)]
struct ScoreArgs {
    /// Hypothesis file, one segment per line.
    #[arg(long)]
    hyp: PathBuf,
    /// Reference file, repeatable for multiple references.
    #[arg(long = "ref", required = true)]
    refs: Vec<PathBuf>,
    /// POS tags for the hypothesis, line-parallel with --hyp.
    #[arg(long = "pos-hyp")]
    pos_hyp: Option<PathBuf>,
    /// POS tags for a reference, one per --ref in the same order.
    #[arg(long = "pos-ref")]
    pos_refs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    metric: MetricArg,
    #[arg(long, value_enum)]
    level: LevelArg,
    /// JSON parameter file; missing keys take the defaults.
    #[arg(long)]
    params: Option<PathBuf>,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
    /// Keep token case instead of folding to lower case.
    #[arg(long)]
    case_sensitive: bool,
    /// Add-one chunk smoothing for n-gram orders >= 2.
    #[arg(long)]
    smooth: bool,
}

#[derive(Args)]
struct MetaEvalArgs {
    /// Metric scores, one number per line.
    #[arg(long = "metric-scores")]
    metric_scores: PathBuf,
    /// Human scores, line-parallel with --metric-scores.
    #[arg(long = "human-scores")]
    human_scores: PathBuf,
    #[arg(long, value_enum)]
    stat: StatArg,
    /// Quantile count for deltaavg.
    #[arg(long, default_value_t = 2)]
    quantiles: usize,
}

#[derive(Args)]
struct TuneArgs {
    /// One system per line: a hypothesis path, optionally a tab and a POS
    /// file path. Relative paths resolve against the manifest directory.
    #[arg(long = "systems-manifest")]
    systems_manifest: PathBuf,
    /// Human score per system, line-parallel with the manifest.
    #[arg(long = "human-scores")]
    human_scores: PathBuf,
    /// Candidate grid file (JSON); a built-in preset when omitted.
    #[arg(long)]
    grid: Option<PathBuf>,
    /// Reference file shared by all systems, repeatable.
    #[arg(long = "ref", required = true)]
    refs: Vec<PathBuf>,
    /// POS tags for a reference, one per --ref in the same order.
    #[arg(long = "pos-ref")]
    pos_refs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    metric: MetricArg,
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Lepor,
    Hlepor,
    Nlepor,
}

impl From<MetricArg> for MetricKind {
    fn from(value: MetricArg) -> Self {
        match value {
            MetricArg::Lepor => MetricKind::Lepor,
            MetricArg::Hlepor => MetricKind::Hlepor,
            MetricArg::Nlepor => MetricKind::Nlepor,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Sentence,
    #[value(name = "system-a")]
    SystemA,
    #[value(name = "system-b")]
    SystemB,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Pearson,
    Spearman,
    Kendall,
    Mae,
    Rmse,
    Deltaavg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Pearson,
    Spearman,
    Kendall,
}

impl From<ObjectiveArg> for Objective {
    fn from(value: ObjectiveArg) -> Self {
        match value {
            ObjectiveArg::Pearson => Objective::Pearson,
            ObjectiveArg::Spearman => Objective::Spearman,
            ObjectiveArg::Kendall => Objective::Kendall,
        }
    }
}

/// Errors classified by exit code.
enum CliError {
    /// Exit 1: unreadable or malformed data files.
    Input(String),
    /// Exit 2: invalid configuration.
    Config(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Config(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Config(m) => m,
        }
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MetricError> for CliError {
    fn from(e: MetricError) -> Self {
        match e {
            MetricError::Param(_) | MetricError::MissingTags { .. } => {
                CliError::Config(e.to_string())
            }
            MetricError::EmptyCorpus => CliError::Input(e.to_string()),
        }
    }
}

impl From<TuneError> for CliError {
    fn from(e: TuneError) -> Self {
        match e {
            TuneError::Param(_) | TuneError::EmptyGrid => CliError::Config(e.to_string()),
            TuneError::Metric(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {}", error.message());
            ExitCode::from(error.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Score(args) => run_score(args),
        Command::MetaEval(args) => run_meta_eval(args),
        Command::Tune(args) => run_tune(args),
    }
}

fn load_params(path: Option<&Path>) -> Result<ParamSet, CliError> {
    match path {
        Some(path) => Ok(parse_param_config(path)?),
        None => Ok(ParamSet::default()),
    }
}

fn run_score(args: ScoreArgs) -> Result<(), CliError> {
    let params = load_params(args.params.as_deref())?;
    if params.uses_pos() && args.pos_hyp.is_none() {
        return Err(CliError::Config(
            "w_hp > 0 requires --pos-hyp and --pos-ref files".to_string(),
        ));
    }
    if args.pos_hyp.is_some() && args.pos_refs.len() != args.refs.len() {
        return Err(CliError::Config(format!(
            "need one --pos-ref per --ref ({} references, {} POS files)",
            args.refs.len(),
            args.pos_refs.len()
        )));
    }

    let mut files = CorpusFiles::new(&args.hyp, args.refs.clone());
    files.pos_hyp = args.pos_hyp.clone();
    files.pos_refs = args.pos_refs.clone();
    files.case_fold = !args.case_sensitive;
    let corpus = files.load()?;

    let metric: MetricKind = args.metric.into();
    let options = ScoreOptions {
        smoothing: args.smooth,
    };
    let scores = score_corpus_opts(&corpus, &params, metric, options)?;
    let system = match args.level {
        LevelArg::Sentence => None,
        LevelArg::SystemA => Some(system_score(&scores, &params, metric, Strategy::A)?),
        LevelArg::SystemB => Some(system_score(&scores, &params, metric, Strategy::B)?),
    };
    let format = match args.format {
        FormatArg::Tsv => ReportFormat::Tsv,
        FormatArg::Json => ReportFormat::Json,
    };
    let report = emit_report(metric, &params, system.as_ref(), &scores, format);
    write_output(args.out.as_deref(), &report)
}

fn run_meta_eval(args: MetaEvalArgs) -> Result<(), CliError> {
    let metric_scores = load_score_series(&args.metric_scores)?;
    let human_scores = load_score_series(&args.human_scores)?;
    let value = match args.stat {
        StatArg::Pearson => pearson(&metric_scores, &human_scores)?,
        StatArg::Spearman => spearman(&metric_scores, &human_scores)?,
        StatArg::Kendall => kendall_tau(&metric_scores, &human_scores)?,
        StatArg::Mae => mae(&metric_scores, &human_scores)?,
        StatArg::Rmse => rmse(&metric_scores, &human_scores)?,
        StatArg::Deltaavg => delta_avg(&metric_scores, &human_scores, args.quantiles)?,
    };
    write_output(None, &format!("{value:.6}\n"))
}

fn run_tune(args: TuneArgs) -> Result<(), CliError> {
    let entries = load_manifest(&args.systems_manifest)?;
    let human_scores = load_score_series(&args.human_scores)?;
    if entries.len() != human_scores.len() {
        return Err(CliError::Input(format!(
            "line count mismatch: {} has {} systems, {} has {} scores",
            args.systems_manifest.display(),
            entries.len(),
            args.human_scores.display(),
            human_scores.len()
        )));
    }
    let has_pos = entries.iter().all(|e| e.pos_hyp.is_some()) && !args.pos_refs.is_empty();
    if args.pos_refs.is_empty() && entries.iter().any(|e| e.pos_hyp.is_some()) {
        return Err(CliError::Config(
            "manifest lists POS files but no --pos-ref was given".to_string(),
        ));
    }

    let grid = match &args.grid {
        Some(path) => parse_grid_file(path)?,
        None => GridSpec::preset(has_pos),
    };

    let mut systems: Vec<(Corpus, f64)> = Vec::with_capacity(entries.len());
    for (entry, human) in entries.iter().zip(&human_scores) {
        let mut files = CorpusFiles::new(&entry.hyp, args.refs.clone());
        if has_pos {
            files.pos_hyp = entry.pos_hyp.clone();
            files.pos_refs = args.pos_refs.clone();
        }
        systems.push((files.load()?, *human));
    }

    let metric: MetricKind = args.metric.into();
    let mut grid = grid;
    grid.objective = args.objective.into();
    let result = grid_search(&systems, &grid, metric)?;
    let report = emit_tune_report(&result, metric, grid.objective, grid.strategy);
    write_output(None, &report)
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Input(format!("stdout: {e}")))
        }
    }
}
