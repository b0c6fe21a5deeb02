use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Args;
use symsax::{
    benchmark::ALL_REGISTRY, emit_report, run_benchmark, BenchmarkConfig, DatasetSelection,
    Method, ReportFormat, TrainErrorMode,
};

use crate::input::{parse_grid, write_output};

#[derive(Args)]
pub struct BenchmarkArgs {
    /// JSON config file with the same fields as the benchmark config;
    /// command-line flags override its values
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Comma-separated dataset names, or `all-registry`
    #[arg(long)]
    pub datasets: Option<String>,

    /// Comma-separated methods (classic-sax, e-sax, raw-euclidean)
    #[arg(long)]
    pub methods: Option<String>,

    /// Fixed word length for every dataset (default: length/8 each)
    #[arg(long)]
    pub word_length: Option<usize>,

    /// Joint-selection extension: word lengths searched together with the
    /// alphabet grid on each train split
    #[arg(long)]
    pub word_length_grid: Option<String>,

    /// Alphabet sizes searched on each train split: `lo..hi` or `a,b,c`
    #[arg(long)]
    pub alphabet_grid: Option<String>,

    /// Skip z-normalization (for pre-normalized data)
    #[arg(long)]
    pub no_normalize: bool,

    /// Measure train-stage errors by resubstitution instead of leave-one-out
    #[arg(long)]
    pub resubstitution: bool,

    /// Worker threads (defaults to one per core)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// Archive directory (else SYMSAX_DATA_ROOT, else ./data)
    #[arg(long)]
    pub data_root: Option<PathBuf>,

    /// Write the report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// json, csv, or text
    #[arg(long, default_value = "json")]
    pub format: String,
}

fn parse_datasets(spec: &str) -> DatasetSelection {
    if spec.trim() == ALL_REGISTRY {
        return DatasetSelection::all_registry();
    }
    DatasetSelection::Named(
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect(),
    )
}

fn parse_methods(spec: &str) -> Result<Vec<Method>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(super::parse_method)
        .collect()
}

fn build_config(args: &BenchmarkArgs) -> Result<BenchmarkConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str::<BenchmarkConfig>(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => {
            if args.datasets.is_none() {
                bail!("provide --datasets (or a --config file)");
            }
            BenchmarkConfig::new(vec![])
        }
    };

    if let Some(spec) = &args.datasets {
        config.datasets = parse_datasets(spec);
    }
    if let Some(spec) = &args.methods {
        config.methods = parse_methods(spec)?;
    }
    if let Some(m) = args.word_length {
        config.word_length = Some(m);
        config.word_length_grid = None;
    }
    if let Some(spec) = &args.word_length_grid {
        config.word_length_grid = Some(parse_grid(spec)?);
        config.word_length = None;
    }
    if let Some(spec) = &args.alphabet_grid {
        config.alphabet_grid = parse_grid(spec)?;
    }
    if args.no_normalize {
        config.normalize = false;
    }
    if args.resubstitution {
        config.train_error_mode = TrainErrorMode::Resubstitution;
    }
    if let Some(jobs) = args.jobs {
        config.jobs = Some(jobs);
    }
    if let Some(root) = &args.data_root {
        config.data_root = Some(root.clone());
    }
    Ok(config)
}

pub fn run(args: BenchmarkArgs) -> Result<ExitCode> {
    let format: ReportFormat = args.format.parse()?;
    let config = build_config(&args)?;
    let report = run_benchmark(&config)?;

    for row in &report.rows {
        for warning in &row.warnings {
            eprintln!("warning: {warning}");
        }
        if let Some(failure) = &row.failure {
            eprintln!("failed: {}: {failure}", row.dataset);
        }
    }

    write_output(args.output.as_ref(), &emit_report(&report, format)?)?;
    Ok(if report.any_failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}
