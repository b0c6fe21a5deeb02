use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Args;
use symsax::{
    default_word_length, evaluate, parse_ucr_file, ucr, ExperimentParams, LabeledDataset, Method,
    TrainErrorMode,
};

use crate::input::{parse_grid, write_output};

#[derive(Args)]
pub struct ClassifyArgs {
    /// UCR-format train file (pairs with --test)
    #[arg(long, requires = "test", conflicts_with = "dataset")]
    pub train: Option<PathBuf>,

    /// UCR-format test file (pairs with --train)
    #[arg(long, requires = "train")]
    pub test: Option<PathBuf>,

    /// Archive dataset name, loaded from the data root
    #[arg(long)]
    pub dataset: Option<String>,

    /// Archive directory (else SYMSAX_DATA_ROOT, else ./data)
    #[arg(long)]
    pub data_root: Option<PathBuf>,

    /// classic-sax, e-sax, or raw-euclidean
    #[arg(long, default_value = "classic-sax", value_parser = super::parse_method)]
    pub method: Method,

    /// Number of segments (defaults to max(1, length/8))
    #[arg(long)]
    pub word_length: Option<usize>,

    /// Alphabet sizes searched on the train split: `lo..hi` or `a,b,c`
    #[arg(long, default_value = "3..20")]
    pub alphabet_grid: String,

    /// Skip z-normalization (for pre-normalized data)
    #[arg(long)]
    pub no_normalize: bool,

    /// Measure the train-stage error by resubstitution instead of
    /// leave-one-out (sensitivity checks only)
    #[arg(long)]
    pub resubstitution: bool,

    /// Worker threads (defaults to one per core)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// Write the JSON result here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn load_splits(args: &ClassifyArgs) -> Result<(LabeledDataset, LabeledDataset)> {
    match (&args.train, &args.test, &args.dataset) {
        (Some(train), Some(test), None) => Ok((parse_ucr_file(train)?, parse_ucr_file(test)?)),
        (None, None, Some(name)) => {
            let root = ucr::resolve_data_root(args.data_root.as_deref());
            let pair = ucr::load_pair(name, &root)?;
            for warning in &pair.warnings {
                eprintln!("warning: {warning}");
            }
            Ok((pair.train, pair.test))
        }
        _ => bail!("provide either --train with --test, or --dataset"),
    }
}

pub fn run(args: ClassifyArgs) -> Result<ExitCode> {
    let (train, test) = load_splits(&args)?;
    let grid = parse_grid(&args.alphabet_grid)?;
    let word_length = args
        .word_length
        .unwrap_or_else(|| default_word_length(train.series_length()));

    let params = ExperimentParams {
        method: args.method,
        word_length,
        alphabet_size: *grid.first().expect("grid validated nonempty"),
        normalize: !args.no_normalize,
        alphabet_grid: grid,
        train_error_mode: if args.resubstitution {
            TrainErrorMode::Resubstitution
        } else {
            TrainErrorMode::Loocv
        },
    };

    let result = super::with_jobs(args.jobs, || evaluate(&train, &test, &params))??;

    let json = format!("{}\n", serde_json::to_string_pretty(&result)?);
    write_output(args.output.as_ref(), &json)?;

    let alphabet = result
        .chosen_alphabet
        .map(|a| format!(", alphabet {a}"))
        .unwrap_or_default();
    eprintln!(
        "{}: {} m={word_length}{alphabet}: train error {:.4}, test error {:.4} ({}/{} misclassified)",
        result.dataset,
        result.method,
        result.train_error,
        result.test_error,
        result.misclassified,
        result.total
    );
    Ok(super::SUCCESS)
}
