use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Args;
use symsax::{emit_report, EvalReport, ReportFormat};

use crate::input::write_output;

#[derive(Args)]
pub struct ReportArgs {
    /// JSON report produced by the benchmark command
    #[arg(long)]
    pub input: PathBuf,

    /// json, csv, or text
    #[arg(long, default_value = "text")]
    pub format: String,

    /// Write here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn run(args: ReportArgs) -> Result<ExitCode> {
    let format: ReportFormat = args.format.parse()?;
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let report: EvalReport = serde_json::from_str(&text)
        .with_context(|| format!("parsing report {}", args.input.display()))?;
    write_output(args.output.as_ref(), &emit_report(&report, format)?)?;
    Ok(super::SUCCESS)
}
