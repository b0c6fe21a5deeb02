use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd;
mod input;

#[derive(Parser)]
#[command(
    name = "symsax",
    version,
    about = "Symbolic time series transforms, distances, and 1NN classification benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert series to symbolic words
    Transform(cmd::transform::TransformArgs),
    /// Distance between two series under a chosen method
    Dist(cmd::dist::DistArgs),
    /// Train/test classification of one dataset
    Classify(cmd::classify::ClassifyArgs),
    /// Run the multi-dataset comparison protocol
    Benchmark(cmd::benchmark::BenchmarkArgs),
    /// Re-render a saved JSON report
    Report(cmd::report::ReportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Transform(args) => cmd::transform::run(args),
        Command::Dist(args) => cmd::dist::run(args),
        Command::Classify(args) => cmd::classify::run(args),
        Command::Benchmark(args) => cmd::benchmark::run(args),
        Command::Report(args) => cmd::report::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
