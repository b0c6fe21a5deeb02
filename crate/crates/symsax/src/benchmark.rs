//! Multi-dataset benchmark protocol: run the train/test evaluation for each
//! configured dataset and method, assemble a comparison report, and render
//! it as JSON, CSV, or an aligned text table.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{
    default_alphabet_grid, default_word_length, evaluate, select_alphabet_size, EvalResult,
    ExperimentParams, Method, Tally, TrainErrorMode,
};
use crate::error::{Error, Result};
use crate::registry;
use crate::ucr::{load_pair, resolve_data_root};

/// Which datasets a benchmark covers: an explicit list, or the keyword
/// `all-registry` for the whole built-in suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatasetSelection {
    Keyword(String),
    Named(Vec<String>),
}

pub const ALL_REGISTRY: &str = "all-registry";

impl DatasetSelection {
    pub fn all_registry() -> Self {
        DatasetSelection::Keyword(ALL_REGISTRY.to_string())
    }

    /// Expands the selection to concrete dataset names.
    pub fn resolve(&self) -> Result<Vec<String>> {
        match self {
            DatasetSelection::Keyword(k) if k == ALL_REGISTRY => {
                Ok(registry::dataset_names().map(String::from).collect())
            }
            DatasetSelection::Keyword(k) => Err(Error::invalid_parameter(
                "datasets",
                format!("unknown keyword `{k}` (expected `{ALL_REGISTRY}` or a list of names)"),
            )),
            DatasetSelection::Named(names) if names.is_empty() => Err(Error::invalid_parameter(
                "datasets",
                "at least one dataset is required".to_string(),
            )),
            DatasetSelection::Named(names) => Ok(names.clone()),
        }
    }
}

fn default_normalize() -> bool {
    true
}

/// Declarative description of one benchmark run; also the schema of the
/// config document accepted by the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchmarkConfig {
    pub datasets: DatasetSelection,
    pub methods: Vec<Method>,
    /// Fixed word length; when absent each dataset uses
    /// max(1, series_length / 8).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_length: Option<usize>,
    /// Joint-selection extension: pick the (word length, alphabet size)
    /// pair with the lowest train-stage error. Mutually exclusive with
    /// `word_length`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_length_grid: Option<Vec<usize>>,
    #[serde(default = "default_alphabet_grid")]
    pub alphabet_grid: Vec<usize>,
    #[serde(default = "default_normalize")]
    pub normalize: bool,
    #[serde(default)]
    pub train_error_mode: TrainErrorMode,
    /// Worker thread count; absent or 0 means one worker per core.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    /// Archive directory; falls back to SYMSAX_DATA_ROOT, then ./data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data_root: Option<PathBuf>,
}

impl BenchmarkConfig {
    /// Config over named datasets with both symbolic methods and defaults
    /// everywhere else.
    pub fn new(datasets: Vec<String>) -> Self {
        BenchmarkConfig {
            datasets: DatasetSelection::Named(datasets),
            methods: vec![Method::ClassicSax, Method::ESax],
            word_length: None,
            word_length_grid: None,
            alphabet_grid: default_alphabet_grid(),
            normalize: true,
            train_error_mode: TrainErrorMode::default(),
            jobs: None,
            data_root: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.datasets.resolve()?;
        if self.methods.is_empty() {
            return Err(Error::invalid_parameter(
                "methods",
                "at least one method is required".to_string(),
            ));
        }
        if self.alphabet_grid.is_empty() {
            return Err(Error::invalid_parameter(
                "alphabet_grid",
                "grid must be nonempty".to_string(),
            ));
        }
        if self.word_length.is_some() && self.word_length_grid.is_some() {
            return Err(Error::invalid_parameter(
                "word_length_grid",
                "cannot combine a fixed word length with a word-length grid".to_string(),
            ));
        }
        if let Some(grid) = &self.word_length_grid {
            if grid.is_empty() {
                return Err(Error::invalid_parameter(
                    "word_length_grid",
                    "grid must be nonempty".to_string(),
                ));
            }
            if !grid.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::invalid_parameter(
                    "word_length_grid",
                    "grid must be sorted ascending".to_string(),
                ));
            }
        }
        Ok(())
    }
}

/// Relation between the two symbolic methods on one dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Winner {
    ClassicSax,
    ESax,
    Tie,
}

impl Winner {
    pub fn token(&self) -> &'static str {
        match self {
            Winner::ClassicSax => "classic-sax",
            Winner::ESax => "e-sax",
            Winner::Tie => "tie",
        }
    }

    fn from_token(s: &str) -> Option<Winner> {
        match s {
            "classic-sax" => Some(Winner::ClassicSax),
            "e-sax" => Some(Winner::ESax),
            "tie" => Some(Winner::Tie),
            _ => None,
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One method's evaluation on one dataset, with the word length it used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodOutcome {
    pub word_length: usize,
    #[serde(flatten)]
    pub result: EvalResult,
}

/// One dataset's slice of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub dataset: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classic_sax: Option<MethodOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_sax: Option<MethodOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_euclidean: Option<MethodOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winner: Option<Winner>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl ReportRow {
    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn failure_row(dataset: &str, message: String) -> ReportRow {
        ReportRow {
            dataset: dataset.to_string(),
            classic_sax: None,
            e_sax: None,
            raw_euclidean: None,
            winner: None,
            warnings: Vec::new(),
            failure: Some(message),
        }
    }
}

/// Wall-clock facts about one run; excluded from determinism comparisons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeMeta {
    pub elapsed_seconds: f64,
    pub threads: usize,
    pub version: String,
}

/// Full benchmark output: config echo, per-dataset rows, win/tie/loss
/// tally, and runtime metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub config: BenchmarkConfig,
    pub rows: Vec<ReportRow>,
    pub tally: Tally,
    pub runtime: RuntimeMeta,
}

impl EvalReport {
    pub fn any_failed(&self) -> bool {
        self.rows.iter().any(ReportRow::failed)
    }
}

fn params_for(method: Method, word_length: usize, config: &BenchmarkConfig) -> ExperimentParams {
    ExperimentParams {
        method,
        word_length,
        alphabet_size: config.alphabet_grid[0],
        normalize: config.normalize,
        alphabet_grid: config.alphabet_grid.clone(),
        train_error_mode: config.train_error_mode,
    }
}

fn evaluate_method(
    train: &crate::classify::LabeledDataset,
    test: &crate::classify::LabeledDataset,
    method: Method,
    config: &BenchmarkConfig,
) -> Result<MethodOutcome> {
    let n = train.series_length();
    let fallback = config.word_length.unwrap_or_else(|| default_word_length(n));

    let word_length = match (&config.word_length_grid, method) {
        (Some(grid), Method::ClassicSax | Method::ESax) => {
            let valid: Vec<usize> = grid.iter().copied().filter(|&m| m >= 1 && m <= n).collect();
            if valid.is_empty() {
                return Err(Error::invalid_parameter(
                    "word_length_grid",
                    format!("no grid value fits series length {n}"),
                ));
            }
            let mut best: Option<(usize, f64)> = None;
            for &m in &valid {
                let (_, err) = select_alphabet_size(train, &params_for(method, m, config))?;
                match best {
                    Some((_, e)) if err >= e => {}
                    _ => best = Some((m, err)),
                }
            }
            best.expect("valid grid nonempty").0
        }
        _ => fallback,
    };

    let result = evaluate(train, test, &params_for(method, word_length, config))?;
    Ok(MethodOutcome {
        word_length,
        result,
    })
}

fn run_dataset(name: &str, config: &BenchmarkConfig, root: &std::path::Path) -> ReportRow {
    let pair = match load_pair(name, root) {
        Ok(p) => p,
        Err(e) => return ReportRow::failure_row(name, e.to_string()),
    };

    let mut row = ReportRow {
        dataset: name.to_string(),
        classic_sax: None,
        e_sax: None,
        raw_euclidean: None,
        winner: None,
        warnings: pair.warnings.clone(),
        failure: None,
    };

    for &method in &config.methods {
        match evaluate_method(&pair.train, &pair.test, method, config) {
            Ok(outcome) => match method {
                Method::ClassicSax => row.classic_sax = Some(outcome),
                Method::ESax => row.e_sax = Some(outcome),
                Method::RawEuclidean => row.raw_euclidean = Some(outcome),
            },
            Err(e) => {
                return ReportRow::failure_row(name, format!("{method} evaluation failed: {e}"))
            }
        }
    }

    if let (Some(classic), Some(esax)) = (&row.classic_sax, &row.e_sax) {
        let (c, e) = (classic.result.test_error, esax.result.test_error);
        row.winner = Some(if c < e {
            Winner::ClassicSax
        } else if e < c {
            Winner::ESax
        } else {
            Winner::Tie
        });
    }
    row
}

fn tally_rows(rows: &[ReportRow]) -> Tally {
    let mut tally = Tally::default();
    for row in rows {
        match row.winner {
            Some(Winner::ClassicSax) => tally.wins_classic += 1,
            Some(Winner::ESax) => tally.wins_esax += 1,
            Some(Winner::Tie) => tally.ties += 1,
            None => {}
        }
    }
    tally
}

/// Runs the configured benchmark. Individual dataset failures are recorded
/// in their rows and do not abort the run; rows come back in configuration
/// order regardless of the worker count.
pub fn run_benchmark(config: &BenchmarkConfig) -> Result<EvalReport> {
    config.validate()?;
    let names = config.datasets.resolve()?;
    let root = resolve_data_root(config.data_root.as_deref());
    let started = Instant::now();

    let run = || -> Vec<ReportRow> {
        names
            .par_iter()
            .map(|name| run_dataset(name, config, &root))
            .collect()
    };

    let (rows, threads) = match config.jobs {
        Some(jobs) if jobs > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::invalid_parameter("jobs", e.to_string()))?;
            (pool.install(run), jobs)
        }
        _ => (run(), rayon::current_num_threads()),
    };

    let tally = tally_rows(&rows);
    Ok(EvalReport {
        config: config.clone(),
        rows,
        tally,
        runtime: RuntimeMeta {
            elapsed_seconds: started.elapsed().as_secs_f64(),
            threads,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
    })
}

/// Output encodings of an [`EvalReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::invalid_parameter(
                "format",
                format!("unknown format `{other}` (expected json, csv, or text)"),
            )),
        }
    }
}

/// Rounds to three decimals, halves away from zero, matching the published
/// precision of the comparison tables.
fn fmt_error3(x: f64) -> String {
    format!("{:.3}", (x * 1000.0).round() / 1000.0)
}

/// The four pinned CSV columns of one row.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub dataset: String,
    pub classic_sax_error: Option<f64>,
    pub e_sax_error: Option<f64>,
    pub winner: Option<Winner>,
}

fn csv_rows(report: &EvalReport) -> Vec<CsvRow> {
    report
        .rows
        .iter()
        .map(|row| CsvRow {
            dataset: row.dataset.clone(),
            classic_sax_error: row.classic_sax.as_ref().map(|o| o.result.test_error),
            e_sax_error: row.e_sax.as_ref().map(|o| o.result.test_error),
            winner: row.winner,
        })
        .collect()
}

/// Renders rows as CSV with header
/// `dataset,classic_sax_error,e_sax_error,winner` and errors at three
/// decimal places.
pub fn emit_csv_rows(rows: &[CsvRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["dataset", "classic_sax_error", "e_sax_error", "winner"])
        .and_then(|_| {
            for row in rows {
                writer.write_record([
                    row.dataset.as_str(),
                    &row.classic_sax_error.map(fmt_error3).unwrap_or_default(),
                    &row.e_sax_error.map(fmt_error3).unwrap_or_default(),
                    row.winner.map(|w| w.token()).unwrap_or_default(),
                ])?;
            }
            Ok(())
        })
        .map_err(|e| Error::InvalidInput(format!("csv encoding failed: {e}")))?;
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidInput(format!("csv encoding failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Parses a CSV document produced by [`emit_csv_rows`].
pub fn parse_csv_report(text: &str) -> Result<Vec<CsvRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let bad = |msg: String| Error::InvalidInput(format!("csv report: {msg}"));

    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    let expected = ["dataset", "classic_sax_error", "e_sax_error", "winner"];
    if headers.iter().ne(expected) {
        return Err(bad(format!("unexpected header {headers:?}")));
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or_default();
        let error_at = |i: usize| -> Result<Option<f64>> {
            let s = field(i);
            if s.is_empty() {
                return Ok(None);
            }
            s.parse::<f64>()
                .map(Some)
                .map_err(|_| bad(format!("not a number: {s:?}")))
        };
        let winner = match field(3) {
            "" => None,
            token => Some(Winner::from_token(token).ok_or_else(|| bad(format!("unknown winner {token:?}")))?),
        };
        rows.push(CsvRow {
            dataset: field(0).to_string(),
            classic_sax_error: error_at(1)?,
            e_sax_error: error_at(2)?,
            winner,
        });
    }
    Ok(rows)
}

fn emit_text(report: &EvalReport) -> String {
    let name_width = report
        .rows
        .iter()
        .map(|r| r.dataset.len())
        .chain(["dataset".len()])
        .max()
        .unwrap_or(7);

    let mut out = String::new();
    out.push_str(&format!(
        "{:<name_width$}  {:>12}  {:>12}\n",
        "dataset", "classic-SAX", "E-SAX"
    ));
    for row in &report.rows {
        if let Some(failure) = &row.failure {
            out.push_str(&format!("{:<name_width$}  FAILED: {failure}\n", row.dataset));
            continue;
        }
        let cell = |outcome: &Option<MethodOutcome>, winner: Winner| -> String {
            match outcome {
                Some(o) => {
                    let marker = if row.winner == Some(winner) { "*" } else { "" };
                    format!("{}{marker}", fmt_error3(o.result.test_error))
                }
                None => "-".to_string(),
            }
        };
        out.push_str(&format!(
            "{:<name_width$}  {:>12}  {:>12}\n",
            row.dataset,
            cell(&row.classic_sax, Winner::ClassicSax),
            cell(&row.e_sax, Winner::ESax),
        ));
    }
    out.push_str(&format!(
        "classic-SAX: {}  E-SAX: {}  ties: {}\n",
        report.tally.wins_classic, report.tally.wins_esax, report.tally.ties
    ));
    out
}

/// Serializes a report in the requested format. JSON keeps full precision
/// and stable key order; CSV and text round errors to three decimals.
pub fn emit_report(report: &EvalReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| Error::InvalidInput(format!("json encoding failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => emit_csv_rows(&csv_rows(report)),
        ReportFormat::Text => Ok(emit_text(report)),
    }
}
