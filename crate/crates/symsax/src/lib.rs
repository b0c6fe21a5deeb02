//! Symbolic time series representations and a 1NN classification harness.
//!
//! The crate covers the full pipeline: z-normalization, segmentation into
//! equal-width pieces, the classic mean-based symbolic transform and its
//! extreme-point variant, the shared lookup-table distance, leave-one-out
//! alphabet selection, train/test evaluation over UCR-format archives, and
//! a multi-dataset benchmark runner with JSON/CSV/text reporting.
//!
//! ```
//! use symsax::{classic_sax_transform, esax_transform, BreakpointTable, TimeSeries};
//!
//! let series = TimeSeries::new(vec![-1.0, -1.0, 1.0, 1.0]).unwrap();
//! let table = BreakpointTable::new(4).unwrap();
//! let classic = classic_sax_transform(&series, 2, &table, false).unwrap();
//! assert_eq!(classic.to_letters(), "ad");
//! let extreme = esax_transform(&series, 2, &table, false).unwrap();
//! assert_eq!(extreme.to_letters(), "ad");
//! ```

pub mod alphabet;
pub mod benchmark;
pub mod classify;
pub mod distance;
pub mod error;
pub mod oracle;
pub mod registry;
pub mod representation;
pub mod series;
pub mod ucr;

pub use alphabet::{
    build_lookup_table, compute_breakpoints, letter_symbol, symbol_letter, BreakpointTable,
    MAX_ALPHABET_SIZE, MIN_ALPHABET_SIZE,
};
pub use benchmark::{
    emit_report, parse_csv_report, run_benchmark, BenchmarkConfig, DatasetSelection, EvalReport,
    MethodOutcome, ReportFormat, ReportRow, RuntimeMeta, Winner,
};
pub use classify::{
    compare_methods, default_alphabet_grid, default_word_length, evaluate, loocv_error,
    nn1_classify, select_alphabet_size, EvalResult, ExperimentParams, Instance, LabeledDataset,
    Method, Tally, TrainErrorMode,
};
pub use distance::{euclidean, symbolic_dist, SymbolicDistanceContext};
pub use error::{Error, Result};
pub use representation::{
    classic_sax_transform, esax_transform, extreme_midpoints, paa_transform, segment_layout,
    SegmentExtremes, SegmentLayout, SymbolicWord,
};
pub use series::{z_normalize, Normalized, TimeSeries};
pub use ucr::{load_pair, parse_ucr_file, LoadedPair, Separator, DATA_ROOT_ENV};
