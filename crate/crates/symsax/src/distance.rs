//! Distances: the lookup-table measure over symbolic words (shared by both
//! word constructions) and raw Euclidean distance as the reference metric.

use crate::alphabet::BreakpointTable;
use crate::error::{Error, Result};
use crate::representation::SymbolicWord;
use crate::series::TimeSeries;

/// Everything needed to compare two words: the lookup table plus the source
/// and word lengths that set the compensation factor sqrt(n/m).
#[derive(Debug, Clone)]
pub struct SymbolicDistanceContext<'a> {
    table: &'a BreakpointTable,
    source_length: usize,
    word_length: usize,
}

impl<'a> SymbolicDistanceContext<'a> {
    pub fn new(table: &'a BreakpointTable, source_length: usize, word_length: usize) -> Result<Self> {
        if word_length < 1 {
            return Err(Error::invalid_parameter("word_length", "must be at least 1".to_string()));
        }
        if source_length < word_length {
            return Err(Error::invalid_parameter(
                "source_length",
                format!("{source_length} is shorter than word length {word_length}"),
            ));
        }
        Ok(SymbolicDistanceContext {
            table,
            source_length,
            word_length,
        })
    }

    /// Context matching an existing word's shape.
    pub fn for_word(table: &'a BreakpointTable, word: &SymbolicWord) -> Result<Self> {
        SymbolicDistanceContext::new(table, word.source_length(), word.word_length())
    }

    pub fn table(&self) -> &BreakpointTable {
        self.table
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }
}

fn ensure_match(field: &'static str, left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::IncompatibleWords {
            field,
            left: left.to_string(),
            right: right.to_string(),
        });
    }
    Ok(())
}

/// Lookup-table distance between two words:
/// `sqrt((n/m) * sum_i dist(s_i, t_i)^2)`.
///
/// Both word constructions share this measure; n/m is evaluated in floating
/// point so non-divisible layouts keep the compensation factor exact.
pub fn symbolic_dist(
    word_s: &SymbolicWord,
    word_t: &SymbolicWord,
    ctx: &SymbolicDistanceContext<'_>,
) -> Result<f64> {
    ensure_match("word_length", word_s.word_length(), word_t.word_length())?;
    ensure_match("alphabet_size", word_s.alphabet_size(), word_t.alphabet_size())?;
    ensure_match("source_length", word_s.source_length(), word_t.source_length())?;
    ensure_match("word_length", word_s.word_length(), ctx.word_length())?;
    ensure_match("source_length", word_s.source_length(), ctx.source_length())?;
    ensure_match("alphabet_size", word_s.alphabet_size(), ctx.table().alphabet_size())?;

    let sum: f64 = word_s
        .symbols()
        .iter()
        .zip(word_t.symbols())
        .map(|(&s, &t)| {
            let d = ctx.table().pairwise(s, t);
            d * d
        })
        .sum();
    let ratio = ctx.source_length() as f64 / ctx.word_length() as f64;
    Ok((ratio * sum).sqrt())
}

/// Plain L2 distance between equal-length series.
pub fn euclidean(series_s: &TimeSeries, series_t: &TimeSeries) -> Result<f64> {
    if series_s.len() != series_t.len() {
        return Err(Error::IncompatibleSeries {
            left_len: series_s.len(),
            right_len: series_t.len(),
        });
    }
    let sum: f64 = series_s
        .values()
        .iter()
        .zip(series_t.values())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(sum.sqrt())
}
