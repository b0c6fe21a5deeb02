//! Segmentation and symbolic transforms: PAA, segment extremes, and the
//! classic and extreme-point word constructions.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::alphabet::{symbol_letter, BreakpointTable};
use crate::error::{Error, Result};
use crate::series::{z_normalize, TimeSeries};

/// Partition of `[0, n)` into `m` contiguous index ranges whose sizes differ
/// by at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentLayout {
    n: usize,
    m: usize,
    bounds: Vec<Range<usize>>,
}

impl SegmentLayout {
    pub fn source_length(&self) -> usize {
        self.n
    }

    pub fn segment_count(&self) -> usize {
        self.m
    }

    pub fn bounds(&self) -> &[Range<usize>] {
        &self.bounds
    }
}

/// Splits `n` indices into `m` segments; segment i covers
/// `[floor(i*n/m), floor((i+1)*n/m))`, giving exact equal sizes whenever m
/// divides n.
pub fn segment_layout(n: usize, m: usize) -> Result<SegmentLayout> {
    if m < 1 {
        return Err(Error::invalid_parameter("m", "segment count must be at least 1".to_string()));
    }
    if m > n {
        return Err(Error::invalid_parameter(
            "m",
            format!("segment count {m} exceeds series length {n}"),
        ));
    }
    let bounds = (0..m).map(|i| (i * n / m)..((i + 1) * n / m)).collect();
    Ok(SegmentLayout { n, m, bounds })
}

/// Min, max, and their midpoint over one segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentExtremes {
    pub min: f64,
    pub max: f64,
    pub midpoint: f64,
}

/// A discretized series: `word_length()` symbols in 1..=alphabet_size drawn
/// from a source series of `source_length()` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicWord {
    symbols: Vec<u8>,
    alphabet_size: usize,
    source_length: usize,
}

impl SymbolicWord {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize, source_length: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidInput("symbolic word must be nonempty".into()));
        }
        if source_length < symbols.len() {
            return Err(Error::InvalidInput(format!(
                "source length {source_length} shorter than word length {}",
                symbols.len()
            )));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s < 1 || s as usize > alphabet_size) {
            return Err(Error::InvalidInput(format!(
                "symbol {s} outside alphabet 1..={alphabet_size}"
            )));
        }
        Ok(SymbolicWord {
            symbols,
            alphabet_size,
            source_length,
        })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn word_length(&self) -> usize {
        self.symbols.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Builds a word from its letter rendering, 'a' for symbol 1.
    pub fn from_letters(letters: &str, alphabet_size: usize, source_length: usize) -> Result<Self> {
        let symbols = letters
            .chars()
            .map(|ch| {
                crate::alphabet::letter_symbol(ch)
                    .ok_or_else(|| Error::InvalidInput(format!("invalid symbol letter {ch:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        SymbolicWord::new(symbols, alphabet_size, source_length)
    }

    /// Renders the word as lowercase letters, 'a' for symbol 1.
    pub fn to_letters(&self) -> String {
        self.symbols.iter().map(|&s| symbol_letter(s)).collect()
    }
}

impl fmt::Display for SymbolicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}

fn check_layout(series: &TimeSeries, layout: &SegmentLayout) -> Result<()> {
    if layout.source_length() != series.len() {
        return Err(Error::InvalidInput(format!(
            "layout covers {} points but series has {}",
            layout.source_length(),
            series.len()
        )));
    }
    Ok(())
}

/// Piecewise aggregate approximation: the mean of each segment.
pub fn paa_transform(series: &TimeSeries, layout: &SegmentLayout) -> Result<Vec<f64>> {
    check_layout(series, layout)?;
    let data = series.values();
    Ok(layout
        .bounds()
        .iter()
        .map(|r| data[r.clone()].iter().sum::<f64>() / r.len() as f64)
        .collect())
}

/// Per-segment minimum, maximum, and extreme midpoint.
pub fn extreme_midpoints(series: &TimeSeries, layout: &SegmentLayout) -> Result<Vec<SegmentExtremes>> {
    check_layout(series, layout)?;
    let data = series.values();
    Ok(layout
        .bounds()
        .iter()
        .map(|r| {
            let seg = &data[r.clone()];
            let mut min = seg[0];
            let mut max = seg[0];
            for &v in &seg[1..] {
                if v < min {
                    min = v;
                }
                if v > max {
                    max = v;
                }
            }
            SegmentExtremes {
                min,
                max,
                midpoint: (min + max) / 2.0,
            }
        })
        .collect())
}

fn discretize(coefficients: &[f64], table: &BreakpointTable, source_length: usize) -> Result<SymbolicWord> {
    let symbols = coefficients
        .iter()
        .map(|&v| table.symbol_for_value(v))
        .collect::<Result<Vec<u8>>>()?;
    SymbolicWord::new(symbols, table.alphabet_size(), source_length)
}

fn prepared(series: &TimeSeries, normalize: bool) -> TimeSeries {
    if normalize {
        z_normalize(series).series
    } else {
        series.clone()
    }
}

/// Classic word: z-normalize (optional), PAA, then discretize each segment
/// mean against the table's breakpoints.
pub fn classic_sax_transform(
    series: &TimeSeries,
    m: usize,
    table: &BreakpointTable,
    normalize: bool,
) -> Result<SymbolicWord> {
    let layout = segment_layout(series.len(), m)?;
    let input = prepared(series, normalize);
    let coefficients = paa_transform(&input, &layout)?;
    discretize(&coefficients, table, series.len())
}

/// Extreme-point word: like the classic transform but each segment is
/// represented by the midpoint of its minimum and maximum instead of its
/// mean. Same word length and storage as the classic word.
pub fn esax_transform(
    series: &TimeSeries,
    m: usize,
    table: &BreakpointTable,
    normalize: bool,
) -> Result<SymbolicWord> {
    let layout = segment_layout(series.len(), m)?;
    let input = prepared(series, normalize);
    let coefficients: Vec<f64> = extreme_midpoints(&input, &layout)?
        .iter()
        .map(|e| e.midpoint)
        .collect();
    discretize(&coefficients, table, series.len())
}
