//! Raw time series and z-normalization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Threshold below which the population standard deviation is treated as zero.
pub const DEGENERATE_STD: f64 = 1e-12;

/// An ordered collection of finite real-valued observations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TimeSeries(Vec<f64>);

impl TimeSeries {
    /// Builds a series, rejecting empty input and non-finite values.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("time series must be nonempty".into()));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "non-finite value {} at index {pos}",
                values[pos]
            )));
        }
        Ok(TimeSeries(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// Mean of all observations.
    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    /// Population standard deviation (divides by n, not n-1).
    pub fn std_dev(&self) -> f64 {
        let mean = self.mean();
        let var = self.0.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / self.0.len() as f64;
        var.sqrt()
    }
}

impl AsRef<[f64]> for TimeSeries {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Result of [`z_normalize`]: the rescaled series plus a flag marking
/// constant inputs, which collapse to all zeros rather than erroring.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub series: TimeSeries,
    pub degenerate: bool,
}

/// Rescales a series to zero mean and unit population standard deviation.
///
/// A constant series (std below [`DEGENERATE_STD`]) maps to all zeros and is
/// flagged `degenerate` instead of failing.
pub fn z_normalize(series: &TimeSeries) -> Normalized {
    let data = series.values();
    let mean = series.mean();
    let std = series.std_dev();

    if std < DEGENERATE_STD {
        return Normalized {
            series: TimeSeries(vec![0.0; data.len()]),
            degenerate: true,
        };
    }

    Normalized {
        series: TimeSeries(data.iter().map(|&x| (x - mean) / std).collect()),
        degenerate: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(values: &[f64]) -> TimeSeries {
        TimeSeries::new(values.to_vec()).unwrap()
    }

    #[test]
    fn rejects_empty() {
        assert!(matches!(TimeSeries::new(vec![]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(TimeSeries::new(vec![1.0, f64::NAN]).is_err());
        assert!(TimeSeries::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn constant_series_normalizes_to_zeros() {
        let out = z_normalize(&ts(&[1.0, 1.0, 1.0, 1.0]));
        assert!(out.degenerate);
        assert_eq!(out.series.values(), &[0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn two_point_symmetric() {
        let out = z_normalize(&ts(&[0.0, 2.0]));
        assert!(!out.degenerate);
        assert_eq!(out.series.values(), &[-1.0, 1.0]);
    }

    #[test]
    fn five_point_ramp() {
        // mean 3, population std sqrt(2); first element (1-3)/sqrt(2)
        let out = z_normalize(&ts(&[1.0, 2.0, 3.0, 4.0, 5.0]));
        let vals = out.series.values();
        assert!((vals[0] - (-1.4142)).abs() < 1e-4, "first element {}", vals[0]);
        assert!(out.series.mean().abs() < 1e-9);
        assert!((out.series.std_dev() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn idempotent_on_non_degenerate() {
        let once = z_normalize(&ts(&[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0]));
        let twice = z_normalize(&once.series);
        for (a, b) in once.series.values().iter().zip(twice.series.values()) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }
}
