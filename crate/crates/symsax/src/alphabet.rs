//! Alphabets over equiprobable Gaussian regions: breakpoints, symbol
//! mapping, and the precomputed symbol-pair distance lookup table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest supported alphabet size.
pub const MIN_ALPHABET_SIZE: usize = 2;
/// Largest supported alphabet size; symbols render as 'a'..'z'.
pub const MAX_ALPHABET_SIZE: usize = 26;

/// Inverse CDF of the standard normal distribution.
///
/// Peter Acklam's rational approximation, relative error below 1.2e-9 over
/// the whole open unit interval. Callers guarantee 0 < p < 1.
fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -39.696_830_286_653_757,
        220.946_098_424_520_88,
        -275.928_510_446_968_9,
        138.357_751_867_269,
        -30.664_798_066_147_16,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -54.476_098_798_224_058,
        161.585_836_858_040_99,
        -155.698_979_859_886_54,
        66.801_311_887_719_72,
        -13.280_681_552_885_721,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -0.322_396_458_041_136_37,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        0.322_467_129_070_039_8,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    debug_assert!(p > 0.0 && p < 1.0);

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

fn check_alphabet_size(alphabet_size: usize) -> Result<()> {
    if alphabet_size < MIN_ALPHABET_SIZE {
        return Err(Error::invalid_parameter(
            "alphabet_size",
            format!("{alphabet_size} is below the minimum of {MIN_ALPHABET_SIZE}"),
        ));
    }
    if alphabet_size > MAX_ALPHABET_SIZE {
        return Err(Error::invalid_parameter(
            "alphabet_size",
            format!("{alphabet_size} exceeds the maximum of {MAX_ALPHABET_SIZE}"),
        ));
    }
    Ok(())
}

/// Computes the a-1 breakpoints that split the standard normal density into
/// `alphabet_size` equiprobable regions: the k/a quantiles of N(0, 1).
pub fn compute_breakpoints(alphabet_size: usize) -> Result<Vec<f64>> {
    check_alphabet_size(alphabet_size)?;
    let a = alphabet_size as f64;
    Ok((1..alphabet_size)
        .map(|k| normal_quantile(k as f64 / a))
        .collect())
}

/// Builds the flat row-major a*a symbol-pair distance matrix from strictly
/// increasing breakpoints.
///
/// Adjacent or equal symbols have distance 0; otherwise the distance is the
/// gap between the innermost breakpoints separating the two regions.
pub fn build_lookup_table(breakpoints: &[f64]) -> Result<Vec<f64>> {
    if let Some(k) = breakpoints.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "breakpoints must be strictly increasing: b[{}] = {} >= b[{}] = {}",
            k,
            breakpoints[k],
            k + 1,
            breakpoints[k + 1]
        )));
    }
    let a = breakpoints.len() + 1;
    let mut lookup = vec![0.0; a * a];
    for r in 1..=a {
        for c in 1..=a {
            if r.abs_diff(c) > 1 {
                let hi = r.max(c);
                let lo = r.min(c);
                lookup[(r - 1) * a + (c - 1)] = breakpoints[hi - 2] - breakpoints[lo - 1];
            }
        }
    }
    Ok(lookup)
}

/// Breakpoints plus the pairwise symbol distance matrix for one alphabet
/// size. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakpointTable {
    alphabet_size: usize,
    breakpoints: Vec<f64>,
    lookup: Vec<f64>,
}

impl BreakpointTable {
    pub fn new(alphabet_size: usize) -> Result<Self> {
        let breakpoints = compute_breakpoints(alphabet_size)?;
        let lookup = build_lookup_table(&breakpoints)?;
        Ok(BreakpointTable {
            alphabet_size,
            breakpoints,
            lookup,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Maps a z-score to its 1-based symbol index.
    ///
    /// A value equal to a breakpoint maps to the upper region, so the
    /// mapping is monotone nondecreasing with half-open intervals.
    pub fn symbol_for_value(&self, v: f64) -> Result<u8> {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("cannot discretize non-finite value {v}")));
        }
        let below = self.breakpoints.partition_point(|&b| b <= v);
        Ok((below + 1) as u8)
    }

    /// Distance between two 1-based symbols, read from the lookup table.
    pub fn pairwise(&self, r: u8, c: u8) -> f64 {
        let a = self.alphabet_size;
        let (r, c) = (r as usize, c as usize);
        debug_assert!(r >= 1 && r <= a && c >= 1 && c <= a);
        self.lookup[(r - 1) * a + (c - 1)]
    }
}

/// Letter rendering for a 1-based symbol index: 1 -> 'a'.
pub fn symbol_letter(symbol: u8) -> char {
    debug_assert!((1..=MAX_ALPHABET_SIZE as u8).contains(&symbol));
    (b'a' + symbol - 1) as char
}

/// Inverse of [`symbol_letter`]; `None` outside 'a'..'z'.
pub fn letter_symbol(ch: char) -> Option<u8> {
    if ch.is_ascii_lowercase() {
        Some(ch as u8 - b'a' + 1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    #[test]
    fn two_symbols_split_at_median() {
        assert_eq!(compute_breakpoints(2).unwrap(), vec![0.0]);
    }

    #[test]
    fn four_symbol_breakpoints_match_quartiles() {
        let b = compute_breakpoints(4).unwrap();
        let expected = [-0.6745, 0.0, 0.6745];
        for (got, want) in b.iter().zip(expected) {
            assert!((got - want).abs() < 5e-5, "{got} vs {want}");
        }
    }

    #[test]
    fn three_symbol_breakpoints_match_terciles() {
        let b = compute_breakpoints(3).unwrap();
        assert!((b[0] - (-0.4307)).abs() < 5e-5, "{}", b[0]);
        assert!((b[1] - 0.4307).abs() < 5e-5, "{}", b[1]);
    }

    #[test]
    fn rejects_out_of_range_sizes() {
        for bad in [0, 1, 27, 100] {
            let err = compute_breakpoints(bad).unwrap_err();
            assert!(matches!(err, Error::InvalidParameter { name: "alphabet_size", .. }), "{err}");
        }
    }

    #[test]
    fn agrees_with_bisection_oracle_everywhere() {
        for a in MIN_ALPHABET_SIZE..=MAX_ALPHABET_SIZE {
            let b = compute_breakpoints(a).unwrap();
            for (k, &beta) in b.iter().enumerate() {
                let want = oracle::oracle_inverse_normal_cdf((k + 1) as f64 / a as f64).unwrap();
                assert!(
                    (beta - want).abs() < 1e-8,
                    "a={a} k={} got {beta} want {want}",
                    k + 1
                );
            }
        }
    }

    #[test]
    fn breakpoints_symmetric_and_consistent_with_cdf() {
        for a in MIN_ALPHABET_SIZE..=MAX_ALPHABET_SIZE {
            let b = compute_breakpoints(a).unwrap();
            assert_eq!(b.len(), a - 1);
            for k in 0..b.len() {
                assert!((b[k] + b[a - 2 - k]).abs() < 1e-9, "a={a} k={k}");
                let phi = oracle::normal_cdf(b[k]);
                assert!(
                    (phi - (k + 1) as f64 / a as f64).abs() < 1e-8,
                    "a={a} k={k}: cdf {phi}"
                );
            }
        }
    }

    #[test]
    fn symbol_mapping_examples() {
        let table = BreakpointTable::new(4).unwrap();
        assert_eq!(table.symbol_for_value(-10.0).unwrap(), 1);
        assert_eq!(table.symbol_for_value(0.1).unwrap(), 3);
        // boundary value maps to the upper region
        let boundary = table.breakpoints()[2];
        assert_eq!(table.symbol_for_value(boundary).unwrap(), 4);
        assert_eq!(table.symbol_for_value(0.0).unwrap(), 3);
    }

    #[test]
    fn symbol_rejects_non_finite() {
        let table = BreakpointTable::new(4).unwrap();
        assert!(table.symbol_for_value(f64::NAN).is_err());
        assert!(table.symbol_for_value(f64::INFINITY).is_err());
    }

    #[test]
    fn lookup_examples_for_four_symbols() {
        let table = BreakpointTable::new(4).unwrap();
        assert!((table.pairwise(1, 3) - 0.6745).abs() < 5e-5);
        assert_eq!(table.pairwise(2, 3), 0.0);
        assert!((table.pairwise(1, 4) - 1.3490).abs() < 5e-5);
    }

    #[test]
    fn lookup_rejects_unsorted_breakpoints() {
        assert!(build_lookup_table(&[0.0, -1.0]).is_err());
        assert!(build_lookup_table(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn lookup_closed_form_exhaustive() {
        for a in MIN_ALPHABET_SIZE..=10 {
            let table = BreakpointTable::new(a).unwrap();
            let b = table.breakpoints();
            for r in 1..=a as u8 {
                for c in 1..=a as u8 {
                    let got = table.pairwise(r, c);
                    assert_eq!(got, table.pairwise(c, r), "symmetry a={a} r={r} c={c}");
                    if r.abs_diff(c) <= 1 {
                        assert_eq!(got, 0.0, "zero band a={a} r={r} c={c}");
                    } else {
                        let want = b[r.max(c) as usize - 2] - b[r.min(c) as usize - 1];
                        assert_eq!(got, want, "closed form a={a} r={r} c={c}");
                        assert!(got > 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn lookup_monotone_in_region_separation() {
        for a in MIN_ALPHABET_SIZE..=10 {
            let table = BreakpointTable::new(a).unwrap();
            for r in 1..=a as u8 {
                for c in 1..=a as u8 {
                    for r2 in 1..=r.min(c) {
                        for c2 in r.max(c)..=a as u8 {
                            assert!(
                                table.pairwise(r, c) <= table.pairwise(r2, c2),
                                "a={a}: [{r},{c}] inside [{r2},{c2}]"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn letters_round_trip() {
        assert_eq!(symbol_letter(1), 'a');
        assert_eq!(symbol_letter(26), 'z');
        for s in 1..=26u8 {
            assert_eq!(letter_symbol(symbol_letter(s)), Some(s));
        }
        assert_eq!(letter_symbol('A'), None);
    }

    proptest! {
        #[test]
        fn symbol_mapping_is_monotone(
            a in MIN_ALPHABET_SIZE..=MAX_ALPHABET_SIZE,
            v in -6.0f64..6.0,
            w in -6.0f64..6.0,
        ) {
            let table = BreakpointTable::new(a).unwrap();
            let (lo, hi) = if v <= w { (v, w) } else { (w, v) };
            prop_assert!(table.symbol_for_value(lo).unwrap() <= table.symbol_for_value(hi).unwrap());
        }

        #[test]
        fn same_value_has_zero_self_distance(
            a in MIN_ALPHABET_SIZE..=MAX_ALPHABET_SIZE,
            v in -6.0f64..6.0,
        ) {
            let table = BreakpointTable::new(a).unwrap();
            let s = table.symbol_for_value(v).unwrap();
            prop_assert_eq!(table.pairwise(s, s), 0.0);
        }
    }
}
