//! Brute-force reference implementations used by the test suite to validate
//! the optimized paths.
//!
//! Everything here is written for obviousness, not speed: plain loops, no
//! lookup-table reuse, no shared normalization cache, and a bisection-based
//! quantile routine instead of the rational approximation. A bug in the
//! main path cannot be common to this one.

use crate::classify::{EvalResult, ExperimentParams, LabeledDataset, Method, TrainErrorMode};
use crate::error::{Error, Result};

/// Standard normal CDF evaluated through the Taylor series
/// `0.5 + pdf(x) * (x + x^3/3 + x^5/(3*5) + ...)`.
///
/// Accurate to well below 1e-12 for |x| <= 8, which covers every quantile
/// the tests exercise.
pub fn normal_cdf(x: f64) -> f64 {
    let pdf = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0;
    while term.abs() > 1e-18 && k < 500.0 {
        term *= x * x / (2.0 * k + 1.0);
        sum += term;
        k += 1.0;
    }
    0.5 + pdf * sum
}

/// Inverse normal CDF by bisection on [`normal_cdf`] until the bracketing
/// interval is narrower than 1e-10.
pub fn oracle_inverse_normal_cdf(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid_parameter(
            "p",
            format!("{p} is outside the open interval (0, 1)"),
        ));
    }
    let mut lo = -8.0;
    let mut hi = 8.0;
    while hi - lo >= 1e-10 {
        let mid = 0.5 * (lo + hi);
        if normal_cdf(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn naive_breakpoints(alphabet_size: usize) -> Result<Vec<f64>> {
    let mut betas = Vec::new();
    for k in 1..alphabet_size {
        betas.push(oracle_inverse_normal_cdf(k as f64 / alphabet_size as f64)?);
    }
    Ok(betas)
}

fn naive_normalize(values: &[f64]) -> Vec<f64> {
    let n = values.len() as f64;
    let mut sum = 0.0;
    for &v in values {
        sum += v;
    }
    let mean = sum / n;
    let mut sq = 0.0;
    for &v in values {
        sq += (v - mean) * (v - mean);
    }
    let std = (sq / n).sqrt();
    if std < 1e-12 {
        return vec![0.0; values.len()];
    }
    values.iter().map(|&v| (v - mean) / std).collect()
}

fn naive_coefficients(values: &[f64], m: usize, method: Method) -> Vec<f64> {
    let n = values.len();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let start = i * n / m;
        let end = (i + 1) * n / m;
        match method {
            Method::ClassicSax => {
                let mut sum = 0.0;
                for &v in &values[start..end] {
                    sum += v;
                }
                out.push(sum / (end - start) as f64);
            }
            Method::ESax => {
                let mut min = values[start];
                let mut max = values[start];
                for &v in &values[start..end] {
                    if v < min {
                        min = v;
                    }
                    if v > max {
                        max = v;
                    }
                }
                out.push((min + max) / 2.0);
            }
            Method::RawEuclidean => unreachable!("raw method never symbolizes"),
        }
    }
    out
}

fn naive_symbol(v: f64, betas: &[f64]) -> usize {
    let mut symbol = 1;
    for &b in betas {
        if v >= b {
            symbol += 1;
        }
    }
    symbol
}

fn naive_symbol_distance(r: usize, c: usize, betas: &[f64]) -> f64 {
    let hi = r.max(c);
    let lo = r.min(c);
    if hi - lo <= 1 {
        0.0
    } else {
        betas[hi - 2] - betas[lo - 1]
    }
}

/// Distance between two instances, recomputed from raw values every call.
fn naive_distance(s: &[f64], t: &[f64], params: &ExperimentParams, alphabet_size: usize) -> Result<f64> {
    let (s_vals, t_vals);
    if params.normalize {
        s_vals = naive_normalize(s);
        t_vals = naive_normalize(t);
    } else {
        s_vals = s.to_vec();
        t_vals = t.to_vec();
    }

    if params.method == Method::RawEuclidean {
        let mut sum = 0.0;
        for i in 0..s_vals.len() {
            sum += (s_vals[i] - t_vals[i]) * (s_vals[i] - t_vals[i]);
        }
        return Ok(sum.sqrt());
    }

    let m = params.word_length;
    let n = s_vals.len();
    let betas = naive_breakpoints(alphabet_size)?;
    let s_coeff = naive_coefficients(&s_vals, m, params.method);
    let t_coeff = naive_coefficients(&t_vals, m, params.method);
    let mut sum = 0.0;
    for i in 0..m {
        let a = naive_symbol(s_coeff[i], &betas);
        let b = naive_symbol(t_coeff[i], &betas);
        let d = naive_symbol_distance(a, b, &betas);
        sum += d * d;
    }
    Ok((n as f64 / m as f64 * sum).sqrt())
}

fn naive_classify(
    query: &[f64],
    train: &LabeledDataset,
    params: &ExperimentParams,
    alphabet_size: usize,
    skip: Option<usize>,
) -> Result<String> {
    let mut best = f64::INFINITY;
    let mut best_label: Option<&str> = None;
    for (j, instance) in train.instances().iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        let d = naive_distance(query, instance.series.values(), params, alphabet_size)?;
        if d < best {
            best = d;
            best_label = Some(&instance.label);
        }
    }
    best_label
        .map(str::to_string)
        .ok_or_else(|| Error::InvalidInput("no candidates to classify against".into()))
}

/// Predicted label for `dataset[query_index]` classified against every other
/// instance: full distance scan, explicit argmin, lowest index on ties.
pub fn oracle_nn1(query_index: usize, dataset: &LabeledDataset, params: &ExperimentParams) -> Result<String> {
    if query_index >= dataset.len() {
        return Err(Error::invalid_parameter(
            "query_index",
            format!("{query_index} out of range for {} instances", dataset.len()),
        ));
    }
    naive_classify(
        dataset.instances()[query_index].series.values(),
        dataset,
        params,
        params.alphabet_size,
        Some(query_index),
    )
}

fn oracle_train_error(dataset: &LabeledDataset, params: &ExperimentParams, alphabet_size: usize) -> Result<f64> {
    let mut wrong = 0;
    for i in 0..dataset.len() {
        let skip = match params.train_error_mode {
            TrainErrorMode::Loocv => Some(i),
            TrainErrorMode::Resubstitution => None,
        };
        let got = naive_classify(
            dataset.instances()[i].series.values(),
            dataset,
            params,
            alphabet_size,
            skip,
        )?;
        if got != dataset.instances()[i].label {
            wrong += 1;
        }
    }
    Ok(wrong as f64 / dataset.len() as f64)
}

/// Leave-one-out misclassification fraction, recomputed naively.
pub fn oracle_loocv_error(dataset: &LabeledDataset, params: &ExperimentParams) -> Result<f64> {
    let loocv = ExperimentParams {
        train_error_mode: TrainErrorMode::Loocv,
        ..params.clone()
    };
    oracle_train_error(dataset, &loocv, params.alphabet_size)
}

/// Grid scan for the error-minimizing alphabet size, smallest on ties.
pub fn oracle_select_alphabet_size(
    train: &LabeledDataset,
    params: &ExperimentParams,
) -> Result<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for &a in &params.alphabet_grid {
        let err = oracle_train_error(train, params, a)?;
        match best {
            Some((_, e)) if err >= e => {}
            _ => best = Some((a, err)),
        }
    }
    best.ok_or_else(|| Error::invalid_parameter("alphabet_grid", "grid must be nonempty".to_string()))
}

/// Full protocol, naively: select on train, classify every test instance.
pub fn oracle_evaluate(
    train: &LabeledDataset,
    test: &LabeledDataset,
    params: &ExperimentParams,
) -> Result<EvalResult> {
    let (chosen_alphabet, train_error) = match params.method {
        Method::RawEuclidean => (None, oracle_train_error(train, params, params.alphabet_size)?),
        _ => {
            let (a, err) = oracle_select_alphabet_size(train, params)?;
            (Some(a), err)
        }
    };
    let alphabet = chosen_alphabet.unwrap_or(params.alphabet_size);

    let mut misclassified = 0;
    for instance in test.instances() {
        let got = naive_classify(instance.series.values(), train, params, alphabet, None)?;
        if got != instance.label {
            misclassified += 1;
        }
    }

    Ok(EvalResult {
        dataset: train.name().to_string(),
        method: params.method,
        chosen_alphabet,
        train_error,
        test_error: misclassified as f64 / test.len() as f64,
        misclassified,
        total: test.len(),
    })
}
