//! 1NN classification over symbolic or raw distances, leave-one-out
//! cross-validation, alphabet-size selection on the train split, and
//! train/test evaluation.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabet::{BreakpointTable, MAX_ALPHABET_SIZE, MIN_ALPHABET_SIZE};
use crate::distance::{euclidean, symbolic_dist, SymbolicDistanceContext};
use crate::error::{Error, Result};
use crate::representation::{classic_sax_transform, esax_transform, SymbolicWord};
use crate::series::{z_normalize, TimeSeries};

/// One labeled observation: an opaque class token plus its series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub label: String,
    pub series: TimeSeries,
}

/// A named collection of labeled series, all of equal length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledDataset {
    name: String,
    instances: Vec<Instance>,
}

impl LabeledDataset {
    pub fn new(name: impl Into<String>, instances: Vec<Instance>) -> Result<Self> {
        let name = name.into();
        if instances.is_empty() {
            return Err(Error::InvalidInput(format!("dataset `{name}` has no instances")));
        }
        let len = instances[0].series.len();
        if let Some(bad) = instances.iter().position(|i| i.series.len() != len) {
            return Err(Error::InvalidInput(format!(
                "dataset `{name}`: instance {bad} has length {} but instance 0 has {len}",
                instances[bad].series.len()
            )));
        }
        Ok(LabeledDataset { name, instances })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Common length of every series in the dataset.
    pub fn series_length(&self) -> usize {
        self.instances[0].series.len()
    }

    /// Number of distinct labels.
    pub fn class_count(&self) -> usize {
        let mut labels: Vec<&str> = self.instances.iter().map(|i| i.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        labels.len()
    }
}

/// Distance route used for classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClassicSax,
    ESax,
    RawEuclidean,
}

impl Method {
    /// Machine token, as used on the command line and in JSON.
    pub fn token(&self) -> &'static str {
        match self {
            Method::ClassicSax => "classic-sax",
            Method::ESax => "e-sax",
            Method::RawEuclidean => "raw-euclidean",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::ClassicSax => "classic-SAX",
            Method::ESax => "E-SAX",
            Method::RawEuclidean => "raw-Euclidean",
        };
        f.write_str(name)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classic-sax" | "sax" => Ok(Method::ClassicSax),
            "e-sax" | "esax" => Ok(Method::ESax),
            "raw-euclidean" | "euclidean" => Ok(Method::RawEuclidean),
            other => Err(Error::invalid_parameter(
                "method",
                format!("unknown method `{other}` (expected classic-sax, e-sax, or raw-euclidean)"),
            )),
        }
    }
}

/// How the train-stage error is measured during alphabet selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TrainErrorMode {
    /// Each train instance classified against all the others.
    #[default]
    Loocv,
    /// Each train instance classified against the full train set, itself
    /// included; kept for sensitivity checks.
    Resubstitution,
}

/// Default alphabet-size search grid: 3..=20.
pub fn default_alphabet_grid() -> Vec<usize> {
    (3..=20).collect()
}

/// Default word length for a given series length: max(1, length / 8).
pub fn default_word_length(series_length: usize) -> usize {
    (series_length / 8).max(1)
}

/// Parameters for one classification experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentParams {
    pub method: Method,
    pub word_length: usize,
    pub alphabet_size: usize,
    pub normalize: bool,
    pub alphabet_grid: Vec<usize>,
    pub train_error_mode: TrainErrorMode,
}

impl ExperimentParams {
    /// Params with normalization on, the default grid, and LOOCV selection.
    pub fn new(method: Method, word_length: usize, alphabet_size: usize) -> Self {
        ExperimentParams {
            method,
            word_length,
            alphabet_size,
            normalize: true,
            alphabet_grid: default_alphabet_grid(),
            train_error_mode: TrainErrorMode::Loocv,
        }
    }

    fn with_alphabet(&self, alphabet_size: usize) -> Self {
        ExperimentParams {
            alphabet_size,
            ..self.clone()
        }
    }
}

/// Outcome of one train/test evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub dataset: String,
    pub method: Method,
    /// Alphabet size chosen on the train split; absent for raw-Euclidean.
    pub chosen_alphabet: Option<usize>,
    pub train_error: f64,
    pub test_error: f64,
    pub misclassified: usize,
    pub total: usize,
}

/// Returns the label of the train word closest to the query; ties broken by
/// the earliest train index.
pub fn nn1_classify(
    query: &SymbolicWord,
    train_words: &[(String, SymbolicWord)],
    ctx: &SymbolicDistanceContext<'_>,
) -> Result<String> {
    if train_words.is_empty() {
        return Err(Error::InvalidInput("1NN needs a nonempty train set".into()));
    }
    let mut best = f64::INFINITY;
    let mut best_label = None;
    for (label, word) in train_words {
        let d = symbolic_dist(query, word, ctx)?;
        if d < best {
            best = d;
            best_label = Some(label.as_str());
        }
    }
    Ok(best_label.expect("nonempty train set").to_string())
}

/// Instances reduced to the representation the distance works on.
enum Prepared {
    Symbolic {
        words: Vec<SymbolicWord>,
        table: BreakpointTable,
    },
    Raw(Vec<TimeSeries>),
}

impl Prepared {
    fn build(dataset: &LabeledDataset, params: &ExperimentParams) -> Result<Prepared> {
        match params.method {
            Method::RawEuclidean => {
                let series = dataset
                    .instances()
                    .iter()
                    .map(|i| {
                        if params.normalize {
                            z_normalize(&i.series).series
                        } else {
                            i.series.clone()
                        }
                    })
                    .collect();
                Ok(Prepared::Raw(series))
            }
            Method::ClassicSax | Method::ESax => {
                let table = BreakpointTable::new(params.alphabet_size)?;
                let words = dataset
                    .instances()
                    .iter()
                    .map(|i| match params.method {
                        Method::ClassicSax => {
                            classic_sax_transform(&i.series, params.word_length, &table, params.normalize)
                        }
                        Method::ESax => {
                            esax_transform(&i.series, params.word_length, &table, params.normalize)
                        }
                        Method::RawEuclidean => unreachable!(),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Prepared::Symbolic { words, table })
            }
        }
    }

    fn distance(&self, i: usize, j: usize) -> f64 {
        match self {
            Prepared::Symbolic { words, table } => {
                let ctx = SymbolicDistanceContext::for_word(table, &words[i])
                    .expect("word shapes validated at build");
                symbolic_dist(&words[i], &words[j], &ctx).expect("words share one shape")
            }
            Prepared::Raw(series) => {
                euclidean(&series[i], &series[j]).expect("dataset series share one length")
            }
        }
    }

    /// Cross-set distance where `query` indexes another prepared set.
    fn cross_distance(&self, other: &Prepared, query: usize, train: usize) -> f64 {
        match (other, self) {
            (Prepared::Symbolic { words: q, table }, Prepared::Symbolic { words: t, .. }) => {
                let ctx = SymbolicDistanceContext::for_word(table, &q[query])
                    .expect("word shapes validated at build");
                symbolic_dist(&q[query], &t[train], &ctx).expect("splits share one shape")
            }
            (Prepared::Raw(q), Prepared::Raw(t)) => {
                euclidean(&q[query], &t[train]).expect("splits share one length")
            }
            _ => unreachable!("both splits prepared with the same method"),
        }
    }
}

/// Index of the nearest candidate under `dist`, earliest index on ties.
fn argmin_index(count: usize, dist: impl Fn(usize) -> f64) -> usize {
    let mut best = f64::INFINITY;
    let mut best_idx = 0;
    for j in 0..count {
        let d = dist(j);
        if d < best {
            best = d;
            best_idx = j;
        }
    }
    best_idx
}

fn train_stage_error(dataset: &LabeledDataset, params: &ExperimentParams) -> Result<f64> {
    if dataset.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "dataset `{}` needs at least 2 instances, has {}",
            dataset.name(),
            dataset.len()
        )));
    }
    let prepared = Prepared::build(dataset, params)?;
    let labels: Vec<&str> = dataset.instances().iter().map(|i| i.label.as_str()).collect();
    let n = dataset.len();
    let skip_self = params.train_error_mode == TrainErrorMode::Loocv;

    let misclassified = (0..n)
        .into_par_iter()
        .map(|i| {
            let candidates: Vec<usize> = (0..n).filter(|&j| !(skip_self && j == i)).collect();
            let nearest = candidates[argmin_index(candidates.len(), |k| prepared.distance(i, candidates[k]))];
            usize::from(labels[nearest] != labels[i])
        })
        .sum::<usize>();

    Ok(misclassified as f64 / n as f64)
}

/// Leave-one-out error: each instance classified against all the others
/// under `params`; returns the misclassified fraction.
pub fn loocv_error(dataset: &LabeledDataset, params: &ExperimentParams) -> Result<f64> {
    train_stage_error(dataset, &ExperimentParams {
        train_error_mode: TrainErrorMode::Loocv,
        ..params.clone()
    })
}

fn check_grid(grid: &[usize]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::invalid_parameter("alphabet_grid", "grid must be nonempty".to_string()));
    }
    if !grid.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::invalid_parameter(
            "alphabet_grid",
            "grid must be sorted ascending".to_string(),
        ));
    }
    if let Some(&bad) = grid
        .iter()
        .find(|&&a| !(MIN_ALPHABET_SIZE..=MAX_ALPHABET_SIZE).contains(&a))
    {
        return Err(Error::invalid_parameter(
            "alphabet_grid",
            format!("alphabet size {bad} outside {MIN_ALPHABET_SIZE}..={MAX_ALPHABET_SIZE}"),
        ));
    }
    Ok(())
}

/// Scans `params.alphabet_grid` at fixed word length and returns the size
/// minimizing the train-stage error, smallest size on ties, together with
/// that error.
pub fn select_alphabet_size(train: &LabeledDataset, params: &ExperimentParams) -> Result<(usize, f64)> {
    if params.method == Method::RawEuclidean {
        return Err(Error::invalid_parameter(
            "method",
            "alphabet selection does not apply to raw-euclidean".to_string(),
        ));
    }
    check_grid(&params.alphabet_grid)?;

    let mut best: Option<(usize, f64)> = None;
    for &a in &params.alphabet_grid {
        let err = train_stage_error(train, &params.with_alphabet(a))?;
        match best {
            Some((_, e)) if err >= e => {}
            _ => best = Some((a, err)),
        }
    }
    Ok(best.expect("grid validated nonempty"))
}

/// Runs the full protocol: selects the alphabet size on the train split,
/// then classifies every test instance against the full train set at the
/// chosen size.
pub fn evaluate(train: &LabeledDataset, test: &LabeledDataset, params: &ExperimentParams) -> Result<EvalResult> {
    if train.series_length() != test.series_length() {
        return Err(Error::InvalidInput(format!(
            "train series length {} != test series length {}",
            train.series_length(),
            test.series_length()
        )));
    }

    let (chosen_alphabet, train_error, fitted) = match params.method {
        Method::RawEuclidean => {
            let err = train_stage_error(train, params)?;
            (None, err, params.clone())
        }
        _ => {
            let (a, err) = select_alphabet_size(train, params)?;
            (Some(a), err, params.with_alphabet(a))
        }
    };

    let train_prepared = Prepared::build(train, &fitted)?;
    let test_prepared = Prepared::build(test, &fitted)?;
    let train_labels: Vec<&str> = train.instances().iter().map(|i| i.label.as_str()).collect();

    let misclassified = (0..test.len())
        .into_par_iter()
        .map(|q| {
            let nearest = argmin_index(train.len(), |j| train_prepared.cross_distance(&test_prepared, q, j));
            usize::from(train_labels[nearest] != test.instances()[q].label)
        })
        .sum::<usize>();

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

/// Win/tie/loss counts over a collection of per-dataset method pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Tally {
    pub wins_classic: usize,
    pub wins_esax: usize,
    pub ties: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.wins_classic + self.wins_esax + self.ties
    }
}

/// Compares per-dataset results of the classic and extreme-point methods:
/// strictly lower test error wins, equal errors tie.
///
/// Each pair must cover one dataset with the classic result first.
pub fn compare_methods(results: &[(EvalResult, EvalResult)]) -> Result<Tally> {
    let mut tally = Tally::default();
    for (classic, esax) in results {
        if classic.dataset != esax.dataset {
            return Err(Error::InvalidInput(format!(
                "mismatched dataset pairing: `{}` vs `{}`",
                classic.dataset, esax.dataset
            )));
        }
        if classic.method != Method::ClassicSax || esax.method != Method::ESax {
            return Err(Error::InvalidInput(format!(
                "pair for `{}` must be (classic-sax, e-sax), got ({}, {})",
                classic.dataset,
                classic.method.token(),
                esax.method.token()
            )));
        }
        if classic.test_error < esax.test_error {
            tally.wins_classic += 1;
        } else if esax.test_error < classic.test_error {
            tally.wins_esax += 1;
        } else {
            tally.ties += 1;
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(values: &[f64]) -> TimeSeries {
        TimeSeries::new(values.to_vec()).unwrap()
    }

    fn dataset(name: &str, rows: &[(&str, &[f64])]) -> LabeledDataset {
        LabeledDataset::new(
            name,
            rows.iter()
                .map(|(label, values)| Instance {
                    label: label.to_string(),
                    series: ts(values),
                })
                .collect(),
        )
        .unwrap()
    }

    fn word(letters: &str, a: usize, n: usize) -> SymbolicWord {
        SymbolicWord::from_letters(letters, a, n).unwrap()
    }

    #[test]
    fn dataset_rejects_ragged_lengths() {
        let err = LabeledDataset::new(
            "bad",
            vec![
                Instance { label: "1".into(), series: ts(&[1.0, 2.0]) },
                Instance { label: "2".into(), series: ts(&[1.0]) },
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn nn1_exact_match_wins() {
        let table = BreakpointTable::new(4).unwrap();
        let train = vec![
            ("A".to_string(), word("ab", 4, 8)),
            ("B".to_string(), word("dd", 4, 8)),
        ];
        let ctx = SymbolicDistanceContext::new(&table, 8, 2).unwrap();
        let got = nn1_classify(&word("ab", 4, 8), &train, &ctx).unwrap();
        assert_eq!(got, "A");
    }

    #[test]
    fn nn1_tie_takes_earliest_index() {
        let table = BreakpointTable::new(4).unwrap();
        // both train words are one adjacent-symbol step from the query, so
        // both distances are exactly zero
        let train = vec![
            ("B".to_string(), word("ba", 4, 8)),
            ("A".to_string(), word("ab", 4, 8)),
        ];
        let ctx = SymbolicDistanceContext::new(&table, 8, 2).unwrap();
        let got = nn1_classify(&word("aa", 4, 8), &train, &ctx).unwrap();
        assert_eq!(got, "B");
    }

    #[test]
    fn nn1_closest_region_wins() {
        let table = BreakpointTable::new(4).unwrap();
        let train = vec![
            ("A".to_string(), word("aa", 4, 8)),
            ("B".to_string(), word("dd", 4, 8)),
        ];
        let ctx = SymbolicDistanceContext::new(&table, 8, 2).unwrap();
        let got = nn1_classify(&word("ab", 4, 8), &train, &ctx).unwrap();
        assert_eq!(got, "A");
    }

    #[test]
    fn nn1_rejects_empty_train() {
        let table = BreakpointTable::new(4).unwrap();
        let ctx = SymbolicDistanceContext::new(&table, 8, 2).unwrap();
        assert!(nn1_classify(&word("ab", 4, 8), &[], &ctx).is_err());
    }

    #[test]
    fn loocv_two_instances_different_labels() {
        let data = dataset("pair", &[("A", &[0.0, 1.0, 2.0, 3.0]), ("B", &[3.0, 2.0, 1.0, 0.0])]);
        let params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        assert_eq!(loocv_error(&data, &params).unwrap(), 1.0);
    }

    #[test]
    fn loocv_duplicated_instances_reach_zero() {
        let data = dataset(
            "twins",
            &[
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
            ],
        );
        let params = ExperimentParams::new(Method::ESax, 2, 4);
        assert_eq!(loocv_error(&data, &params).unwrap(), 0.0);
    }

    #[test]
    fn loocv_three_instance_hand_computed() {
        // pre-normalized values; normalize off so the words are exactly
        // a=4 symbols of the raw segment means:
        //   s0 -> [1, 4] (A), s1 -> [1, 3] (A), s2 -> [4, 1] (B)
        // s0's neighbors: s1 at sqrt(2*0), s2 at positive distance -> A ok
        // s1: s0 at 0 -> A ok; s2: both far, nearest s0 (tie d both >0?)
        // d(s2,s0) = sqrt(2*(l(4,1)^2+l(4,1)^2)), d(s2,s1) = sqrt(2*(l(4,1)^2+l(1,3)^2))
        // l(1,3)=0.6745 < l(4,1)=1.349 so s1 is closer -> predicts A, wrong.
        let data = dataset(
            "trio",
            &[
                ("A", &[-1.0, -1.0, 1.0, 1.0]),
                ("A", &[-1.0, -1.0, 0.1, 0.1]),
                ("B", &[1.0, 1.0, -1.0, -1.0]),
            ],
        );
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        params.normalize = false;
        let got = loocv_error(&data, &params).unwrap();
        assert_eq!(got, 1.0 / 3.0);
    }

    #[test]
    fn loocv_needs_two_instances() {
        let data = dataset("one", &[("A", &[1.0, 2.0])]);
        let params = ExperimentParams::new(Method::ClassicSax, 1, 4);
        assert!(loocv_error(&data, &params).is_err());
    }

    #[test]
    fn select_single_grid_value() {
        let data = dataset("pair", &[("A", &[0.0, 1.0, 2.0, 3.0]), ("B", &[3.0, 2.0, 1.0, 0.0])]);
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        params.alphabet_grid = vec![7];
        let (a, _) = select_alphabet_size(&data, &params).unwrap();
        assert_eq!(a, 7);
    }

    #[test]
    fn select_tie_prefers_smaller() {
        // duplicated twins give zero error at every size
        let data = dataset(
            "twins",
            &[
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
            ],
        );
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        params.alphabet_grid = vec![3, 4, 5, 6];
        let (a, err) = select_alphabet_size(&data, &params).unwrap();
        assert_eq!((a, err), (3, 0.0));
    }

    #[test]
    fn select_resolves_classes_only_finer_grid_separates() {
        // pre-normalized, normalize off. The a=2 lookup table is
        // identically zero, so every pair ties and half the instances
        // misclassify; at a=4 the rising pattern maps to symbols [1,4] and
        // the shallow falling one to [3,2], two regions apart at each
        // position, separating the classes.
        let data = dataset(
            "straddle",
            &[
                ("UP", &[-0.9, -0.9, 0.9, 0.9]),
                ("UP", &[-0.9, -0.9, 0.9, 0.9]),
                ("DOWN", &[0.1, 0.1, -0.1, -0.1]),
                ("DOWN", &[0.1, 0.1, -0.1, -0.1]),
            ],
        );
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        params.normalize = false;
        params.alphabet_grid = vec![2, 4];
        let (a, err) = select_alphabet_size(&data, &params).unwrap();
        assert_eq!(a, 4, "finer alphabet should win");
        assert_eq!(err, 0.0);
        // and a=2 alone really is useless here
        params.alphabet_grid = vec![2];
        let (_, err2) = select_alphabet_size(&data, &params).unwrap();
        assert!(err2 > 0.0);
    }

    #[test]
    fn select_rejects_bad_grids() {
        let data = dataset("pair", &[("A", &[0.0, 1.0]), ("B", &[1.0, 0.0])]);
        let mut params = ExperimentParams::new(Method::ClassicSax, 1, 4);
        params.alphabet_grid = vec![];
        assert!(select_alphabet_size(&data, &params).is_err());
        params.alphabet_grid = vec![4, 3];
        assert!(select_alphabet_size(&data, &params).is_err());
        params.alphabet_grid = vec![3, 30];
        assert!(select_alphabet_size(&data, &params).is_err());
    }

    #[test]
    fn evaluate_test_copy_of_train_is_perfect() {
        let train = dataset(
            "twins",
            &[
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("A", &[0.1, 1.0, 2.0, 3.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
                ("B", &[3.0, 2.0, 1.0, 0.1]),
            ],
        );
        let params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        let result = evaluate(&train, &train, &params).unwrap();
        assert_eq!(result.test_error, 0.0);
        assert_eq!(result.misclassified, 0);
        assert_eq!(result.total, 4);
    }

    #[test]
    fn evaluate_single_class_train() {
        let train = dataset("mono", &[("A", &[0.0, 1.0, 2.0, 3.0]), ("A", &[0.1, 1.1, 2.1, 3.1])]);
        let test = dataset(
            "mono",
            &[
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
                ("B", &[2.9, 2.0, 1.0, 0.0]),
            ],
        );
        let params = ExperimentParams::new(Method::ESax, 2, 4);
        let result = evaluate(&train, &test, &params).unwrap();
        assert_eq!(result.misclassified, 2);
        assert!((result.test_error - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn evaluate_six_instance_hand_enumerable() {
        // normalize off, m=2, a=3 (breakpoints +/-0.4307). Train words:
        // A -> [1,3], B -> [3,1], A' -> [1,3]. LOOCV: A and A' find each
        // other at distance zero; B ties between the two A words and the
        // earliest index wins, so the train error is exactly 1/3. Test
        // words: [1,3] -> A (right), [3,1] -> B (right), and the shallow
        // [2,2] outlier is at distance zero from everything (symbol 2 is
        // adjacent to both 1 and 3), so the tie rule hands it to train
        // index 0 = A, a miss.
        let train = dataset(
            "six",
            &[
                ("A", &[-1.0, -1.0, 1.0, 1.0]),
                ("B", &[1.0, 1.0, -1.0, -1.0]),
                ("A", &[-0.5, -0.5, 0.5, 0.5]),
            ],
        );
        let test = dataset(
            "six",
            &[
                ("A", &[-0.8, -0.8, 0.9, 0.9]),
                ("B", &[0.7, 0.7, -0.6, -0.6]),
                ("B", &[-0.2, -0.2, 0.3, 0.3]),
            ],
        );
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 3);
        params.normalize = false;
        params.alphabet_grid = vec![3];
        let result = evaluate(&train, &test, &params).unwrap();
        assert_eq!(result.chosen_alphabet, Some(3));
        assert!((result.train_error - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(result.misclassified, 1);
        assert!((result.test_error - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn evaluate_rejects_length_mismatch() {
        let train = dataset("a", &[("A", &[0.0, 1.0]), ("B", &[1.0, 0.0])]);
        let test = dataset("a", &[("A", &[0.0, 1.0, 2.0])]);
        let params = ExperimentParams::new(Method::ClassicSax, 1, 4);
        assert!(evaluate(&train, &test, &params).is_err());
    }

    #[test]
    fn raw_euclidean_baseline_runs_without_alphabet() {
        let train = dataset(
            "raw",
            &[
                ("A", &[0.0, 1.0, 2.0, 3.0]),
                ("A", &[0.1, 1.1, 2.1, 3.1]),
                ("B", &[3.0, 2.0, 1.0, 0.0]),
            ],
        );
        let params = ExperimentParams::new(Method::RawEuclidean, 2, 4);
        let result = evaluate(&train, &train, &params).unwrap();
        assert_eq!(result.chosen_alphabet, None);
        assert_eq!(result.test_error, 0.0);
    }

    #[test]
    fn resubstitution_mode_differs_from_loocv() {
        let data = dataset("pair", &[("A", &[0.0, 1.0, 2.0, 3.0]), ("B", &[3.0, 2.0, 1.0, 0.0])]);
        let mut params = ExperimentParams::new(Method::ClassicSax, 2, 4);
        params.train_error_mode = TrainErrorMode::Resubstitution;
        params.alphabet_grid = vec![4];
        let (_, resub) = select_alphabet_size(&data, &params).unwrap();
        assert_eq!(resub, 0.0, "each instance is its own nearest neighbor");
        assert_eq!(loocv_error(&data, &params).unwrap(), 1.0);
    }

    fn eval_pair(dataset: &str, classic_err: f64, esax_err: f64) -> (EvalResult, EvalResult) {
        let mk = |method, test_error| EvalResult {
            dataset: dataset.to_string(),
            method,
            chosen_alphabet: Some(4),
            train_error: 0.0,
            test_error,
            misclassified: 0,
            total: 1,
        };
        (mk(Method::ClassicSax, classic_err), mk(Method::ESax, esax_err))
    }

    #[test]
    fn compare_methods_empty_and_single() {
        assert_eq!(compare_methods(&[]).unwrap(), Tally::default());
        let tally = compare_methods(&[eval_pair("x", 0.2, 0.2)]).unwrap();
        assert_eq!(tally, Tally { wins_classic: 0, wins_esax: 0, ties: 1 });
    }

    #[test]
    fn compare_methods_counts_sum() {
        let pairs = vec![
            eval_pair("a", 0.1, 0.2),
            eval_pair("b", 0.3, 0.1),
            eval_pair("c", 0.5, 0.5),
            eval_pair("d", 0.0, 0.4),
        ];
        let tally = compare_methods(&pairs).unwrap();
        assert_eq!(tally, Tally { wins_classic: 2, wins_esax: 1, ties: 1 });
        assert_eq!(tally.total(), pairs.len());
    }

    #[test]
    fn compare_methods_rejects_mismatched_pairs() {
        let (classic, _) = eval_pair("a", 0.1, 0.2);
        let (_, esax) = eval_pair("b", 0.1, 0.2);
        assert!(compare_methods(&[(classic, esax)]).is_err());
        let (classic, esax) = eval_pair("a", 0.1, 0.2);
        assert!(compare_methods(&[(esax, classic)]).is_err());
    }

    #[test]
    fn default_helpers() {
        assert_eq!(default_word_length(286), 35);
        assert_eq!(default_word_length(4), 1);
        assert_eq!(default_word_length(24), 3);
        let grid = default_alphabet_grid();
        assert_eq!(grid.first(), Some(&3));
        assert_eq!(grid.last(), Some(&20));
    }
}
