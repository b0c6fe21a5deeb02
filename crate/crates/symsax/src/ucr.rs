//! Loading UCR-archive-format dataset files: one instance per line, class
//! label first, comma- or tab-separated values.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::classify::{Instance, LabeledDataset};
use crate::error::{Error, Result};
use crate::registry;
use crate::series::TimeSeries;

/// Environment variable naming the archive directory.
pub const DATA_ROOT_ENV: &str = "SYMSAX_DATA_ROOT";

/// Field separator of a dataset file, detected per file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separator {
    Comma,
    Tab,
}

impl Separator {
    pub fn as_char(self) -> char {
        match self {
            Separator::Comma => ',',
            Separator::Tab => '\t',
        }
    }
}

/// Archive directory: explicit path if given, else `SYMSAX_DATA_ROOT`, else
/// `./data`.
pub fn resolve_data_root(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(env_root) = std::env::var(DATA_ROOT_ENV) {
        if !env_root.is_empty() {
            return PathBuf::from(env_root);
        }
    }
    PathBuf::from("data")
}

fn format_error(path: &Path, line: usize, column: Option<usize>, message: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        line,
        column,
        message: message.into(),
    }
}

/// Parses UCR text: every nonempty line is one instance, the first field is
/// an opaque class token, the rest are finite reals. The separator (comma
/// or tab) is detected from the first data line; all rows must have the
/// same field count.
pub fn parse_ucr_str(text: &str, path: &Path, name: &str) -> Result<LabeledDataset> {
    let mut separator: Option<Separator> = None;
    let mut expected_fields: Option<(usize, usize)> = None; // (count, first line)
    let mut instances = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }

        let sep = match separator {
            Some(s) => s,
            None => {
                let detected = if line.contains('\t') {
                    Separator::Tab
                } else if line.contains(',') {
                    Separator::Comma
                } else {
                    return Err(format_error(
                        path,
                        line_no,
                        None,
                        "no comma or tab separator found on the first data line",
                    ));
                };
                separator = Some(detected);
                detected
            }
        };

        let fields: Vec<&str> = line.split(sep.as_char()).collect();
        match expected_fields {
            None => expected_fields = Some((fields.len(), line_no)),
            Some((count, first_line)) if fields.len() != count => {
                return Err(format_error(
                    path,
                    line_no,
                    None,
                    format!(
                        "row has {} fields but line {first_line} has {count}",
                        fields.len()
                    ),
                ));
            }
            _ => {}
        }
        if fields.len() < 2 {
            return Err(format_error(path, line_no, None, "row has a label but no values"));
        }

        let label = fields[0].trim();
        if label.is_empty() {
            return Err(format_error(path, line_no, Some(1), "empty class label"));
        }

        let mut values = Vec::with_capacity(fields.len() - 1);
        for (i, field) in fields[1..].iter().enumerate() {
            let column = i + 2;
            let parsed: f64 = field.trim().parse().map_err(|_| {
                format_error(path, line_no, Some(column), format!("not a number: {:?}", field.trim()))
            })?;
            if !parsed.is_finite() {
                return Err(format_error(
                    path,
                    line_no,
                    Some(column),
                    format!("non-finite value {parsed}"),
                ));
            }
            values.push(parsed);
        }

        instances.push(Instance {
            label: label.to_string(),
            series: TimeSeries::new(values)?,
        });
    }

    if instances.is_empty() {
        return Err(format_error(path, 1, None, "file contains no data lines"));
    }
    LabeledDataset::new(name, instances)
}

/// Reads and parses one dataset file; the dataset is named after the file
/// stem.
pub fn parse_ucr_file(path: &Path) -> Result<LabeledDataset> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    parse_ucr_str(&text, path, &name)
}

/// Renders a dataset back to UCR text with the given separator. Values use
/// the shortest representation that round-trips, so parse -> serialize ->
/// parse is loss-free.
pub fn serialize_ucr(dataset: &LabeledDataset, separator: Separator) -> String {
    let sep = separator.as_char();
    let mut out = String::new();
    for instance in dataset.instances() {
        let _ = write!(out, "{}", instance.label);
        for v in instance.series.values() {
            let _ = write!(out, "{sep}{v}");
        }
        out.push('\n');
    }
    out
}

/// A train/test pair plus any registry validation warnings.
#[derive(Debug, Clone)]
pub struct LoadedPair {
    pub train: LabeledDataset,
    pub test: LabeledDataset,
    /// Human-readable notes where the loaded data disagrees with the
    /// built-in registry; mismatches warn rather than fail because archive
    /// revisions reshape some datasets.
    pub warnings: Vec<String>,
}

const EXTENSIONS: [&str; 4] = ["", ".tsv", ".txt", ".csv"];

fn probe_split(root: &Path, name: &str, split: &str) -> std::result::Result<PathBuf, Vec<PathBuf>> {
    let mut probed = Vec::new();
    for ext in EXTENSIONS {
        let candidate = root.join(name).join(format!("{name}_{split}{ext}"));
        if candidate.is_file() {
            return Ok(candidate);
        }
        probed.push(candidate);
    }
    Err(probed)
}

/// Loads `<root>/<name>/<name>_TRAIN` and `_TEST` (probing .tsv/.txt/.csv
/// extensions) and validates the shapes against the registry when the name
/// is known.
pub fn load_pair(name: &str, root: &Path) -> Result<LoadedPair> {
    let mut all_probed = Vec::new();
    let train_path = match probe_split(root, name, "TRAIN") {
        Ok(p) => Some(p),
        Err(probed) => {
            all_probed.extend(probed);
            None
        }
    };
    let test_path = match probe_split(root, name, "TEST") {
        Ok(p) => Some(p),
        Err(probed) => {
            all_probed.extend(probed);
            None
        }
    };
    let (train_path, test_path) = match (train_path, test_path) {
        (Some(train), Some(test)) => (train, test),
        _ => {
            return Err(Error::NotFound {
                name: name.to_string(),
                probed: all_probed,
            })
        }
    };

    let train_text = fs::read_to_string(&train_path).map_err(|source| Error::Io {
        path: train_path.clone(),
        source,
    })?;
    let test_text = fs::read_to_string(&test_path).map_err(|source| Error::Io {
        path: test_path.clone(),
        source,
    })?;
    let train = parse_ucr_str(&train_text, &train_path, name)?;
    let test = parse_ucr_str(&test_text, &test_path, name)?;

    let mut warnings = Vec::new();
    if let Some(meta) = registry::find(name) {
        if train.len() != meta.train_size {
            warnings.push(format!(
                "{name}: train has {} instances, registry says {}",
                train.len(),
                meta.train_size
            ));
        }
        if test.len() != meta.test_size {
            warnings.push(format!(
                "{name}: test has {} instances, registry says {}",
                test.len(),
                meta.test_size
            ));
        }
        if train.series_length() != meta.series_length {
            warnings.push(format!(
                "{name}: series length {}, registry says {}",
                train.series_length(),
                meta.series_length
            ));
        }
        let mut labels: Vec<&str> = train
            .instances()
            .iter()
            .chain(test.instances())
            .map(|i| i.label.as_str())
            .collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != meta.class_count {
            warnings.push(format!(
                "{name}: {} distinct labels, registry says {}",
                labels.len(),
                meta.class_count
            ));
        }
    }

    Ok(LoadedPair {
        train,
        test,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::fs;

    fn parse(text: &str) -> Result<LabeledDataset> {
        parse_ucr_str(text, Path::new("test.csv"), "test")
    }

    #[test]
    fn comma_line() {
        let ds = parse("1,0.5,0.7").unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds.instances()[0].label, "1");
        assert_eq!(ds.instances()[0].series.values(), &[0.5, 0.7]);
    }

    #[test]
    fn tab_line_gives_identical_result() {
        let comma = parse("1,0.5,0.7").unwrap();
        let tab = parse("1\t0.5\t0.7").unwrap();
        assert_eq!(comma, tab);
    }

    #[test]
    fn ragged_rows_name_the_line() {
        let err = parse("1,0.5,0.7\n2,0.1").unwrap_err();
        match err {
            Error::Format { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn non_numeric_names_line_and_column() {
        let err = parse("1,0.5,0.7\n2,0.1,oops").unwrap_err();
        match err {
            Error::Format { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, Some(3));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn nan_is_a_format_error() {
        let err = parse("1,0.5,NaN").unwrap_err();
        assert!(matches!(err, Error::Format { column: Some(3), .. }), "{err}");
    }

    #[test]
    fn empty_file_rejected() {
        assert!(matches!(parse(""), Err(Error::Format { .. })));
        assert!(matches!(parse("\n  \n"), Err(Error::Format { .. })));
    }

    #[test]
    fn label_only_row_rejected() {
        // the single field still contains a separator-free token
        let err = parse("1,0.5\n2").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }), "{err}");
    }

    #[test]
    fn blank_lines_are_skipped() {
        let ds = parse("1,0.5,0.7\n\n2,0.1,0.2\n").unwrap();
        assert_eq!(ds.len(), 2);
    }

    #[test]
    fn labels_are_opaque_tokens() {
        let ds = parse("classA,0.5,0.7\n-1,0.1,0.2").unwrap();
        assert_eq!(ds.instances()[0].label, "classA");
        assert_eq!(ds.instances()[1].label, "-1");
    }

    #[test]
    fn serialize_round_trips_to_full_precision() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let text: String = (0..20)
            .map(|i| {
                let values: Vec<String> = (0..16)
                    .map(|_| format!("{}", rng.gen_range(-1000.0..1000.0) as f64))
                    .collect();
                format!("{},{}\n", i % 3, values.join(","))
            })
            .collect();
        let parsed = parse(&text).unwrap();
        let emitted = serialize_ucr(&parsed, Separator::Comma);
        let reparsed = parse(&emitted).unwrap();
        assert_eq!(parsed, reparsed);
        assert_eq!(emitted, serialize_ucr(&reparsed, Separator::Comma));
    }

    fn write_pair(root: &Path, name: &str, ext: &str, train: &str, test: &str) {
        let dir = root.join(name);
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join(format!("{name}_TRAIN{ext}")), train).unwrap();
        fs::write(dir.join(format!("{name}_TEST{ext}")), test).unwrap();
    }

    #[test]
    fn load_pair_probes_extensions() {
        let tmp = tempfile::tempdir().unwrap();
        write_pair(tmp.path(), "Tiny", ".tsv", "1\t0.5\t0.7\n2\t0.2\t0.1\n", "1\t0.4\t0.6\n");
        let pair = load_pair("Tiny", tmp.path()).unwrap();
        assert_eq!(pair.train.len(), 2);
        assert_eq!(pair.test.len(), 1);
        assert!(pair.warnings.is_empty(), "{:?}", pair.warnings);
    }

    #[test]
    fn load_pair_missing_lists_probed_paths() {
        let tmp = tempfile::tempdir().unwrap();
        let err = load_pair("Absent", tmp.path()).unwrap_err();
        match err {
            Error::NotFound { name, probed } => {
                assert_eq!(name, "Absent");
                assert_eq!(probed.len(), 8);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn load_pair_warns_on_registry_mismatch() {
        let tmp = tempfile::tempdir().unwrap();
        // Coffee is a registry name; two instances is far from its shape
        write_pair(tmp.path(), "Coffee", "", "1,0.5,0.7\n2,0.2,0.1\n", "1,0.4,0.6\n");
        let pair = load_pair("Coffee", tmp.path()).unwrap();
        assert!(
            pair.warnings.iter().any(|w| w.contains("train has 2")),
            "{:?}",
            pair.warnings
        );
        assert!(
            pair.warnings.iter().any(|w| w.contains("series length 2")),
            "{:?}",
            pair.warnings
        );
    }

    #[test]
    fn resolve_root_prefers_explicit_path() {
        let got = resolve_data_root(Some(Path::new("/somewhere/archive")));
        assert_eq!(got, PathBuf::from("/somewhere/archive"));
    }
}
