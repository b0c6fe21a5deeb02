//! Shared argument parsing helpers: series files, grids, output sinks.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use symsax::TimeSeries;

/// Reads a plain series file: one series per nonempty line, values
/// separated by commas or tabs (detected per file), no label field.
pub fn read_series_file(path: &Path) -> Result<Vec<TimeSeries>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut series = Vec::new();
    let mut separator: Option<char> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let sep = *separator.get_or_insert_with(|| if line.contains('\t') { '\t' } else { ',' });
        let values = line
            .split(sep)
            .map(|field| {
                field
                    .trim()
                    .parse::<f64>()
                    .with_context(|| format!("{}:{}: not a number: {field:?}", path.display(), idx + 1))
            })
            .collect::<Result<Vec<f64>>>()?;
        series.push(
            TimeSeries::new(values)
                .with_context(|| format!("{}:{}: invalid series", path.display(), idx + 1))?,
        );
    }
    if series.is_empty() {
        bail!("{}: no series found", path.display());
    }
    Ok(series)
}

/// The first series of a file, for commands that take one series per file.
pub fn read_single_series(path: &Path) -> Result<TimeSeries> {
    Ok(read_series_file(path)?.remove(0))
}

/// Parses a size grid: either an inclusive range `lo..hi` or a comma list
/// `3,5,8`.
pub fn parse_grid(spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo.trim().parse().context("grid range start")?;
        let hi: usize = hi.trim().parse().context("grid range end")?;
        if lo > hi {
            bail!("grid range {lo}..{hi} is empty");
        }
        return Ok((lo..=hi).collect());
    }
    let mut grid = spec
        .split(',')
        .map(|tok| tok.trim().parse::<usize>().with_context(|| format!("grid value {tok:?}")))
        .collect::<Result<Vec<usize>>>()?;
    grid.sort_unstable();
    grid.dedup();
    Ok(grid)
}

/// Writes to the given path, or stdout when absent.
pub fn write_output(output: Option<&PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_range_and_list() {
        assert_eq!(parse_grid("3..6").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_grid("8,3,5").unwrap(), vec![3, 5, 8]);
        assert!(parse_grid("9..2").is_err());
        assert!(parse_grid("3,x").is_err());
    }
}
