use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::Args;
use symsax::{
    classic_sax_transform, esax_transform, euclidean, symbolic_dist, BreakpointTable, Method,
    SymbolicDistanceContext,
};

use crate::input::read_single_series;

#[derive(Args)]
pub struct DistArgs {
    /// First series file (first line is used)
    pub left: PathBuf,
    /// Second series file (first line is used)
    pub right: PathBuf,

    /// classic-sax, e-sax, or raw-euclidean
    #[arg(long, default_value = "classic-sax", value_parser = super::parse_method)]
    pub method: Method,

    /// Number of segments (defaults to max(1, length/8)); symbolic methods only
    #[arg(long)]
    pub word_length: Option<usize>,

    /// Alphabet size, 2..=26; symbolic methods only
    #[arg(long, default_value_t = 4)]
    pub alphabet_size: usize,

    /// Skip z-normalization (for pre-normalized data)
    #[arg(long)]
    pub no_normalize: bool,
}

pub fn run(args: DistArgs) -> Result<ExitCode> {
    let left = read_single_series(&args.left)?;
    let right = read_single_series(&args.right)?;
    let normalize = !args.no_normalize;

    let distance = match args.method {
        Method::RawEuclidean => {
            let (l, r) = if normalize {
                (symsax::z_normalize(&left).series, symsax::z_normalize(&right).series)
            } else {
                (left, right)
            };
            euclidean(&l, &r)?
        }
        method => {
            let m = args
                .word_length
                .unwrap_or_else(|| symsax::default_word_length(left.len()));
            let table = BreakpointTable::new(args.alphabet_size)?;
            let (wl, wr) = match method {
                Method::ClassicSax => (
                    classic_sax_transform(&left, m, &table, normalize)?,
                    classic_sax_transform(&right, m, &table, normalize)?,
                ),
                Method::ESax => (
                    esax_transform(&left, m, &table, normalize)?,
                    esax_transform(&right, m, &table, normalize)?,
                ),
                Method::RawEuclidean => unreachable!(),
            };
            let ctx = SymbolicDistanceContext::for_word(&table, &wl)?;
            symbolic_dist(&wl, &wr, &ctx)?
        }
    };

    println!("{distance:.6}");
    Ok(super::SUCCESS)
}
