use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Args;
use symsax::{classic_sax_transform, esax_transform, BreakpointTable, Method, SymbolicWord};

use crate::input::{read_series_file, write_output};

#[derive(Args)]
pub struct TransformArgs {
    /// Series file: one series per line, comma- or tab-separated values
    pub input: PathBuf,

    /// classic-sax or e-sax
    #[arg(long, default_value = "classic-sax", value_parser = super::parse_method)]
    pub method: Method,

    /// Number of segments (defaults to max(1, length/8))
    #[arg(long)]
    pub word_length: Option<usize>,

    /// Alphabet size, 2..=26
    #[arg(long, default_value_t = 4)]
    pub alphabet_size: usize,

    /// Skip z-normalization (for pre-normalized data)
    #[arg(long)]
    pub no_normalize: bool,

    /// text (letter words) or json (integer symbol indices)
    #[arg(long, default_value = "text")]
    pub format: String,

    /// Write here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn run(args: TransformArgs) -> Result<ExitCode> {
    if args.method == Method::RawEuclidean {
        bail!("raw-euclidean has no symbolic transform; use classic-sax or e-sax");
    }
    let series = read_series_file(&args.input)?;
    let table = BreakpointTable::new(args.alphabet_size)?;

    let words = series
        .iter()
        .map(|s| {
            let m = args
                .word_length
                .unwrap_or_else(|| symsax::default_word_length(s.len()));
            let word = match args.method {
                Method::ClassicSax => classic_sax_transform(s, m, &table, !args.no_normalize)?,
                Method::ESax => esax_transform(s, m, &table, !args.no_normalize)?,
                Method::RawEuclidean => unreachable!(),
            };
            Ok(word)
        })
        .collect::<Result<Vec<SymbolicWord>>>()?;

    let rendered = match args.format.as_str() {
        "text" => {
            let mut out = String::new();
            for word in &words {
                out.push_str(&word.to_letters());
                out.push('\n');
            }
            out
        }
        "json" => {
            let value = serde_json::json!({
                "method": args.method.token(),
                "alphabet_size": args.alphabet_size,
                "words": words.iter().map(|w| w.symbols().to_vec()).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        other => bail!("unknown format `{other}` (expected text or json)"),
    };

    write_output(args.output.as_ref(), &rendered)?;
    Ok(super::SUCCESS)
}
