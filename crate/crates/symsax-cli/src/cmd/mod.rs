pub mod benchmark;
pub mod classify;
pub mod dist;
pub mod report;
pub mod transform;

use std::process::ExitCode;

use anyhow::Result;
use symsax::Method;

/// Runs `f` on a rayon pool of `jobs` threads when given, else the default
/// global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(n) if n > 0 => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

pub fn parse_method(s: &str) -> Result<Method> {
    Ok(s.parse::<Method>()?)
}

pub const SUCCESS: ExitCode = ExitCode::SUCCESS;
