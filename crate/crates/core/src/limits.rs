//! Size guards for the exhaustive computations.
//!
//! Each guard has a default ceiling. The `PAREC_MAX_N` environment variable
//! raises every ceiling to its value (never lowers one); work above the
//! defaults is slow and memory hungry.

use crate::error::{Error, Result};

pub const ENV_MAX_N: &str = "PAREC_MAX_N";

/// Diagram enumeration: Bell(2n) diagrams.
pub const ENUMERATE_MAX_N: usize = 6;
/// Regular representation traces, character tables and recombinants.
pub const TABLE_MAX_N: usize = 4;
/// Brute-force immanants over S_n.
pub const IMMANANT_MAX_N: usize = 8;

fn env_override() -> Option<usize> {
    std::env::var(ENV_MAX_N).ok()?.trim().parse().ok()
}

/// Effective ceiling for a guard with the given default.
pub fn effective_max(default: usize) -> usize {
    match env_override() {
        Some(m) if m > default => m,
        _ => default,
    }
}

pub(crate) fn check(what: &'static str, n: usize, default: usize) -> Result<()> {
    let max = effective_max(default);
    if n > max {
        return Err(Error::ResourceLimit { what, n, max });
    }
    Ok(())
}
