//! Size bounds for the exhaustive oracles.
//!
//! Every brute-force routine refuses inputs above its bound instead of running
//! for an exponential amount of time. The defaults can be raised through the
//! `ODDMATCH_ORACLE_BOUND` and `ODDMATCH_DIGRAPH_ORACLE_BOUND` environment
//! variables, read once per process.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_BOUND: usize = 16;
pub const DEFAULT_DIGRAPH_ORACLE_BOUND: usize = 8;
pub const ORACLE_BOUND_ENV: &str = "ODDMATCH_ORACLE_BOUND";
pub const DIGRAPH_ORACLE_BOUND_ENV: &str = "ODDMATCH_DIGRAPH_ORACLE_BOUND";

fn from_env(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Vertex bound for exhaustive searches over undirected graphs.
pub fn bound() -> usize {
    static B: OnceLock<usize> = OnceLock::new();
    *B.get_or_init(|| from_env(ORACLE_BOUND_ENV, DEFAULT_ORACLE_BOUND))
}

/// Vertex bound for exhaustive searches over digraphs.
pub fn digraph_bound() -> usize {
    static B: OnceLock<usize> = OnceLock::new();
    *B.get_or_init(|| from_env(DIGRAPH_ORACLE_BOUND_ENV, DEFAULT_DIGRAPH_ORACLE_BOUND))
}

pub(crate) fn ensure(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::OracleRefusal { what, n, bound })
    } else {
        Ok(())
    }
}

pub(crate) fn ensure_default(what: &'static str, n: usize) -> Result<()> {
    ensure(what, n, bound())
}
