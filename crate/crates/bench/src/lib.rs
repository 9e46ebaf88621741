//! Fixed benchmark inputs, so that every run measures the same instances.

use oddmatch_core::generate::{low_parameter, random_bipartite, random_with_pm};
use oddmatch_core::{Bipartition, Graph, Matching};

/// Graph with a planted odd cycle transversal of `x` vertices.
pub fn low_oct(n: usize, x: usize) -> Graph {
    low_parameter(n, x, 7).0
}

pub fn bipartite(half: usize) -> (Graph, Bipartition) {
    random_bipartite(half, half, 0.3, 11)
}

pub fn with_pm(n: usize) -> (Graph, Matching) {
    random_with_pm(n, 0.4, 13)
}
