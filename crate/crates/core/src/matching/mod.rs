//! Matching engines: maximum matching (general and bipartite), minimum-weight
//! bipartite perfect matching, and the exhaustive perfect-matching enumerator
//! that serves as the reference oracle throughout the crate.

mod bipartite;
mod blossom;
mod enumerate;

pub use bipartite::{maximum_matching_bipartite, min_weight_perfect_matching_bipartite, MinWeightPm};
pub use enumerate::{enumerate_perfect_matchings, visit_perfect_matchings};

use crate::alternating::Matching;
use crate::graph::Graph;

/// Maximum-cardinality matching of a general graph by blossom shrinking. Each
/// matched pair uses its lowest-indexed edge.
pub fn maximum_matching_blossom(g: &Graph) -> Matching {
    let adj = g.simple_adjacency();
    let mates = blossom::max_matching_mates(&adj, vec![None; g.n()]);
    let mut ids = Vec::new();
    for (u, m) in mates.iter().enumerate() {
        if let Some(v) = *m {
            if u < v {
                let id = g
                    .incident(u)
                    .iter()
                    .find(|&&(x, _)| x == v)
                    .map(|&(_, id)| id)
                    .unwrap();
                ids.push(id);
            }
        }
    }
    Matching::from_ids_unchecked(ids)
}

/// Maximum-cardinality matching. Bipartite inputs go through Hopcroft-Karp,
/// everything else through the blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Matching {
    match g.bipartition() {
        Some(bip) => maximum_matching_bipartite(g, &bip).expect("own bipartition is valid"),
        None => maximum_matching_blossom(g),
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && maximum_matching(g).is_perfect(g)
}
