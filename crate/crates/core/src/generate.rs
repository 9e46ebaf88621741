//! Seeded random instance generators. Output depends only on the arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alternating::Matching;
use crate::graph::{Bipartition, Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn weight(rng: &mut ChaCha8Rng) -> u8 {
    rng.gen_range(0..=1)
}

/// `G(n, p)` with independent uniform 0/1 weights.
pub fn random_graph_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w = weight(rng);
                g.add_edge(u, v, w).unwrap();
            }
        }
    }
    g
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    random_graph_with(&mut rng(seed), n, p)
}

/// Random bipartite graph with sides `0..n_a` and `n_a..n_a + n_b`.
pub fn random_bipartite_with(
    rng: &mut ChaCha8Rng,
    n_a: usize,
    n_b: usize,
    p: f64,
) -> (Graph, Bipartition) {
    let n = n_a + n_b;
    let mut g = Graph::new(n);
    for a in 0..n_a {
        for b in n_a..n {
            if rng.gen_bool(p) {
                let w = weight(rng);
                g.add_edge(a, b, w).unwrap();
            }
        }
    }
    let bip = Bipartition::with_side_a(n, 0..n_a).unwrap();
    (g, bip)
}

pub fn random_bipartite(n_a: usize, n_b: usize, p: f64, seed: u64) -> (Graph, Bipartition) {
    random_bipartite_with(&mut rng(seed), n_a, n_b, p)
}

/// Random graph on `n` (even) vertices with a planted perfect matching; the
/// remaining pairs are joined with probability `p`.
pub fn random_with_pm_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> (Graph, Matching) {
    assert!(n % 2 == 0, "a planted perfect matching needs an even vertex count");
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut partner = vec![usize::MAX; n];
    for pair in perm.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    let mut g = Graph::new(n);
    let mut ids = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if partner[u] == v {
                let w = weight(rng);
                ids.push(g.add_edge(u, v, w).unwrap());
            } else if rng.gen_bool(p) {
                let w = weight(rng);
                g.add_edge(u, v, w).unwrap();
            }
        }
    }
    let m = Matching::new(&g, ids).unwrap();
    (g, m)
}

pub fn random_with_pm(n: usize, p: f64, seed: u64) -> (Graph, Matching) {
    random_with_pm_with(&mut rng(seed), n, p)
}

/// Random digraph: each ordered pair becomes an arc with probability `p`.
pub fn random_digraph_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new_directed(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                g.add_arc(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_digraph(n: usize, p: f64, seed: u64) -> Graph {
    random_digraph_with(&mut rng(seed), n, p)
}

/// A graph with a small odd cycle transversal and a small bipartite
/// independence number after removing it.
///
/// The `n - x` base vertices form a dense balanced bipartite graph (each cross
/// pair present with probability 0.85, which keeps balanced independent sets
/// small). The last `x` vertices are then joined to every other vertex with
/// probability 0.6, closing many odd cycles; they form an odd cycle transversal
/// of size `x` by construction. Returns the graph and those `x` vertices.
pub fn low_parameter(n: usize, x: usize, seed: u64) -> (Graph, Vec<Vertex>) {
    assert!(x <= n, "cannot choose more vertices than exist");
    let mut rng = rng(seed);
    let base = n - x;
    let n_a = base.div_ceil(2);
    let mut g = Graph::new(n);
    for a in 0..n_a {
        for b in n_a..base {
            if rng.gen_bool(0.85) {
                let w = weight(&mut rng);
                g.add_edge(a, b, w).unwrap();
            }
        }
    }
    for c in base..n {
        for v in 0..c {
            if rng.gen_bool(0.6) {
                let w = weight(&mut rng);
                g.add_edge(v, c, w).unwrap();
            }
        }
    }
    (g, (base..n).collect())
}
