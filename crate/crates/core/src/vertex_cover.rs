//! Weighted and unweighted vertex cover.
//!
//! Weighted instances are solved by copy expansion (each vertex `v` becomes
//! `w(v)` pairwise non-adjacent copies, every copy of `u` joined to every copy
//! of `v` for each edge `uv`) followed by an exact branch-and-bound for the
//! unweighted problem.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::maximum_matching;
use crate::oracle;

pub const DEFAULT_EXPANSION_CAP: usize = 5000;

/// Vertex-weighted cover instance; edge weights of `graph` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WvcInstance {
    pub graph: Graph,
    pub weights: Vec<u64>,
    pub budget: u64,
}

impl WvcInstance {
    pub fn new(graph: Graph, weights: Vec<u64>, budget: u64) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::Usage(format!(
                "{} vertex weights for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        if graph.is_directed() {
            return Err(Error::Usage("vertex cover needs an undirected graph".into()));
        }
        Ok(WvcInstance { graph, weights, budget })
    }

    pub fn cover_weight(&self, cover: &[Vertex]) -> u64 {
        cover.iter().map(|&v| self.weights[v]).sum()
    }
}

pub fn is_vertex_cover(g: &Graph, cover: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        if v >= g.n() {
            return false;
        }
        inside[v] = true;
    }
    g.edges().iter().all(|e| inside[e.u] || inside[e.v])
}

/// The unweighted instance produced by copy expansion.
#[derive(Clone, Debug)]
pub struct UvcExpansion {
    pub graph: Graph,
    pub budget: u64,
    /// `copies[v]`: the expanded vertices standing for original `v`.
    pub copies: Vec<Vec<Vertex>>,
    /// `origin[c]`: the original vertex of copy `c`.
    pub origin: Vec<Vertex>,
}

impl UvcExpansion {
    /// Original vertices all of whose copies are in `cover`. Weight-0 vertices
    /// have no copies and are always included. The result is a cover of the
    /// weighted instance whose weight is at most `|cover|`.
    pub fn pull_back(&self, cover: &[Vertex]) -> Vec<Vertex> {
        let mut inside = vec![false; self.origin.len()];
        for &c in cover {
            inside[c] = true;
        }
        (0..self.copies.len())
            .filter(|&v| self.copies[v].iter().all(|&c| inside[c]))
            .collect()
    }
}

pub fn expand_wvc_to_uvc(w: &WvcInstance) -> Result<UvcExpansion> {
    expand_wvc_to_uvc_capped(w, DEFAULT_EXPANSION_CAP)
}

pub fn expand_wvc_to_uvc_capped(w: &WvcInstance, cap: usize) -> Result<UvcExpansion> {
    let total: u64 = w.weights.iter().sum();
    if total > cap as u64 {
        return Err(Error::Config(format!(
            "copy expansion needs {total} vertices, above the cap of {cap}"
        )));
    }
    let mut copies = Vec::with_capacity(w.graph.n());
    let mut origin = Vec::with_capacity(total as usize);
    for (v, &wt) in w.weights.iter().enumerate() {
        let start = origin.len();
        origin.extend(std::iter::repeat_n(v, wt as usize));
        copies.push((start..origin.len()).collect::<Vec<_>>());
    }
    let mut g = Graph::new(origin.len());
    for (u, nbrs) in w.graph.simple_adjacency().iter().enumerate() {
        for &v in nbrs.iter().filter(|&&v| v > u) {
            for &cu in &copies[u] {
                for &cv in &copies[v] {
                    g.add_edge(cu, cv, 0).unwrap();
                }
            }
        }
    }
    Ok(UvcExpansion {
        graph: g,
        budget: w.budget,
        copies,
        origin,
    })
}

/// A vertex cover of size at most `k`, or `None` if there is none. Exact.
///
/// Branch and bound: isolated vertices are dropped, a vertex whose closed
/// neighbourhood is contained in a neighbour's forces that neighbour into the
/// cover (this includes degree 1), a maximum matching bounds the remaining cost
/// from below, and branching is on a maximum-degree vertex `v`: either `v` and
/// all its non-adjacent twins go into the cover, or all of `N(v)` does.
pub fn solve_uvc(g: &Graph, k: u64) -> Option<Vec<Vertex>> {
    let adj = g.simple_adjacency();
    let mut state = VcState {
        alive: vec![true; g.n()],
        cover: Vec::new(),
    };
    let k = k.min(g.n() as u64) as usize;
    if search(&adj, &mut state, k) {
        let mut cover = state.cover;
        cover.sort_unstable();
        Some(cover)
    } else {
        None
    }
}

/// A minimum vertex cover.
pub fn min_vertex_cover(g: &Graph) -> Vec<Vertex> {
    let lower = maximum_matching(g).len() as u64;
    (lower..=g.n() as u64)
        .find_map(|k| solve_uvc(g, k))
        .expect("all vertices form a cover")
}

/// Weighted vertex cover of weight at most the instance budget, through copy
/// expansion and [`solve_uvc`].
pub fn solve_wvc(w: &WvcInstance) -> Result<Option<Vec<Vertex>>> {
    let exp = expand_wvc_to_uvc(w)?;
    Ok(solve_uvc(&exp.graph, exp.budget).map(|c| {
        let cover = exp.pull_back(&c);
        debug_assert!(is_vertex_cover(&w.graph, &cover));
        debug_assert!(w.cover_weight(&cover) <= w.budget);
        cover
    }))
}

/// Exhaustive: the lightest vertex cover within budget, ties broken by the
/// smallest subset bitmask.
pub fn solve_wvc_bruteforce(w: &WvcInstance) -> Result<Option<Vec<Vertex>>> {
    let n = w.graph.n();
    oracle::ensure_default("brute-force vertex cover", n)?;
    let best = (0u64..1 << n)
        .filter(|mask| w.graph.edges().iter().all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1))
        .map(|mask| {
            let cover: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            (w.cover_weight(&cover), cover)
        })
        .min_by_key(|(weight, _)| *weight);
    Ok(best.filter(|(weight, _)| *weight <= w.budget).map(|(_, c)| c))
}

#[derive(Clone)]
struct VcState {
    alive: Vec<bool>,
    cover: Vec<Vertex>,
}

fn live_neighbours<'a>(adj: &'a [Vec<Vertex>], alive: &'a [bool], v: Vertex) -> impl Iterator<Item = Vertex> + 'a {
    adj[v].iter().copied().filter(move |&u| alive[u])
}

fn take(state: &mut VcState, v: Vertex) {
    state.alive[v] = false;
    state.cover.push(v);
}

/// Applies reductions until none fires. Returns the budget left, or `None` if
/// the budget was overrun.
fn reduce(adj: &[Vec<Vertex>], state: &mut VcState, mut budget: usize) -> Option<usize> {
    let n = adj.len();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !state.alive[v] {
                continue;
            }
            let nv: Vec<Vertex> = live_neighbours(adj, &state.alive, v).collect();
            if nv.is_empty() {
                state.alive[v] = false;
                changed = true;
                continue;
            }
            // N[v] ⊆ N[u] for a neighbour u: some optimal cover contains u
            let dominator = nv.iter().copied().find(|&u| {
                nv.iter()
                    .all(|&x| x == u || adj[u].binary_search(&x).is_ok())
            });
            if let Some(u) = dominator {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                take(state, u);
                changed = true;
            }
        }
    }
    Some(budget)
}

fn search(adj: &[Vec<Vertex>], state: &mut VcState, budget: usize) -> bool {
    let Some(budget) = reduce(adj, state, budget) else {
        return false;
    };
    let n = adj.len();
    let mut best: Option<(usize, Vertex)> = None;
    for v in (0..n).filter(|&v| state.alive[v]) {
        let d = live_neighbours(adj, &state.alive, v).count();
        if d > 0 && best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, v));
        }
    }
    let Some((_, v)) = best else {
        return true;
    };
    if lower_bound(adj, &state.alive) > budget {
        return false;
    }
    let nv: Vec<Vertex> = live_neighbours(adj, &state.alive, v).collect();
    let twins: Vec<Vertex> = (0..n)
        .filter(|&u| {
            state.alive[u]
                && (u == v || (adj[v].binary_search(&u).is_err()
                    && live_neighbours(adj, &state.alive, u).eq(nv.iter().copied())))
        })
        .collect();

    if twins.len() <= budget {
        let mut next = state.clone();
        for &t in &twins {
            take(&mut next, t);
        }
        if search(adj, &mut next, budget - twins.len()) {
            *state = next;
            return true;
        }
    }
    if nv.len() <= budget {
        let mut next = state.clone();
        for &u in &nv {
            take(&mut next, u);
        }
        next.alive[v] = false;
        if search(adj, &mut next, budget - nv.len()) {
            *state = next;
            return true;
        }
    }
    false
}

/// Size of a maximum matching among live vertices.
fn lower_bound(adj: &[Vec<Vertex>], alive: &[bool]) -> usize {
    let idx: Vec<Vertex> = (0..adj.len()).filter(|&v| alive[v]).collect();
    let mut pos = vec![usize::MAX; adj.len()];
    for (i, &v) in idx.iter().enumerate() {
        pos[v] = i;
    }
    let mut g = Graph::new(idx.len());
    for (i, &v) in idx.iter().enumerate() {
        for &u in &adj[v] {
            if alive[u] && pos[u] > i {
                g.add_edge(i, pos[u], 0).unwrap();
            }
        }
    }
    maximum_matching(&g).len()
}
