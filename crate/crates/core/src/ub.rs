//! Unbalanced bipartization: find an odd cycle transversal `X` with
//! `|X| <= k` whose complement has colour classes `(A, B)` with
//! `|A| >= n/2 - l`.
//!
//! Solved by sweeping `F ⊆ M` for a perfect matching `M` and asking whether the
//! layered graph `G^F` has a vertex cover of weight at most `k_F`.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::alternating::Matching;
use crate::error::{usage, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matching::maximum_matching;
use crate::oct::{next_combination, OctDecomposition};
use crate::oracle;
use crate::vertex_cover::{is_vertex_cover, solve_wvc, WvcInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    One,
    Two,
}

/// The weighted instance `(G^F, w_F, k_F)`. Layer-1 vertices come first, in
/// increasing order of their original vertex, then all layer-2 vertices.
#[derive(Clone, Debug)]
pub struct GFConstruction {
    pub f: Vec<usize>,
    pub k: usize,
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    pub instance: WvcInstance,
    pub vertex_map: Vec<(Vertex, Layer)>,
}

impl GFConstruction {
    /// `|M̃^F|`: size of the perfect matching of the copy-expanded graph.
    pub fn expanded_matching_size(&self) -> u64 {
        let half = (self.v2.len() / 2) as u64;
        let rest = half - self.f.len() as u64;
        rest * (self.k as u64 + 1) + half
    }

    /// `(|X ∩ V1|, |X ∩ V2|)` for a cover `X` of `G^F`.
    pub fn layer_counts(&self, cover: &[Vertex]) -> (usize, usize) {
        let one = cover
            .iter()
            .filter(|&&c| self.vertex_map[c].1 == Layer::One)
            .count();
        (one, cover.len() - one)
    }

    /// The decomposition read off the complement of a cover: `A` from uncovered
    /// layer-1 vertices, `B` from uncovered layer-2 vertices, `X` the rest.
    pub fn pull_back(&self, cover: &[Vertex]) -> OctDecomposition {
        let n = self.v2.len();
        let mut covered = vec![false; self.vertex_map.len()];
        for &c in cover {
            covered[c] = true;
        }
        let mut in_a = vec![false; n];
        let mut in_b = vec![false; n];
        for (c, &(v, layer)) in self.vertex_map.iter().enumerate() {
            if !covered[c] {
                match layer {
                    Layer::One => in_a[v] = true,
                    Layer::Two => in_b[v] = true,
                }
            }
        }
        let color_a: Vec<Vertex> = (0..n).filter(|&v| in_a[v]).collect();
        let color_b: Vec<Vertex> = (0..n).filter(|&v| in_b[v] && !in_a[v]).collect();
        let transversal = (0..n).filter(|&v| !in_a[v] && !in_b[v]).collect();
        OctDecomposition {
            transversal,
            color_a,
            color_b,
        }
    }
}

/// Builds `(G^F, w_F, k_F)` for perfect matching `m`, `f ⊆ m` and budget `k`.
pub fn build_gf(g: &Graph, m: &Matching, f: &[usize], k: usize) -> Result<GFConstruction> {
    if g.is_directed() {
        return usage("unbalanced bipartization needs an undirected graph");
    }
    m.check(g)?;
    if !m.is_perfect(g) {
        return usage("the matching is not perfect");
    }
    let mut f = f.to_vec();
    f.sort_unstable();
    f.dedup();
    if let Some(&bad) = f.iter().find(|&&e| !m.contains(e)) {
        return usage(format!("edge {bad} of F is not in the matching"));
    }
    let n = g.n();
    let mut in_vf = vec![false; n];
    for &id in &f {
        let e = g.edge(id);
        in_vf[e.u] = true;
        in_vf[e.v] = true;
    }
    let mut vertex_map = Vec::with_capacity(2 * n);
    let mut copy1 = vec![None; n];
    for v in (0..n).filter(|&v| !in_vf[v]) {
        copy1[v] = Some(vertex_map.len());
        vertex_map.push((v, Layer::One));
    }
    let v1: Vec<Vertex> = (0..vertex_map.len()).collect();
    let base2 = vertex_map.len();
    vertex_map.extend((0..n).map(|v| (v, Layer::Two)));
    let v2: Vec<Vertex> = (base2..base2 + n).collect();

    let mut gf = Graph::new(vertex_map.len());
    for v in 0..n {
        if let Some(c) = copy1[v] {
            gf.add_edge(c, base2 + v, 0)?;
        }
    }
    for e in g.edges() {
        if let (Some(a), Some(b)) = (copy1[e.u], copy1[e.v]) {
            gf.add_edge(a, b, 0)?;
        }
        gf.add_edge(base2 + e.u, base2 + e.v, 0)?;
    }
    let weights = vertex_map
        .iter()
        .map(|&(_, layer)| match layer {
            Layer::One => k as u64 + 1,
            Layer::Two => 1,
        })
        .collect();
    let budget = ((n / 2 - f.len()) * (k + 2) + k) as u64;
    let instance = WvcInstance::new(gf, weights, budget)?;
    let c = GFConstruction {
        f,
        k,
        v1,
        v2,
        instance,
        vertex_map,
    };
    assert_eq!(
        c.instance.budget as i64 - c.expanded_matching_size() as i64,
        k as i64 - c.f.len() as i64
    );
    Ok(c)
}

/// A YES answer: the decomposition, the subset `F` it came from and the
/// weighted cover of `G^F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UbSolution {
    pub decomposition: OctDecomposition,
    pub f: Vec<usize>,
    pub cover: Vec<Vertex>,
}

/// Checks the UB post-conditions for a decomposition.
pub fn ub_holds(g: &Graph, d: &OctDecomposition, k: usize, l: usize) -> bool {
    d.check(g).is_ok()
        && d.transversal.len() <= k
        && d.color_a.len() as i64 >= g.n() as i64 / 2 - l as i64
}

pub fn solve_ub(g: &Graph, k: usize, l: usize) -> Result<Option<UbSolution>> {
    solve_ub_with(g, k, l, 1)
}

/// As [`solve_ub`]; `jobs > 1` solves the `F` subproblems in parallel and still
/// reports the first YES in sweep order.
pub fn solve_ub_with(g: &Graph, k: usize, l: usize, jobs: usize) -> Result<Option<UbSolution>> {
    if g.is_directed() {
        return usage("unbalanced bipartization needs an undirected graph");
    }
    let m = maximum_matching(g);
    if !m.is_perfect(g) {
        return usage("unbalanced bipartization needs a graph with a perfect matching");
    }
    let subsets = f_subsets(m.edges(), l);
    let attempt = |f: &Vec<usize>| -> Result<Option<UbSolution>> {
        let gf = build_gf(g, &m, f, k)?;
        let Some(cover) = solve_wvc(&gf.instance)? else {
            return Ok(None);
        };
        let half = g.n() / 2;
        let (one, two) = gf.layer_counts(&cover);
        assert_eq!(one, half - f.len());
        assert!(two <= half - f.len() + k);
        let d = gf.pull_back(&cover);
        assert!(ub_holds(g, &d, k, l), "pulled-back decomposition violates UB");
        Ok(Some(UbSolution {
            decomposition: d,
            f: f.clone(),
            cover,
        }))
    };
    if jobs <= 1 {
        for f in &subsets {
            if let Some(s) = attempt(f)? {
                return Ok(Some(s));
            }
        }
        return Ok(None);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let failure = Mutex::new(None);
    let found = pool.install(|| {
        subsets.par_iter().find_map_first(|f| match attempt(f) {
            Ok(s) => s,
            Err(e) => {
                failure.lock().unwrap().get_or_insert(e);
                None
            }
        })
    });
    match failure.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Subsets of `edges` of size at most `l`, by size then lexicographically.
fn f_subsets(edges: &[usize], l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=l.min(edges.len()) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            out.push(combo.iter().map(|&i| edges[i]).collect());
            if !next_combination(&mut combo, edges.len()) {
                break;
            }
        }
    }
    out
}

/// Memoises WVC answers per `(k, F)` so schedules that revisit a subproblem
/// pay for it once.
#[derive(Default)]
pub struct GfCache {
    answers: HashMap<(usize, Vec<usize>), Option<Vec<Vertex>>>,
}

impl GfCache {
    pub fn solve(&mut self, g: &Graph, m: &Matching, f: &[usize], k: usize) -> Result<Option<Vec<Vertex>>> {
        let mut key_f = f.to_vec();
        key_f.sort_unstable();
        if let Some(hit) = self.answers.get(&(k, key_f.clone())) {
            return Ok(hit.clone());
        }
        let gf = build_gf(g, m, &key_f, k)?;
        let ans = solve_wvc(&gf.instance)?;
        if let Some(c) = &ans {
            debug_assert!(is_vertex_cover(&gf.instance.graph, c));
        }
        self.answers.insert((k, key_f), ans.clone());
        Ok(ans)
    }

    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }
}

/// Exhaustive UB: every `X` with `|X| <= k` by size then lexicographically,
/// each component of `G - X` contributing its larger colour class to `A`.
pub fn solve_ub_bruteforce(g: &Graph, k: usize, l: usize) -> Result<Option<OctDecomposition>> {
    let n = g.n();
    oracle::ensure_default("brute-force unbalanced bipartization", n)?;
    let need = n as i64 / 2 - l as i64;
    for size in 0..=k.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut removed = vec![false; n];
            for &v in &combo {
                removed[v] = true;
            }
            if let Some(d) = largest_a(g, &removed) {
                if d.color_a.len() as i64 >= need {
                    return Ok(Some(d));
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

fn largest_a(g: &Graph, removed: &[bool]) -> Option<OctDecomposition> {
    let colors = g.two_coloring_without(removed)?;
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut sizes: Vec<[usize; 2]> = Vec::new();
    for s in 0..n {
        if removed[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        sizes.push([0, 0]);
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            sizes[id][colors[u].unwrap() as usize] += 1;
            for &(v, _) in g.incident(u) {
                if !removed[v] && comp[v] == usize::MAX {
                    comp[v] = id;
                    stack.push(v);
                }
            }
        }
    }
    let mut d = OctDecomposition {
        transversal: Vec::new(),
        color_a: Vec::new(),
        color_b: Vec::new(),
    };
    for v in 0..n {
        if removed[v] {
            d.transversal.push(v);
            continue;
        }
        let [s0, s1] = sizes[comp[v]];
        let a_color = if s1 > s0 { 1 } else { 0 };
        if colors[v] == Some(a_color) {
            d.color_a.push(v);
        } else {
            d.color_b.push(v);
        }
    }
    Some(d)
}

/// `G'` with a pendant `v' = n + v` attached to every vertex `v`; edges of `G`
/// keep their indices and pendant `{v, v'}` gets index `m + v`.
pub fn attach_pendants(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(2 * n);
    for e in g.edges() {
        out.add_edge(e.u, e.v, e.w).unwrap();
    }
    for v in 0..n {
        out.add_edge(v, n + v, 0).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oct::min_oct;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v, 0)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn pm_of(g: &Graph) -> Matching {
        let m = maximum_matching(g);
        assert!(m.is_perfect(g));
        m
    }

    #[test]
    fn budget_formula() {
        let g = path(6);
        let m = pm_of(&g);
        let gf = build_gf(&g, &m, &m.edges()[..1], 2).unwrap();
        assert_eq!(gf.instance.budget, 10);
        assert_eq!(gf.v1.len(), 4);
        assert_eq!(gf.v2.len(), 6);
        assert_eq!(gf.instance.budget - gf.expanded_matching_size(), 1);
    }

    #[test]
    fn layer_weights() {
        let g = path(4);
        let m = pm_of(&g);
        let gf = build_gf(&g, &m, &[], 3).unwrap();
        for &v in &gf.v1 {
            assert_eq!(gf.instance.weights[v], 4);
        }
        for &v in &gf.v2 {
            assert_eq!(gf.instance.weights[v], 1);
        }
    }

    #[test]
    fn empty_f_on_four_vertices() {
        let g = path(4);
        let m = pm_of(&g);
        let gf = build_gf(&g, &m, &[], 1).unwrap();
        assert_eq!((gf.v1.len(), gf.v2.len()), (4, 4));
        let cross = gf
            .instance
            .graph
            .edges()
            .iter()
            .filter(|e| gf.vertex_map[e.u].1 != gf.vertex_map[e.v].1)
            .count();
        assert_eq!(cross, 4);
    }

    #[test]
    fn f_outside_matching_is_rejected() {
        let g = path(4);
        let m = pm_of(&g);
        let off = (0..g.m()).find(|&e| !m.contains(e)).unwrap();
        assert!(matches!(build_gf(&g, &m, &[off], 1), Err(Error::Usage(_))));
    }

    #[test]
    fn balanced_bipartite_needs_nothing() {
        let g = path(6);
        let s = solve_ub(&g, 0, 0).unwrap().unwrap();
        assert!(s.decomposition.transversal.is_empty());
        assert_eq!(s.decomposition.color_a.len(), 3);
    }

    #[test]
    fn no_perfect_matching_is_usage_error() {
        assert!(matches!(solve_ub(&path(3), 1, 1), Err(Error::Usage(_))));
    }

    #[test]
    fn pendants() {
        let g = attach_pendants(&Graph::new(2));
        assert_eq!((g.n(), g.m()), (4, 2));
        let tri = Graph::from_edges(3, &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        let gp = attach_pendants(&tri);
        assert_eq!(gp.n(), 6);
        assert_eq!(min_oct(&gp).size(), 1);
        assert!(pm_of(&gp).is_perfect(&gp));
    }

    #[test]
    fn triangle_with_pendants_needs_one_vertex() {
        let g = attach_pendants(&Graph::from_edges(3, &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap());
        assert!(solve_ub(&g, 0, 3).unwrap().is_none());
        let s = solve_ub(&g, 1, 3).unwrap().unwrap();
        assert!(ub_holds(&g, &s.decomposition, 1, 3));
    }
}
