//! Bounded correct parity matching.
//!
//! On bipartite graphs the problem is solved exactly by [`min_parity_pm_bipartite`]:
//! take a minimum-weight perfect matching `M0` with optimal potentials; if its
//! parity is wrong, the cheapest perfect matching of the other parity is
//! `M0 △ C` for a cheapest odd-weight `M0`-alternating cycle `C`, where the cost
//! of a cycle is its reduced cost under the potentials (always non-negative).
//! Alternating cycles are exactly the directed cycles of the exchange digraph
//! (non-matching edges A→B, matching edges B→A), and the cheapest odd one is
//! found by Dijkstra over `(vertex, parity)` states.
//!
//! General graphs are reduced to the bipartite case through an odd cycle
//! transversal `X` with colour classes `(A, B)`: every perfect matching of `G`
//! survives in one of the subgraphs `G_Y` (edges between `A ∪ Y` and
//! `B ∪ (X \ Y)`), and only `|Y| = n/2 - |A|` can carry a perfect matching.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::alternating::{
    decompose_into_alternating_cycles, sorted_symmetric_difference, AlternatingCycle, Matching,
};
use crate::error::{usage, Error, Result};
use crate::graph::{Bipartition, EdgeId, Graph, Vertex};
use crate::matching::{
    has_perfect_matching, min_weight_perfect_matching_bipartite, visit_perfect_matchings, MinWeightPm,
};
use crate::oct::{min_oct, OctDecomposition};

/// Weight bound `k` of a query; the parity of admissible weights is `k mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityQuery {
    k: usize,
}

impl ParityQuery {
    pub fn new(k: i64) -> Result<Self> {
        if k < 0 {
            return usage(format!("weight bound k = {k} must be non-negative"));
        }
        Ok(ParityQuery { k: k as usize })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn parity(self) -> u8 {
        (self.k % 2) as u8
    }

    /// Whether a perfect matching of weight `w` answers the query.
    pub fn admits(self, w: usize) -> bool {
        w <= self.k && w % 2 == self.k % 2
    }
}

/// The bipartite subgraph `G_Y` for one `Y ⊆ X`. Vertex ids are those of the
/// parent graph; `edge_map[i]` is the parent index of edge `i`.
#[derive(Clone, Debug)]
pub struct GySubgraph {
    pub y: Vec<Vertex>,
    pub graph: Graph,
    pub bipartition: Bipartition,
    pub edge_map: Vec<EdgeId>,
}

impl GySubgraph {
    /// Maps a matching of `G_Y` back to the parent graph.
    pub fn lift(&self, m: &Matching) -> Matching {
        Matching::from_ids_unchecked(m.edges().iter().map(|&e| self.edge_map[e]).collect())
    }
}

pub fn build_g_y(g: &Graph, oct: &OctDecomposition, y: &[Vertex]) -> Result<GySubgraph> {
    let n = g.n();
    let mut in_x = vec![false; n];
    for &x in &oct.transversal {
        in_x[x] = true;
    }
    let mut left = vec![false; n];
    for &a in &oct.color_a {
        left[a] = true;
    }
    let mut ys: Vec<Vertex> = y.to_vec();
    ys.sort_unstable();
    ys.dedup();
    for &v in &ys {
        if v >= n || !in_x[v] {
            return usage(format!("vertex {v} of Y is not in the transversal"));
        }
        left[v] = true;
    }
    let (graph, edge_map) = g.edge_subgraph(|_, e| left[e.u] != left[e.v]);
    Ok(GySubgraph {
        y: ys,
        graph,
        bipartition: Bipartition::from_mask(left),
        edge_map,
    })
}

/// Minimum-weight perfect matching whose weight has the given parity.
pub fn min_parity_pm_bipartite(
    g: &Graph,
    bip: &Bipartition,
    parity: u8,
) -> Result<Option<(Matching, usize)>> {
    if parity > 1 {
        return usage(format!("parity must be 0 or 1, got {parity}"));
    }
    let Some(base) = min_weight_perfect_matching_bipartite(g, bip)? else {
        return Ok(None);
    };
    if base.weight % 2 == parity as usize {
        return Ok(Some((base.matching, base.weight)));
    }
    let Some((cycle, cost)) = cheapest_odd_alternating_cycle(g, bip, &base) else {
        return Ok(None);
    };
    let mut ids = cycle.edges().to_vec();
    ids.sort_unstable();
    let m = Matching::from_ids_unchecked(sorted_symmetric_difference(base.matching.edges(), &ids));
    let w = m.weight(g);
    debug_assert_eq!(w as i64, base.weight as i64 + cost);
    Ok(Some((m, w)))
}

/// Cheapest odd-weight alternating cycle with respect to `base.matching`, with
/// its reduced cost (which equals the weight change of swapping along it).
pub fn cheapest_odd_alternating_cycle(
    g: &Graph,
    bip: &Bipartition,
    base: &MinWeightPm,
) -> Option<(AlternatingCycle, i64)> {
    let n = g.n();
    // exchange digraph arcs: (head, edge id, cost, weight parity), per tail
    let mut arcs: Vec<Vec<(Vertex, EdgeId, i64, u8)>> = vec![Vec::new(); n];
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = if bip.in_a(e.u) { (e.u, e.v) } else { (e.v, e.u) };
        let rc = base.reduced_cost(g, id);
        debug_assert!(rc >= 0);
        if base.matching.contains(id) {
            arcs[b].push((a, id, rc, e.w));
        } else {
            arcs[a].push((b, id, rc, e.w));
        }
    }
    let mut best: Option<(i64, Vertex)> = None;
    for s in (0..n).filter(|&v| bip.in_a(v)) {
        let (dist, _) = parity_dijkstra(&arcs, s);
        if let Some(d) = dist[2 * s + 1] {
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, s));
            }
        }
    }
    let (cost, s) = best?;
    let (_, via) = parity_dijkstra(&arcs, s);
    // walk back from (s, 1) to (s, 0)
    let mut walk = Vec::new();
    let mut state = 2 * s + 1;
    while state != 2 * s || walk.is_empty() {
        let (prev, id) = via[state].expect("reached state has a predecessor");
        walk.push((id, state / 2));
        state = prev;
    }
    walk.reverse();
    let cycle = odd_cycle_in_closed_walk(g, s, &walk)?;
    let c = AlternatingCycle::from_edges_unchecked(cycle);
    let c_cost = c.weight_delta(g, &base.matching);
    debug_assert_eq!(c_cost, cost);
    Some((c, c_cost))
}

type Via = Vec<Option<(usize, EdgeId)>>;

/// Shortest paths from `(s, 0)` over `(vertex, parity)` states.
fn parity_dijkstra(arcs: &[Vec<(Vertex, EdgeId, i64, u8)>], s: Vertex) -> (Vec<Option<i64>>, Via) {
    let states = 2 * arcs.len();
    let mut dist: Vec<Option<i64>> = vec![None; states];
    let mut via: Via = vec![None; states];
    let mut done = vec![false; states];
    let mut heap = BinaryHeap::new();
    dist[2 * s] = Some(0);
    heap.push(Reverse((0i64, 2 * s)));
    while let Some(Reverse((d, st))) = heap.pop() {
        if done[st] {
            continue;
        }
        done[st] = true;
        let (v, p) = (st / 2, (st % 2) as u8);
        for &(to, id, c, w) in &arcs[v] {
            let ns = 2 * to + ((p ^ w) as usize);
            let nd = d + c;
            if dist[ns].is_none_or(|old| nd < old) {
                dist[ns] = Some(nd);
                via[ns] = Some((st, id));
                heap.push(Reverse((nd, ns)));
            }
        }
    }
    (dist, via)
}

/// Splits a closed walk (given as `(edge, vertex reached)` steps from `start`)
/// into simple cycles and returns the first one of odd weight.
fn odd_cycle_in_closed_walk(g: &Graph, start: Vertex, walk: &[(EdgeId, Vertex)]) -> Option<Vec<EdgeId>> {
    let mut pos: Vec<Option<usize>> = vec![None; g.n()];
    let mut stack_v = vec![start];
    let mut stack_e: Vec<EdgeId> = Vec::new();
    pos[start] = Some(0);
    for &(id, next) in walk {
        stack_e.push(id);
        if let Some(i) = pos[next] {
            let cycle = stack_e.split_off(i);
            for v in stack_v.drain(i + 1..) {
                pos[v] = None;
            }
            if g.weight_of(&cycle) % 2 == 1 {
                return Some(cycle);
            }
        } else {
            pos[next] = Some(stack_v.len());
            stack_v.push(next);
        }
    }
    None
}

/// Bounded correct parity matching on a bipartite graph: a perfect matching of
/// weight `k' <= k` with `k' ≡ k (mod 2)`. The witness has minimum weight among
/// perfect matchings of that parity.
pub fn solve_bcpm_bipartite(g: &Graph, bip: &Bipartition, q: ParityQuery) -> Result<Option<Matching>> {
    Ok(min_parity_pm_bipartite(g, bip, q.parity())?
        .filter(|&(_, w)| w <= q.k())
        .map(|(m, _)| m))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SweepMode {
    /// Only `|Y| = n/2 - |A|`.
    #[default]
    Pruned,
    /// Every `Y ⊆ X`.
    Full,
}

#[derive(Clone, Debug, Default)]
pub struct BcpmOptions {
    pub mode: SweepMode,
    /// Worker threads for the Y sweep; 0 or 1 runs sequentially.
    pub jobs: usize,
    /// Transversal to use instead of computing a minimum one.
    pub oct: Option<OctDecomposition>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub has_perfect_matching: bool,
    pub oct_size: usize,
    pub a_size: usize,
    /// Number of subsets `Y` in the sweep.
    pub candidates: u128,
    /// Position (in sweep order) of the subset that produced the witness.
    pub winner: Option<u64>,
    pub winning_y: Option<Vec<Vertex>>,
}

#[derive(Clone, Debug)]
pub struct BcpmOutcome {
    pub matching: Option<Matching>,
    pub stats: SweepStats,
}

/// `k`-subsets of `0..n` as bitmasks in increasing numeric order.
pub(crate) struct MaskSubsets {
    next: Option<u64>,
    limit: u64,
}

impl MaskSubsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        assert!(n < 64, "subset sweeps support at most 63 elements");
        let next = (k <= n).then(|| if k == 0 { 0 } else { (1u64 << k) - 1 });
        MaskSubsets { next, limit: 1u64 << n }
    }
}

impl Iterator for MaskSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(cur)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Bounded correct parity matching on a general graph through the `G_Y` sweep.
pub fn solve_bcpm(g: &Graph, q: ParityQuery) -> Option<Matching> {
    solve_bcpm_with(g, q, &BcpmOptions::default())
        .expect("default options are valid")
        .matching
}

pub fn solve_bcpm_with(g: &Graph, q: ParityQuery, opts: &BcpmOptions) -> Result<BcpmOutcome> {
    if g.is_directed() {
        return usage("matching problems need an undirected graph");
    }
    let mut stats = SweepStats::default();
    if g.n() % 2 == 1 || !has_perfect_matching(g) {
        return Ok(BcpmOutcome { matching: None, stats });
    }
    stats.has_perfect_matching = true;
    let oct = match &opts.oct {
        Some(d) => {
            d.check(g)?;
            d.clone()
        }
        None => min_oct(g),
    };
    let x = &oct.transversal;
    stats.oct_size = x.len();
    stats.a_size = oct.color_a.len();
    if x.len() >= 64 {
        return Err(Error::Usage(format!("transversal of size {} is too large to sweep", x.len())));
    }
    let half = g.n() / 2;
    let masks: Box<dyn Iterator<Item = u64> + Send> = match opts.mode {
        SweepMode::Pruned => {
            if oct.color_a.len() > half || half - oct.color_a.len() > x.len() {
                return Ok(BcpmOutcome { matching: None, stats });
            }
            let r = half - oct.color_a.len();
            stats.candidates = binomial(x.len(), r);
            Box::new(MaskSubsets::new(x.len(), r))
        }
        SweepMode::Full => {
            stats.candidates = 1u128 << x.len();
            Box::new((0..=x.len()).flat_map(|r| MaskSubsets::new(x.len(), r)))
        }
    };
    let subproblem = |mask: u64| -> Option<(Matching, Vec<Vertex>)> {
        let y: Vec<Vertex> = (0..x.len()).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).collect();
        let gy = build_g_y(g, &oct, &y).expect("Y is drawn from X");
        let m = solve_bcpm_bipartite(&gy.graph, &gy.bipartition, q).expect("G_Y is bipartite")?;
        Some((gy.lift(&m), y))
    };
    let found = if opts.jobs > 1 {
        let all: Vec<u64> = masks.collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        pool.install(|| {
            all.par_iter()
                .enumerate()
                .find_map_first(|(i, &mask)| subproblem(mask).map(|r| (i as u64, r)))
        })
    } else {
        masks
            .enumerate()
            .find_map(|(i, mask)| subproblem(mask).map(|r| (i as u64, r)))
    };
    let matching = found.map(|(i, (m, y))| {
        stats.winner = Some(i);
        stats.winning_y = Some(y);
        m
    });
    if let Some(m) = &matching {
        debug_assert!(m.is_perfect(g) && q.admits(m.weight(g)));
    }
    Ok(BcpmOutcome { matching, stats })
}

/// The bound that turns a parity-only query into a bounded one: every perfect
/// matching weighs at most `n/2`. `None` if no weight in range has the parity.
pub fn cpm_bound(n: usize, parity: u8) -> Option<usize> {
    let half = n / 2;
    if half % 2 == parity as usize {
        Some(half)
    } else {
        half.checked_sub(1)
    }
}

/// Correct parity matching: a perfect matching whose weight is `≡ parity (mod 2)`.
pub fn solve_cpm(g: &Graph, parity: u8) -> Option<Matching> {
    let k = cpm_bound(g.n(), parity % 2)?;
    solve_bcpm(g, ParityQuery { k })
}

/// Odd alternating cycle with respect to a perfect matching `m`, found through
/// a perfect matching of the opposite parity.
pub fn solve_oac(g: &Graph, m: &Matching) -> Result<Option<AlternatingCycle>> {
    m.check(g)?;
    if !m.is_perfect(g) {
        return usage("odd alternating cycle needs a perfect matching");
    }
    let parity = (m.weight(g) % 2) as u8;
    let Some(other) = solve_cpm(g, 1 - parity) else {
        return Ok(None);
    };
    let cycles = decompose_into_alternating_cycles(g, m, &other)?;
    Ok(cycles.into_iter().find(|c| c.weight(g) % 2 == 1))
}

/// Exhaustive: the admissible perfect matching whose sorted edge list is
/// lexicographically smallest.
pub fn solve_bcpm_bruteforce(g: &Graph, q: ParityQuery) -> Result<Option<Matching>> {
    if g.is_directed() {
        return usage("matching problems need an undirected graph");
    }
    let mut best: Option<Vec<EdgeId>> = None;
    visit_perfect_matchings(g, |ids| {
        if q.admits(g.weight_of(ids)) {
            let mut ids = ids.to_vec();
            ids.sort_unstable();
            if best.as_ref().is_none_or(|b| ids < *b) {
                best = Some(ids);
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(best.map(Matching::from_ids_unchecked))
}
