//! Odd cycle transversals and the (bipartite) independence numbers used to
//! report and property-test instance parameters.
//!
//! [`min_oct`] is exact and FPT in the transversal size: vertices are added one
//! at a time and after each addition the current transversal plus the new vertex
//! is compressed by one if possible. A compression step guesses, for every
//! transversal vertex, whether it is deleted or lands on the left or right side,
//! and then finds a minimum vertex cut in the bipartite remainder separating the
//! vertices that must keep their colour from those that must flip it.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Vertex};
use crate::oracle;

/// A transversal `X` together with the colour classes `(A, B)` of `G - X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctDecomposition {
    pub transversal: Vec<Vertex>,
    pub color_a: Vec<Vertex>,
    pub color_b: Vec<Vertex>,
}

impl OctDecomposition {
    /// Colours `G - X`, putting the side that holds the smallest vertex of each
    /// component into `A`. `None` if `G - X` is not bipartite.
    pub fn from_transversal(g: &Graph, transversal: &[Vertex]) -> Option<Self> {
        let mut removed = vec![false; g.n()];
        for &x in transversal {
            removed[x] = true;
        }
        let color = g.two_coloring_without(&removed)?;
        let mut t: Vec<Vertex> = transversal.to_vec();
        t.sort_unstable();
        t.dedup();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, c) in color.iter().enumerate() {
            match c {
                Some(0) => a.push(v),
                Some(_) => b.push(v),
                None => {}
            }
        }
        Some(OctDecomposition {
            transversal: t,
            color_a: a,
            color_b: b,
        })
    }

    /// Checks that `X ∪ A ∪ B` partitions the vertices and `A`, `B` are independent.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut role = vec![0u8; g.n()];
        for (tag, set) in [(1u8, &self.transversal), (2, &self.color_a), (3, &self.color_b)] {
            for &v in set.iter() {
                if v >= g.n() || role[v] != 0 {
                    return Err(Error::Usage(format!("vertex {v} repeated or out of range")));
                }
                role[v] = tag;
            }
        }
        if let Some(v) = role.iter().position(|&r| r == 0) {
            return Err(Error::Usage(format!("vertex {v} not covered by X, A or B")));
        }
        for e in g.edges() {
            if role[e.u] == role[e.v] && role[e.u] != 1 {
                return Err(Error::Usage(format!(
                    "edge {{{}, {}}} lies inside a colour class",
                    e.u, e.v
                )));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.transversal.len()
    }

    /// `G - X` on the vertices of `A ∪ B` renumbered in increasing order, with
    /// `A` as one side. Returns the graph, its bipartition and the new-to-old
    /// vertex map.
    pub fn residual(&self, g: &Graph) -> (Graph, Bipartition, Vec<Vertex>) {
        let mut kept: Vec<Vertex> = self.color_a.iter().chain(&self.color_b).copied().collect();
        kept.sort_unstable();
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::new(kept.len());
        for e in g.edges() {
            if pos[e.u] != usize::MAX && pos[e.v] != usize::MAX {
                h.add_edge(pos[e.u], pos[e.v], e.w).expect("endpoints are renumbered vertices");
            }
        }
        let bip = Bipartition::with_side_a(kept.len(), self.color_a.iter().map(|&a| pos[a]))
            .expect("A is a subset of the kept vertices");
        (h, bip, kept)
    }
}

/// Minimum odd cycle transversal by iterative compression.
pub fn min_oct(g: &Graph) -> OctDecomposition {
    let n = g.n();
    let mut alive = vec![false; n];
    let mut z: Vec<Vertex> = Vec::new();
    for v in 0..n {
        alive[v] = true;
        let mut removed: Vec<bool> = alive.iter().map(|&a| !a).collect();
        for &x in &z {
            removed[x] = true;
        }
        if g.two_coloring_without(&removed).is_some() {
            continue;
        }
        z.push(v);
        if let Some(smaller) = compress(g, &alive, &z) {
            z = smaller;
        }
    }
    z.sort_unstable();
    OctDecomposition::from_transversal(g, &z).expect("compression yields a transversal")
}

/// Tries to turn the transversal `z` of `G[alive]` into one of size `|z| - 1`.
fn compress(g: &Graph, alive: &[bool], z: &[Vertex]) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut in_z = vec![false; n];
    for &x in z {
        in_z[x] = true;
    }
    let removed: Vec<bool> = (0..n).map(|v| !alive[v] || in_z[v]).collect();
    let color = g.two_coloring_without(&removed)?;
    let adj = g.simple_adjacency();
    // 0 = deleted, 1 = left, 2 = right
    let mut assign = vec![0u8; z.len()];
    let mut side = vec![0u8; n];
    try_assign(
        &Ctx { g, adj: &adj, alive, in_z: &in_z, color: &color, z },
        0,
        &mut assign,
        &mut side,
    )
}

struct Ctx<'a> {
    g: &'a Graph,
    adj: &'a [Vec<Vertex>],
    alive: &'a [bool],
    in_z: &'a [bool],
    color: &'a [Option<u8>],
    z: &'a [Vertex],
}

fn try_assign(ctx: &Ctx, i: usize, assign: &mut [u8], side: &mut [u8]) -> Option<Vec<Vertex>> {
    let deleted = assign[..i].iter().filter(|&&a| a == 0).count();
    if deleted + 1 > ctx.z.len() {
        // budget |z| - 1 already exhausted by deletions alone
        return None;
    }
    if i == ctx.z.len() {
        let budget = ctx.z.len() - 1 - deleted;
        let cut = separate(ctx, side, budget)?;
        let mut out: Vec<Vertex> = (0..i).filter(|&j| assign[j] == 0).map(|j| ctx.z[j]).collect();
        out.extend(cut);
        return Some(out);
    }
    let x = ctx.z[i];
    for choice in [1u8, 2, 0] {
        if choice != 0
            && ctx.adj[x]
                .iter()
                .any(|&y| ctx.alive[y] && ctx.in_z[y] && side[y] == choice)
        {
            continue;
        }
        assign[i] = choice;
        side[x] = choice;
        if let Some(found) = try_assign(ctx, i + 1, assign, side) {
            return Some(found);
        }
        side[x] = 0;
    }
    None
}

/// Minimum vertex cut (at most `budget` vertices, else `None`) in `G[alive] - Z`
/// separating vertices that must keep their colour from those that must flip.
fn separate(ctx: &Ctx, side: &[u8], budget: usize) -> Option<Vec<Vertex>> {
    let n = ctx.g.n();
    let free = |v: Vertex| ctx.alive[v] && !ctx.in_z[v];
    // required final colour: 1 if adjacent to a left vertex, 0 if adjacent to a right one
    let mut keep = vec![false; n];
    let mut flip = vec![false; n];
    for v in (0..n).filter(|&v| free(v)) {
        let c = ctx.color[v].unwrap();
        for &y in &ctx.adj[v] {
            if !ctx.alive[y] || !ctx.in_z[y] || side[y] == 0 {
                continue;
            }
            let want = if side[y] == 1 { 1 } else { 0 };
            if want == c {
                keep[v] = true;
            } else {
                flip[v] = true;
            }
        }
    }
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = FlowNet::new(2 * n + 2);
    const INF: u32 = u32::MAX / 4;
    for v in (0..n).filter(|&v| free(v)) {
        net.add(2 * v, 2 * v + 1, 1);
        if keep[v] {
            net.add(source, 2 * v, INF);
        }
        if flip[v] {
            net.add(2 * v + 1, sink, INF);
        }
        for &y in &ctx.adj[v] {
            if free(y) {
                net.add(2 * v + 1, 2 * y, INF);
            }
        }
    }
    let flow = net.max_flow(source, sink, budget + 1);
    if flow > budget {
        return None;
    }
    let reach = net.reachable(source);
    Some(
        (0..n)
            .filter(|&v| free(v) && reach[2 * v] && !reach[2 * v + 1])
            .collect(),
    )
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Augments along BFS paths, one unit at a time, stopping once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &arc in &self.head[x] {
                    let y = self.to[arc];
                    if self.cap[arc] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = arc;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut x = t;
            while x != s {
                let arc = via[x];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                x = self.to[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Minimum odd cycle transversal by trying all vertex subsets in order of
/// increasing size (lexicographic within a size).
pub fn min_oct_bruteforce(g: &Graph) -> Result<OctDecomposition> {
    oracle::ensure_default("brute-force odd cycle transversal", g.n())?;
    let n = g.n();
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if let Some(d) = OctDecomposition::from_transversal(g, &combo) {
                return Ok(d);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("removing every vertex leaves a bipartite graph")
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Largest `β` such that an independent set with `β` vertices on each side of
/// `bip` exists. Exhaustive over subsets of the smaller side.
pub fn bipartite_independence_number(g: &Graph, bip: &Bipartition) -> Result<usize> {
    oracle::ensure_default("bipartite independence number", g.n())?;
    bip.check(g)?;
    let (mut small, mut large) = (bip.side_a(), bip.side_b());
    if small.len() > large.len() {
        std::mem::swap(&mut small, &mut large);
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in large.iter().enumerate() {
        pos[v] = i;
    }
    let nbr: Vec<u64> = small
        .iter()
        .map(|&v| {
            g.incident(v)
                .iter()
                .fold(0u64, |acc, &(y, _)| acc | (1u64 << pos[y]))
        })
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << small.len()) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut blocked = 0u64;
        let mut bits = subset;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            blocked |= nbr[i];
            bits &= bits - 1;
        }
        let free = large.len() - blocked.count_ones() as usize;
        best = best.max(size.min(free));
    }
    Ok(best)
}

/// Exact independence number by branching on the lowest remaining vertex.
pub fn independence_number(g: &Graph) -> Result<usize> {
    oracle::ensure_default("independence number", g.n())?;
    let nbr: Vec<u64> = (0..g.n())
        .map(|v| {
            g.incident(v)
                .iter()
                .fold(0u64, |acc, &(y, _)| acc | (1u64 << y))
        })
        .collect();
    fn mis(nbr: &[u64], p: u64) -> usize {
        if p == 0 {
            return 0;
        }
        let v = p.trailing_zeros() as usize;
        let without = p & !(1u64 << v);
        if nbr[v] & p == 0 {
            return 1 + mis(nbr, without);
        }
        mis(nbr, without).max(1 + mis(nbr, without & !nbr[v]))
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    Ok(mis(&nbr, all))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, 0).unwrap();
            }
        }
        g
    }

    #[test]
    fn bipartite_graph_has_empty_transversal() {
        let c6 = Graph::from_edges(6, &[(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 4, 0), (4, 5, 1), (5, 0, 0)])
            .unwrap();
        let d = min_oct(&c6);
        assert!(d.transversal.is_empty());
        assert_eq!(d.color_a, vec![0, 2, 4]);
        assert_eq!(min_oct_bruteforce(&c6).unwrap(), d);
    }

    #[test]
    fn cliques() {
        assert_eq!(min_oct(&complete(3)).size(), 1);
        assert_eq!(min_oct(&complete(4)).size(), 2);
        assert_eq!(min_oct(&complete(7)).size(), 5);
        assert_eq!(min_oct_bruteforce(&complete(3)).unwrap().size(), 1);
        assert_eq!(min_oct_bruteforce(&complete(4)).unwrap().size(), 2);
        for n in 0..7 {
            let d = min_oct(&complete(n));
            d.check(&complete(n)).unwrap();
        }
    }

    #[test]
    fn tie_break_puts_smallest_vertex_in_a() {
        // two components: path 3-1-4 and edge 2-0
        let g = Graph::from_edges(5, &[(3, 1, 0), (1, 4, 0), (2, 0, 0)]).unwrap();
        let d = OctDecomposition::from_transversal(&g, &[]).unwrap();
        assert_eq!(d.color_a, vec![0, 1]);
        assert_eq!(d.color_b, vec![2, 3, 4]);
    }

    #[test]
    fn independence_numbers() {
        let mut k33 = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b, 0).unwrap();
            }
        }
        let bip = k33.bipartition().unwrap();
        assert_eq!(bipartite_independence_number(&k33, &bip).unwrap(), 0);
        let empty = Graph::new(5);
        let bip = Bipartition::with_side_a(5, [0, 1]).unwrap();
        assert_eq!(bipartite_independence_number(&empty, &bip).unwrap(), 2);
        assert_eq!(independence_number(&complete(4)).unwrap(), 1);
        let c4 = Graph::from_edges(4, &[(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 0, 0)]).unwrap();
        assert_eq!(independence_number(&c4).unwrap(), 2);
        assert!(matches!(
            independence_number(&Graph::new(oracle::bound() + 1)),
            Err(Error::OracleRefusal { .. })
        ));
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
