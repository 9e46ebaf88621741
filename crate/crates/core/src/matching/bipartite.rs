use std::collections::VecDeque;

use crate::alternating::Matching;
use crate::error::Result;
use crate::graph::{Bipartition, EdgeId, Graph, Vertex};

const NONE: usize = usize::MAX;

/// Hopcroft-Karp maximum matching of a bipartite graph.
pub fn maximum_matching_bipartite(g: &Graph, bip: &Bipartition) -> Result<Matching> {
    bip.check(g)?;
    let n = g.n();
    let side_a = bip.side_a();
    let adj = g.simple_adjacency();
    let mut mate = vec![NONE; n];
    let mut dist = vec![usize::MAX; n];

    loop {
        // BFS layers from free A vertices
        let mut queue = VecDeque::new();
        for &a in &side_a {
            if mate[a] == NONE {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                match mate[b] {
                    NONE => found = true,
                    a2 if dist[a2] == usize::MAX => {
                        dist[a2] = dist[a] + 1;
                        queue.push_back(a2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; n];
        for &a in &side_a {
            if mate[a] == NONE {
                augment_dfs(a, &adj, &mut mate, &mut dist, &mut next);
            }
        }
    }
    let mut ids = Vec::new();
    for &a in &side_a {
        if mate[a] != NONE {
            ids.push(lowest_edge(g, a, mate[a]));
        }
    }
    Ok(Matching::from_ids_unchecked(ids))
}

fn augment_dfs(
    a: usize,
    adj: &[Vec<usize>],
    mate: &mut [usize],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[a] < adj[a].len() {
        let b = adj[a][next[a]];
        next[a] += 1;
        let ok = match mate[b] {
            NONE => true,
            a2 => dist[a2] == dist[a] + 1 && augment_dfs(a2, adj, mate, dist, next),
        };
        if ok {
            mate[a] = b;
            mate[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

fn lowest_edge(g: &Graph, u: Vertex, v: Vertex) -> EdgeId {
    g.incident(u)
        .iter()
        .find(|&&(x, _)| x == v)
        .map(|&(_, id)| id)
        .expect("matched pair must be adjacent")
}

/// A minimum-weight perfect matching with an optimality certificate.
///
/// `potentials` satisfy `p[u] + p[v] <= w(e)` for every edge `e = {u, v}` with
/// equality on the matching edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeightPm {
    pub matching: Matching,
    pub weight: usize,
    pub potentials: Vec<i64>,
}

impl MinWeightPm {
    /// Reduced cost `w(e) - p[u] - p[v]` of edge `id`; non-negative for all edges.
    pub fn reduced_cost(&self, g: &Graph, id: EdgeId) -> i64 {
        let e = g.edge(id);
        e.w as i64 - self.potentials[e.u] - self.potentials[e.v]
    }

    /// Checks feasibility and tightness of the potentials against `g`.
    pub fn certificate_holds(&self, g: &Graph) -> bool {
        (0..g.m()).all(|id| self.reduced_cost(g, id) >= 0)
            && self.matching.edges().iter().all(|&id| self.reduced_cost(g, id) == 0)
            && self.matching.is_perfect(g)
            && self.matching.weight(g) == self.weight
    }
}

/// Minimum-weight perfect matching of a bipartite graph by successive shortest
/// augmenting paths with vertex potentials (the Hungarian method). Among
/// parallel edges the lightest, then lowest-indexed, is used.
pub fn min_weight_perfect_matching_bipartite(
    g: &Graph,
    bip: &Bipartition,
) -> Result<Option<MinWeightPm>> {
    bip.check(g)?;
    let rows = bip.side_a();
    let cols = bip.side_b();
    if rows.len() != cols.len() {
        return Ok(None);
    }
    let r = rows.len();
    if r == 0 {
        return Ok(Some(MinWeightPm {
            matching: Matching::empty(),
            weight: 0,
            potentials: vec![0; g.n()],
        }));
    }
    let mut col_index = vec![NONE; g.n()];
    for (j, &b) in cols.iter().enumerate() {
        col_index[b] = j;
    }
    let mut row_index = vec![NONE; g.n()];
    for (i, &a) in rows.iter().enumerate() {
        row_index[a] = i;
    }
    const INF: i64 = 1 << 40;
    let mut cost = vec![vec![INF; r]; r];
    let mut best_edge = vec![vec![NONE; r]; r];
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = if bip.in_a(e.u) { (e.u, e.v) } else { (e.v, e.u) };
        let (i, j) = (row_index[a], col_index[b]);
        if (e.w as i64) < cost[i][j] {
            cost[i][j] = e.w as i64;
            best_edge[i][j] = id;
        }
    }

    // 1-indexed Kuhn-Munkres; column 0 is a sentinel.
    let mut u = vec![0i64; r + 1];
    let mut v = vec![0i64; r + 1];
    let mut p = vec![0usize; r + 1];
    let mut way = vec![0usize; r + 1];
    for i in 1..=r {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![INF * 4; r + 1];
        let mut used = vec![false; r + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF * 4;
            let mut j1 = 0;
            for j in 1..=r {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            if delta >= INF / 2 {
                // no finite augmenting path from row i: Hall violation
                return Ok(None);
            }
            for j in 0..=r {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut ids = Vec::with_capacity(r);
    for j in 1..=r {
        let i = p[j];
        let id = best_edge[i - 1][j - 1];
        if id == NONE {
            return Ok(None);
        }
        ids.push(id);
    }
    let mut potentials = vec![0i64; g.n()];
    for (i, &a) in rows.iter().enumerate() {
        potentials[a] = u[i + 1];
    }
    for (j, &b) in cols.iter().enumerate() {
        potentials[b] = v[j + 1];
    }
    let matching = Matching::from_ids_unchecked(ids);
    let weight = matching.weight(g);
    Ok(Some(MinWeightPm {
        matching,
        weight,
        potentials,
    }))
}
