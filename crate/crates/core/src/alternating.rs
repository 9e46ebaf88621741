//! Matchings as edge-index sets, alternating cycles, and the symmetric-difference
//! calculus that links perfect matchings of different weight parity.

use crate::error::{usage, Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// A set of pairwise vertex-disjoint edges, stored as sorted edge indices into
/// the owning graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    /// Validates `ids` against `g`: indices in range, no repeats, vertex-disjoint.
    pub fn new(g: &Graph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        if g.is_directed() {
            return usage("matchings live in undirected graphs");
        }
        let mut edges: Vec<EdgeId> = ids.into_iter().collect();
        edges.sort_unstable();
        let mut covered = vec![false; g.n()];
        for (i, &id) in edges.iter().enumerate() {
            if id >= g.m() {
                return Err(Error::Usage(format!("edge index {id} out of range 0..{}", g.m())));
            }
            if i > 0 && edges[i - 1] == id {
                return Err(Error::Usage(format!("edge {id} listed twice")));
            }
            let e = g.edge(id);
            for x in [e.u, e.v] {
                if covered[x] {
                    return Err(Error::Usage(format!(
                        "edges share vertex {x}; not a matching"
                    )));
                }
                covered[x] = true;
            }
        }
        Ok(Matching { edges })
    }

    /// Builds a matching from indices already known to be valid.
    pub(crate) fn from_ids_unchecked(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    pub fn weight(&self, g: &Graph) -> usize {
        g.weight_of(&self.edges)
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.edges.len() == g.n()
    }

    /// For every vertex, its partner and the matching edge joining them.
    pub fn mates(&self, g: &Graph) -> Vec<Option<(Vertex, EdgeId)>> {
        let mut mate = vec![None; g.n()];
        for &id in &self.edges {
            let e = g.edge(id);
            mate[e.u] = Some((e.v, id));
            mate[e.v] = Some((e.u, id));
        }
        mate
    }

    pub fn covered(&self, g: &Graph) -> Vec<bool> {
        let mut c = vec![false; g.n()];
        for &id in &self.edges {
            let e = g.edge(id);
            c[e.u] = true;
            c[e.v] = true;
        }
        c
    }

    /// Re-validates this matching against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        Matching::new(g, self.edges.iter().copied()).map(|_| ())
    }
}

/// `(m1 \ m2) ∪ (m2 \ m1)` as sorted edge indices. Both matchings are checked
/// against `g` first.
pub fn symmetric_difference(g: &Graph, m1: &Matching, m2: &Matching) -> Result<Vec<EdgeId>> {
    m1.check(g)?;
    m2.check(g)?;
    Ok(sorted_symmetric_difference(m1.edges(), m2.edges()))
}

pub(crate) fn sorted_symmetric_difference(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

/// Follows `edges` as a walk and returns the visited vertex sequence (closed
/// walks do not repeat the start at the end). Fails if consecutive edges do not
/// meet, if a vertex repeats, or if `closed` and the walk does not return.
///
/// For a closed walk the first edge is traversed from its `u` endpoint unless
/// the second edge only meets `u`; open walks start at `start` when given.
pub fn trace_walk(
    g: &Graph,
    edges: &[EdgeId],
    closed: bool,
    start: Option<Vertex>,
) -> Option<Vec<Vertex>> {
    if edges.is_empty() {
        return if closed { Some(Vec::new()) } else { start.map(|s| vec![s]) };
    }
    if edges.iter().any(|&e| e >= g.m()) {
        return None;
    }
    let first = g.edge(edges[0]);
    let mut cur = match start {
        Some(s) if first.touches(s) => s,
        Some(_) => return None,
        None => {
            if edges.len() > 1 {
                let second = g.edge(edges[1]);
                if second.touches(first.v) {
                    first.u
                } else if second.touches(first.u) {
                    first.v
                } else {
                    return None;
                }
            } else {
                first.u
            }
        }
    };
    let origin = cur;
    let mut seen = vec![false; g.n()];
    let mut verts = vec![cur];
    seen[cur] = true;
    for (i, &id) in edges.iter().enumerate() {
        let e = g.edge(id);
        if !e.touches(cur) {
            return None;
        }
        cur = e.other(cur);
        let last = i + 1 == edges.len();
        if last && closed {
            return (cur == origin).then_some(verts);
        }
        if seen[cur] {
            return None;
        }
        seen[cur] = true;
        verts.push(cur);
    }
    Some(verts)
}

/// A simple cycle given as a cyclic sequence of edge indices.
///
/// Two parallel edges form a cycle of length 2; otherwise consecutive edges share
/// exactly one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingCycle {
    edges: Vec<EdgeId>,
}

impl AlternatingCycle {
    /// Wraps `edges` after checking that they form a simple cycle of `g` that
    /// alternates with respect to `m`.
    pub fn new(g: &Graph, m: &Matching, edges: Vec<EdgeId>) -> Result<Self> {
        let c = AlternatingCycle { edges };
        c.check(g, m)?;
        Ok(c)
    }

    pub(crate) fn from_edges_unchecked(edges: Vec<EdgeId>) -> Self {
        AlternatingCycle { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn weight(&self, g: &Graph) -> usize {
        g.weight_of(&self.edges)
    }

    /// `weight(C \ M) - weight(C ∩ M)`: how much `M △ C` weighs more than `M`.
    pub fn weight_delta(&self, g: &Graph, m: &Matching) -> i64 {
        self.edges
            .iter()
            .map(|&e| {
                let w = g.edge(e).w as i64;
                if m.contains(e) {
                    -w
                } else {
                    w
                }
            })
            .sum()
    }

    pub fn vertices(&self, g: &Graph) -> Option<Vec<Vertex>> {
        trace_walk(g, &self.edges, true, None)
    }

    pub fn check(&self, g: &Graph, m: &Matching) -> Result<()> {
        let len = self.edges.len();
        if len < 2 || len % 2 == 1 {
            return usage(format!("alternating cycle must have even length >= 2, got {len}"));
        }
        if self.vertices(g).is_none() {
            return usage("edges do not form a simple cycle");
        }
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return usage("cycle repeats an edge");
        }
        for i in 0..len {
            let a = m.contains(self.edges[i]);
            let b = m.contains(self.edges[(i + 1) % len]);
            if a == b {
                return usage(format!(
                    "cycle does not alternate at edges {} and {}",
                    self.edges[i],
                    self.edges[(i + 1) % len]
                ));
            }
        }
        Ok(())
    }
}

/// Splits `m1 △ m2` of two perfect matchings into vertex-disjoint cycles
/// alternating between them. Cycles are listed by their smallest vertex and each
/// starts with the `m1` edge at that vertex.
pub fn decompose_into_alternating_cycles(
    g: &Graph,
    m1: &Matching,
    m2: &Matching,
) -> Result<Vec<AlternatingCycle>> {
    m1.check(g)?;
    m2.check(g)?;
    if !m1.is_perfect(g) || !m2.is_perfect(g) {
        return usage("decomposition needs two perfect matchings");
    }
    let mate1 = m1.mates(g);
    let mate2 = m2.mates(g);
    let mut done = vec![false; g.n()];
    let mut cycles = Vec::new();
    for start in 0..g.n() {
        if done[start] {
            continue;
        }
        let (_, e1) = mate1[start].unwrap();
        let (_, e2) = mate2[start].unwrap();
        if e1 == e2 {
            done[start] = true;
            continue;
        }
        let mut cyc = Vec::new();
        let mut cur = start;
        loop {
            done[cur] = true;
            let (nxt, e) = mate1[cur].unwrap();
            cyc.push(e);
            done[nxt] = true;
            let (back, f) = mate2[nxt].unwrap();
            cyc.push(f);
            cur = back;
            if cur == start {
                break;
            }
        }
        cycles.push(AlternatingCycle::from_edges_unchecked(cyc));
    }
    Ok(cycles)
}

/// `m △ c` for a cycle alternating with respect to `m`.
pub fn apply_cycle(g: &Graph, m: &Matching, c: &AlternatingCycle) -> Result<Matching> {
    m.check(g)?;
    c.check(g, m)?;
    let mut ids = c.edges.clone();
    ids.sort_unstable();
    Ok(Matching::from_ids_unchecked(sorted_symmetric_difference(m.edges(), &ids)))
}
