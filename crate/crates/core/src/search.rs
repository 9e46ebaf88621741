//! Exhaustive searches for alternating cycles, augmenting paths and directed
//! cycles. Depth-first with alternation state; the first witness in
//! incidence-list order is returned.

use crate::alternating::{trace_walk, AlternatingCycle, Matching};
use crate::error::{usage, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::oracle;

type Mates = Vec<Option<(Vertex, EdgeId)>>;

fn undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        return usage("expected an undirected graph");
    }
    Ok(())
}

fn perfect(g: &Graph, m: &Matching) -> Result<Mates> {
    undirected(g)?;
    m.check(g)?;
    if !m.is_perfect(g) {
        return usage("the matching is not perfect");
    }
    Ok(m.mates(g))
}

/// Vertices of an open walk, oriented so that the first edge is left by the
/// endpoint it does not share with the second edge.
pub fn path_vertices(g: &Graph, edges: &[EdgeId]) -> Option<Vec<Vertex>> {
    let first = g.edge(*edges.first()?);
    let start = match edges.get(1).map(|&id| g.edge(id)) {
        Some(second) if second.touches(first.v) && !second.touches(first.u) => first.u,
        Some(second) if second.touches(first.u) && !second.touches(first.v) => first.v,
        Some(_) => return None,
        None => first.u,
    };
    trace_walk(g, edges, false, Some(start))
}

/// Checks that `edges` is a simple `m`-augmenting path and returns its vertex
/// sequence.
pub fn check_augmenting_path(g: &Graph, m: &Matching, edges: &[EdgeId]) -> Result<Vec<Vertex>> {
    if edges.iter().any(|&id| id >= g.m()) {
        return usage("path uses an unknown edge");
    }
    if edges.len() % 2 == 0 {
        return usage(format!("augmenting path must have odd length, got {}", edges.len()));
    }
    let Some(verts) = path_vertices(g, edges) else {
        return usage("edges do not form a simple path");
    };
    for (i, &id) in edges.iter().enumerate() {
        if m.contains(id) != (i % 2 == 1) {
            return usage(format!("path does not alternate at edge {id}"));
        }
    }
    let covered = m.covered(g);
    let (a, b) = (verts[0], *verts.last().unwrap());
    if covered[a] || covered[b] {
        return usage("path endpoints must be unmatched");
    }
    Ok(verts)
}

/// An `m`-alternating cycle of odd weight through the matching edge `e`.
pub fn solve_oace_bruteforce(g: &Graph, m: &Matching, e: EdgeId) -> Result<Option<AlternatingCycle>> {
    oracle::ensure_default("brute-force alternating cycle search", g.n())?;
    let mates = perfect(g, m)?;
    if !m.contains(e) {
        return usage(format!("designated edge {e} is not in the matching"));
    }
    Ok(odd_cycle_through(g, m, &mates, e))
}

/// An `m`-alternating cycle of odd weight; matching edges are tried as the
/// designated edge in index order.
pub fn solve_oac_bruteforce(g: &Graph, m: &Matching) -> Result<Option<AlternatingCycle>> {
    oracle::ensure_default("brute-force alternating cycle search", g.n())?;
    let mates = perfect(g, m)?;
    Ok(m.edges().iter().find_map(|&e| odd_cycle_through(g, m, &mates, e)))
}

fn odd_cycle_through(g: &Graph, m: &Matching, mates: &Mates, e: EdgeId) -> Option<AlternatingCycle> {
    struct Dfs<'a> {
        g: &'a Graph,
        m: &'a Matching,
        mates: &'a Mates,
        origin: Vertex,
        seen: Vec<bool>,
        edges: Vec<EdgeId>,
    }
    impl Dfs<'_> {
        // `cur` was just entered through a matching edge.
        fn go(&mut self, cur: Vertex, parity: usize) -> bool {
            for &(x, id) in self.g.incident(cur) {
                if self.m.contains(id) {
                    continue;
                }
                let p = parity ^ self.g.edge(id).w as usize;
                if x == self.origin {
                    if p == 1 {
                        self.edges.push(id);
                        return true;
                    }
                    continue;
                }
                if self.seen[x] {
                    continue;
                }
                let (y, mid) = self.mates[x].expect("perfect matching");
                self.seen[x] = true;
                self.seen[y] = true;
                self.edges.push(id);
                self.edges.push(mid);
                if self.go(y, p ^ self.g.edge(mid).w as usize) {
                    return true;
                }
                self.edges.truncate(self.edges.len() - 2);
                self.seen[x] = false;
                self.seen[y] = false;
            }
            false
        }
    }
    let edge = g.edge(e);
    let mut dfs = Dfs {
        g,
        m,
        mates,
        origin: edge.u,
        seen: vec![false; g.n()],
        edges: vec![e],
    };
    dfs.seen[edge.u] = true;
    dfs.seen[edge.v] = true;
    dfs.go(edge.v, edge.w as usize)
        .then(|| AlternatingCycle::from_edges_unchecked(dfs.edges))
}

/// Depth-first enumeration of simple `m`-augmenting paths leaving `from`.
/// Internal vertices are matched and avoid `blocked`; a path ends at an
/// unmatched vertex accepted by `end`. `visit` gets the path's edges, end vertex
/// and weight parity, and returns `true` to stop.
struct AugSearch<'a> {
    g: &'a Graph,
    m: &'a Matching,
    mates: &'a Mates,
    blocked: Vec<bool>,
    edges: Vec<EdgeId>,
}

impl AugSearch<'_> {
    fn run(
        &mut self,
        from: Vertex,
        end: &dyn Fn(Vertex) -> bool,
        visit: &mut dyn FnMut(&mut Self, Vertex, usize) -> bool,
    ) -> bool {
        self.blocked[from] = true;
        let found = self.go(from, 0, end, visit);
        self.blocked[from] = false;
        found
    }

    fn go(
        &mut self,
        cur: Vertex,
        parity: usize,
        end: &dyn Fn(Vertex) -> bool,
        visit: &mut dyn FnMut(&mut Self, Vertex, usize) -> bool,
    ) -> bool {
        for &(x, id) in self.g.incident(cur) {
            if self.m.contains(id) || self.blocked[x] {
                continue;
            }
            let p = parity ^ self.g.edge(id).w as usize;
            match self.mates[x] {
                None => {
                    if end(x) {
                        self.edges.push(id);
                        self.blocked[x] = true;
                        let stop = visit(self, x, p);
                        self.blocked[x] = false;
                        self.edges.pop();
                        if stop {
                            return true;
                        }
                    }
                }
                Some((y, mid)) => {
                    if self.blocked[y] {
                        continue;
                    }
                    self.blocked[x] = true;
                    self.blocked[y] = true;
                    self.edges.push(id);
                    self.edges.push(mid);
                    let stop = self.go(y, p ^ self.g.edge(mid).w as usize, end, visit);
                    self.edges.truncate(self.edges.len() - 2);
                    self.blocked[x] = false;
                    self.blocked[y] = false;
                    if stop {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// An `m`-augmenting path of odd weight, oriented from its lower endpoint.
pub fn solve_oap_bruteforce(g: &Graph, m: &Matching) -> Result<Option<Vec<EdgeId>>> {
    oracle::ensure_default("brute-force augmenting path search", g.n())?;
    undirected(g)?;
    m.check(g)?;
    let mates = m.mates(g);
    let mut search = AugSearch {
        g,
        m,
        mates: &mates,
        blocked: vec![false; g.n()],
        edges: Vec::new(),
    };
    let mut found = None;
    for s in (0..g.n()).filter(|&v| mates[v].is_none()) {
        let stop = search.run(s, &|x| x > s, &mut |st, _, parity| {
            if parity == 1 {
                found = Some(st.edges.clone());
            }
            parity == 1
        });
        if stop {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Two vertex-disjoint augmenting paths, from `s1` and from `s2`.
pub type PathPair = [Vec<EdgeId>; 2];

fn check_terminals(g: &Graph, m: &Matching, t: [Vertex; 4]) -> Result<Mates> {
    undirected(g)?;
    m.check(g)?;
    let mates = m.mates(g);
    for (i, &v) in t.iter().enumerate() {
        if v >= g.n() {
            return usage(format!("terminal {v} is not a vertex"));
        }
        if t[..i].contains(&v) {
            return usage(format!("terminal {v} appears twice"));
        }
        if mates[v].is_some() {
            return usage(format!("terminal {v} is not unmatched"));
        }
    }
    Ok(mates)
}

fn disjoint_pair(
    g: &Graph,
    m: &Matching,
    mates: &Mates,
    pairings: &[[(Vertex, Vertex); 2]],
) -> Option<PathPair> {
    let mut search = AugSearch {
        g,
        m,
        mates,
        blocked: vec![false; g.n()],
        edges: Vec::new(),
    };
    for &[(a, b), (c, d)] in pairings {
        let mut found = None;
        search.blocked[c] = true;
        search.blocked[d] = true;
        search.run(a, &|x| x == b, &mut |st, _, _| {
            let first = st.edges.clone();
            let mut inner = AugSearch {
                g,
                m,
                mates,
                blocked: st.blocked.clone(),
                edges: Vec::new(),
            };
            inner.blocked[c] = false;
            inner.blocked[d] = false;
            let ok = inner.run(c, &|x| x == d, &mut |st2, _, _| {
                found = Some([first.clone(), st2.edges.clone()]);
                true
            });
            ok
        });
        search.blocked[c] = false;
        search.blocked[d] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Disjoint augmenting paths joining `{s1, s2}` to `{t1, t2}`.
pub fn solve_dap_bruteforce(g: &Graph, m: &Matching, t: [Vertex; 4]) -> Result<Option<PathPair>> {
    oracle::ensure_default("brute-force disjoint path search", g.n())?;
    let mates = check_terminals(g, m, t)?;
    let [s1, s2, t1, t2] = t;
    Ok(disjoint_pair(g, m, &mates, &[[(s1, t1), (s2, t2)], [(s1, t2), (s2, t1)]]))
}

/// Disjoint augmenting paths whose four ends are exactly the terminals, in any
/// pairing.
pub fn solve_fdap_bruteforce(g: &Graph, m: &Matching, t: [Vertex; 4]) -> Result<Option<PathPair>> {
    oracle::ensure_default("brute-force disjoint path search", g.n())?;
    let mates = check_terminals(g, m, t)?;
    let [s1, s2, t1, t2] = t;
    Ok(disjoint_pair(
        g,
        m,
        &mates,
        &[[(s1, t1), (s2, t2)], [(s1, t2), (s2, t1)], [(s1, s2), (t1, t2)]],
    ))
}

/// A simple directed cycle through `s` and `t`, as its arcs starting at `s`.
pub fn solve_bfp_bruteforce(g: &Graph, s: Vertex, t: Vertex) -> Result<Option<Vec<EdgeId>>> {
    oracle::ensure("brute-force directed cycle search", g.n(), oracle::digraph_bound())?;
    if !g.is_directed() {
        return usage("back-and-forth paths need a directed graph");
    }
    if s >= g.n() || t >= g.n() {
        return usage("terminal out of range");
    }
    if s == t {
        return usage("s and t must differ");
    }
    fn go(g: &Graph, cur: Vertex, s: Vertex, t: Vertex, seen: &mut [bool], arcs: &mut Vec<EdgeId>) -> bool {
        for &(x, id) in g.incident(cur) {
            if x == s {
                if seen[t] {
                    arcs.push(id);
                    return true;
                }
            } else if !seen[x] {
                seen[x] = true;
                arcs.push(id);
                if go(g, x, s, t, seen, arcs) {
                    return true;
                }
                arcs.pop();
                seen[x] = false;
            }
        }
        false
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut arcs = Vec::new();
    Ok(go(g, s, s, t, &mut seen, &mut arcs).then_some(arcs))
}

/// Vertex sequence of a directed cycle given by its arcs.
pub fn arc_cycle_vertices(g: &Graph, arcs: &[EdgeId]) -> Vec<Vertex> {
    arcs.iter().map(|&a| g.edge(a).u).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle(w: [u8; 4]) -> (Graph, Matching) {
        let g = Graph::from_edges(4, &[(0, 1, w[0]), (1, 2, w[1]), (2, 3, w[2]), (3, 0, w[3])]).unwrap();
        let m = Matching::new(&g, [0, 2]).unwrap();
        (g, m)
    }

    #[test]
    fn odd_four_cycle() {
        let (g, m) = four_cycle([1, 0, 0, 0]);
        let c = solve_oac_bruteforce(&g, &m).unwrap().unwrap();
        c.check(&g, &m).unwrap();
        assert_eq!(c.weight(&g), 1);
        assert_eq!(c.edges()[0], 0);
        let (g, m) = four_cycle([1, 0, 1, 0]);
        assert!(solve_oac_bruteforce(&g, &m).unwrap().is_none());
    }

    #[test]
    fn designated_edge_outside_every_cycle() {
        // two disjoint matching edges joined by nothing
        let g = Graph::from_edges(4, &[(0, 1, 1), (2, 3, 0)]).unwrap();
        let m = Matching::new(&g, [0, 1]).unwrap();
        assert!(solve_oace_bruteforce(&g, &m, 0).unwrap().is_none());
        assert!(solve_oace_bruteforce(&g, &Matching::new(&g, [0, 1]).unwrap(), 1).unwrap().is_none());
    }

    #[test]
    fn parallel_edge_two_cycle() {
        let g = Graph::from_edges(2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        let c = solve_oace_bruteforce(&g, &m, 0).unwrap().unwrap();
        assert_eq!(c.edges(), &[0, 1]);
        c.check(&g, &m).unwrap();
    }

    #[test]
    fn odd_augmenting_path() {
        let g = Graph::from_edges(4, &[(0, 1, 0), (1, 2, 1), (2, 3, 0)]).unwrap();
        let m = Matching::new(&g, [1]).unwrap();
        let p = solve_oap_bruteforce(&g, &m).unwrap().unwrap();
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(check_augmenting_path(&g, &m, &p).unwrap(), vec![0, 1, 2, 3]);
        let g0 = Graph::from_edges(4, &[(0, 1, 0), (1, 2, 0), (2, 3, 0)]).unwrap();
        assert!(solve_oap_bruteforce(&g0, &Matching::new(&g0, [1]).unwrap()).unwrap().is_none());
    }

    #[test]
    fn disjoint_paths() {
        // s1=0 - t1=1 and s2=2 - t2=3 as two edges
        let g = Graph::from_edges(4, &[(0, 1, 0), (2, 3, 0)]).unwrap();
        let m = Matching::empty();
        assert_eq!(solve_dap_bruteforce(&g, &m, [0, 2, 1, 3]).unwrap(), Some([vec![0], vec![1]]));
        // pairing s1-s2 / t1-t2 only counts for the free variant
        assert!(solve_dap_bruteforce(&g, &m, [0, 1, 2, 3]).unwrap().is_none());
        assert!(solve_fdap_bruteforce(&g, &m, [0, 1, 2, 3]).unwrap().is_some());
    }

    #[test]
    fn terminal_must_be_unmatched() {
        let g = Graph::from_edges(4, &[(0, 1, 0), (2, 3, 0)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        assert!(solve_fdap_bruteforce(&g, &m, [0, 1, 2, 3]).is_err());
    }

    #[test]
    fn directed_cycles() {
        let g = Graph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(solve_bfp_bruteforce(&g, 0, 1).unwrap(), Some(vec![0, 1]));
        let dag = Graph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(solve_bfp_bruteforce(&dag, 0, 2).unwrap().is_none());
        assert!(solve_bfp_bruteforce(&g, 1, 1).is_err());
    }
}
