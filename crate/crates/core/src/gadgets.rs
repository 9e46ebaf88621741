//! Instance transformers between the back-and-forth path, alternating cycle and
//! augmenting path problems, with witness maps in both directions, and the
//! polynomial algorithm for free disjoint augmenting paths.

use std::fmt::Write as _;

use crate::alternating::{sorted_symmetric_difference, Matching};
use crate::error::{usage, Error, Result};
use crate::format::Terminals;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::maximum_matching;
use crate::search::{check_augmenting_path, path_vertices, PathPair};

/// How source items appear in a target instance. Recorded at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    /// Source vertex to the target vertices representing it.
    pub vertex_map: Vec<Vec<Vertex>>,
    /// Source edge (or arc) to the target edges representing it; empty if the
    /// edge was deleted.
    pub edge_map: Vec<Vec<EdgeId>>,
    /// Designated edge of the target, if any.
    pub designated: Option<EdgeId>,
    pub terminals: Terminals,
}

impl GadgetMap {
    /// Target edge to source edge, for edges that have a source.
    pub fn edge_origin(&self, target_m: usize) -> Vec<Option<EdgeId>> {
        let mut out = vec![None; target_m];
        for (src, tgts) in self.edge_map.iter().enumerate() {
            for &t in tgts {
                out[t] = Some(src);
            }
        }
        out
    }

    /// Sidecar text: `v <src> <tgt>...` and `e <src> <tgt>...` lines, then the
    /// designated edge and terminals of the target.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, tgts) in self.vertex_map.iter().enumerate() {
            let _ = write!(out, "v {v}");
            for t in tgts {
                let _ = write!(out, " {t}");
            }
            out.push('\n');
        }
        for (e, tgts) in self.edge_map.iter().enumerate() {
            let _ = write!(out, "e {e}");
            for t in tgts {
                let _ = write!(out, " {t}");
            }
            out.push('\n');
        }
        if let Some(x) = self.designated {
            let _ = writeln!(out, "x {x}");
        }
        let t = &self.terminals;
        for (name, v) in [("s", t.s), ("t", t.t), ("s1", t.s1), ("s2", t.s2), ("t1", t.t1), ("t2", t.t2)] {
            if let Some(v) = v {
                let _ = writeln!(out, "{name} {v}");
            }
        }
        out
    }
}

fn identity_vertices(n: usize) -> Vec<Vec<Vertex>> {
    (0..n).map(|v| vec![v]).collect()
}

/// Copy of `g` without edge `drop`; later edges shift down by one.
fn delete_edge(g: &Graph, drop: EdgeId) -> (Graph, Vec<Vec<EdgeId>>) {
    let mut out = Graph::new(g.n());
    let mut map = Vec::with_capacity(g.m());
    for (id, e) in g.edges().iter().enumerate() {
        if id == drop {
            map.push(Vec::new());
        } else {
            map.push(vec![out.add_edge(e.u, e.v, e.w).unwrap()]);
        }
    }
    (out, map)
}

fn map_matching(target: &Graph, m: &Matching, map: &[Vec<EdgeId>]) -> Matching {
    Matching::new(target, m.edges().iter().flat_map(|&e| map[e].iter().copied())).unwrap()
}

/// Whether the instance meets the hardness side conditions: bipartite, exactly
/// one edge of weight 1, and that edge in `m`.
pub fn has_single_weight_one_matching_edge(g: &Graph, m: &Matching) -> bool {
    let heavy: Vec<EdgeId> = (0..g.m()).filter(|&id| g.edge(id).w == 1).collect();
    g.is_bipartite() && heavy.len() == 1 && m.contains(heavy[0])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OaceInstance {
    pub graph: Graph,
    pub matching: Matching,
    pub designated: EdgeId,
}

/// Splits each vertex `v` of the digraph into `v⁻ = v` and `v⁺ = n + v`.
/// Edge `v` is `{v⁻, v⁺}` (weight 1 only for `v = t`), and arc `j = (u, v)`
/// becomes edge `n + j = {v⁻, u⁺}` of weight 0. The matching is the split
/// edges and the designated edge is `{s⁻, s⁺}`.
pub fn bfp_to_oace(g: &Graph, s: Vertex, t: Vertex) -> Result<(OaceInstance, GadgetMap)> {
    if !g.is_directed() {
        return usage("back-and-forth paths need a directed graph");
    }
    let n = g.n();
    if s >= n || t >= n {
        return usage("terminal out of range");
    }
    if s == t {
        return usage("s and t must differ");
    }
    let mut out = Graph::new(2 * n);
    for v in 0..n {
        out.add_edge(v, n + v, u8::from(v == t))?;
    }
    let mut edge_map = Vec::with_capacity(g.m());
    for e in g.edges() {
        edge_map.push(vec![out.add_edge(e.v, n + e.u, 0)?]);
    }
    let matching = Matching::new(&out, 0..n)?;
    let map = GadgetMap {
        vertex_map: (0..n).map(|v| vec![v, n + v]).collect(),
        edge_map,
        designated: Some(s),
        terminals: Terminals::default(),
    };
    let inst = OaceInstance {
        graph: out,
        matching,
        designated: s,
    };
    debug_assert!(has_single_weight_one_matching_edge(&inst.graph, &inst.matching));
    Ok((inst, map))
}

/// The alternating cycle standing for a directed cycle given by its arcs.
pub fn bfp_cycle_to_oace(src: &Graph, map: &GadgetMap, arcs: &[EdgeId]) -> Vec<EdgeId> {
    // split edge of v is edge v
    arcs.iter()
        .flat_map(|&a| [src.edge(a).u, map.edge_map[a][0]])
        .collect()
}

/// The directed cycle (arcs, starting at `s`) behind an alternating cycle of
/// the split graph.
pub fn oace_cycle_to_bfp(src: &Graph, map: &GadgetMap, s: Vertex, cycle: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let n = src.n();
    let origin = map.edge_origin(n + src.m());
    let mut next = vec![None; n];
    for &id in cycle {
        if id >= n {
            let Some(a) = origin.get(id).copied().flatten() else {
                return usage(format!("edge {id} has no source arc"));
            };
            let arc = src.edge(a);
            next[arc.u] = Some(a);
        }
    }
    let mut arcs = Vec::new();
    let mut cur = s;
    while let Some(a) = next[cur].take() {
        arcs.push(a);
        cur = src.edge(a).v;
    }
    if cur != s || arcs.is_empty() {
        return usage("cycle does not map to a directed cycle through s");
    }
    Ok(arcs)
}

/// Which endpoint of the designated edge has its incident weights switched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SwitchEnd {
    #[default]
    Lower,
    Higher,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OapInstance {
    pub graph: Graph,
    pub matching: Matching,
}

/// Deletes the designated edge `e = {u, v}`; if `w(e) = 1`, every remaining
/// edge at `u` has its weight switched.
pub fn oace_to_oap(g: &Graph, m: &Matching, e: EdgeId, end: SwitchEnd) -> Result<(OapInstance, GadgetMap)> {
    if g.is_directed() {
        return usage("expected an undirected graph");
    }
    m.check(g)?;
    if !m.is_perfect(g) {
        return usage("the matching is not perfect");
    }
    if !m.contains(e) {
        return usage(format!("designated edge {e} is not in the matching"));
    }
    let de = g.edge(e);
    let u = match end {
        SwitchEnd::Lower => de.u.min(de.v),
        SwitchEnd::Higher => de.u.max(de.v),
    };
    let (mut out, edge_map) = delete_edge(g, e);
    if de.w == 1 {
        let mut flipped = Graph::new(out.n());
        for x in out.edges() {
            let w = if x.touches(u) { 1 - x.w } else { x.w };
            flipped.add_edge(x.u, x.v, w)?;
        }
        out = flipped;
    }
    let matching = map_matching(&out, m, &edge_map);
    let map = GadgetMap {
        vertex_map: identity_vertices(g.n()),
        edge_map,
        designated: None,
        terminals: Terminals::default(),
    };
    Ok((OapInstance { graph: out, matching }, map))
}

/// Drops the designated edge from a cycle and maps the rest into the target.
pub fn oace_cycle_to_oap(map: &GadgetMap, e: EdgeId, cycle: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let Some(pos) = cycle.iter().position(|&x| x == e) else {
        return usage("cycle does not use the designated edge");
    };
    Ok(cycle[pos + 1..]
        .iter()
        .chain(&cycle[..pos])
        .map(|&x| map.edge_map[x][0])
        .collect())
}

/// Closes an augmenting path of the target with the designated edge.
pub fn oap_path_to_oace(map: &GadgetMap, e: EdgeId, path: &[EdgeId], target_m: usize) -> Vec<EdgeId> {
    let origin = map.edge_origin(target_m);
    std::iter::once(e)
        .chain(path.iter().map(|&x| origin[x].expect("every target edge has a source")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DapInstance {
    pub graph: Graph,
    pub matching: Matching,
    /// `[s1, s2, t1, t2]`
    pub terminals: [Vertex; 4],
}

/// Checks the shape an augmenting path instance needs before the
/// disjoint-paths step, returning the weight-1 matching edge.
pub fn check_oap_shape(g: &Graph, m: &Matching) -> Result<EdgeId> {
    if g.is_directed() {
        return usage("expected an undirected graph");
    }
    m.check(g)?;
    if !g.is_bipartite() {
        return Err(Error::Shape("graph is not bipartite".into()));
    }
    let heavy: Vec<EdgeId> = (0..g.m()).filter(|&id| g.edge(id).w == 1).collect();
    if heavy.len() != 1 {
        return Err(Error::Shape(format!(
            "expected exactly one edge of weight 1, found {}",
            heavy.len()
        )));
    }
    if !m.contains(heavy[0]) {
        return Err(Error::Shape("the weight-1 edge is not a matching edge".into()));
    }
    let n = g.n();
    if n % 2 == 1 || m.len() + 1 != n / 2 {
        return Err(Error::Shape(format!(
            "matching has size {} but must have size n/2 - 1 with n = {n}",
            m.len()
        )));
    }
    Ok(heavy[0])
}

/// `s1 < s2` are the unmatched vertices, `t1 < t2` the ends of the unique
/// weight-1 matching edge, which is deleted.
pub fn oap_to_dap(g: &Graph, m: &Matching) -> Result<(DapInstance, GadgetMap)> {
    let e = check_oap_shape(g, m)?;
    let covered = m.covered(g);
    let free: Vec<Vertex> = (0..g.n()).filter(|&v| !covered[v]).collect();
    let de = g.edge(e);
    let terminals = [free[0], free[1], de.u.min(de.v), de.u.max(de.v)];
    let (out, edge_map) = delete_edge(g, e);
    let matching = map_matching(&out, m, &edge_map);
    let map = GadgetMap {
        vertex_map: identity_vertices(g.n()),
        edge_map,
        designated: None,
        terminals: Terminals {
            s1: Some(terminals[0]),
            s2: Some(terminals[1]),
            t1: Some(terminals[2]),
            t2: Some(terminals[3]),
            ..Terminals::default()
        },
    };
    Ok((
        DapInstance {
            graph: out,
            matching,
            terminals,
        },
        map,
    ))
}

/// Splits an odd augmenting path at the weight-1 edge `e` into the paths from
/// `s1` and from `s2`, in target edge indices.
pub fn oap_path_to_dap(src: &Graph, map: &GadgetMap, e: EdgeId, path: &[EdgeId]) -> Result<PathPair> {
    let Some(pos) = path.iter().position(|&x| x == e) else {
        return usage("path does not use the weight-1 edge");
    };
    let verts = path_vertices(src, path).ok_or_else(|| Error::Usage("not a path".into()))?;
    let to_target = |xs: &[EdgeId]| -> Vec<EdgeId> { xs.iter().map(|&x| map.edge_map[x][0]).collect() };
    let head = to_target(&path[..pos]);
    let mut tail = to_target(&path[pos + 1..]);
    tail.reverse();
    let s1 = map.terminals.s1.expect("terminals recorded");
    Ok(if verts[0] == s1 { [head, tail] } else { [tail, head] })
}

/// Joins two disjoint paths (from `s1` and from `s2`) through the deleted
/// weight-1 edge.
pub fn dap_paths_to_oap(g: &Graph, map: &GadgetMap, e: EdgeId, paths: &PathPair) -> Vec<EdgeId> {
    let origin = map.edge_origin(g.m());
    let back = |xs: &[EdgeId]| -> Vec<EdgeId> { xs.iter().map(|&x| origin[x].expect("mapped")).collect() };
    let mut out = back(&paths[0]);
    out.push(e);
    let mut second = back(&paths[1]);
    second.reverse();
    out.extend(second);
    out
}

/// Free disjoint augmenting paths: delete the unmatched vertices other than the
/// terminals and look for a perfect matching `M'`; the two paths are the
/// components of `M △ M'` that contain terminals.
pub fn solve_fdap(g: &Graph, m: &Matching, t: [Vertex; 4]) -> Result<Option<PathPair>> {
    if g.is_directed() {
        return usage("expected an undirected graph");
    }
    m.check(g)?;
    let covered = m.covered(g);
    for (i, &v) in t.iter().enumerate() {
        if v >= g.n() {
            return usage(format!("terminal {v} is not a vertex"));
        }
        if t[..i].contains(&v) {
            return usage(format!("terminal {v} appears twice"));
        }
        if covered[v] {
            return usage(format!("terminal {v} is not unmatched"));
        }
    }
    let keep: Vec<bool> = (0..g.n()).map(|v| covered[v] || t.contains(&v)).collect();
    let mut pos = vec![usize::MAX; g.n()];
    let kept: Vec<Vertex> = (0..g.n()).filter(|&v| keep[v]).collect();
    for (i, &v) in kept.iter().enumerate() {
        pos[v] = i;
    }
    let mut sub = Graph::new(kept.len());
    let mut back = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if keep[e.u] && keep[e.v] {
            sub.add_edge(pos[e.u], pos[e.v], e.w)?;
            back.push(id);
        }
    }
    let mm = maximum_matching(&sub);
    if !mm.is_perfect(&sub) {
        return Ok(None);
    }
    let mut other: Vec<EdgeId> = mm.edges().iter().map(|&i| back[i]).collect();
    other.sort_unstable();
    let diff = sorted_symmetric_difference(m.edges(), &other);
    let mut in_diff = vec![false; g.m()];
    for &id in &diff {
        in_diff[id] = true;
    }
    let trace = |from: Vertex| -> (Vec<EdgeId>, Vertex) {
        let mut path = Vec::new();
        let mut cur = from;
        let mut last = None;
        loop {
            let step = g
                .incident(cur)
                .iter()
                .find(|&&(_, id)| in_diff[id] && Some(id) != last);
            match step {
                Some(&(x, id)) => {
                    path.push(id);
                    last = Some(id);
                    cur = x;
                }
                None => return (path, cur),
            }
        }
    };
    let (first, end_first) = trace(t[0]);
    let other_start = t[1..].iter().copied().find(|&v| v != end_first).unwrap();
    let (second, _) = trace(other_start);
    for p in [&first, &second] {
        check_augmenting_path(g, m, p).expect("symmetric difference yields augmenting paths");
    }
    Ok(Some([first, second]))
}
