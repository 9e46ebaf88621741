//! Instance model: 0/1-edge-weighted multigraphs with stable edge indices.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// An edge `{u, v}` (or arc `u -> v` in a directed graph) with weight 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub w: u8,
}

impl Edge {
    /// The endpoint opposite to `x`. `x` must be an endpoint.
    #[inline]
    pub fn other(&self, x: Vertex) -> Vertex {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    #[inline]
    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

/// Undirected (or, for back-and-forth path instances, directed) multigraph on
/// vertices `0..n`. Parallel edges are allowed; self-loops are not. Each edge
/// keeps the index it was inserted with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<Edge>,
    // (neighbour, edge id), in increasing edge id; out-arcs only when directed
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            directed: false,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn new_directed(n: usize) -> Self {
        Graph {
            directed: true,
            ..Graph::new(n)
        }
    }

    /// Builds an undirected graph from `(u, v, w)` triples; edge `i` gets index `i`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, u8)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new_directed(n);
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    fn check_endpoints(&self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Validation(format!(
                "vertex id {} out of range 0..{}",
                u.max(v),
                self.n
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, w: u8) -> Result<EdgeId> {
        if self.directed {
            return Err(Error::Validation("undirected edge in a directed graph".into()));
        }
        self.check_endpoints(u, v)?;
        if w > 1 {
            return Err(Error::Validation(format!("edge weight {w} is not 0 or 1")));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, w });
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if !self.directed {
            return Err(Error::Validation("arc in an undirected graph".into()));
        }
        self.check_endpoints(u, v)?;
        let id = self.edges.len();
        self.edges.push(Edge { u, v, w: 0 });
        self.adj[u].push((v, id));
        Ok(id)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `(neighbour, edge id)` pairs incident to `v` (out-arcs for directed graphs),
    /// sorted by edge id.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Sum of the weights of the given edges.
    pub fn weight_of<'a>(&self, ids: impl IntoIterator<Item = &'a EdgeId>) -> usize {
        ids.into_iter().map(|&e| self.edges[e].w as usize).sum()
    }

    /// Sorted, deduplicated neighbour lists (parallel edges collapsed).
    pub fn simple_adjacency(&self) -> Vec<Vec<Vertex>> {
        self.adj
            .iter()
            .map(|row| {
                let mut r: Vec<Vertex> = row.iter().map(|&(x, _)| x).collect();
                r.sort_unstable();
                r.dedup();
                r
            })
            .collect()
    }

    /// Copy of the graph that keeps every vertex id but only the edges accepted by
    /// `keep`. Returns the new graph and, for each new edge, its index here.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(EdgeId, &Edge) -> bool) -> (Graph, Vec<EdgeId>) {
        let mut g = Graph {
            n: self.n,
            directed: self.directed,
            edges: Vec::new(),
            adj: vec![Vec::new(); self.n],
        };
        let mut map = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if keep(id, e) {
                let nid = g.edges.len();
                g.edges.push(*e);
                g.adj[e.u].push((e.v, nid));
                if !self.directed {
                    g.adj[e.v].push((e.u, nid));
                }
                map.push(id);
            }
        }
        (g, map)
    }

    /// Proper 2-colouring of the subgraph induced by the vertices with
    /// `removed[v] == false`, or `None` if it has an odd cycle. Each component is
    /// coloured by BFS from its smallest vertex, which gets colour 0.
    pub fn two_coloring_without(&self, removed: &[bool]) -> Option<Vec<Option<u8>>> {
        let mut color = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if removed[root] || color[root].is_some() {
                continue;
            }
            color[root] = Some(0u8);
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &(y, _) in &self.adj[x] {
                    if removed[y] {
                        continue;
                    }
                    match color[y] {
                        None => {
                            color[y] = Some(1 - cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color)
    }

    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        self.two_coloring_without(&vec![false; self.n])
            .map(|c| c.into_iter().map(|x| x.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Deterministic bipartition from [`Graph::two_coloring`] (colour 0 on side A).
    pub fn bipartition(&self) -> Option<Bipartition> {
        self.two_coloring()
            .map(|c| Bipartition::from_mask(c.iter().map(|&x| x == 0).collect()))
    }
}

/// Split of the vertex set into two sides; used with graphs whose edges all cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    in_a: Vec<bool>,
}

impl Bipartition {
    pub fn from_mask(in_a: Vec<bool>) -> Self {
        Bipartition { in_a }
    }

    /// Builds the bipartition with the given A side; everything else goes to B.
    pub fn with_side_a(n: usize, side_a: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut in_a = vec![false; n];
        for v in side_a {
            if v >= n {
                return Err(Error::Usage(format!("vertex {v} out of range in bipartition")));
            }
            in_a[v] = true;
        }
        Ok(Bipartition { in_a })
    }

    /// Builds the bipartition from two explicit sides, which must partition `0..n`.
    pub fn from_sides(n: usize, side_a: &[Vertex], side_b: &[Vertex]) -> Result<Self> {
        let mut seen = vec![0u8; n];
        for &v in side_a.iter().chain(side_b) {
            if v >= n {
                return Err(Error::Usage(format!("vertex {v} out of range in bipartition")));
            }
            seen[v] += 1;
        }
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            return Err(Error::Usage(format!(
                "sides do not partition the vertex set (vertex {v})"
            )));
        }
        Bipartition::with_side_a(n, side_a.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.in_a.len()
    }

    #[inline]
    pub fn in_a(&self, v: Vertex) -> bool {
        self.in_a[v]
    }

    pub fn side_a(&self) -> Vec<Vertex> {
        (0..self.in_a.len()).filter(|&v| self.in_a[v]).collect()
    }

    pub fn side_b(&self) -> Vec<Vertex> {
        (0..self.in_a.len()).filter(|&v| !self.in_a[v]).collect()
    }

    /// Checks that this is a bipartition of `g`: same vertex count, every edge crosses.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.in_a.len() != g.n() {
            return Err(Error::Usage(format!(
                "bipartition covers {} vertices, graph has {}",
                self.in_a.len(),
                g.n()
            )));
        }
        for (id, e) in g.edges().iter().enumerate() {
            if self.in_a[e.u] == self.in_a[e.v] {
                return Err(Error::Usage(format!(
                    "edge {id} = {{{}, {}}} does not cross the bipartition",
                    e.u, e.v
                )));
            }
        }
        Ok(())
    }
}
