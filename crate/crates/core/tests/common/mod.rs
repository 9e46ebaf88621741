//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the solvers they are used to check.
#![allow(dead_code)]

use oddmatch_core::{EdgeId, Graph, Vertex};

/// Maximum matching size by exhaustive search: the lowest undecided vertex is
/// either left unmatched or matched to each free neighbour in turn.
pub fn brute_max_matching_size(g: &Graph) -> usize {
    fn rec(g: &Graph, used: &mut [bool], from: usize) -> usize {
        let Some(v) = (from..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = rec(g, used, v + 1);
        for &(x, _) in g.incident(v) {
            if !used[x] {
                used[x] = true;
                best = best.max(1 + rec(g, used, v + 1));
                used[x] = false;
            }
        }
        used[v] = false;
        best
    }
    rec(g, &mut vec![false; g.n()], 0)
}

/// Every perfect matching as a list of edge ids, by trying all edge subsets of
/// size n/2 (only usable for small edge counts).
pub fn perfect_matchings_by_subsets(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.n();
    let m = g.m();
    assert!(m <= 20);
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != n / 2 {
            continue;
        }
        let mut covered = vec![false; n];
        let mut ok = true;
        for id in 0..m {
            if mask >> id & 1 == 1 {
                let e = g.edge(id);
                if covered[e.u] || covered[e.v] {
                    ok = false;
                    break;
                }
                covered[e.u] = true;
                covered[e.v] = true;
            }
        }
        if ok {
            out.push((0..m).filter(|&id| mask >> id & 1 == 1).collect());
        }
    }
    out
}

/// Whether `G - removed` is bipartite, by trying every 2-colouring.
pub fn bipartite_by_colourings(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    (0u32..(1u32 << n)).any(|col| {
        g.edges().iter().all(|e| {
            removed[e.u] || removed[e.v] || (col >> e.u & 1) != (col >> e.v & 1)
        })
    })
}

/// Maximum balanced independent set size / 2 over two explicit sides.
pub fn brute_beta(g: &Graph, side_a: &[Vertex], side_b: &[Vertex]) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let ca = side_a.iter().filter(|&&v| mask >> v & 1 == 1).count();
        let cb = side_b.iter().filter(|&&v| mask >> v & 1 == 1).count();
        if ca != cb || ca + cb != mask.count_ones() as usize || ca <= best {
            continue;
        }
        if g.edges().iter().all(|e| mask >> e.u & 1 == 0 || mask >> e.v & 1 == 0) {
            best = ca;
        }
    }
    best
}

/// Minimum vertex cover weight by subset enumeration.
pub fn brute_min_vc_weight(g: &Graph, weights: &[u64]) -> u64 {
    let n = g.n();
    assert!(n <= 20);
    (0u32..(1u32 << n))
        .filter(|mask| g.edges().iter().all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| weights[v]).sum())
        .min()
        .unwrap_or(0)
}

/// `best_a[x]`: the largest `|A|` over all splits of `V` into `(X, A, B)` with
/// `|X| = x` and `A`, `B` independent; `None` where no split exists. Tries all
/// `3^n` assignments.
pub fn brute_ub_profile(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    assert!(n <= 12);
    let mut best = vec![None; n + 1];
    let mut assign = vec![0u8; n];
    loop {
        let ok = g.edges().iter().all(|e| {
            let (a, b) = (assign[e.u], assign[e.v]);
            a == 0 || b == 0 || a != b
        });
        if ok {
            let x = assign.iter().filter(|&&c| c == 0).count();
            let a = assign.iter().filter(|&&c| c == 1).count();
            if best[x].is_none_or(|b: usize| a > b) {
                best[x] = Some(a);
            }
        }
        let mut i = 0;
        while i < n && assign[i] == 2 {
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        assign[i] += 1;
    }
    best
}

pub fn brute_ub(profile: &[Option<usize>], n: usize, k: usize, l: usize) -> bool {
    profile
        .iter()
        .take(k + 1)
        .flatten()
        .any(|&a| a as i64 >= n as i64 / 2 - l as i64)
}

/// Every independent set of `g`, as a bitmask, by backtracking.
pub fn independent_sets(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n < 64);
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.incident(v).iter().fold(0u64, |acc, &(u, _)| acc | 1 << u))
        .collect();
    let mut out = Vec::new();
    fn rec(v: usize, n: usize, set: u64, blocked: u64, nbr: &[u64], out: &mut Vec<u64>) {
        if v == n {
            out.push(set);
            return;
        }
        if blocked >> v & 1 == 0 {
            rec(v + 1, n, set | 1 << v, blocked | nbr[v], nbr, out);
        }
        rec(v + 1, n, set, blocked, nbr, out);
    }
    rec(0, n, 0, 0, &nbr, &mut out);
    out
}

/// Every matching of `g` with exactly `size` edges, by deciding for the lowest
/// undecided vertex whether it stays unmatched or which later edge covers it.
pub fn matchings_of_size(g: &Graph, size: usize) -> Vec<Vec<EdgeId>> {
    fn rec(g: &Graph, v: usize, left: usize, used: &mut [bool], cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if left == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        let Some(v) = (v..g.n()).find(|&x| !used[x]) else {
            return;
        };
        let free_after = (v..g.n()).filter(|&x| !used[x]).count();
        if free_after < 2 * left {
            return;
        }
        used[v] = true;
        rec(g, v + 1, left, used, cur, out);
        for &(x, id) in g.incident(v) {
            if !used[x] {
                used[x] = true;
                cur.push(id);
                rec(g, v + 1, left - 1, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    rec(g, 0, size, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    out
}

/// A connected piece of a symmetric difference: its edges, its degree-1
/// vertices (empty for a cycle) and its weight.
pub struct Piece {
    pub edges: Vec<EdgeId>,
    pub ends: Vec<Vertex>,
    pub weight: usize,
}

/// Components of the edge set `a △ b`.
pub fn pieces(g: &Graph, a: &[EdgeId], b: &[EdgeId]) -> Vec<Piece> {
    let mut diff: Vec<EdgeId> = a.iter().filter(|e| !b.contains(e)).copied().collect();
    diff.extend(b.iter().filter(|e| !a.contains(e)));
    let mut comp_of_vertex = vec![usize::MAX; g.n()];
    let mut deg = vec![0usize; g.n()];
    for &id in &diff {
        deg[g.edge(id).u] += 1;
        deg[g.edge(id).v] += 1;
    }
    let mut out: Vec<Piece> = Vec::new();
    for &start in &diff {
        let s = g.edge(start).u;
        if comp_of_vertex[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut piece = Piece { edges: Vec::new(), ends: Vec::new(), weight: 0 };
        let mut stack = vec![s];
        comp_of_vertex[s] = id;
        while let Some(v) = stack.pop() {
            if deg[v] == 1 {
                piece.ends.push(v);
            }
            for &e in &diff {
                let edge = g.edge(e);
                if edge.u == v || edge.v == v {
                    let x = if edge.u == v { edge.v } else { edge.u };
                    if !piece.edges.contains(&e) {
                        piece.edges.push(e);
                        piece.weight += edge.w as usize;
                    }
                    if comp_of_vertex[x] == usize::MAX {
                        comp_of_vertex[x] = id;
                        stack.push(x);
                    }
                }
            }
        }
        piece.ends.sort_unstable();
        out.push(piece);
    }
    out
}

/// Odd alternating cycle through `e`: some perfect matching `M'` avoids `e` and
/// the piece of `M △ M'` containing `e` has odd weight.
pub fn oace_by_matchings(g: &Graph, m: &[EdgeId], e: EdgeId) -> bool {
    matchings_of_size(g, g.n() / 2).iter().any(|other| {
        !other.contains(&e)
            && pieces(g, m, other)
                .iter()
                .any(|p| p.edges.contains(&e) && p.weight % 2 == 1)
    })
}

/// Odd augmenting path: some matching one larger than `m` has an odd path piece
/// whose ends are both left uncovered by `m`.
pub fn oap_by_matchings(g: &Graph, m: &[EdgeId]) -> bool {
    let covered = covered_by(g, m);
    matchings_of_size(g, m.len() + 1).iter().any(|other| {
        pieces(g, m, other)
            .iter()
            .any(|p| p.ends.len() == 2 && p.ends.iter().all(|&v| !covered[v]) && p.weight % 2 == 1)
    })
}

/// Disjoint augmenting paths joining the given terminal pairs, in any of the
/// listed pairings.
pub fn paths_by_matchings(g: &Graph, m: &[EdgeId], pairings: &[[[Vertex; 2]; 2]]) -> bool {
    let covered = covered_by(g, m);
    matchings_of_size(g, m.len() + 2).iter().any(|other| {
        let ends: Vec<Vec<Vertex>> = pieces(g, m, other)
            .into_iter()
            .filter(|p| p.ends.len() == 2 && p.ends.iter().all(|&v| !covered[v]))
            .map(|p| p.ends)
            .collect();
        pairings.iter().any(|[a, b]| {
            let mut a = a.to_vec();
            let mut b = b.to_vec();
            a.sort_unstable();
            b.sort_unstable();
            ends.contains(&a) && ends.contains(&b)
        })
    })
}

pub fn covered_by(g: &Graph, m: &[EdgeId]) -> Vec<bool> {
    let mut c = vec![false; g.n()];
    for &id in m {
        c[g.edge(id).u] = true;
        c[g.edge(id).v] = true;
    }
    c
}

/// A simple directed cycle through `s` and `t`, by trying every ordering of
/// every vertex subset that starts at `s`.
pub fn bfp_by_orderings(g: &Graph, s: Vertex, t: Vertex) -> bool {
    let n = g.n();
    let arc = |u: Vertex, v: Vertex| g.incident(u).iter().any(|&(x, _)| x == v);
    fn permute(seq: &mut Vec<Vertex>, rest: &mut Vec<Vertex>, check: &dyn Fn(&[Vertex]) -> bool) -> bool {
        if check(seq) {
            return true;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            seq.push(v);
            let hit = permute(seq, rest, check);
            seq.pop();
            rest.insert(i, v);
            if hit {
                return true;
            }
        }
        false
    }
    let check = |seq: &[Vertex]| {
        seq.len() >= 2
            && seq.contains(&t)
            && seq.windows(2).all(|w| arc(w[0], w[1]))
            && arc(*seq.last().unwrap(), s)
    };
    let mut rest: Vec<Vertex> = (0..n).filter(|&v| v != s).collect();
    permute(&mut vec![s], &mut rest, &check)
}
