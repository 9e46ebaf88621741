#![allow(dead_code)]

use oddmatch_core::format::{Instance, Problem};
use oddmatch_core::generate::{random_digraph, random_graph, random_with_pm};
use oddmatch_core::Vertex;

fn with(graph: oddmatch_core::Graph, problem: Problem) -> Instance {
    Instance::new(graph, problem)
}

/// Planted perfect matching with its first `drop` edges removed from the
/// matching (not from the graph); returns the freed vertices in order.
fn partial(n: usize, p: f64, seed: u64, problem: Problem, drop: usize) -> (Instance, Vec<Vertex>) {
    let (g, m) = random_with_pm(n, p, seed);
    let mut inst = with(g, problem);
    let mut freed = Vec::new();
    for &id in &m.edges()[..drop] {
        let e = inst.graph.edge(id);
        freed.extend([e.u, e.v]);
    }
    inst.header.matching = m.edges()[drop..].to_vec();
    (inst, freed)
}

/// Random graph with a greedy matching of at most `(n - 4) / 2` edges, scanned
/// from a seed-dependent offset; the terminals are four unmatched vertices.
pub fn paths_instance(n: usize, p: f64, seed: u64, problem: Problem) -> Instance {
    let g = random_graph(n, p, seed);
    let mut used = vec![false; n];
    let mut ids = Vec::new();
    for i in 0..g.m() {
        let id = (i * 7 + seed as usize) % g.m();
        let e = g.edge(id);
        if ids.len() < (n - 4) / 2 && !used[e.u] && !used[e.v] && (id + seed as usize) % 3 != 0 {
            used[e.u] = true;
            used[e.v] = true;
            ids.push(id);
        }
    }
    let free: Vec<Vertex> = (0..n).filter(|&v| !used[v]).collect();
    let r = seed as usize % free.len();
    let pick: Vec<Vertex> = (0..4).map(|i| free[(r + i) % free.len()]).collect();
    let mut inst = with(g, problem);
    ids.sort_unstable();
    inst.header.matching = ids;
    let t = &mut inst.header.terminals;
    (t.s1, t.s2, t.t1, t.t2) = (Some(pick[0]), Some(pick[1]), Some(pick[2]), Some(pick[3]));
    inst
}

/// A few instances of every problem, small enough for the exhaustive solvers.
/// Everything is a function of `seed`.
pub fn corpus_for(seed: u64) -> Vec<Instance> {
    let p = [0.3, 0.5, 0.7][(seed % 3) as usize];
    let mut out = Vec::new();

    let n = 6 + 2 * (seed % 3) as usize;
    for problem in [Problem::Em, Problem::Bcpm, Problem::Cpm] {
        let mut inst = with(random_graph(n, p, seed), problem);
        inst.header.k = Some((seed % (n as u64 / 2 + 1)) as i64);
        out.push(inst);
    }
    let mut odd = with(random_graph(7, p, seed), Problem::Em);
    odd.header.k = Some(1);
    out.push(odd);

    let (g, m) = random_with_pm(8, p, seed);
    let mut oac = with(g.clone(), Problem::Oac);
    oac.header.matching = m.edges().to_vec();
    out.push(oac);
    let mut oace = with(g, Problem::Oace);
    oace.header.matching = m.edges().to_vec();
    oace.header.designated = Some(m.edges()[(seed % 4) as usize]);
    out.push(oace);

    out.push(partial(8, p, seed, Problem::Oap, 1).0);
    for problem in [Problem::Dap, Problem::Fdap] {
        out.push(paths_instance(10, p, seed, problem));
    }

    let mut bfp = with(random_digraph(5 + (seed % 3) as usize, 0.35, seed), Problem::Bfp);
    bfp.header.terminals.s = Some(0);
    bfp.header.terminals.t = Some(1);
    out.push(bfp);

    let mut oct = with(random_graph(10, p, seed), Problem::Oct);
    oct.header.k = Some(2 + (seed % 3) as i64);
    out.push(oct);

    let (g, _) = random_with_pm(8, p, seed);
    let mut ub = with(g, Problem::Ub);
    ub.header.k = Some((seed % 4) as i64);
    ub.header.l = Some((seed % 3) as i64);
    out.push(ub);

    let mut wvc = with(random_graph(7, p, seed), Problem::Wvc);
    wvc.header.vertex_weights = Some((0..7).map(|v| (seed + 3 * v) % 4).collect());
    wvc.header.k = Some(3 + (seed % 5) as i64);
    out.push(wvc);

    let mut uvc = with(random_graph(10, p, seed), Problem::Uvc);
    uvc.header.k = Some(3 + (seed % 4) as i64);
    out.push(uvc);
    out
}

pub fn corpus(seeds: std::ops::Range<u64>) -> Vec<Instance> {
    seeds.flat_map(corpus_for).collect()
}
