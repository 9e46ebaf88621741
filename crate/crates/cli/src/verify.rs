use oddmatch_core::format::{Answer, Instance, Problem, Solution, WitnessRecord};
use oddmatch_core::oct::OctDecomposition;
use oddmatch_core::search::check_augmenting_path;
use oddmatch_core::vertex_cover::is_vertex_cover;
use oddmatch_core::{AlternatingCycle, EdgeId, Error, Graph, Matching, Result, Vertex};

/// Outcome of a structural check. A rejection starts with the name of the
/// first violated condition, e.g. `parity: ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(String),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        *self == Verdict::Accept
    }

    pub fn to_line(&self) -> String {
        match self {
            Verdict::Accept => "ACCEPT".into(),
            Verdict::Reject(why) => format!("REJECT {why}"),
        }
    }
}

/// `Err` carries the rejection reason through `?`.
type Check<T> = std::result::Result<T, String>;

fn reject<T>(condition: &str, detail: impl std::fmt::Display) -> Check<T> {
    Err(format!("{condition}: {detail}"))
}

fn param(inst: &Instance, v: Option<i64>, name: &str) -> Result<i64> {
    v.ok_or_else(|| Error::Usage(format!("{} instance has no '{name}' record", inst.header.problem)))
}

/// Checks `sol` against `inst` without solving anything. Errors are reserved
/// for instances lacking the records their problem needs.
pub fn verify(inst: &Instance, sol: &Solution) -> Result<Verdict> {
    if sol.answer != Answer::Yes {
        return Ok(if sol.witness.is_empty() {
            Verdict::Accept
        } else {
            Verdict::Reject("witness: a negative answer carries no witness".into())
        });
    }
    let g = &inst.graph;
    let h = &inst.header;
    let checked = match h.problem {
        Problem::Em => {
            let k = param(inst, h.k, "k")?;
            perfect_matching(g, sol).and_then(|w| {
                if w as i64 != k {
                    return reject("weight", format!("matching weighs {w}, expected {k}"));
                }
                Ok(())
            })
        }
        Problem::Bcpm | Problem::Cpm => {
            let k = param(inst, h.k, "k")?;
            let bounded = h.problem == Problem::Bcpm;
            perfect_matching(g, sol).and_then(|w| {
                if w as i64 % 2 != k % 2 {
                    return reject("parity", format!("weight {w} and k = {k} differ in parity"));
                }
                if bounded && w as i64 > k {
                    return reject("bound", format!("weight {w} exceeds k = {k}"));
                }
                Ok(())
            })
        }
        Problem::Oac | Problem::Oace => {
            let m = instance_matching(inst)?;
            let x = match h.problem {
                Problem::Oace => Some(
                    h.designated
                        .ok_or_else(|| Error::Usage("oace instance has no designated edge 'x'".into()))?,
                ),
                _ => None,
            };
            odd_cycle(g, &m, x, sol)
        }
        Problem::Oap => {
            let m = instance_matching(inst)?;
            single(sol, "path").and_then(|p| match p {
                WitnessRecord::Path(es) => {
                    augmenting(g, &m, es)?;
                    odd(g, es)
                }
                _ => reject("witness format", "expected one 'path' record"),
            })
        }
        Problem::Dap | Problem::Fdap => {
            let m = instance_matching(inst)?;
            let t = h
                .terminals
                .four()
                .ok_or_else(|| Error::Usage("instance needs terminals s1, s2, t1 and t2".into()))?;
            path_pair(g, &m, t, h.problem == Problem::Fdap, sol)
        }
        Problem::Bfp => {
            let (Some(s), Some(t)) = (h.terminals.s, h.terminals.t) else {
                return Err(Error::Usage("bfp instance needs terminals s and t".into()));
            };
            directed_cycle(g, s, t, sol)
        }
        Problem::Oct | Problem::Ub => {
            let k = param(inst, h.k, "k")?;
            let l = if h.problem == Problem::Ub {
                Some(param(inst, h.l, "l")?)
            } else {
                None
            };
            decomposition(g, k, l, sol)
        }
        Problem::Wvc | Problem::Uvc => {
            let k = param(inst, h.k, "k")?;
            let weights = match h.problem {
                Problem::Wvc => h
                    .vertex_weights
                    .clone()
                    .ok_or_else(|| Error::Usage("wvc instance has no 'w' records".into()))?,
                _ => vec![1; g.n()],
            };
            cover(g, &weights, k, sol)
        }
    };
    Ok(match checked {
        Ok(()) => Verdict::Accept,
        Err(why) => Verdict::Reject(why),
    })
}

fn instance_matching(inst: &Instance) -> Result<Matching> {
    Matching::new(&inst.graph, inst.header.matching.iter().copied())
}

fn edge_ids(g: &Graph, ids: &[EdgeId]) -> Check<()> {
    match ids.iter().find(|&&e| e >= g.m()) {
        Some(e) => reject("edge index", format!("{e} is not an edge (m = {})", g.m())),
        None => Ok(()),
    }
}

fn vertex_ids(g: &Graph, vs: &[Vertex]) -> Check<()> {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => reject("vertex", format!("{v} is not a vertex (n = {})", g.n())),
        None => Ok(()),
    }
}

fn odd(g: &Graph, es: &[EdgeId]) -> Check<()> {
    let w = g.weight_of(es);
    if w % 2 == 0 {
        return reject("parity", format!("weight {w} is even"));
    }
    Ok(())
}

fn single<'a>(sol: &'a Solution, what: &str) -> Check<&'a WitnessRecord> {
    match sol.witness.as_slice() {
        [r] => Ok(r),
        rs => reject("witness format", format!("expected one '{what}' record, found {} records", rs.len())),
    }
}

/// Returns the weight of the perfect matching given by `m` records.
fn perfect_matching(g: &Graph, sol: &Solution) -> Check<usize> {
    if sol.witness.iter().any(|r| !matches!(r, WitnessRecord::MatchingEdge(_))) {
        return reject("witness format", "expected only 'm' records");
    }
    let ids = sol.matching_edges();
    edge_ids(g, &ids)?;
    let m = match Matching::new(g, ids.iter().copied()) {
        Ok(m) => m,
        Err(e) => return reject("matching", e),
    };
    if !m.is_perfect(g) {
        return reject("perfect", format!("{} edges cover {} of {} vertices", m.len(), 2 * m.len(), g.n()));
    }
    Ok(m.weight(g))
}

fn odd_cycle(g: &Graph, m: &Matching, designated: Option<EdgeId>, sol: &Solution) -> Check<()> {
    let WitnessRecord::Cycle(es) = single(sol, "c")? else {
        return reject("witness format", "expected one 'c' record");
    };
    edge_ids(g, es)?;
    if let Some(x) = designated {
        if !es.contains(&x) {
            return reject("designated edge", format!("cycle does not use edge {x}"));
        }
    }
    if let Err(e) = AlternatingCycle::new(g, m, es.clone()) {
        return reject("alternation", e);
    }
    odd(g, es)
}

fn augmenting(g: &Graph, m: &Matching, es: &[EdgeId]) -> Check<Vec<Vertex>> {
    edge_ids(g, es)?;
    check_augmenting_path(g, m, es).or_else(|e| reject("augmenting path", e))
}

fn path_pair(g: &Graph, m: &Matching, t: [Vertex; 4], free: bool, sol: &Solution) -> Check<()> {
    let paths: Vec<&Vec<EdgeId>> = sol
        .witness
        .iter()
        .filter_map(|r| match r {
            WitnessRecord::Path(es) => Some(es),
            _ => None,
        })
        .collect();
    if paths.len() != 2 || sol.witness.len() != 2 {
        return reject("witness format", "expected two 'path' records");
    }
    let mut ends = Vec::new();
    let mut used = vec![false; g.n()];
    for es in paths {
        let vs = augmenting(g, m, es)?;
        for &v in &vs {
            if std::mem::replace(&mut used[v], true) {
                return reject("disjointness", format!("vertex {v} lies on both paths"));
            }
        }
        let (a, b) = (vs[0], *vs.last().unwrap());
        ends.push([a.min(b), a.max(b)]);
    }
    let [s1, s2, t1, t2] = t;
    let mut pairings = vec![[[s1, t1], [s2, t2]], [[s1, t2], [s2, t1]]];
    if free {
        pairings.push([[s1, s2], [t1, t2]]);
    }
    let ok = pairings.iter().any(|pair| {
        let mut want: Vec<[Vertex; 2]> = pair.iter().map(|&[a, b]| [a.min(b), a.max(b)]).collect();
        let mut got = ends.clone();
        want.sort_unstable();
        got.sort_unstable();
        want == got
    });
    if !ok {
        return reject("terminals", format!("path ends {ends:?} do not pair up the terminals"));
    }
    Ok(())
}

fn directed_cycle(g: &Graph, s: Vertex, t: Vertex, sol: &Solution) -> Check<()> {
    let WitnessRecord::VertexCycle(vs) = single(sol, "vc")? else {
        return reject("witness format", "expected one 'vc' record");
    };
    vertex_ids(g, vs)?;
    if vs.len() < 2 {
        return reject("cycle", "a directed cycle needs at least two vertices");
    }
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return reject("cycle", format!("vertex {v} repeats"));
        }
    }
    for i in 0..vs.len() {
        let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
        if !g.incident(a).iter().any(|&(x, _)| x == b) {
            return reject("arc", format!("no arc ({a}, {b})"));
        }
    }
    if !seen[s] || !seen[t] {
        return reject("terminals", "cycle misses s or t");
    }
    Ok(())
}

fn decomposition(g: &Graph, k: i64, l: Option<i64>, sol: &Solution) -> Check<()> {
    let set = |tag: char| -> Check<Vec<Vertex>> {
        match sol.vertex_set(tag) {
            Some(vs) => {
                vertex_ids(g, vs)?;
                Ok(vs.to_vec())
            }
            None => reject("witness format", format!("missing '{tag}' record")),
        }
    };
    if sol.witness.len() != 3 {
        return reject("witness format", "expected 'X', 'A' and 'B' records");
    }
    let d = OctDecomposition {
        transversal: set('X')?,
        color_a: set('A')?,
        color_b: set('B')?,
    };
    if let Err(e) = d.check(g) {
        return reject("decomposition", e);
    }
    if d.size() as i64 > k {
        return reject("bound", format!("|X| = {} exceeds k = {k}", d.size()));
    }
    if let Some(l) = l {
        let need = g.n() as i64 / 2 - l;
        if (d.color_a.len() as i64) < need {
            return reject("balance", format!("|A| = {} is below n/2 - l = {need}", d.color_a.len()));
        }
    }
    Ok(())
}

fn cover(g: &Graph, weights: &[u64], k: i64, sol: &Solution) -> Check<()> {
    let WitnessRecord::VertexSet('X', vs) = single(sol, "X")? else {
        return reject("witness format", "expected one 'X' record");
    };
    vertex_ids(g, vs)?;
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() {
        return reject("vertex", "a vertex is listed twice");
    }
    if !is_vertex_cover(g, vs) {
        let e = g
            .edges()
            .iter()
            .find(|e| !vs.contains(&e.u) && !vs.contains(&e.v))
            .expect("an uncovered edge exists");
        return reject("cover", format!("edge {{{}, {}}} is uncovered", e.u, e.v));
    }
    let w: u64 = vs.iter().map(|&v| weights[v]).sum();
    if w as i64 > k {
        return reject("bound", format!("cover weighs {w}, exceeding k = {k}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddmatch_core::format::{parse_instance, parse_solution};

    const FOUR_CYCLE: &str = "e 0 1 1\ne 1 2 0\ne 2 3 1\ne 3 0 0\n";

    fn run(inst: &str, sol: &str) -> Verdict {
        verify(&parse_instance(inst).unwrap(), &parse_solution(sol).unwrap()).unwrap()
    }

    #[test]
    fn exact_matching_of_weight_k() {
        let inst = format!("p em 4 4\n{FOUR_CYCLE}k 2\n");
        assert!(run(&inst, "YES\nm 0\nm 2\n").is_accept());
        let v = run(&inst, "YES\nm 1\nm 3\n");
        assert!(v.to_line().starts_with("REJECT weight"), "{v:?}");
    }

    #[test]
    fn wrong_parity_is_named() {
        let inst = format!("p bcpm 4 4\n{FOUR_CYCLE}k 1\n");
        let v = run(&inst, "YES\nm 1\nm 3\n");
        assert!(v.to_line().starts_with("REJECT parity"), "{v:?}");
    }

    #[test]
    fn cycle_missing_designated_edge() {
        // two disjoint 4-cycles; the witness is the odd cycle on 0..4 but the
        // designated edge sits on the other one
        let inst = "p oace 8 8\ne 0 1 1\ne 1 2 0\ne 2 3 0\ne 3 0 0\ne 4 5 0\ne 5 6 0\ne 6 7 0\ne 7 4 1\nm 0\nm 2\nm 4\nm 6\nx 4\n";
        let v = run(inst, "YES\nc 0 1 2 3\n");
        assert!(v.to_line().starts_with("REJECT designated edge"), "{v:?}");
        assert!(run(inst, "YES\nc 4 5 6 7\n").is_accept());
    }

    #[test]
    fn negative_answers_carry_no_witness() {
        let inst = format!("p em 4 4\n{FOUR_CYCLE}k 1\n");
        assert!(run(&inst, "NO\n").is_accept());
        assert!(!run(&inst, "NO\nm 0\n").is_accept());
    }

    #[test]
    fn decomposition_balance() {
        // triangle plus a pendant edge
        let inst = "p ub 4 4\ne 0 1 0\ne 1 2 0\ne 2 0 0\ne 2 3 0\nk 1\nl 0\n";
        assert!(run(inst, "YES\nX 2\nA 0 3\nB 1\n").is_accept());
        let v = run(inst, "YES\nX 0\nA 1\nB 2 3\n");
        assert!(v.to_line().starts_with("REJECT decomposition"), "{v:?}");
        let v = run(inst, "YES\nX 2\nA 1\nB 0 3\n");
        assert!(v.to_line().starts_with("REJECT balance"), "{v:?}");
    }
}
