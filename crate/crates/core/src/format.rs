//! Line-based instance and solution text formats.
//!
//! Instance records, one per line (`#` starts a comment):
//!
//! ```text
//! p <problem> <n> <m>     header, first record
//! e <u> <v> <w>           undirected edge of weight 0 or 1
//! a <u> <v>               directed arc (bfp only)
//! k <int>  /  l <int>     parameters
//! w <v> <int>             vertex weight (wvc)
//! m <edge-index>          matching edge
//! x <edge-index>          designated edge
//! s|t|s1|s2|t1|t2 <v>     terminals
//! ```
//!
//! Solutions start with `YES`, `NO` or `PROBABLY_NO`, followed by witness lines:
//! `m <e>`, `c <e>...` (cycle), `path <e>...`, `vc <v>...` (directed vertex
//! cycle) and vertex sets `X|A|B <v>...`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    Em,
    Bcpm,
    Cpm,
    Oac,
    Oace,
    Oap,
    Dap,
    Fdap,
    Bfp,
    Oct,
    Ub,
    Wvc,
    Uvc,
}

impl Problem {
    pub const ALL: [Problem; 13] = [
        Problem::Em,
        Problem::Bcpm,
        Problem::Cpm,
        Problem::Oac,
        Problem::Oace,
        Problem::Oap,
        Problem::Dap,
        Problem::Fdap,
        Problem::Bfp,
        Problem::Oct,
        Problem::Ub,
        Problem::Wvc,
        Problem::Uvc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Em => "em",
            Problem::Bcpm => "bcpm",
            Problem::Cpm => "cpm",
            Problem::Oac => "oac",
            Problem::Oace => "oace",
            Problem::Oap => "oap",
            Problem::Dap => "dap",
            Problem::Fdap => "fdap",
            Problem::Bfp => "bfp",
            Problem::Oct => "oct",
            Problem::Ub => "ub",
            Problem::Wvc => "wvc",
            Problem::Uvc => "uvc",
        }
    }

    pub fn is_directed(self) -> bool {
        self == Problem::Bfp
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::Usage(format!("unknown problem '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Terminals {
    pub s: Option<Vertex>,
    pub t: Option<Vertex>,
    pub s1: Option<Vertex>,
    pub s2: Option<Vertex>,
    pub t1: Option<Vertex>,
    pub t2: Option<Vertex>,
}

impl Terminals {
    fn named(&self) -> [(&'static str, Option<Vertex>); 6] {
        [
            ("s", self.s),
            ("t", self.t),
            ("s1", self.s1),
            ("s2", self.s2),
            ("t1", self.t1),
            ("t2", self.t2),
        ]
    }

    fn slot(&mut self, name: &str) -> Option<&mut Option<Vertex>> {
        Some(match name {
            "s" => &mut self.s,
            "t" => &mut self.t,
            "s1" => &mut self.s1,
            "s2" => &mut self.s2,
            "t1" => &mut self.t1,
            "t2" => &mut self.t2,
            _ => return None,
        })
    }

    /// `(s1, s2, t1, t2)` if all four are present.
    pub fn four(&self) -> Option<[Vertex; 4]> {
        Some([self.s1?, self.s2?, self.t1?, self.t2?])
    }
}

/// Everything in an instance file besides the graph itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceHeader {
    pub problem: Problem,
    pub k: Option<i64>,
    pub l: Option<i64>,
    /// Sorted matching edge indices from `m` records.
    pub matching: Vec<EdgeId>,
    pub designated: Option<EdgeId>,
    pub terminals: Terminals,
    /// Per-vertex weights from `w` records; vertices without a record weigh 0.
    pub vertex_weights: Option<Vec<u64>>,
}

impl InstanceHeader {
    pub fn new(problem: Problem) -> Self {
        InstanceHeader {
            problem,
            k: None,
            l: None,
            matching: Vec::new(),
            designated: None,
            terminals: Terminals::default(),
            vertex_weights: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub header: InstanceHeader,
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn invalid<T>(line: usize, msg: impl fmt::Display) -> Result<T> {
    Err(Error::Validation(format!("line {line}: {msg}")))
}

fn num<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .or_else(|_| parse_err(line, format!("expected {what}, found '{tok}'")))
}

fn expect_args(toks: &[&str], count: usize, line: usize) -> Result<()> {
    if toks.len() != count + 1 {
        return parse_err(
            line,
            format!("'{}' takes {count} argument(s), found {}", toks[0], toks.len() - 1),
        );
    }
    Ok(())
}

/// Parses an instance file. Every structural invariant is checked; the
/// problem-specific presence of parameters is left to the solvers.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(InstanceHeader, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut matching_lines: Vec<(EdgeId, usize)> = Vec::new();
    let mut designated_line = 0;
    let mut weights: Option<Vec<Option<u64>>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "p" {
            if header.is_some() {
                return parse_err(line, "duplicate 'p' header");
            }
            expect_args(&toks, 3, line)?;
            let problem: Problem = toks[1]
                .parse()
                .or_else(|_| parse_err(line, format!("unknown problem '{}'", toks[1])))?;
            let n: usize = num(toks[2], line, "vertex count")?;
            let m: usize = num(toks[3], line, "edge count")?;
            graph = Some(if problem.is_directed() {
                Graph::new_directed(n)
            } else {
                Graph::new(n)
            });
            header = Some((InstanceHeader::new(problem), m));
            continue;
        }
        let Some((hdr, _)) = header.as_mut() else {
            return parse_err(line, format!("'{}' record before 'p' header", toks[0]));
        };
        let g = graph.as_mut().unwrap();
        match toks[0] {
            "e" => {
                expect_args(&toks, 3, line)?;
                if g.is_directed() {
                    return invalid(line, "'e' record in a directed (bfp) instance");
                }
                let u = num(toks[1], line, "vertex id")?;
                let v = num(toks[2], line, "vertex id")?;
                let w: u8 = match toks[3] {
                    "0" => 0,
                    "1" => 1,
                    other => return invalid(line, format!("weight '{other}' is not 0 or 1")),
                };
                if let Err(Error::Validation(msg)) = g.add_edge(u, v, w) {
                    return invalid(line, msg);
                }
            }
            "a" => {
                expect_args(&toks, 2, line)?;
                if !g.is_directed() {
                    return invalid(line, "'a' record outside a bfp instance");
                }
                let u = num(toks[1], line, "vertex id")?;
                let v = num(toks[2], line, "vertex id")?;
                if let Err(Error::Validation(msg)) = g.add_arc(u, v) {
                    return invalid(line, msg);
                }
            }
            "k" | "l" => {
                expect_args(&toks, 1, line)?;
                let val: i64 = num(toks[1], line, "integer")?;
                if val < 0 {
                    return invalid(line, format!("parameter {} = {val} is negative", toks[0]));
                }
                let slot = if toks[0] == "k" { &mut hdr.k } else { &mut hdr.l };
                if slot.replace(val).is_some() {
                    return parse_err(line, format!("duplicate '{}' record", toks[0]));
                }
            }
            "m" => {
                expect_args(&toks, 1, line)?;
                matching_lines.push((num(toks[1], line, "edge index")?, line));
            }
            "x" => {
                expect_args(&toks, 1, line)?;
                if hdr.designated.replace(num(toks[1], line, "edge index")?).is_some() {
                    return parse_err(line, "duplicate 'x' record");
                }
                designated_line = line;
            }
            "w" => {
                expect_args(&toks, 2, line)?;
                let v: usize = num(toks[1], line, "vertex id")?;
                let wt: u64 = num(toks[2], line, "non-negative weight")?;
                if v >= g.n() {
                    return invalid(line, format!("vertex id {v} out of range 0..{}", g.n()));
                }
                let ws = weights.get_or_insert_with(|| vec![None; g.n()]);
                if ws[v].replace(wt).is_some() {
                    return parse_err(line, format!("duplicate weight for vertex {v}"));
                }
            }
            name => {
                let n = g.n();
                let Some(slot) = hdr.terminals.slot(name) else {
                    return parse_err(line, format!("unknown record type '{name}'"));
                };
                expect_args(&toks, 1, line)?;
                let v: usize = num(toks[1], line, "vertex id")?;
                if v >= n {
                    return invalid(line, format!("terminal {name} = {v} out of range 0..{n}"));
                }
                if slot.replace(v).is_some() {
                    return parse_err(line, format!("duplicate '{name}' record"));
                }
            }
        }
    }

    let Some((mut header, declared_m)) = header else {
        return parse_err(0, "missing 'p' header");
    };
    let graph = graph.unwrap();
    if graph.m() != declared_m {
        return Err(Error::Validation(format!(
            "header declares {declared_m} edges, found {}",
            graph.m()
        )));
    }
    let mut covered = vec![false; graph.n()];
    for &(id, line) in &matching_lines {
        if id >= graph.m() {
            return invalid(line, format!("matching edge {id} out of range 0..{}", graph.m()));
        }
        if header.matching.contains(&id) {
            return invalid(line, format!("matching edge {id} listed twice"));
        }
        let e = graph.edge(id);
        for x in [e.u, e.v] {
            if covered[x] {
                return invalid(line, format!("matching edge {id} reuses vertex {x}"));
            }
            covered[x] = true;
        }
        header.matching.push(id);
    }
    header.matching.sort_unstable();
    if let Some(x) = header.designated {
        if x >= graph.m() {
            return invalid(
                designated_line,
                format!("designated edge {x} out of range 0..{}", graph.m()),
            );
        }
    }
    header.vertex_weights = weights.map(|w| w.into_iter().map(|x| x.unwrap_or(0)).collect());
    Ok(Instance { graph, header })
}

impl Instance {
    pub fn new(graph: Graph, problem: Problem) -> Self {
        Instance {
            graph,
            header: InstanceHeader::new(problem),
        }
    }

    /// Writes the instance with records in a fixed order (edges by index).
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let h = &self.header;
        let mut out = String::new();
        writeln!(out, "p {} {} {}", h.problem, g.n(), g.m()).unwrap();
        for e in g.edges() {
            if g.is_directed() {
                writeln!(out, "a {} {}", e.u, e.v).unwrap();
            } else {
                writeln!(out, "e {} {} {}", e.u, e.v, e.w).unwrap();
            }
        }
        if let Some(k) = h.k {
            writeln!(out, "k {k}").unwrap();
        }
        if let Some(l) = h.l {
            writeln!(out, "l {l}").unwrap();
        }
        if let Some(ws) = &h.vertex_weights {
            for (v, w) in ws.iter().enumerate() {
                writeln!(out, "w {v} {w}").unwrap();
            }
        }
        for id in &h.matching {
            writeln!(out, "m {id}").unwrap();
        }
        if let Some(x) = h.designated {
            writeln!(out, "x {x}").unwrap();
        }
        for (name, v) in h.terminals.named() {
            if let Some(v) = v {
                writeln!(out, "{name} {v}").unwrap();
            }
        }
        out
    }

    /// Equivalent instance with undirected edges written `u < v` and sorted by
    /// `(u, v, old index)`; edge references are renumbered. Returns the map from
    /// old to new edge index.
    pub fn canonicalize(&self) -> (Instance, Vec<EdgeId>) {
        let g = &self.graph;
        let mut order: Vec<(Vertex, Vertex, EdgeId)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| {
                if g.is_directed() {
                    (e.u, e.v, id)
                } else {
                    (e.u.min(e.v), e.u.max(e.v), id)
                }
            })
            .collect();
        order.sort_unstable();
        let mut old_to_new = vec![0; g.m()];
        let mut ng = if g.is_directed() {
            Graph::new_directed(g.n())
        } else {
            Graph::new(g.n())
        };
        for (new, &(u, v, old)) in order.iter().enumerate() {
            old_to_new[old] = new;
            if g.is_directed() {
                ng.add_arc(u, v).unwrap();
            } else {
                ng.add_edge(u, v, g.edge(old).w).unwrap();
            }
        }
        let mut header = self.header.clone();
        header.matching = header.matching.iter().map(|&e| old_to_new[e]).collect();
        header.matching.sort_unstable();
        header.designated = header.designated.map(|e| old_to_new[e]);
        (Instance { graph: ng, header }, old_to_new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    /// One-sided randomized "no": a yes-instance may be missed.
    ProbablyNo,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::ProbablyNo => "PROBABLY_NO",
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One witness line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessRecord {
    /// `m <e>`
    MatchingEdge(EdgeId),
    /// `c <e>...`
    Cycle(Vec<EdgeId>),
    /// `path <e>...`
    Path(Vec<EdgeId>),
    /// `vc <v>...`: a directed cycle as its vertex sequence
    VertexCycle(Vec<Vertex>),
    /// `X|A|B <v>...`
    VertexSet(char, Vec<Vertex>),
}

impl fmt::Display for WitnessRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, tag: &str, xs: &[usize]) -> fmt::Result {
            f.write_str(tag)?;
            for x in xs {
                write!(f, " {x}")?;
            }
            Ok(())
        }
        match self {
            WitnessRecord::MatchingEdge(e) => write!(f, "m {e}"),
            WitnessRecord::Cycle(es) => join(f, "c", es),
            WitnessRecord::Path(es) => join(f, "path", es),
            WitnessRecord::VertexCycle(vs) => join(f, "vc", vs),
            WitnessRecord::VertexSet(tag, vs) => join(f, &tag.to_string(), vs),
        }
    }
}

/// A solver answer plus its witness, in the solution text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub answer: Answer,
    pub witness: Vec<WitnessRecord>,
}

impl Solution {
    pub fn no() -> Self {
        Solution {
            answer: Answer::No,
            witness: Vec::new(),
        }
    }

    pub fn yes(witness: Vec<WitnessRecord>) -> Self {
        Solution {
            answer: Answer::Yes,
            witness,
        }
    }

    pub fn matching_records(ids: &[EdgeId]) -> Vec<WitnessRecord> {
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        ids.into_iter().map(WitnessRecord::MatchingEdge).collect()
    }

    /// Edge indices of all `m` records, sorted.
    pub fn matching_edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .witness
            .iter()
            .filter_map(|r| match r {
                WitnessRecord::MatchingEdge(e) => Some(*e),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn vertex_set(&self, tag: char) -> Option<&[Vertex]> {
        self.witness.iter().find_map(|r| match r {
            WitnessRecord::VertexSet(t, vs) if *t == tag => Some(vs.as_slice()),
            _ => None,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.answer).unwrap();
        for r in &self.witness {
            writeln!(out, "{r}").unwrap();
        }
        out
    }
}

/// Parses a solution file; `#` lines (report annotations, timing) are skipped.
pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut answer = None;
    let mut witness = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if answer.is_none() {
            answer = Some(match toks[0] {
                "YES" => Answer::Yes,
                "NO" => Answer::No,
                "PROBABLY_NO" => Answer::ProbablyNo,
                other => return parse_err(line, format!("expected YES/NO, found '{other}'")),
            });
            if toks.len() > 1 {
                return parse_err(line, "trailing tokens after answer");
            }
            continue;
        }
        let args: Vec<usize> = toks[1..]
            .iter()
            .map(|t| num(t, line, "index"))
            .collect::<Result<_>>()?;
        let rec = match toks[0] {
            "m" => {
                if args.len() != 1 {
                    return parse_err(line, "'m' takes one edge index");
                }
                WitnessRecord::MatchingEdge(args[0])
            }
            "c" => WitnessRecord::Cycle(args),
            "path" => WitnessRecord::Path(args),
            "vc" => WitnessRecord::VertexCycle(args),
            "X" => WitnessRecord::VertexSet('X', args),
            "A" => WitnessRecord::VertexSet('A', args),
            "B" => WitnessRecord::VertexSet('B', args),
            other => return parse_err(line, format!("unknown witness record '{other}'")),
        };
        witness.push(rec);
    }
    let Some(answer) = answer else {
        return parse_err(0, "empty solution");
    };
    Ok(Solution { answer, witness })
}
