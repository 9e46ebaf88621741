use std::fmt::Write as _;
use std::str::FromStr;

use oddmatch_core::format::{Instance, Problem};
use oddmatch_core::generate::{low_parameter, random_bipartite, random_digraph, random_graph};
use oddmatch_core::oct::{min_oct, OctDecomposition};
use oddmatch_core::{oracle, Error, Result};

use crate::solve::residual_beta;

/// Largest vertex count `generate` accepts.
pub const MAX_GENERATED_N: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Random,
    Bipartite,
    LowParameter,
    Digraph,
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random" => GenKind::Random,
            "bipartite" => GenKind::Bipartite,
            "low-parameter" => GenKind::LowParameter,
            "digraph" => GenKind::Digraph,
            _ => return Err(Error::Usage(format!("unknown generator kind '{s}'"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    /// Edge probability; ignored by `low-parameter`.
    pub p: f64,
    /// Planted transversal size for `low-parameter`.
    pub x: usize,
    pub seed: u64,
    /// Problem tag of the output; defaults to `bfp` for digraphs, `oct` for
    /// `low-parameter` and `bcpm` otherwise.
    pub problem: Option<Problem>,
    pub k: Option<i64>,
    pub l: Option<i64>,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            p: 0.5,
            x: 2,
            seed,
            problem: None,
            k: None,
            l: None,
        }
    }
}

/// The instance text followed by `#` lines with its transversal size and `β`
/// when both are cheap to compute exactly.
pub fn generate(spec: &GenSpec) -> Result<String> {
    let n = spec.n;
    if n == 0 || n > MAX_GENERATED_N {
        return Err(Error::Usage(format!("--n must be in 1..={MAX_GENERATED_N}, got {n}")));
    }
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(Error::Usage(format!("--p must be in [0, 1], got {}", spec.p)));
    }
    let directed = spec.kind == GenKind::Digraph;
    let problem = spec.problem.unwrap_or(match spec.kind {
        GenKind::Digraph => Problem::Bfp,
        GenKind::LowParameter => Problem::Oct,
        _ => Problem::Bcpm,
    });
    if problem.is_directed() != directed {
        return Err(Error::Usage(format!("a {problem} instance cannot come from this generator")));
    }
    let mut planted = None;
    let graph = match spec.kind {
        GenKind::Random => random_graph(n, spec.p, spec.seed),
        GenKind::Bipartite => random_bipartite(n / 2, n - n / 2, spec.p, spec.seed).0,
        GenKind::LowParameter => {
            if spec.x > n {
                return Err(Error::Usage(format!("--x = {} exceeds --n = {n}", spec.x)));
            }
            let (g, x) = low_parameter(n, spec.x, spec.seed);
            planted = Some(x);
            g
        }
        GenKind::Digraph => {
            if n < 2 {
                return Err(Error::Usage("a digraph instance needs at least two vertices".into()));
            }
            random_digraph(n, spec.p, spec.seed)
        }
    };
    let mut inst = Instance::new(graph, problem);
    let h = &mut inst.header;
    if directed {
        h.terminals.s = Some(0);
        h.terminals.t = Some(1);
    } else {
        h.k = Some(spec.k.unwrap_or(match problem {
            Problem::Oct | Problem::Ub => spec.x.min(n) as i64,
            _ => (n / 2) as i64,
        }));
        h.l = spec.l.or((problem == Problem::Ub).then_some(0));
    }
    let mut out = inst.to_text();
    if let Some(x) = &planted {
        writeln!(out, "# planted-transversal {}", x.len()).unwrap();
    }
    if !directed && n <= oracle::bound() {
        let d: OctDecomposition = min_oct(&inst.graph);
        writeln!(out, "# oct {}", d.size()).unwrap();
        if let Some(beta) = residual_beta(&inst.graph, &d) {
            writeln!(out, "# beta {beta}").unwrap();
        }
    }
    Ok(out)
}
