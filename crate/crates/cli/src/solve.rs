use oddmatch_core::bcpm::{cpm_bound, solve_bcpm_bruteforce, solve_bcpm_with, BcpmOptions, ParityQuery, SweepMode};
use oddmatch_core::em::{solve_em_bruteforce, solve_em_randomized, Method, RandomizedConfig};
use oddmatch_core::format::{Answer, Instance, Problem, Solution, WitnessRecord};
use oddmatch_core::gadgets::solve_fdap;
use oddmatch_core::matching::has_perfect_matching;
use oddmatch_core::oct::{bipartite_independence_number, min_oct, min_oct_bruteforce, OctDecomposition};
use oddmatch_core::search::{
    arc_cycle_vertices, solve_bfp_bruteforce, solve_dap_bruteforce, solve_fdap_bruteforce, solve_oac_bruteforce,
    solve_oace_bruteforce, solve_oap_bruteforce, PathPair,
};
use oddmatch_core::ub::{solve_ub_bruteforce, solve_ub_with};
use oddmatch_core::vertex_cover::{solve_uvc, solve_wvc, solve_wvc_bruteforce, WvcInstance};
use oddmatch_core::{bcpm, em, oracle, Error, Graph, Matching, Result, Vertex};

use crate::report::RunReport;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Force the exhaustive solver.
    pub oracle: bool,
    /// `(k, l)` for the unbalanced bipartization pre-pass of the `G_Y` sweep.
    pub ub: Option<(usize, usize)>,
    /// Sweep every `Y ⊆ X` instead of the balanced ones only.
    pub full_sweep: bool,
    pub jobs: usize,
    pub seed: u64,
    pub repetitions: u32,
    pub field_prime: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            oracle: false,
            ub: None,
            full_sweep: false,
            jobs: 1,
            seed: 0,
            repetitions: em::DEFAULT_REPETITIONS,
            field_prime: em::DEFAULT_FIELD_PRIME,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

fn need_k(inst: &Instance) -> Result<i64> {
    inst.header
        .k
        .ok_or_else(|| Error::Usage(format!("{} instance has no 'k' record", inst.header.problem)))
}

fn need_l(inst: &Instance) -> Result<i64> {
    inst.header
        .l
        .ok_or_else(|| Error::Usage(format!("{} instance has no 'l' record", inst.header.problem)))
}

fn need_matching(inst: &Instance) -> Result<Matching> {
    Matching::new(&inst.graph, inst.header.matching.iter().copied())
}

fn need_four(inst: &Instance) -> Result<[Vertex; 4]> {
    inst.header
        .terminals
        .four()
        .ok_or_else(|| Error::Usage("instance needs terminals s1, s2, t1 and t2".into()))
}

/// `β` of `G - X`, or `None` above the oracle bound.
pub fn residual_beta(g: &Graph, d: &OctDecomposition) -> Option<usize> {
    let (h, bip, _) = d.residual(g);
    if h.n() > oracle::bound() {
        return None;
    }
    bipartite_independence_number(&h, &bip).ok()
}

pub(crate) fn decomposition_records(d: &OctDecomposition) -> Vec<WitnessRecord> {
    vec![
        WitnessRecord::VertexSet('X', d.transversal.clone()),
        WitnessRecord::VertexSet('A', d.color_a.clone()),
        WitnessRecord::VertexSet('B', d.color_b.clone()),
    ]
}

fn path_records(paths: PathPair) -> Vec<WitnessRecord> {
    paths.into_iter().map(WitnessRecord::Path).collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Solves `inst` as a `selector` instance.
pub fn solve(selector: Problem, inst: &Instance, opts: &SolveOptions) -> Result<RunReport> {
    if inst.header.problem != selector {
        return usage(format!(
            "instance is a {} instance but '{}' was requested",
            inst.header.problem, selector
        ));
    }
    let g = &inst.graph;
    let mut r = RunReport::new(selector);
    r.param("problem", selector);
    r.param("n", g.n());
    r.param("m", g.m());
    r.param("solver", if opts.oracle { "oracle" } else { "default" });
    match selector {
        Problem::Em => solve_em(inst, opts, &mut r)?,
        Problem::Bcpm => {
            let q = ParityQuery::new(need_k(inst)?)?;
            matching_sweep(g, q, opts, &mut r)?;
        }
        Problem::Cpm => {
            let parity = (need_k(inst)? % 2) as u8;
            r.param("parity", parity);
            match cpm_bound(g.n(), parity) {
                Some(k) => matching_sweep(g, ParityQuery::new(k as i64)?, opts, &mut r)?,
                None => r.no(),
            }
        }
        Problem::Oac => {
            let m = need_matching(inst)?;
            let c = if opts.oracle {
                r.time("search", || solve_oac_bruteforce(g, &m))?
            } else {
                r.time("cpm", || bcpm::solve_oac(g, &m))?
            };
            match c {
                Some(c) => r.yes(vec![WitnessRecord::Cycle(c.edges().to_vec())]),
                None => r.no(),
            }
        }
        Problem::Oace => {
            let m = need_matching(inst)?;
            let Some(e) = inst.header.designated else {
                return usage("oace instance has no designated edge 'x'");
            };
            r.param("exhaustive", "yes");
            match r.time("search", || solve_oace_bruteforce(g, &m, e))? {
                Some(c) => r.yes(vec![WitnessRecord::Cycle(c.edges().to_vec())]),
                None => r.no(),
            }
        }
        Problem::Oap => {
            let m = need_matching(inst)?;
            r.param("exhaustive", "yes");
            match r.time("search", || solve_oap_bruteforce(g, &m))? {
                Some(p) => r.yes(vec![WitnessRecord::Path(p)]),
                None => r.no(),
            }
        }
        Problem::Dap => {
            let m = need_matching(inst)?;
            let t = need_four(inst)?;
            r.param("exhaustive", "yes");
            match r.time("search", || solve_dap_bruteforce(g, &m, t))? {
                Some(p) => r.yes(path_records(p)),
                None => r.no(),
            }
        }
        Problem::Fdap => {
            let m = need_matching(inst)?;
            let t = need_four(inst)?;
            let found = if opts.oracle {
                r.time("search", || solve_fdap_bruteforce(g, &m, t))?
            } else {
                r.time("matching", || solve_fdap(g, &m, t))?
            };
            match found {
                Some(p) => r.yes(path_records(p)),
                None => r.no(),
            }
        }
        Problem::Bfp => {
            let (Some(s), Some(t)) = (inst.header.terminals.s, inst.header.terminals.t) else {
                return usage("bfp instance needs terminals s and t");
            };
            r.param("exhaustive", "yes");
            match r.time("search", || solve_bfp_bruteforce(g, s, t))? {
                Some(arcs) => r.yes(vec![WitnessRecord::VertexCycle(arc_cycle_vertices(g, &arcs))]),
                None => r.no(),
            }
        }
        Problem::Oct => {
            let k = need_k(inst)? as usize;
            let d = if opts.oracle {
                r.time("oct", || min_oct_bruteforce(g))?
            } else {
                r.time("oct", || min_oct(g))
            };
            r.param("oct", d.size());
            if let Some(beta) = residual_beta(g, &d) {
                r.param("beta", beta);
            }
            if d.size() <= k {
                r.yes(decomposition_records(&d));
            } else {
                r.no();
            }
        }
        Problem::Ub => {
            let k = need_k(inst)? as usize;
            let l = need_l(inst)? as usize;
            let found = if opts.oracle {
                r.time("search", || solve_ub_bruteforce(g, k, l))?
            } else {
                let half = g.n() / 2;
                let subsets: u128 = (0..=l.min(half)).map(|i| binomial(half, i)).sum();
                r.param("f-candidates", subsets);
                let sol = r.time("f-sweep", || solve_ub_with(g, k, l, opts.jobs))?;
                if let Some(s) = &sol {
                    r.param("f-size", s.f.len());
                }
                sol.map(|s| s.decomposition)
            };
            match found {
                Some(d) => r.yes(decomposition_records(&d)),
                None => r.no(),
            }
        }
        Problem::Wvc | Problem::Uvc => {
            let k = need_k(inst)? as u64;
            let weights = if selector == Problem::Wvc {
                inst.header
                    .vertex_weights
                    .clone()
                    .ok_or_else(|| Error::Usage("wvc instance has no 'w' records".into()))?
            } else {
                vec![1; g.n()]
            };
            let w = WvcInstance::new(g.clone(), weights, k)?;
            let cover = if opts.oracle {
                r.time("search", || solve_wvc_bruteforce(&w))?
            } else if selector == Problem::Uvc {
                r.time("search", || solve_uvc(g, k))
            } else {
                r.time("search", || solve_wvc(&w))?
            };
            match cover {
                Some(c) => {
                    r.param("cover-weight", w.cover_weight(&c));
                    r.yes(vec![WitnessRecord::VertexSet('X', c)]);
                }
                None => r.no(),
            }
        }
    }
    Ok(r)
}

fn solve_em(inst: &Instance, opts: &SolveOptions, r: &mut RunReport) -> Result<()> {
    let g = &inst.graph;
    let k = need_k(inst)?;
    if g.n() % 2 == 1 {
        r.param("note", "odd vertex count, no perfect matching");
        r.no();
        return Ok(());
    }
    if opts.oracle {
        match r.time("enumerate", || solve_em_bruteforce(g, k))? {
            Some(m) => r.yes(Solution::matching_records(m.edges())),
            None => r.no(),
        }
        return Ok(());
    }
    let cfg = RandomizedConfig {
        field_prime: opts.field_prime,
        repetitions: opts.repetitions,
        seed: opts.seed,
    };
    let tr = r.time("trials", || solve_em_randomized(g, k, &cfg))?;
    r.param(
        "method",
        match tr.method {
            Method::Determinant => "determinant",
            Method::Pfaffian => "pfaffian",
        },
    );
    r.param("seed", opts.seed);
    r.param("trials", tr.coefficients.len());
    if let Some(t) = tr.certifying_trial {
        r.param("certifying-trial", t);
    }
    match (tr.answer, tr.witness) {
        (Answer::Yes, Some(m)) => r.yes(Solution::matching_records(m.edges())),
        (Answer::Yes, None) => unreachable!("a nonzero coefficient always yields a witness"),
        (answer, _) => {
            r.no();
            r.answer = answer;
            if answer == Answer::ProbablyNo {
                r.param("note", "one-sided randomized answer, a yes-instance may be missed");
            }
        }
    }
    Ok(())
}

/// The `G_Y` sweep (or enumeration under `--oracle`) for a bounded parity query.
fn matching_sweep(g: &Graph, q: ParityQuery, opts: &SolveOptions, r: &mut RunReport) -> Result<()> {
    r.param("k", q.k());
    if opts.oracle {
        match r.time("enumerate", || solve_bcpm_bruteforce(g, q))? {
            Some(m) => r.yes(Solution::matching_records(m.edges())),
            None => r.no(),
        }
        return Ok(());
    }
    if g.is_directed() {
        return usage("matching problems need an undirected graph");
    }
    let mut bo = BcpmOptions {
        mode: if opts.full_sweep { SweepMode::Full } else { SweepMode::Pruned },
        jobs: opts.jobs,
        oct: None,
    };
    let has_pm = g.n() % 2 == 0 && r.time("matching", || has_perfect_matching(g));
    if has_pm {
        let mut d = None;
        if let Some((k, l)) = opts.ub {
            let sol = r.time("ub", || solve_ub_with(g, k, l, opts.jobs))?;
            match sol {
                Some(s) => {
                    r.param("ub-f-size", s.f.len());
                    d = Some(s.decomposition);
                }
                None => r.param("ub", "none, using a minimum transversal"),
            }
        }
        let d = match d {
            Some(d) => d,
            None => r.time("oct", || min_oct(g)),
        };
        if let Some(beta) = residual_beta(g, &d) {
            r.param("beta", beta);
        }
        bo.oct = Some(d);
    }
    let out = r.time("sweep", || solve_bcpm_with(g, q, &bo))?;
    let st = &out.stats;
    r.param("perfect-matching", if st.has_perfect_matching { "yes" } else { "no" });
    if st.has_perfect_matching {
        r.param("oct", st.oct_size);
        r.param("a", st.a_size);
        r.param("subproblems", st.candidates);
        if let Some(y) = &st.winning_y {
            r.param("winner", st.winner.unwrap_or_default());
            r.param(
                "y",
                format!("{{{}}}", y.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
            );
        }
    }
    match out.matching {
        Some(m) => r.yes(Solution::matching_records(m.edges())),
        None => r.no(),
    }
    Ok(())
}
