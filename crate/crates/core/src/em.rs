//! Exact matching: a perfect matching of weight exactly `k`.
//!
//! The randomized solver marks weight-1 edges with a formal variable `y` and
//! gives edge `e` the scalar `2^{c_e}` for a random cost `c_e` in `[1, 2m]`.
//! The coefficient of `y^k` in the determinant of the biadjacency matrix
//! (bipartite input) or the Pfaffian of the skew Tutte matrix (otherwise) is a
//! signed sum over weight-`k` perfect matchings; it is nonzero when the
//! minimum-cost one is unique. It is recovered by evaluating at `n/2 + 1`
//! points and interpolating over a prime field. A nonzero coefficient proves a
//! weight-`k` perfect matching exists, so YES is always correct.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alternating::Matching;
use crate::error::{usage, Error, Result};
use crate::format::Answer;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::matching::visit_perfect_matchings;
use crate::modp;

/// `2^62 - 57`, the largest prime below `2^62`.
pub const DEFAULT_FIELD_PRIME: u64 = (1 << 62) - 57;
pub const DEFAULT_REPETITIONS: u32 = 20;

/// Exhaustive: the perfect matching of weight `k` whose sorted edge list is
/// lexicographically smallest.
pub fn solve_em_bruteforce(g: &Graph, k: i64) -> Result<Option<Matching>> {
    if g.is_directed() {
        return usage("exact matching needs an undirected graph");
    }
    let mut best: Option<Vec<EdgeId>> = None;
    visit_perfect_matchings(g, |ids| {
        if g.weight_of(ids) as i64 == k {
            let mut ids = ids.to_vec();
            ids.sort_unstable();
            if best.as_ref().is_none_or(|b| ids < *b) {
                best = Some(ids);
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(best.map(Matching::from_ids_unchecked))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomizedConfig {
    pub field_prime: u64,
    pub repetitions: u32,
    pub seed: u64,
}

impl Default for RandomizedConfig {
    fn default() -> Self {
        RandomizedConfig {
            field_prime: DEFAULT_FIELD_PRIME,
            repetitions: DEFAULT_REPETITIONS,
            seed: 0,
        }
    }
}

impl RandomizedConfig {
    /// The prime must be below `2^63`, exceed `2m` and `n/2 + 1`, and `2` must
    /// have multiplicative order above `n·m` so that distinct cost totals of
    /// perfect matchings give distinct powers of two.
    pub fn validate(&self, n: usize, m: usize) -> Result<()> {
        let p = self.field_prime;
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        if p >= 1 << 63 || !modp::is_prime(p) {
            return Err(Error::Config(format!("field modulus {p} is not a prime below 2^63")));
        }
        let m = m as u64;
        let n = n as u64;
        if p <= 2 * m || p <= n / 2 + 1 {
            return Err(Error::Config(format!(
                "field prime {p} too small for n = {n}, m = {m}"
            )));
        }
        if !modp::order_of_two_exceeds(p, n * m) {
            return Err(Error::Config(format!(
                "2 has multiplicative order at most {} modulo {p}",
                n * m
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Determinant,
    Pfaffian,
}

/// Everything the randomized solver did, in trial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmTranscript {
    pub answer: Answer,
    pub method: Method,
    /// Coefficient of `y^k` in each trial.
    pub coefficients: Vec<u64>,
    /// First trial with a nonzero coefficient.
    pub certifying_trial: Option<u32>,
    /// A weight-`k` perfect matching read off the certifying trial.
    pub witness: Option<Matching>,
}

/// Per-trial generator: trial `i` uses stream `i` of the seeded ChaCha8.
fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(trial as u64);
    r
}

struct Field<'a> {
    g: &'a Graph,
    p: u64,
    /// `r_e = 2^{c_e} mod p`
    scalar: Vec<u64>,
    /// Colour side for the determinant, `None` for the Pfaffian.
    side_a: Option<Vec<bool>>,
}

impl Field<'_> {
    /// Coefficients of the generating polynomial of the subgraph induced by
    /// `alive`.
    fn polynomial(&self, alive: &[bool]) -> Vec<u64> {
        let verts: Vec<Vertex> = (0..self.g.n()).filter(|&v| alive[v]).collect();
        let half = verts.len() / 2;
        let xs: Vec<u64> = (0..=half as u64).collect();
        let ys: Vec<u64> = xs.iter().map(|&y| self.evaluate(&verts, alive, y)).collect();
        modp::interpolate(&xs, &ys, self.p)
    }

    fn evaluate(&self, verts: &[Vertex], alive: &[bool], y: u64) -> u64 {
        let p = self.p;
        if verts.len() % 2 == 1 {
            return 0;
        }
        let mut pos = vec![usize::MAX; self.g.n()];
        match &self.side_a {
            Some(side) => {
                let rows: Vec<Vertex> = verts.iter().copied().filter(|&v| side[v]).collect();
                let cols: Vec<Vertex> = verts.iter().copied().filter(|&v| !side[v]).collect();
                if rows.len() != cols.len() {
                    return 0;
                }
                for (i, &v) in rows.iter().enumerate() {
                    pos[v] = i;
                }
                for (i, &v) in cols.iter().enumerate() {
                    pos[v] = i;
                }
                let mut mat = vec![vec![0u64; rows.len()]; rows.len()];
                for (id, e) in self.g.edges().iter().enumerate() {
                    if !alive[e.u] || !alive[e.v] {
                        continue;
                    }
                    let (a, b) = if side[e.u] { (e.u, e.v) } else { (e.v, e.u) };
                    let t = if e.w == 1 { modp::mul(self.scalar[id], y, p) } else { self.scalar[id] };
                    mat[pos[a]][pos[b]] = modp::add(mat[pos[a]][pos[b]], t, p);
                }
                modp::determinant(mat, p)
            }
            None => {
                for (i, &v) in verts.iter().enumerate() {
                    pos[v] = i;
                }
                let mut mat = vec![vec![0u64; verts.len()]; verts.len()];
                for (id, e) in self.g.edges().iter().enumerate() {
                    if !alive[e.u] || !alive[e.v] {
                        continue;
                    }
                    let (a, b) = (pos[e.u.min(e.v)], pos[e.u.max(e.v)]);
                    let t = if e.w == 1 { modp::mul(self.scalar[id], y, p) } else { self.scalar[id] };
                    mat[a][b] = modp::add(mat[a][b], t, p);
                    mat[b][a] = modp::sub(mat[b][a], t, p);
                }
                modp::pfaffian(mat, p)
            }
        }
    }

    fn coefficient(&self, alive: &[bool], k: i64) -> u64 {
        if k < 0 {
            return 0;
        }
        self.polynomial(alive).get(k as usize).copied().unwrap_or(0)
    }

    /// Reads a weight-`k` perfect matching off a nonzero coefficient. Expanding
    /// along the row of the lowest live vertex `u`, the coefficient is a sum of
    /// per-edge terms, so some edge `uv` leaves a nonzero coefficient of
    /// `y^{k - w}` on the rest.
    fn extract(&self, k: i64) -> Matching {
        let n = self.g.n();
        let mut alive = vec![true; n];
        let mut k = k;
        let mut ids = Vec::new();
        while let Some(u) = (0..n).find(|&v| alive[v]) {
            let step = self.g.incident(u).iter().find_map(|&(v, id)| {
                if !alive[v] {
                    return None;
                }
                let w = self.g.edge(id).w as i64;
                alive[u] = false;
                alive[v] = false;
                let ok = self.coefficient(&alive, k - w) != 0;
                alive[u] = true;
                alive[v] = true;
                ok.then_some((v, id, w))
            });
            let (v, id, w) = step.expect("a nonzero coefficient expands to a nonzero term");
            alive[u] = false;
            alive[v] = false;
            k -= w;
            ids.push(id);
        }
        ids.sort_unstable();
        Matching::from_ids_unchecked(ids)
    }
}

/// One-sided randomized exact matching. Runs every repetition so the transcript
/// depends only on `(g, k, cfg)`.
pub fn solve_em_randomized(g: &Graph, k: i64, cfg: &RandomizedConfig) -> Result<EmTranscript> {
    if g.is_directed() {
        return usage("exact matching needs an undirected graph");
    }
    if g.n() % 2 == 1 {
        return usage("exact matching needs an even number of vertices");
    }
    cfg.validate(g.n(), g.m())?;
    let side_a = g.bipartition().map(|b| (0..g.n()).map(|v| b.in_a(v)).collect::<Vec<_>>());
    let method = if side_a.is_some() {
        Method::Determinant
    } else {
        Method::Pfaffian
    };
    let max_cost = (2 * g.m()).max(1) as u64;
    let alive = vec![true; g.n()];
    let mut coefficients = Vec::with_capacity(cfg.repetitions as usize);
    let mut certifying = None;
    for trial in 0..cfg.repetitions {
        let mut rng = trial_rng(cfg.seed, trial);
        let scalar = (0..g.m())
            .map(|_| modp::pow(2, rng.gen_range(1..=max_cost), cfg.field_prime))
            .collect();
        let field = Field {
            g,
            p: cfg.field_prime,
            scalar,
            side_a: side_a.clone(),
        };
        let c = field.coefficient(&alive, k);
        if c != 0 && certifying.is_none() {
            certifying = Some((trial, field));
        }
        coefficients.push(c);
    }
    let (answer, certifying_trial, witness) = match certifying {
        Some((trial, field)) => {
            let m = field.extract(k);
            debug_assert!(m.is_perfect(g) && m.weight(g) as i64 == k);
            (Answer::Yes, Some(trial), Some(m))
        }
        None => (Answer::ProbablyNo, None, None),
    };
    Ok(EmTranscript {
        answer,
        method,
        coefficients,
        certifying_trial,
        witness,
    })
}
