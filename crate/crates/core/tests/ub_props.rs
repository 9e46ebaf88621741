mod common;

use oddmatch_core::generate::{random_graph, random_with_pm, rng};
use oddmatch_core::oct::min_oct;
use oddmatch_core::ub::{attach_pendants, build_gf, solve_ub, solve_ub_bruteforce, solve_ub_with, ub_holds};
use oddmatch_core::vertex_cover::{
    expand_wvc_to_uvc, is_vertex_cover, min_vertex_cover, solve_uvc, solve_wvc, WvcInstance,
};
use rand::Rng;

use common::*;

#[test]
fn uvc_is_optimal() {
    for seed in 0..300u64 {
        let n = (seed % 15) as usize;
        let g = random_graph(n, [0.2, 0.4, 0.7][(seed % 3) as usize], seed);
        let opt = brute_min_vc_weight(&g, &vec![1; n]);
        let c = min_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &c));
        assert_eq!(c.len() as u64, opt, "seed {seed}");
        if opt > 0 {
            assert!(solve_uvc(&g, opt - 1).is_none());
        }
        let c = solve_uvc(&g, opt).unwrap();
        assert!(is_vertex_cover(&g, &c) && c.len() as u64 <= opt);
    }
}

#[test]
fn expansion_preserves_minimum_weight() {
    for seed in 0..200u64 {
        let n = 1 + (seed % 8) as usize;
        let g = random_graph(n, 0.5, seed);
        let mut r = rng(seed ^ 0xabc);
        let weights: Vec<u64> = (0..n).map(|_| r.gen_range(0..=3)).collect();
        let opt = brute_min_vc_weight(&g, &weights);
        let w = WvcInstance::new(g.clone(), weights.clone(), 0).unwrap();
        let exp = expand_wvc_to_uvc(&w).unwrap();
        assert_eq!(exp.graph.n() as u64, weights.iter().sum::<u64>());
        assert_eq!(min_vertex_cover(&exp.graph).len() as u64, opt, "seed {seed}");
        for budget in opt.saturating_sub(1)..=opt {
            let w = WvcInstance { budget, ..w.clone() };
            let got = solve_wvc(&w).unwrap();
            assert_eq!(got.is_some(), budget >= opt);
            if let Some(c) = got {
                assert!(is_vertex_cover(&g, &c) && w.cover_weight(&c) <= budget);
            }
        }
    }
}

#[test]
fn ub_matches_three_colouring_oracle() {
    for seed in 0..60u64 {
        let n = 2 * (1 + seed % 5) as usize;
        let (g, _) = random_with_pm(n, [0.3, 0.5, 0.7][(seed % 3) as usize], seed);
        let profile = brute_ub_profile(&g);
        for k in 0..=n {
            for l in 0..=n / 2 {
                let expect = brute_ub(&profile, n, k, l);
                let got = solve_ub(&g, k, l).unwrap();
                assert_eq!(got.is_some(), expect, "seed {seed} k {k} l {l}");
                if let Some(s) = got {
                    assert!(ub_holds(&g, &s.decomposition, k, l));
                }
                let brute = solve_ub_bruteforce(&g, k, l).unwrap();
                assert_eq!(brute.is_some(), expect);
                if let Some(d) = brute {
                    assert!(ub_holds(&g, &d, k, l));
                }
            }
        }
    }
}

/// UB(g, k, l) holds iff some `F ⊆ M`, `|F| <= l`, has min-WVC(G^F) <= k_F, with
/// the weighted optimum read from every independent set of `G^F`.
#[test]
fn ub_equivalent_to_some_gf_cover() {
    for seed in 0..40u64 {
        let n = 2 * (1 + seed % 4) as usize;
        let (g, m) = random_with_pm(n, 0.5, seed);
        let profile = brute_ub_profile(&g);
        let half = n / 2;
        for k in 0..=n {
            let mut best_f_sizes = Vec::new();
            for mask in 0u32..(1 << half) {
                let f: Vec<usize> = (0..half).filter(|i| mask >> i & 1 == 1).map(|i| m.edges()[i]).collect();
                let gf = build_gf(&g, &m, &f, k).unwrap();
                let total: u64 = gf.instance.weights.iter().sum();
                let best_is = independent_sets(&gf.instance.graph)
                    .into_iter()
                    .map(|s| {
                        (0..gf.instance.graph.n())
                            .filter(|&v| s >> v & 1 == 1)
                            .map(|v| gf.instance.weights[v])
                            .sum::<u64>()
                    })
                    .max()
                    .unwrap();
                if total - best_is <= gf.instance.budget {
                    best_f_sizes.push(f.len());
                }
            }
            for l in 0..=half {
                let via_gf = best_f_sizes.iter().any(|&s| s <= l);
                assert_eq!(via_gf, brute_ub(&profile, n, k, l), "seed {seed} k {k} l {l}");
            }
        }
    }
}

#[test]
fn large_l_is_plain_oct() {
    for seed in 0..60u64 {
        let n = 2 * (2 + seed % 4) as usize;
        let (g, _) = random_with_pm(n, 0.6, seed);
        let opt = min_oct(&g).size();
        for k in 0..=opt + 1 {
            for l in [k.div_ceil(2), n / 2] {
                assert_eq!(solve_ub(&g, k, l).unwrap().is_some(), k >= opt, "seed {seed} k {k}");
            }
        }
    }
}

#[test]
fn parallel_ub_reports_first_f() {
    for seed in 0..30u64 {
        let (g, _) = random_with_pm(8, 0.6, seed);
        for k in 0..4 {
            for l in 0..=4 {
                assert_eq!(solve_ub(&g, k, l).unwrap(), solve_ub_with(&g, k, l, 4).unwrap());
            }
        }
    }
}

#[test]
fn pendants_keep_min_oct() {
    for seed in 0..100u64 {
        let n = (seed % 8) as usize;
        let g = random_graph(n, 0.5, seed);
        let gp = attach_pendants(&g);
        assert_eq!(gp.n(), 2 * n);
        assert_eq!(gp.m(), g.m() + n);
        assert_eq!(min_oct(&gp).size(), min_oct(&g).size());
        assert_eq!(brute_max_matching_size(&gp), n);
    }
}
