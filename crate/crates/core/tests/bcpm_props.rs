mod common;

use oddmatch_core::bcpm::{
    build_g_y, min_parity_pm_bipartite, solve_bcpm, solve_bcpm_bipartite, solve_bcpm_with,
    solve_cpm, solve_oac, BcpmOptions, ParityQuery, SweepMode,
};
use oddmatch_core::generate::{random_bipartite, random_graph, random_with_pm};
use oddmatch_core::matching::enumerate_perfect_matchings;
use oddmatch_core::oct::{
    bipartite_independence_number, independence_number, min_oct, min_oct_bruteforce,
};
use oddmatch_core::Graph;
use proptest::prelude::*;

use common::*;

fn pm_weights(g: &Graph) -> Vec<usize> {
    enumerate_perfect_matchings(g, usize::MAX)
        .unwrap()
        .iter()
        .map(|m| m.weight(g))
        .collect()
}

#[test]
fn min_parity_matches_enumeration() {
    for seed in 0..300u64 {
        let half = 1 + (seed % 7) as usize;
        let (g, bip) = random_bipartite(half, half, [0.3, 0.5, 0.8][(seed % 3) as usize], seed);
        let weights = pm_weights(&g);
        for parity in 0..2u8 {
            let expect = weights.iter().copied().filter(|w| w % 2 == parity as usize).min();
            let got = min_parity_pm_bipartite(&g, &bip, parity).unwrap();
            assert_eq!(got.as_ref().map(|r| r.1), expect, "seed {seed} parity {parity}");
            if let Some((m, w)) = got {
                assert!(m.is_perfect(&g));
                assert_eq!(m.weight(&g), w);
            }
        }
    }
}

#[test]
fn general_bcpm_matches_enumeration() {
    for seed in 0..250u64 {
        let n = 2 * (1 + seed % 6) as usize;
        let g = random_graph(n, [0.3, 0.5, 0.7][(seed % 3) as usize], seed);
        let weights = pm_weights(&g);
        for k in 0..=n / 2 {
            let q = ParityQuery::new(k as i64).unwrap();
            let expect = weights.iter().any(|&w| q.admits(w));
            let got = solve_bcpm(&g, q);
            assert_eq!(got.is_some(), expect, "seed {seed} k {k}");
            if let Some(m) = got {
                assert!(m.is_perfect(&g) && q.admits(m.weight(&g)));
            }
        }
        for parity in 0..2u8 {
            let expect = weights.iter().any(|&w| w % 2 == parity as usize);
            assert_eq!(solve_cpm(&g, parity).is_some(), expect, "seed {seed}");
        }
    }
}

#[test]
fn every_pm_lives_in_some_g_y() {
    for seed in 0..80u64 {
        let g = random_graph(10, 0.5, seed);
        let oct = min_oct(&g);
        let x = &oct.transversal;
        let subgraphs: Vec<_> = (0u32..(1 << x.len()))
            .map(|mask| {
                let y: Vec<usize> = (0..x.len()).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).collect();
                build_g_y(&g, &oct, &y).unwrap()
            })
            .collect();
        for gy in &subgraphs {
            assert!(gy.bipartition.check(&gy.graph).is_ok());
        }
        for m in enumerate_perfect_matchings(&g, usize::MAX).unwrap() {
            assert!(
                subgraphs.iter().any(|gy| m.edges().iter().all(|e| gy.edge_map.contains(e))),
                "seed {seed}"
            );
        }
    }
}

#[test]
fn g_y_edge_set_matches_definition() {
    for seed in 0..60u64 {
        let g = random_graph(9, 0.6, seed);
        let oct = min_oct(&g);
        let x = &oct.transversal;
        for mask in 0u32..(1 << x.len()) {
            let y: Vec<usize> = (0..x.len()).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).collect();
            let gy = build_g_y(&g, &oct, &y).unwrap();
            let left = |v: usize| oct.color_a.contains(&v) || y.contains(&v);
            let right = |v: usize| oct.color_b.contains(&v) || (x.contains(&v) && !y.contains(&v));
            let expect: Vec<usize> = (0..g.m())
                .filter(|&id| {
                    let e = g.edge(id);
                    (left(e.u) && right(e.v)) || (left(e.v) && right(e.u))
                })
                .collect();
            assert_eq!(gy.edge_map, expect);
        }
    }
}

#[test]
fn min_oct_is_minimum() {
    for seed in 0..300u64 {
        let n = (seed % 13) as usize;
        let g = random_graph(n, [0.2, 0.4, 0.6, 0.8][(seed % 4) as usize], seed);
        let fast = min_oct(&g);
        fast.check(&g).unwrap();
        let slow = min_oct_bruteforce(&g).unwrap();
        assert_eq!(fast.size(), slow.size(), "seed {seed}");
        let mut removed = vec![false; n];
        for &v in &fast.transversal {
            removed[v] = true;
        }
        if n <= 12 {
            assert!(bipartite_by_colourings(&g, &removed));
        }
    }
}

#[test]
fn independence_numbers_match_subset_oracle() {
    for seed in 0..120u64 {
        let n = (seed % 12) as usize + 1;
        let g = random_graph(n, 0.4, seed);
        let brute = (0u32..(1 << n))
            .filter(|mask| g.edges().iter().all(|e| mask >> e.u & 1 == 0 || mask >> e.v & 1 == 0))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(independence_number(&g).unwrap(), brute);

        let na = 1 + (seed % 6) as usize;
        let (bg, bip) = random_bipartite(na, 12 - na, 0.4, seed);
        assert_eq!(
            bipartite_independence_number(&bg, &bip).unwrap(),
            brute_beta(&bg, &bip.side_a(), &bip.side_b())
        );
    }
}

#[test]
fn pruned_and_full_sweeps_agree() {
    for seed in 0..120u64 {
        let n = 2 * (1 + seed % 5) as usize;
        let g = random_graph(n, 0.6, seed);
        for k in 0..=n / 2 {
            let q = ParityQuery::new(k as i64).unwrap();
            let pruned = solve_bcpm_with(&g, q, &BcpmOptions::default()).unwrap();
            let full = solve_bcpm_with(
                &g,
                q,
                &BcpmOptions {
                    mode: SweepMode::Full,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(pruned.matching.is_some(), full.matching.is_some(), "seed {seed} k {k}");
        }
    }
}

#[test]
fn parallel_sweep_reports_lowest_winner() {
    for seed in 0..40u64 {
        let g = random_graph(12, 0.7, seed);
        for k in 0..=6 {
            let q = ParityQuery::new(k).unwrap();
            let seq = solve_bcpm_with(&g, q, &BcpmOptions::default()).unwrap();
            let par = solve_bcpm_with(
                &g,
                q,
                &BcpmOptions {
                    jobs: 4,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(seq.matching, par.matching);
            assert_eq!(seq.stats, par.stats);
        }
    }
}

#[test]
fn bipartite_bcpm_with_vacuous_bound() {
    for seed in 0..150u64 {
        let half = 1 + (seed % 7) as usize;
        let (g, bip) = random_bipartite(half, half, 0.5, seed);
        let weights = pm_weights(&g);
        for k in [half, half.saturating_sub(1)] {
            let q = ParityQuery::new(k as i64).unwrap();
            let expect = weights.iter().any(|&w| w % 2 == k % 2);
            assert_eq!(solve_bcpm_bipartite(&g, &bip, q).unwrap().is_some(), expect);
        }
    }
}

#[test]
fn oac_via_cpm_matches_opposite_parity_existence() {
    for seed in 0..150u64 {
        let (g, m) = random_with_pm(2 * (2 + seed % 4) as usize, 0.4, seed);
        let parity = m.weight(&g) % 2;
        let expect = pm_weights(&g).iter().any(|w| w % 2 != parity);
        let got = solve_oac(&g, &m).unwrap();
        assert_eq!(got.is_some(), expect, "seed {seed}");
        if let Some(c) = got {
            c.check(&g, &m).unwrap();
            assert_eq!(c.weight(&g) % 2, 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bcpm_witness_is_admissible_and_complete(n in 2usize..11, p in 0.1f64..0.9, seed in any::<u64>(), k in 0i64..6) {
        let g = random_graph(n, p, seed);
        let q = ParityQuery::new(k).unwrap();
        let truth = pm_weights(&g).iter().any(|&w| q.admits(w));
        let got = solve_bcpm(&g, q);
        prop_assert_eq!(got.is_some(), truth);
        if let Some(m) = got {
            prop_assert!(m.check(&g).is_ok() && m.is_perfect(&g) && q.admits(m.weight(&g)));
        }
    }

    #[test]
    fn oct_is_a_minimum_valid_decomposition(n in 1usize..12, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let d = min_oct(&g);
        prop_assert!(d.check(&g).is_ok());
        let mut all: Vec<_> = d.transversal.iter().chain(&d.color_a).chain(&d.color_b).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        prop_assert_eq!(d.transversal.len(), min_oct_bruteforce(&g).unwrap().transversal.len());
    }
}
