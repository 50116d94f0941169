//! Every sorter against the naive oracle, and the oracle against the
//! definition.

mod common;

use std::collections::HashSet;

use common::{assert_valid_fronts, brute_ranks, grid_matrix, rng, uniform_matrix};
use rand::Rng;
use ranksort::rank_ordinal::rank_ordinal_sort_observed;
use ranksort::{
    deduplicate, ens_bs, ens_ss, naive_fast_nds, rank_intersect_sort_with, rank_ordinal_sort,
    rank_with_duplicates, reinsert_duplicates, Algorithm, Counters, RankAssignment,
    RankIntersectConfig,
};

fn sum_excess(ranks: &RankAssignment) -> u64 {
    ranks.as_slice().iter().map(|&r| r as u64 - 1).sum()
}

#[test]
fn naive_matches_definition() {
    for seed in 0..60 {
        let mut r = rng(seed);
        let n = r.gen_range(1..80);
        let m = r.gen_range(1..5);
        // coarse grids give ties and duplicates
        let obj = grid_matrix(&mut r, n, m, 4);
        let naive = naive_fast_nds(&obj).unwrap();
        assert_eq!(
            naive.as_slice(),
            brute_ranks(&obj).as_slice(),
            "seed {seed}"
        );
        assert_valid_fronts(&obj, naive.as_slice());
    }
}

#[test]
fn sorters_match_oracle_on_random_instances() {
    let verify = RankIntersectConfig {
        verify_rank_sets: true,
        ..Default::default()
    };
    let mut instances = 0;
    for &m in &[2usize, 3, 5, 10] {
        for seed in 0..60u64 {
            let mut r = rng(seed * 31 + m as u64);
            let n = r.gen_range(1..=500);
            let raw = if seed % 3 == 0 {
                grid_matrix(&mut r, n, m, 8)
            } else {
                uniform_matrix(&mut r, n, m)
            };
            let (obj, _) = deduplicate(&raw);
            let oracle = naive_fast_nds(&obj).unwrap();

            let mut ro_c = Counters::default();
            let ro = rank_ordinal_sort(&obj, &mut ro_c).unwrap();
            let mut rs_c = Counters::default();
            let cfg = if n <= 150 {
                &verify
            } else {
                &RankIntersectConfig::default()
            };
            let rs = rank_intersect_sort_with(&obj, &mut rs_c, cfg).unwrap();

            assert_eq!(ro, oracle, "ro m={m} seed={seed}");
            assert_eq!(rs, oracle, "rs m={m} seed={seed}");
            assert_eq!(ens_ss(&obj).unwrap(), oracle, "ens-ss m={m} seed={seed}");
            assert_eq!(ens_bs(&obj).unwrap(), oracle, "ens-bs m={m} seed={seed}");

            assert_eq!(ro_c.rank_updates, sum_excess(&oracle));
            assert_eq!(rs_c.rank_updates, ro_c.rank_updates);
            assert_eq!(rs_c.full_comparisons, 0);
            assert!(ro_c.rank_updates <= ro_c.inner_iterations);
            assert!(ro_c.full_comparisons <= ro_c.inner_iterations);
            if obj.n() <= 200 {
                assert_valid_fronts(&obj, oracle.as_slice());
            }
            instances += 1;
        }
    }
    assert!(instances >= 200);
}

#[test]
fn single_objective_ranks_by_value() {
    let obj = ranksort::ObjectiveMatrix::from_rows(&[[0.3], [0.1], [0.3], [0.2], [0.1]]).unwrap();
    for algo in Algorithm::ALL {
        let ranks = rank_with_duplicates(&obj, algo, &mut Counters::default(), &Default::default())
            .unwrap();
        assert_eq!(ranks.as_slice(), &[3, 1, 3, 2, 1], "{algo}");
    }
}

#[test]
fn rank_is_final_when_visited() {
    for seed in 0..30 {
        let mut r = rng(500 + seed);
        let obj = deduplicate(&grid_matrix(&mut r, 200, 3, 10)).0;
        let mut seen = vec![0u32; obj.n()];
        let final_ranks =
            rank_ordinal_sort_observed(&obj, &mut Counters::default(), |i, rank| seen[i] = rank)
                .unwrap();
        assert_eq!(seen.as_slice(), final_ranks.as_slice(), "seed {seed}");
    }
}

#[test]
fn duplicate_pipeline_matches_oracle_on_full_input() {
    for seed in 0..40 {
        let mut r = rng(9000 + seed);
        let n = r.gen_range(1..300);
        let m = r.gen_range(1..6);
        let obj = grid_matrix(&mut r, n, m, 3);
        let oracle = naive_fast_nds(&obj).unwrap();
        for algo in Algorithm::ALL {
            let got =
                rank_with_duplicates(&obj, algo, &mut Counters::default(), &Default::default())
                    .unwrap();
            assert_eq!(got, oracle, "{algo} seed {seed}");
        }
    }
}

#[test]
fn dedup_counts_match_hash_set() {
    let mut r = rng(77);
    let n = 1000;
    let m = 3;
    let mut rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..m).map(|_| r.gen::<f64>()).collect())
        .collect();
    for t in 1..n {
        if r.gen_bool(0.3) {
            rows[t] = rows[r.gen_range(0..t)].clone();
        }
    }
    let obj = ranksort::ObjectiveMatrix::from_rows(&rows).unwrap();
    let distinct: HashSet<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|v| v.to_bits()).collect())
        .collect();
    let (unique, map) = deduplicate(&obj);
    assert_eq!(unique.n(), distinct.len());
    assert_eq!(map.unique_indices().len(), distinct.len());

    // any rank assignment survives the round trip on representatives
    let arbitrary: Vec<u32> = (0..unique.n()).map(|u| (u % 7) as u32 + 1).collect();
    let arbitrary = RankAssignment::new(arbitrary).unwrap();
    let full = reinsert_duplicates(&arbitrary, &map).unwrap();
    for (u, &orig) in map.unique_indices().iter().enumerate() {
        assert_eq!(full[orig], arbitrary[u]);
    }
    for i in 0..n {
        assert_eq!(full[i], full[map.representative()[i]]);
    }
}
