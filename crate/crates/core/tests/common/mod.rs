#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ranksort::ObjectiveMatrix;

pub const EXAMPLE_ROWS: [[f64; 2]; 10] = [
    [0.79, 0.35],
    [0.40, 0.71],
    [0.15, 0.014],
    [0.46, 0.82],
    [0.28, 0.98],
    [0.31, 0.74],
    [0.82, 0.52],
    [0.84, 0.19],
    [0.85, 0.78],
    [0.96, 0.83],
];

pub fn example() -> ObjectiveMatrix {
    ObjectiveMatrix::from_rows(&EXAMPLE_ROWS).unwrap()
}

pub fn to_zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i - 1).collect()
}

/// Values on a coarse grid of `levels` steps, so per-objective ties (and,
/// for small grids, whole-row duplicates) are common.
pub fn grid_matrix(rng: &mut ChaCha8Rng, n: usize, m: usize, levels: u32) -> ObjectiveMatrix {
    let values = (0..n * m)
        .map(|_| rng.gen_range(0..levels) as f64 / levels as f64)
        .collect();
    ObjectiveMatrix::new(n, m, values).unwrap()
}

pub fn uniform_matrix(rng: &mut ChaCha8Rng, n: usize, m: usize) -> ObjectiveMatrix {
    let values = (0..n * m).map(|_| rng.gen::<f64>()).collect();
    ObjectiveMatrix::new(n, m, values).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Straight from the definition: `a <= b` everywhere and `<` somewhere.
pub fn brute_dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
}

/// Domination rank by definition: 1 + the longest chain of dominators,
/// computed by repeated relaxation.
pub fn brute_ranks(obj: &ObjectiveMatrix) -> Vec<u32> {
    let n = obj.n();
    let mut rank = vec![1u32; n];
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if brute_dominates(obj.row(i), obj.row(j)) && rank[j] < rank[i] + 1 {
                    rank[j] = rank[i] + 1;
                    changed = true;
                }
            }
        }
        if !changed {
            return rank;
        }
    }
}

/// Checks the partition properties of a rank assignment directly: fronts
/// are internally non-dominated and everything past the first front has a
/// dominator in the previous one.
pub fn assert_valid_fronts(obj: &ObjectiveMatrix, ranks: &[u32]) {
    let max = *ranks.iter().max().unwrap();
    let fronts: Vec<Vec<usize>> = (1..=max)
        .map(|r| (0..ranks.len()).filter(|&i| ranks[i] == r).collect())
        .collect();
    assert_eq!(fronts.iter().map(Vec::len).sum::<usize>(), obj.n());
    for (r, front) in fronts.iter().enumerate() {
        assert!(!front.is_empty(), "front {} empty", r + 1);
        for &a in front {
            for &b in front {
                assert!(
                    !brute_dominates(obj.row(a), obj.row(b)),
                    "{a} dominates {b} in front {}",
                    r + 1
                );
            }
            if r > 0 {
                assert!(
                    fronts[r - 1]
                        .iter()
                        .any(|&d| brute_dominates(obj.row(d), obj.row(a))),
                    "{a} in front {} has no dominator in the previous front",
                    r + 1
                );
            }
        }
    }
}
