//! RankIntersect: quadratic-space non-dominated sorting by bitset
//! intersection of objective-wise successor sets.
//!
//! Every bitset here is indexed by lexicographic position (the position of a
//! solution in the first permutation column), so the successor set taken
//! from the first column is a contiguous suffix and live ranges stay tight.
//!
//! No objective values are looked at after the permutations are built.

use crate::bitset::BlockBitset;
use crate::counters::Counters;
use crate::duplicates::ensure_distinct;
use crate::error::{Error, Result};
use crate::fronts::RankAssignment;
use crate::objective::ObjectiveMatrix;
use crate::ordering::{build_permutations, PermutationMatrix};

/// 2 GiB.
pub const DEFAULT_MEM_CAP_BYTES: u64 = 2 << 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankIntersectConfig {
    /// Upper bound on the bytes spent on per-solution dominance sets.
    pub mem_cap_bytes: u64,
    /// Re-check after every rank update that the rank sets partition all
    /// solutions and agree with the rank array. Slow; for tests.
    pub verify_rank_sets: bool,
}

impl Default for RankIntersectConfig {
    fn default() -> Self {
        Self {
            mem_cap_bytes: DEFAULT_MEM_CAP_BYTES,
            verify_rank_sets: false,
        }
    }
}

/// Bytes needed for `n` dominance sets of `n` bits each.
pub fn dominance_set_bytes(n: usize) -> u64 {
    n as u64 * n.div_ceil(64) as u64 * 8
}

pub fn rank_intersect_sort(
    obj: &ObjectiveMatrix,
    counters: &mut Counters,
) -> Result<RankAssignment> {
    rank_intersect_sort_with(obj, counters, &RankIntersectConfig::default())
}

pub fn rank_intersect_sort_with(
    obj: &ObjectiveMatrix,
    counters: &mut Counters,
    config: &RankIntersectConfig,
) -> Result<RankAssignment> {
    let n = obj.n();
    let m = obj.m();
    if m > 1 {
        let required = dominance_set_bytes(n);
        if required > config.mem_cap_bytes {
            return Err(Error::Capacity {
                required,
                cap: config.mem_cap_bytes,
            });
        }
    }
    let p = build_permutations(obj)?;
    ensure_distinct(obj, p.column(0))?;

    let mut pos_of = vec![0u32; n];
    for (pos, &i) in p.column(0).iter().enumerate() {
        pos_of[i as usize] = pos as u32;
    }

    let mut local = Counters::default();
    let rank_by_pos = if m == 1 {
        // the first column is also the last: successors are whatever is
        // left of the work set
        assign_ranks(&p, &pos_of, None, config, &mut local)?
    } else {
        let mut work = BlockBitset::full(n)?;
        let mut dom = Vec::with_capacity(n);
        for _ in 0..n {
            work.remove(dom.len())?;
            let mut set = BlockBitset::empty(n)?;
            set.copy_from(&work)?;
            dom.push(set);
        }
        for k in 1..m - 1 {
            work.fill();
            for &i in p.column(k) {
                let pos = pos_of[i as usize] as usize;
                work.remove(pos)?;
                dom[pos].intersect_assign(&work, &mut local)?;
            }
        }
        assign_ranks(&p, &pos_of, Some(&dom), config, &mut local)?
    };

    let mut ranks = vec![0u32; n];
    for (pos, &i) in p.column(0).iter().enumerate() {
        ranks[i as usize] = rank_by_pos[pos];
    }
    *counters += local;
    Ok(RankAssignment::from_raw(ranks))
}

/// Sweeps the last permutation column, moving equally ranked successors of
/// each solution into the next rank set. Returns ranks by lexicographic
/// position.
fn assign_ranks(
    p: &PermutationMatrix,
    pos_of: &[u32],
    dom: Option<&[BlockBitset]>,
    config: &RankIntersectConfig,
    counters: &mut Counters,
) -> Result<Vec<u32>> {
    let n = p.n();
    let mut rank = vec![1u32; n];
    let mut rank_sets = vec![BlockBitset::full(n)?];
    let mut work = BlockBitset::full(n)?;
    let mut successors = BlockBitset::empty(n)?;

    for &i in p.column(p.m() - 1) {
        let pos = pos_of[i as usize] as usize;
        work.remove(pos)?;
        let r = rank[pos] as usize;
        match dom {
            Some(dom) => {
                successors.assign_intersection(&dom[pos], &work, counters)?;
                successors.intersect_assign(&rank_sets[r - 1], counters)?;
            }
            None => successors.assign_intersection(&work, &rank_sets[r - 1], counters)?,
        }
        if successors.is_empty() {
            continue;
        }
        if rank_sets.len() == r {
            rank_sets.push(BlockBitset::empty(n)?);
        }
        let (current, next) = rank_sets.split_at_mut(r);
        let (current, next) = (&mut current[r - 1], &mut next[0]);
        for q in successors.iter_ones() {
            current.remove(q)?;
            next.insert(q)?;
            rank[q] = r as u32 + 1;
            counters.rank_updates += 1;
        }
        if config.verify_rank_sets {
            check_rank_sets(&rank_sets, &rank)?;
        }
    }
    Ok(rank)
}

/// The rank sets are disjoint, cover every position, and agree with `rank`.
fn check_rank_sets(rank_sets: &[BlockBitset], rank: &[u32]) -> Result<()> {
    let mut owner = vec![0u32; rank.len()];
    for (r, set) in rank_sets.iter().enumerate() {
        for q in set.iter_ones() {
            if owner[q] != 0 {
                return Err(Error::Consistency(format!(
                    "position {q} is in rank sets {} and {}",
                    owner[q],
                    r + 1
                )));
            }
            owner[q] = r as u32 + 1;
        }
    }
    if let Some(q) = (0..rank.len()).find(|&q| owner[q] != rank[q]) {
        return Err(Error::Consistency(format!(
            "position {q} has rank {} but sits in rank set {}",
            rank[q], owner[q]
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verified() -> RankIntersectConfig {
        RankIntersectConfig {
            verify_rank_sets: true,
            ..Default::default()
        }
    }

    #[test]
    fn chain_gives_singleton_fronts() {
        let rows: Vec<[f64; 2]> = (1..=100).map(|i| [i as f64, i as f64]).collect();
        let obj = ObjectiveMatrix::from_rows(&rows).unwrap();
        let mut c = Counters::default();
        let ranks = rank_intersect_sort_with(&obj, &mut c, &verified()).unwrap();
        assert_eq!(ranks.as_slice(), (1..=100).collect::<Vec<u32>>().as_slice());
        assert_eq!(c.full_comparisons, 0);
        assert_eq!(c.rank_updates, 99 * 100 / 2);
    }

    #[test]
    fn single_objective_and_single_point() {
        let obj = ObjectiveMatrix::from_rows(&[[3.0], [1.0], [2.0]]).unwrap();
        let ranks = rank_intersect_sort_with(&obj, &mut Counters::default(), &verified()).unwrap();
        assert_eq!(ranks.as_slice(), &[3, 1, 2]);
        let one = ObjectiveMatrix::from_rows(&[[0.5, 0.5, 0.5]]).unwrap();
        assert_eq!(
            rank_intersect_sort(&one, &mut Counters::default())
                .unwrap()
                .as_slice(),
            &[1]
        );
    }

    #[test]
    fn three_objectives_with_ties() {
        let obj = ObjectiveMatrix::from_rows(&[
            [1.0, 1.0, 1.0],
            [0.0, 1.0, 1.0],
            [2.0, 0.5, 1.0],
            [2.0, 0.5, 0.0],
        ])
        .unwrap();
        let ranks = rank_intersect_sort_with(&obj, &mut Counters::default(), &verified()).unwrap();
        assert_eq!(ranks.as_slice(), &[2, 1, 2, 1]);
    }

    #[test]
    fn memory_cap_refusal() {
        let rows: Vec<[f64; 2]> = (0..200).map(|i| [i as f64, -(i as f64)]).collect();
        let obj = ObjectiveMatrix::from_rows(&rows).unwrap();
        let cfg = RankIntersectConfig {
            mem_cap_bytes: dominance_set_bytes(200) - 1,
            ..Default::default()
        };
        assert!(matches!(
            rank_intersect_sort_with(&obj, &mut Counters::default(), &cfg),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(dominance_set_bytes(200), 200 * 4 * 8);
    }

    #[test]
    fn rejects_duplicates() {
        let obj = ObjectiveMatrix::from_rows(&[[0.1, 0.2], [0.1, 0.2]]).unwrap();
        assert!(matches!(
            rank_intersect_sort(&obj, &mut Counters::default()),
            Err(Error::Duplicates { .. })
        ));
    }
}
