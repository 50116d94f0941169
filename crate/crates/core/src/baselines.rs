//! Reference sorters: the classical fast non-dominated sort (the correctness
//! oracle for everything else) and Efficient Non-dominated Sort with
//! sequential and binary front search.

use crate::counters::Counters;
use crate::dominance::{compare_unchecked, dominates, Dominance};
use crate::duplicates::ensure_distinct;
use crate::error::Result;
use crate::fronts::RankAssignment;
use crate::objective::ObjectiveMatrix;
use crate::ordering::lexicographic_order;

/// O(MN²) front peeling over all pairwise dominance outcomes. Equal rows
/// are mutually non-dominated, so duplicates are allowed.
pub fn naive_fast_nds(obj: &ObjectiveMatrix) -> Result<RankAssignment> {
    naive_fast_nds_counted(obj, &mut Counters::default())
}

/// [`naive_fast_nds`], adding each pairwise comparison to
/// `counters.full_comparisons`.
pub fn naive_fast_nds_counted(
    obj: &ObjectiveMatrix,
    counters: &mut Counters,
) -> Result<RankAssignment> {
    let n = obj.n();
    let mut dominated_by = vec![0u32; n];
    let mut dominating: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n {
        let ri = obj.row(i);
        for j in i + 1..n {
            match compare_unchecked(ri, obj.row(j)) {
                Dominance::ADominatesB => {
                    dominating[i].push(j as u32);
                    dominated_by[j] += 1;
                }
                Dominance::BDominatesA => {
                    dominating[j].push(i as u32);
                    dominated_by[i] += 1;
                }
                Dominance::Incomparable | Dominance::Equal => {}
            }
        }
    }
    counters.full_comparisons += (n as u64 * n.saturating_sub(1) as u64) / 2;

    let mut rank = vec![0u32; n];
    let mut front: Vec<usize> = (0..n).filter(|&i| dominated_by[i] == 0).collect();
    let mut r = 1;
    while !front.is_empty() {
        let mut next = Vec::new();
        for &i in &front {
            rank[i] = r;
            for &j in &dominating[i] {
                let j = j as usize;
                dominated_by[j] -= 1;
                if dominated_by[j] == 0 {
                    next.push(j);
                }
            }
        }
        front = next;
        r += 1;
    }
    Ok(RankAssignment::from_raw(rank))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FrontSearch {
    Sequential,
    Binary,
}

pub fn ens_ss(obj: &ObjectiveMatrix) -> Result<RankAssignment> {
    ens_ss_counted(obj, &mut Counters::default())
}

pub fn ens_bs(obj: &ObjectiveMatrix) -> Result<RankAssignment> {
    ens_bs_counted(obj, &mut Counters::default())
}

pub fn ens_ss_counted(obj: &ObjectiveMatrix, counters: &mut Counters) -> Result<RankAssignment> {
    ens(obj, FrontSearch::Sequential, counters)
}

pub fn ens_bs_counted(obj: &ObjectiveMatrix, counters: &mut Counters) -> Result<RankAssignment> {
    ens(obj, FrontSearch::Binary, counters)
}

fn ens(
    obj: &ObjectiveMatrix,
    search: FrontSearch,
    counters: &mut Counters,
) -> Result<RankAssignment> {
    let lex = lexicographic_order(obj)?;
    ensure_distinct(obj, &lex)?;

    let mut fronts: Vec<Vec<u32>> = Vec::new();
    let mut rank = vec![0u32; obj.n()];
    let mut comparisons = 0u64;

    // In lexicographic order nobody can be dominated by a later solution,
    // so each one only has to be checked against already placed ones.
    let mut dominated_in = |front: &[u32], i: usize| {
        let row = obj.row(i);
        front.iter().rev().any(|&s| {
            comparisons += 1;
            dominates(obj.row(s as usize), row)
        })
    };

    for &i in &lex {
        let i = i as usize;
        let k = match search {
            FrontSearch::Sequential => fronts
                .iter()
                .position(|f| !dominated_in(f, i))
                .unwrap_or(fronts.len()),
            FrontSearch::Binary => {
                // "has a dominator" holds on a prefix of the fronts
                let (mut lo, mut hi) = (0, fronts.len());
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    if dominated_in(&fronts[mid], i) {
                        lo = mid + 1;
                    } else {
                        hi = mid;
                    }
                }
                lo
            }
        };
        if k == fronts.len() {
            fronts.push(Vec::new());
        }
        fronts[k].push(i as u32);
        rank[i] = k as u32 + 1;
    }

    counters.full_comparisons += comparisons;
    Ok(RankAssignment::from_raw(rank))
}
