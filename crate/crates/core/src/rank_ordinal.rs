//! RankOrdinal: linear-space non-dominated sorting by ordinal-rank comparison.
//!
//! Solutions are visited in lexicographic order. For each one, the inner loop
//! walks its successors in the objective column where it sits furthest right
//! (the smallest successor set), and every equally ranked successor whose
//! ordinal ranks are all larger gets its rank incremented by one.

use crate::counters::Counters;
use crate::duplicates::ensure_distinct;
use crate::error::Result;
use crate::fronts::RankAssignment;
use crate::objective::ObjectiveMatrix;
use crate::ordering::{build_ordinal_ranks, build_permutations};

pub fn rank_ordinal_sort(obj: &ObjectiveMatrix, counters: &mut Counters) -> Result<RankAssignment> {
    rank_ordinal_sort_observed(obj, counters, |_, _| {})
}

/// Like [`rank_ordinal_sort`], calling `on_visit(i, rank)` each time the
/// outer loop reaches solution `i`, with the rank it holds at that moment.
pub fn rank_ordinal_sort_observed<F>(
    obj: &ObjectiveMatrix,
    counters: &mut Counters,
    mut on_visit: F,
) -> Result<RankAssignment>
where
    F: FnMut(usize, u32),
{
    let p = build_permutations(obj)?;
    ensure_distinct(obj, p.column(0))?;
    let r = build_ordinal_ranks(&p);
    let n = obj.n();

    let mut rank = vec![1u32; n];
    let mut local = Counters::default();

    for &i in p.column(0) {
        let i = i as usize;
        let ri = r.ranks_of(i);
        // largest ordinal rank, first objective on ties
        let (k, start) =
            ri.iter().enumerate().fold(
                (0, ri[0]),
                |best, (k, &v)| if v > best.1 { (k, v) } else { best },
            );
        let rank_i = rank[i];
        on_visit(i, rank_i);

        let successors = &p.column(k)[start as usize + 1..];
        local.inner_iterations += successors.len() as u64;
        for &j in successors {
            let j = j as usize;
            if rank[j] != rank_i {
                continue;
            }
            local.full_comparisons += 1;
            if ri.iter().zip(r.ranks_of(j)).all(|(a, b)| a < b) {
                rank[j] = rank_i + 1;
                local.rank_updates += 1;
            }
        }
    }

    *counters += local;
    Ok(RankAssignment::from_raw(rank))
}
