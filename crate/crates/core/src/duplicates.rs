//! Exact-duplicate handling shared by every sorter.
//!
//! Ordinal ranks cannot tell two equal rows apart, so duplicates are folded
//! out before sorting and get their representative's rank afterwards.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fronts::RankAssignment;
use crate::objective::ObjectiveMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateMap {
    representative: Vec<usize>,
    unique_indices: Vec<usize>,
}

impl DuplicateMap {
    /// For each original row, the first row with a bitwise-identical vector.
    pub fn representative(&self) -> &[usize] {
        &self.representative
    }

    /// Representatives in first-occurrence order; position `u` here is row
    /// `u` of the deduplicated matrix.
    pub fn unique_indices(&self) -> &[usize] {
        &self.unique_indices
    }

    pub fn has_duplicates(&self) -> bool {
        self.unique_indices.len() < self.representative.len()
    }
}

pub fn deduplicate(obj: &ObjectiveMatrix) -> (ObjectiveMatrix, DuplicateMap) {
    let mut first_seen: HashMap<Vec<u64>, usize> = HashMap::with_capacity(obj.n());
    let mut representative = Vec::with_capacity(obj.n());
    let mut unique_indices = Vec::new();
    for (i, row) in obj.rows().enumerate() {
        let key: Vec<u64> = row.iter().map(|v| v.to_bits()).collect();
        let rep = *first_seen.entry(key).or_insert_with(|| {
            unique_indices.push(i);
            i
        });
        representative.push(rep);
    }

    let unique = if unique_indices.len() == obj.n() {
        obj.clone()
    } else {
        let mut values = Vec::with_capacity(unique_indices.len() * obj.m());
        for &i in &unique_indices {
            values.extend_from_slice(obj.row(i));
        }
        ObjectiveMatrix::new(unique_indices.len(), obj.m(), values).expect("rows of a valid matrix")
    };
    (
        unique,
        DuplicateMap {
            representative,
            unique_indices,
        },
    )
}

/// Expands ranks of the deduplicated rows back to the original rows.
pub fn reinsert_duplicates(
    unique_ranks: &RankAssignment,
    map: &DuplicateMap,
) -> Result<RankAssignment> {
    if unique_ranks.len() != map.unique_indices.len() {
        return Err(Error::Consistency(format!(
            "{} ranks for {} unique solutions",
            unique_ranks.len(),
            map.unique_indices.len()
        )));
    }
    let mut slot = vec![usize::MAX; map.representative.len()];
    for (u, &orig) in map.unique_indices.iter().enumerate() {
        slot[orig] = u;
    }
    let ranks = map
        .representative
        .iter()
        .map(|&rep| unique_ranks[slot[rep]])
        .collect();
    Ok(RankAssignment::from_raw(ranks))
}

/// Fails if two rows are bitwise identical. `lex_order` must be the
/// lexicographic order of the rows, which places duplicates next to each
/// other.
pub(crate) fn ensure_distinct(obj: &ObjectiveMatrix, lex_order: &[u32]) -> Result<()> {
    for w in lex_order.windows(2) {
        let (a, b) = (w[0] as usize, w[1] as usize);
        if obj.rows_equal(a, b) {
            return Err(Error::Duplicates {
                first: a.min(b),
                second: a.max(b),
            });
        }
    }
    Ok(())
}
