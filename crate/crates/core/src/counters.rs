use std::ops::AddAssign;

/// Operation counts recorded by the sorters.
///
/// `inner_iterations` counts every successor position visited by
/// RankOrdinal, including ones skipped on the rank-equality check;
/// `full_comparisons` counts only complete M-wide ordinal-rank comparisons.
/// `block_ops` counts 64-bit blocks visited by bitset intersections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    pub inner_iterations: u64,
    pub full_comparisons: u64,
    pub rank_updates: u64,
    pub block_ops: u64,
}

impl Counters {
    pub fn new() -> Self {
        Self::default()
    }
}

impl AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.inner_iterations += rhs.inner_iterations;
        self.full_comparisons += rhs.full_comparisons;
        self.rank_updates += rhs.rank_updates;
        self.block_ops += rhs.block_ops;
    }
}
