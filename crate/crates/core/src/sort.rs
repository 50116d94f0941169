//! One entry point over every sorter, plus the shared duplicate pipeline.

use std::fmt;
use std::str::FromStr;

use crate::baselines::{ens_bs_counted, ens_ss_counted, naive_fast_nds_counted};
use crate::counters::Counters;
use crate::duplicates::{deduplicate, reinsert_duplicates};
use crate::error::{Error, Result};
use crate::fronts::{fronts_from_ranks, FrontPartition, RankAssignment};
use crate::objective::ObjectiveMatrix;
use crate::rank_intersect::{rank_intersect_sort_with, RankIntersectConfig};
use crate::rank_ordinal::rank_ordinal_sort;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    RankOrdinal,
    RankIntersect,
    EnsSs,
    EnsBs,
    Naive,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::RankOrdinal,
        Algorithm::RankIntersect,
        Algorithm::EnsSs,
        Algorithm::EnsBs,
        Algorithm::Naive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::RankOrdinal => "ro",
            Algorithm::RankIntersect => "rs",
            Algorithm::EnsSs => "ens-ss",
            Algorithm::EnsBs => "ens-bs",
            Algorithm::Naive => "naive",
        }
    }

    /// Runs the sorter on a duplicate-free matrix (the naive sorter also
    /// accepts duplicates).
    pub fn run(
        self,
        obj: &ObjectiveMatrix,
        counters: &mut Counters,
        rs_config: &RankIntersectConfig,
    ) -> Result<RankAssignment> {
        match self {
            Algorithm::RankOrdinal => rank_ordinal_sort(obj, counters),
            Algorithm::RankIntersect => rank_intersect_sort_with(obj, counters, rs_config),
            Algorithm::EnsSs => ens_ss_counted(obj, counters),
            Algorithm::EnsBs => ens_bs_counted(obj, counters),
            Algorithm::Naive => naive_fast_nds_counted(obj, counters),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Deduplicates, sorts with `algo`, and gives every duplicate its
/// representative's rank.
pub fn rank_with_duplicates(
    obj: &ObjectiveMatrix,
    algo: Algorithm,
    counters: &mut Counters,
    rs_config: &RankIntersectConfig,
) -> Result<RankAssignment> {
    let (unique, map) = deduplicate(obj);
    let ranks = algo.run(&unique, counters, rs_config)?;
    reinsert_duplicates(&ranks, &map)
}

/// Non-dominated fronts of any valid matrix, duplicates included.
pub fn nondominated_fronts(obj: &ObjectiveMatrix, algo: Algorithm) -> Result<FrontPartition> {
    let ranks = rank_with_duplicates(
        obj,
        algo,
        &mut Counters::default(),
        &RankIntersectConfig::default(),
    )?;
    fronts_from_ranks(&ranks)
}
