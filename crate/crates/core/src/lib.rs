//! Rank-based non-dominated sorting.
//!
//! Two sorters built on objective-wise stable sorting:
//!
//! * [`rank_ordinal_sort`] (RankOrdinal, "RO") keeps `O(N)` extra space and
//!   infers dominance by comparing ordinal ranks.
//! * [`rank_intersect_sort`] (RankIntersect, "RS") keeps one `N`-bit
//!   successor set per solution and never compares objective values after
//!   sorting.
//!
//! Both move dominated successors into the next front by incrementing their
//! rank, so the number of rank updates equals `Σ (rank - 1)`. The naive
//! `O(MN²)` sort and ENS-SS / ENS-BS are included as baselines, and
//! [`Counters`] records the work each sorter does.
//!
//! Sorters expect duplicate-free input; [`rank_with_duplicates`] and
//! [`nondominated_fronts`] handle duplicates for any of them.
//!
//! ```
//! use ranksort::{nondominated_fronts, Algorithm, ObjectiveMatrix};
//!
//! let obj = ObjectiveMatrix::from_rows(&[[0.2, 0.8], [0.5, 0.5], [0.6, 0.9]]).unwrap();
//! let fronts = nondominated_fronts(&obj, Algorithm::RankIntersect).unwrap();
//! assert_eq!(fronts.fronts(), &[vec![0, 1], vec![2]]);
//! ```

pub mod baselines;
pub mod bitset;
pub mod counters;
pub mod dominance;
pub mod duplicates;
pub mod error;
pub mod fronts;
pub mod generators;
pub mod objective;
pub mod ordering;
pub mod rank_intersect;
pub mod rank_ordinal;
pub mod sort;

pub use baselines::{ens_bs, ens_ss, naive_fast_nds};
pub use bitset::BlockBitset;
pub use counters::Counters;
pub use dominance::{compare_dominance, Dominance};
pub use duplicates::{deduplicate, reinsert_duplicates, DuplicateMap};
pub use error::{Error, Result};
pub use fronts::{fronts_from_ranks, FrontPartition, RankAssignment};
pub use generators::{generate, GeneratorKind, GeneratorSpec};
pub use objective::ObjectiveMatrix;
pub use ordering::{build_ordinal_ranks, build_permutations, OrdinalRankMatrix, PermutationMatrix};
pub use rank_intersect::{rank_intersect_sort, rank_intersect_sort_with, RankIntersectConfig};
pub use rank_ordinal::rank_ordinal_sort;
pub use sort::{nondominated_fronts, rank_with_duplicates, Algorithm};
