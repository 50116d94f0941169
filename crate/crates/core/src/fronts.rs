use crate::error::{Error, Result};

/// Domination rank per solution, 1-based: rank 1 is the non-dominated set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankAssignment {
    ranks: Vec<u32>,
}

impl RankAssignment {
    /// Wraps ranks, checking they start at 1 and leave no gaps.
    pub fn new(ranks: Vec<u32>) -> Result<Self> {
        validate_ranks(&ranks)?;
        Ok(Self { ranks })
    }

    pub(crate) fn from_raw(ranks: Vec<u32>) -> Self {
        debug_assert!(validate_ranks(&ranks).is_ok(), "{ranks:?}");
        Self { ranks }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.ranks
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.ranks
    }

    pub fn max_rank(&self) -> u32 {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Order-independent hash of the assignment (wrapping sum of mixed
    /// `(index, rank)` pairs).
    pub fn checksum(&self) -> u64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| splitmix64(((i as u64) << 32) ^ r as u64))
            .fold(0u64, u64::wrapping_add)
    }
}

impl std::ops::Index<usize> for RankAssignment {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.ranks[i]
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn validate_ranks(ranks: &[u32]) -> Result<()> {
    if ranks.is_empty() {
        return Ok(());
    }
    let max = *ranks.iter().max().unwrap() as usize;
    if ranks.contains(&0) {
        return Err(Error::Consistency("ranks are 1-based, found 0".into()));
    }
    let mut present = vec![false; max + 1];
    for &r in ranks {
        present[r as usize] = true;
    }
    if let Some(gap) = (1..=max).find(|&r| !present[r]) {
        return Err(Error::Consistency(format!(
            "rank {gap} is missing below max rank {max}"
        )));
    }
    Ok(())
}

/// Solutions grouped by rank: `fronts()[r]` holds every solution of rank
/// `r + 1` in ascending index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontPartition {
    fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    pub fn into_inner(self) -> Vec<Vec<usize>> {
        self.fronts
    }

    /// One line per front, `F<r>: i1 i2 ...` with 1-based indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (r, front) in self.fronts.iter().enumerate() {
            out.push_str(&format!("F{}:", r + 1));
            for i in front {
                out.push_str(&format!(" {}", i + 1));
            }
            out.push('\n');
        }
        out
    }
}

pub fn fronts_from_ranks(ranks: &RankAssignment) -> Result<FrontPartition> {
    validate_ranks(ranks.as_slice())?;
    let mut fronts = vec![Vec::new(); ranks.max_rank() as usize];
    for (i, &r) in ranks.as_slice().iter().enumerate() {
        fronts[r as usize - 1].push(i);
    }
    Ok(FrontPartition { fronts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_fronts() {
        // 1-based fronts {3}, {1,2,5,6,8}, {4,7}, {9}, {10}
        let ranks = RankAssignment::new(vec![2, 2, 1, 3, 2, 2, 3, 2, 4, 5]).unwrap();
        let fronts = fronts_from_ranks(&ranks).unwrap();
        assert_eq!(
            fronts.fronts(),
            &[vec![2], vec![0, 1, 4, 5, 7], vec![3, 6], vec![8], vec![9]]
        );
        assert_eq!(
            fronts.to_text(),
            "F1: 3\nF2: 1 2 5 6 8\nF3: 4 7\nF4: 9\nF5: 10\n"
        );
    }

    #[test]
    fn single_front_and_singletons() {
        let all_one = RankAssignment::new(vec![1; 6]).unwrap();
        assert_eq!(
            fronts_from_ranks(&all_one).unwrap().fronts(),
            &[vec![0, 1, 2, 3, 4, 5]]
        );
        let chain = RankAssignment::new(vec![3, 1, 4, 2]).unwrap();
        let f = fronts_from_ranks(&chain).unwrap();
        assert_eq!(f.fronts(), &[vec![1], vec![3], vec![0], vec![2]]);
    }

    #[test]
    fn gaps_and_zero_rejected() {
        assert!(RankAssignment::new(vec![1, 3]).is_err());
        assert!(RankAssignment::new(vec![2, 2]).is_err());
        assert!(RankAssignment::new(vec![0, 1]).is_err());
    }

    #[test]
    fn checksum_depends_on_assignment() {
        let a = RankAssignment::new(vec![1, 2, 1]).unwrap();
        let b = RankAssignment::new(vec![1, 1, 2]).unwrap();
        assert_ne!(a.checksum(), b.checksum());
        assert_eq!(a.checksum(), a.clone().checksum());
    }
}
