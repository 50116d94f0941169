//! Objective-wise sort orders (the permutation matrix) and their inverses
//! (the ordinal rank matrix).
//!
//! Column 0 is the lexicographic order of the rows, ties broken by input
//! index. Every other column is a stable sort of column 0 on a single
//! objective, so equal keys keep their lexicographic order. That tie rule is
//! what makes ordinal ranks a sound dominance test: if row `a` dominates row
//! `b`, then `a` precedes `b` in every column.

use crate::error::{Error, Result};
use crate::objective::ObjectiveMatrix;

/// `m` columns of `n` solution indices; column `k` lists solutions by
/// ascending objective `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationMatrix {
    n: usize,
    m: usize,
    // column-major
    data: Vec<u32>,
}

/// Inverse of a [`PermutationMatrix`]: `rank(i, k)` is the position of
/// solution `i` in column `k`. Stored row-major so one solution's ranks are
/// contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinalRankMatrix {
    n: usize,
    m: usize,
    data: Vec<u32>,
}

impl PermutationMatrix {
    /// Builds from explicit columns, checking that each is a permutation.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        let m = columns.len();
        let n = columns.first().map(Vec::len).unwrap_or(0);
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput("empty permutation matrix".into()));
        }
        check_index_range(n)?;
        let mut data = Vec::with_capacity(n * m);
        for col in &columns {
            if col.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    actual: col.len(),
                });
            }
            let mut seen = vec![false; n];
            for &i in col {
                if i >= n || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Consistency(format!(
                        "column is not a permutation of 0..{n}"
                    )));
                }
            }
            data.extend(col.iter().map(|&i| i as u32));
        }
        Ok(Self { n, m, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn column(&self, k: usize) -> &[u32] {
        &self.data[k * self.n..(k + 1) * self.n]
    }

    pub fn column_vec(&self, k: usize) -> Vec<usize> {
        self.column(k).iter().map(|&i| i as usize).collect()
    }
}

impl OrdinalRankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Ordinal ranks of solution `i`, one per objective.
    #[inline]
    pub fn ranks_of(&self, i: usize) -> &[u32] {
        &self.data[i * self.m..(i + 1) * self.m]
    }

    #[inline]
    pub fn rank(&self, i: usize, k: usize) -> usize {
        self.data[i * self.m + k] as usize
    }

    pub fn column_vec(&self, k: usize) -> Vec<usize> {
        (0..self.n).map(|i| self.rank(i, k)).collect()
    }
}

fn check_index_range(n: usize) -> Result<()> {
    if n > u32::MAX as usize {
        return Err(Error::InvalidInput(format!(
            "{n} solutions exceed the supported maximum of {}",
            u32::MAX
        )));
    }
    Ok(())
}

/// Row indices in lexicographic order of their objective vectors, equal rows
/// in input order.
pub fn lexicographic_order(obj: &ObjectiveMatrix) -> Result<Vec<u32>> {
    check_index_range(obj.n())?;
    let mut lex: Vec<u32> = (0..obj.n() as u32).collect();
    // `sort_by` is stable
    lex.sort_by(|&a, &b| obj.cmp_lex(a as usize, b as usize));
    Ok(lex)
}

pub fn build_permutations(obj: &ObjectiveMatrix) -> Result<PermutationMatrix> {
    let (n, m) = (obj.n(), obj.m());
    let lex = lexicographic_order(obj)?;

    let mut data = Vec::with_capacity(n * m);
    data.extend_from_slice(&lex);
    for k in 1..m {
        let mut col = lex.clone();
        col.sort_by(|&a, &b| obj.get(a as usize, k).total_cmp(&obj.get(b as usize, k)));
        data.extend_from_slice(&col);
    }
    Ok(PermutationMatrix { n, m, data })
}

pub fn build_ordinal_ranks(p: &PermutationMatrix) -> OrdinalRankMatrix {
    let (n, m) = (p.n, p.m);
    let mut data = vec![0u32; n * m];
    for k in 0..m {
        for (pos, &i) in p.column(k).iter().enumerate() {
            data[i as usize * m + k] = pos as u32;
        }
    }
    OrdinalRankMatrix { n, m, data }
}
