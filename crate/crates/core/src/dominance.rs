use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Outcome of comparing two objective vectors under Pareto dominance
/// (minimization).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    /// `a <= b` component-wise and `a != b`.
    ADominatesB,
    BDominatesA,
    Incomparable,
    Equal,
}

impl Dominance {
    pub fn flip(self) -> Self {
        match self {
            Dominance::ADominatesB => Dominance::BDominatesA,
            Dominance::BDominatesA => Dominance::ADominatesB,
            other => other,
        }
    }
}

pub fn compare_dominance(a: &[f64], b: &[f64]) -> Result<Dominance> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            actual: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::InvalidInput("empty objective vector".into()));
    }
    Ok(compare_unchecked(a, b))
}

/// Same as [`compare_dominance`] for callers that already validated lengths.
#[inline]
pub(crate) fn compare_unchecked(a: &[f64], b: &[f64]) -> Dominance {
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Less) => a_better = true,
            Some(Ordering::Greater) => b_better = true,
            _ => {}
        }
        if a_better && b_better {
            return Dominance::Incomparable;
        }
    }
    match (a_better, b_better) {
        (true, false) => Dominance::ADominatesB,
        (false, true) => Dominance::BDominatesA,
        (false, false) => Dominance::Equal,
        (true, true) => Dominance::Incomparable,
    }
}

/// `true` iff `a` dominates `b`.
#[inline]
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_pairs() {
        assert_eq!(
            compare_dominance(&[0.15, 0.014], &[0.79, 0.35]).unwrap(),
            Dominance::ADominatesB
        );
        assert_eq!(
            compare_dominance(&[0.40, 0.71], &[0.79, 0.35]).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(
            compare_dominance(&[0.5, 0.5], &[0.5, 0.5]).unwrap(),
            Dominance::Equal
        );
        assert_eq!(
            compare_dominance(&[0.79, 0.35], &[0.15, 0.014]).unwrap(),
            Dominance::BDominatesA
        );
    }

    #[test]
    fn weak_dominance_counts() {
        // equal in one objective, better in the other
        assert_eq!(
            compare_dominance(&[1.0, 2.0], &[1.0, 3.0]).unwrap(),
            Dominance::ADominatesB
        );
        assert!(dominates(&[1.0, 2.0], &[1.0, 3.0]));
        assert!(!dominates(&[1.0, 3.0], &[1.0, 3.0]));
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            compare_dominance(&[1.0], &[1.0, 2.0]),
            Err(Error::Dimension { .. })
        ));
        assert!(compare_dominance(&[], &[]).is_err());
    }

    #[test]
    fn antisymmetric() {
        let pts = [
            [0.1, 0.9, 0.5],
            [0.2, 0.2, 0.2],
            [0.1, 0.9, 0.6],
            [0.3, 0.3, 0.3],
        ];
        for a in &pts {
            for b in &pts {
                let ab = compare_dominance(a, b).unwrap();
                assert_eq!(ab.flip(), compare_dominance(b, a).unwrap());
                assert_eq!(ab == Dominance::ADominatesB, dominates(a, b));
            }
        }
    }
}
