//! Objective-space input: `n` solutions by `m` objectives, minimization.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Row-major grid of finite objective values; `row(i)[k]` is objective `k`
/// of solution `i`. Smaller is better in every objective.
///
/// Construction rejects NaN and infinities and normalizes `-0.0` to `0.0`,
/// so bitwise equality of two rows coincides with numeric equality.
#[derive(Clone, Debug, PartialEq)]
pub struct ObjectiveMatrix {
    n: usize,
    m: usize,
    values: Vec<f64>,
}

impl ObjectiveMatrix {
    pub fn new(n: usize, m: usize, mut values: Vec<f64>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidInput(format!(
                "need at least one solution and one objective, got {n}x{m}"
            )));
        }
        if values.len() != n * m {
            return Err(Error::Dimension {
                expected: n * m,
                actual: values.len(),
            });
        }
        for (idx, v) in values.iter_mut().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "non-finite value {v} at solution {}, objective {}",
                    idx / m,
                    idx % m
                )));
            }
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        Ok(Self { n, m, values })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut values = Vec::with_capacity(rows.len() * m);
        for row in rows {
            let row = row.as_ref();
            if row.len() != m {
                return Err(Error::Dimension {
                    expected: m,
                    actual: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        Self::new(rows.len(), m, values)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.m..(i + 1) * self.m]
    }

    #[inline]
    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.m + k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.m)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Lexicographic comparison of two rows over objectives `0..m`.
    pub fn cmp_lex(&self, a: usize, b: usize) -> Ordering {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    pub fn rows_equal(&self, a: usize, b: usize) -> bool {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .all(|(x, y)| x.to_bits() == y.to_bits())
    }

    /// Parses the plain-text format: one solution per line, values separated
    /// by whitespace and/or commas. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut m = None;
        let mut values = Vec::new();
        let mut n = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let start = values.len();
            for tok in line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let v: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("cannot parse {tok:?} as a number"),
                })?;
                if !v.is_finite() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("non-finite value {tok:?}"),
                    });
                }
                values.push(v);
            }
            let width = values.len() - start;
            match m {
                None => m = Some(width),
                Some(expected) if expected != width => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected {expected} values, found {width}"),
                    })
                }
                _ => {}
            }
            n += 1;
        }
        let m = m.ok_or_else(|| Error::Parse {
            line: 0,
            msg: "no solutions in input".into(),
        })?;
        Self::new(n, m, values)
    }
}

impl FromStr for ObjectiveMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Writes the text format, one row per line, values separated by a space.
impl fmt::Display for ObjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v:?}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
