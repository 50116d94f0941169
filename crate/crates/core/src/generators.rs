//! Deterministic synthetic instances.
//!
//! Random kinds draw from ChaCha8 seeded with the 64-bit `seed`, so a
//! fixed `(kind, n, m, seed)` always yields the same matrix.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::objective::ObjectiveMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// i.i.d. points in the unit hypercube `[0, 1)^m`.
    Uniform,
    /// Anti-chain `(i/n, (n+1-i)/n)`, extra objectives fixed at 0.5.
    SingleFront,
    /// Total order `(i/n, ..., i/n)`.
    Chain,
    /// Uniform points with a fraction of rows overwritten by copies of
    /// earlier rows.
    Duplicates,
    /// Read from a text file.
    File,
}

impl GeneratorKind {
    pub const SYNTHETIC: [GeneratorKind; 4] = [
        GeneratorKind::Uniform,
        GeneratorKind::SingleFront,
        GeneratorKind::Chain,
        GeneratorKind::Duplicates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Uniform => "uniform",
            GeneratorKind::SingleFront => "single-front",
            GeneratorKind::Chain => "chain",
            GeneratorKind::Duplicates => "duplicates",
            GeneratorKind::File => "file",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GeneratorKind::Uniform),
            "single-front" | "single_front" => Ok(GeneratorKind::SingleFront),
            "chain" => Ok(GeneratorKind::Chain),
            "duplicates" => Ok(GeneratorKind::Duplicates),
            "file" => Ok(GeneratorKind::File),
            other => Err(Error::Spec(format!("unknown generator {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// Fraction of rows replaced by copies; `duplicates` only.
    pub dup_fraction: f64,
    /// Input path; `file` only. `n` and `m` come from the file.
    pub path: Option<PathBuf>,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, m: usize, seed: u64) -> Self {
        Self {
            kind,
            n,
            m,
            seed,
            dup_fraction: 0.3,
            path: None,
        }
    }

    pub fn uniform(n: usize, m: usize, seed: u64) -> Self {
        Self::new(GeneratorKind::Uniform, n, m, seed)
    }

    pub fn single_front(n: usize, m: usize) -> Self {
        Self::new(GeneratorKind::SingleFront, n, m, 0)
    }

    pub fn chain(n: usize, m: usize) -> Self {
        Self::new(GeneratorKind::Chain, n, m, 0)
    }

    pub fn duplicates(n: usize, m: usize, seed: u64, dup_fraction: f64) -> Self {
        Self {
            dup_fraction,
            ..Self::new(GeneratorKind::Duplicates, n, m, seed)
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        Self {
            path: Some(path.into()),
            ..Self::new(GeneratorKind::File, 0, 0, 0)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind == GeneratorKind::File {
            return match self.path {
                Some(_) => Ok(()),
                None => Err(Error::Spec("file generator needs a path".into())),
            };
        }
        if self.n == 0 || self.m == 0 {
            return Err(Error::Spec(format!(
                "n and m must be at least 1, got n={} m={}",
                self.n, self.m
            )));
        }
        if self.kind == GeneratorKind::SingleFront && self.m < 2 {
            return Err(Error::Spec(
                "single-front needs at least 2 objectives".into(),
            ));
        }
        if self.kind == GeneratorKind::Duplicates && !(0.0..1.0).contains(&self.dup_fraction) {
            return Err(Error::Spec(format!(
                "dup_fraction must lie in [0, 1), got {}",
                self.dup_fraction
            )));
        }
        Ok(())
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<ObjectiveMatrix> {
    spec.validate()?;
    let (n, m) = (spec.n, spec.m);
    match spec.kind {
        GeneratorKind::Uniform => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            ObjectiveMatrix::new(n, m, uniform_values(&mut rng, n * m))
        }
        GeneratorKind::SingleFront => {
            let mut values = Vec::with_capacity(n * m);
            for i in 1..=n {
                values.push(i as f64 / n as f64);
                values.push((n + 1 - i) as f64 / n as f64);
                values.extend(std::iter::repeat_n(0.5, m - 2));
            }
            ObjectiveMatrix::new(n, m, values)
        }
        GeneratorKind::Chain => {
            let mut values = Vec::with_capacity(n * m);
            for i in 1..=n {
                values.extend(std::iter::repeat_n(i as f64 / n as f64, m));
            }
            ObjectiveMatrix::new(n, m, values)
        }
        GeneratorKind::Duplicates => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut values = uniform_values(&mut rng, n * m);
            let copies = ((spec.dup_fraction * n as f64).floor() as usize).min(n - 1);
            let mut targets: Vec<usize> = sample(&mut rng, n - 1, copies)
                .into_iter()
                .map(|t| t + 1)
                .collect();
            targets.sort_unstable();
            for t in targets {
                let src = rng.gen_range(0..t);
                values.copy_within(src * m..(src + 1) * m, t * m);
            }
            ObjectiveMatrix::new(n, m, values)
        }
        GeneratorKind::File => {
            let path = spec.path.as_ref().expect("validated");
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            ObjectiveMatrix::parse(&text)
        }
    }
}

fn uniform_values(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen::<f64>()).collect()
}
