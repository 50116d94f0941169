//! Harness behind the `ranksort` binary: front listing, oracle
//! verification sweeps, and single-threaded timing runs written as CSV.

use std::fmt;
use std::hint::black_box;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use ranksort::{
    deduplicate, fronts_from_ranks, generate, naive_fast_nds, reinsert_duplicates, Algorithm,
    Counters, Error, GeneratorKind, GeneratorSpec, ObjectiveMatrix, RankAssignment,
    RankIntersectConfig,
};

pub const CSV_HEADER: [&str; 13] = [
    "algo",
    "gen",
    "n",
    "m",
    "seed",
    "rep",
    "elapsed_ns",
    "inner_iterations",
    "full_comparisons",
    "rank_updates",
    "block_ops",
    "max_rank",
    "checksum",
];

/// Value written to `elapsed_ns` when RankIntersect refuses an instance
/// over the memory cap; the remaining measurement columns stay empty.
pub const SKIPPED_MEM_CAP: &str = "skipped:mem-cap";

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Sort(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// Instances to run: every combination of generator, `n`, `m` and seed.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub gens: Vec<GeneratorKind>,
    pub ns: Vec<usize>,
    pub ms: Vec<usize>,
    pub base_seed: u64,
    pub seeds: u64,
    pub dup_fraction: f64,
    pub input: Option<PathBuf>,
}

impl Sweep {
    /// Generator specs in sweep order. A `file` generator contributes one
    /// spec regardless of the `n`, `m` and seed lists.
    pub fn specs(&self) -> Result<Vec<GeneratorSpec>> {
        let mut out = Vec::new();
        for &kind in &self.gens {
            if kind == GeneratorKind::File {
                let path = self
                    .input
                    .clone()
                    .ok_or_else(|| HarnessError::Usage("--gen file needs --input".into()))?;
                out.push(GeneratorSpec::file(path));
                continue;
            }
            for &n in &self.ns {
                for &m in &self.ms {
                    for s in 0..self.seeds {
                        let mut spec = GeneratorSpec::new(kind, n, m, self.base_seed + s);
                        spec.dup_fraction = self.dup_fraction;
                        spec.validate()?;
                        out.push(spec);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Fronts of `obj` as `F<r>: i1 i2 ...` lines with 1-based indices, after
/// deduplication and reinsertion.
pub fn cmd_sort(
    obj: &ObjectiveMatrix,
    algo: Algorithm,
    rs_config: &RankIntersectConfig,
) -> Result<String> {
    let ranks = ranksort::rank_with_duplicates(obj, algo, &mut Counters::default(), rs_config)?;
    Ok(fronts_from_ranks(&ranks)?.to_text())
}

type SortFn = dyn Fn(&ObjectiveMatrix) -> ranksort::Result<RankAssignment>;

/// A named sorter taking duplicate-free input.
pub struct Sorter {
    pub name: String,
    run: Box<SortFn>,
}

impl Sorter {
    pub fn new<F>(name: impl Into<String>, run: F) -> Self
    where
        F: Fn(&ObjectiveMatrix) -> ranksort::Result<RankAssignment> + 'static,
    {
        Self {
            name: name.into(),
            run: Box::new(run),
        }
    }

    pub fn from_algorithm(algo: Algorithm, rs_config: RankIntersectConfig) -> Self {
        Self::new(algo.name(), move |obj| {
            algo.run(obj, &mut Counters::default(), &rs_config)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub algo: String,
    pub gen: GeneratorKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// First differing solution (0-based) with expected and actual rank, or
    /// the sorter's error message.
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MISMATCH algo={} gen={} n={} m={} seed={}: {}",
            self.algo, self.gen, self.n, self.m, self.seed, self.detail
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub configurations: usize,
    pub runs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn all_equivalent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            writeln!(f, "{m}")?;
        }
        if self.all_equivalent() {
            writeln!(
                f,
                "all equivalent ({} configurations, {} runs)",
                self.configurations, self.runs
            )
        } else {
            writeln!(
                f,
                "{} mismatches in {} runs over {} configurations",
                self.mismatches.len(),
                self.runs,
                self.configurations
            )
        }
    }
}

/// Runs every sorter on every instance of the sweep (through the duplicate
/// pipeline) and compares with the naive sort of the full instance.
pub fn cmd_verify(sweep: &Sweep, sorters: &[Sorter]) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for spec in sweep.specs()? {
        let obj = generate(&spec)?;
        let expected = naive_fast_nds(&obj)?;
        let (unique, map) = deduplicate(&obj);
        report.configurations += 1;
        for sorter in sorters {
            report.runs += 1;
            let got = (sorter.run)(&unique).and_then(|r| reinsert_duplicates(&r, &map));
            let detail = match got {
                Ok(ranks) if ranks == expected => continue,
                Ok(ranks) => first_difference(&expected, &ranks),
                Err(e) => format!("error: {e}"),
            };
            report.mismatches.push(Mismatch {
                algo: sorter.name.clone(),
                gen: spec.kind,
                n: obj.n(),
                m: obj.m(),
                seed: spec.seed,
                detail,
            });
        }
    }
    Ok(report)
}

fn first_difference(expected: &RankAssignment, got: &RankAssignment) -> String {
    if expected.len() != got.len() {
        return format!("{} ranks, expected {}", got.len(), expected.len());
    }
    let i = (0..expected.len())
        .find(|&i| expected[i] != got[i])
        .unwrap_or(0);
    format!(
        "solution {} has rank {}, expected {}",
        i + 1,
        got[i],
        expected[i]
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    pub elapsed_ns: u64,
    pub counters: Counters,
    pub max_rank: u32,
    pub checksum: u64,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRecord {
    pub algo: Algorithm,
    pub gen: GeneratorKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub rep: u32,
    /// `None` when the run was refused for exceeding the memory cap.
    pub outcome: Option<Measurement>,
}

impl RunRecord {
    pub fn csv_fields(&self) -> Vec<String> {
        let mut row = vec![
            self.algo.name().to_string(),
            self.gen.name().to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.seed.to_string(),
            self.rep.to_string(),
        ];
        match &self.outcome {
            Some(ms) => row.extend([
                ms.elapsed_ns.to_string(),
                ms.counters.inner_iterations.to_string(),
                ms.counters.full_comparisons.to_string(),
                ms.counters.rank_updates.to_string(),
                ms.counters.block_ops.to_string(),
                ms.max_rank.to_string(),
                format!("{:016x}", ms.checksum),
            ]),
            None => {
                row.push(SKIPPED_MEM_CAP.to_string());
                row.extend(std::iter::repeat_n(String::new(), 6));
            }
        }
        row
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub algos: Vec<Algorithm>,
    pub sweep: Sweep,
    pub reps: u32,
    pub warmup: u32,
    pub rs_config: RankIntersectConfig,
}

/// Times `reps` runs of each algorithm on each instance after `warmup`
/// untimed runs, sequentially on the calling thread. Only the sort call on
/// the deduplicated matrix is timed. Rows are streamed to `out` as CSV.
pub fn cmd_bench<W: Write>(config: &BenchConfig, out: W) -> Result<Vec<RunRecord>> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    let mut records = Vec::new();
    for spec in config.sweep.specs()? {
        let obj = generate(&spec)?;
        let (unique, map) = deduplicate(&obj);
        for &algo in &config.algos {
            for _ in 0..config.warmup {
                match algo.run(&unique, &mut Counters::default(), &config.rs_config) {
                    Ok(r) => {
                        black_box(r);
                    }
                    Err(Error::Capacity { .. }) => break,
                    Err(e) => return Err(e.into()),
                }
            }
            for rep in 0..config.reps {
                let mut counters = Counters::default();
                let start = Instant::now();
                let result = algo.run(&unique, &mut counters, &config.rs_config);
                let elapsed = start.elapsed();
                let outcome = match result {
                    Ok(ranks) => {
                        let ranks = reinsert_duplicates(&black_box(ranks), &map)?;
                        Some(Measurement {
                            elapsed_ns: (elapsed.as_nanos() as u64).max(1),
                            counters,
                            max_rank: ranks.max_rank(),
                            checksum: ranks.checksum(),
                        })
                    }
                    Err(Error::Capacity { .. }) => None,
                    Err(e) => return Err(e.into()),
                };
                let record = RunRecord {
                    algo,
                    gen: spec.kind,
                    n: obj.n(),
                    m: obj.m(),
                    seed: spec.seed,
                    rep,
                    outcome,
                };
                writer.write_record(record.csv_fields())?;
                records.push(record);
            }
        }
    }
    writer.flush()?;
    Ok(records)
}
