use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use ranksort::rank_intersect::DEFAULT_MEM_CAP_BYTES;
use ranksort::{generate, Algorithm, GeneratorKind, GeneratorSpec, RankIntersectConfig};
use ranksort_cli::{cmd_bench, cmd_sort, cmd_verify, BenchConfig, Sorter, Sweep};

/// Non-dominated sorting: list fronts, verify sorters against the naive
/// oracle, and benchmark them.
#[derive(Parser, Debug)]
#[command(name = "ranksort", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the fronts of one instance as `F<r>: i1 i2 ...` (1-based).
    Sort(SortArgs),
    /// Compare every sorter with the naive sort over a sweep of instances.
    Verify(SweepArgs),
    /// Time sorters over a sweep and write one CSV row per run.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct SortArgs {
    #[arg(long, default_value = "rs")]
    algo: Algorithm,
    /// Generator; defaults to `file` when --input is given, else `uniform`.
    #[arg(long)]
    gen: Option<GeneratorKind>,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.3)]
    dup_fraction: f64,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MEM_CAP_BYTES)]
    mem_cap_bytes: u64,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Sorters to check (repeatable); default: all except naive.
    #[arg(long)]
    algo: Vec<Algorithm>,
    /// Generators (repeatable); default: uniform, single-front, chain,
    /// duplicates.
    #[arg(long)]
    gen: Vec<GeneratorKind>,
    /// Solution counts (repeatable); default: 10 50 200.
    #[arg(long)]
    n: Vec<usize>,
    /// Objective counts (repeatable); default: 2 3 5.
    #[arg(long)]
    m: Vec<usize>,
    /// First seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of consecutive seeds per configuration.
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    #[arg(long, default_value_t = 0.3)]
    dup_fraction: f64,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MEM_CAP_BYTES)]
    mem_cap_bytes: u64,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Sorters to time (repeatable); default: ro rs.
    #[arg(long)]
    algo: Vec<Algorithm>,
    /// Generators (repeatable); default: uniform.
    #[arg(long)]
    gen: Vec<GeneratorKind>,
    /// Solution counts (repeatable); default: 1000.
    #[arg(long)]
    n: Vec<usize>,
    /// Objective counts (repeatable); default: 3.
    #[arg(long)]
    m: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, default_value_t = 5)]
    reps: u32,
    #[arg(long, default_value_t = 2)]
    warmup: u32,
    #[arg(long, default_value_t = 0.3)]
    dup_fraction: f64,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MEM_CAP_BYTES)]
    mem_cap_bytes: u64,
}

fn or_default<T: Clone>(given: Vec<T>, default: &[T]) -> Vec<T> {
    if given.is_empty() {
        default.to_vec()
    } else {
        given
    }
}

fn gens_or(
    given: Vec<GeneratorKind>,
    input: &Option<PathBuf>,
    default: &[GeneratorKind],
) -> Vec<GeneratorKind> {
    match (given.is_empty(), input) {
        (true, Some(_)) => vec![GeneratorKind::File],
        _ => or_default(given, default),
    }
}

fn rs_config(mem_cap_bytes: u64) -> RankIntersectConfig {
    RankIntersectConfig {
        mem_cap_bytes,
        ..Default::default()
    }
}

fn sort(args: SortArgs) -> anyhow::Result<()> {
    let kind = args.gen.unwrap_or(if args.input.is_some() {
        GeneratorKind::File
    } else {
        GeneratorKind::Uniform
    });
    let spec = match kind {
        GeneratorKind::File => match args.input {
            Some(path) => GeneratorSpec::file(path),
            None => bail!("--gen file needs --input"),
        },
        kind => GeneratorSpec {
            dup_fraction: args.dup_fraction,
            ..GeneratorSpec::new(kind, args.n, args.m, args.seed)
        },
    };
    let obj = generate(&spec)?;
    let text = cmd_sort(&obj, args.algo, &rs_config(args.mem_cap_bytes))?;
    io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn verify(args: SweepArgs) -> anyhow::Result<bool> {
    let sweep = Sweep {
        gens: gens_or(args.gen, &args.input, &GeneratorKind::SYNTHETIC),
        ns: or_default(args.n, &[10, 50, 200]),
        ms: or_default(args.m, &[2, 3, 5]),
        base_seed: args.seed,
        seeds: args.seeds,
        dup_fraction: args.dup_fraction,
        input: args.input,
    };
    let algos = or_default(
        args.algo,
        &[
            Algorithm::RankOrdinal,
            Algorithm::RankIntersect,
            Algorithm::EnsSs,
            Algorithm::EnsBs,
        ],
    );
    let sorters: Vec<Sorter> = algos
        .into_iter()
        .map(|a| Sorter::from_algorithm(a, rs_config(args.mem_cap_bytes)))
        .collect();
    let report = cmd_verify(&sweep, &sorters)?;
    print!("{report}");
    Ok(report.all_equivalent())
}

fn bench(args: BenchArgs) -> anyhow::Result<()> {
    let config = BenchConfig {
        algos: or_default(
            args.algo,
            &[Algorithm::RankOrdinal, Algorithm::RankIntersect],
        ),
        sweep: Sweep {
            gens: gens_or(args.gen, &args.input, &[GeneratorKind::Uniform]),
            ns: or_default(args.n, &[1000]),
            ms: or_default(args.m, &[3]),
            base_seed: args.seed,
            seeds: args.seeds,
            dup_fraction: args.dup_fraction,
            input: args.input,
        },
        reps: args.reps,
        warmup: args.warmup,
        rs_config: rs_config(args.mem_cap_bytes),
    };
    match args.csv {
        Some(path) => {
            let file =
                File::create(&path).with_context(|| format!("cannot write {}", path.display()))?;
            cmd_bench(&config, BufWriter::new(file))?;
        }
        None => {
            cmd_bench(&config, io::stdout().lock())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sort(args) => sort(args).map(|_| true),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
