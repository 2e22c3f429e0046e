use std::time::Instant;

use rayon::prelude::*;

use super::BenchmarkRecord;
use crate::algorithms::{AlgorithmConfig, AlgorithmError, DynamicOrientation};
use crate::io_ingest::EditSequence;

/// A normalized update stream with a display label.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub sequence: EditSequence,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub repetitions: u32,
    pub base_seed: u64,
    /// Run and discard one extra repetition before the timed ones.
    pub warmup: bool,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            repetitions: 10,
            base_seed: 0,
            warmup: true,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CellFailure {
    pub algorithm: String,
    pub instance: String,
    pub repetition: u32,
    pub error: AlgorithmError,
}

#[derive(Debug, Clone, Default)]
pub struct MatrixOutcome {
    /// Sorted by (algorithm, instance, repetition).
    pub records: Vec<BenchmarkRecord>,
    pub failures: Vec<CellFailure>,
}

/// Seed of repetition `rep`: splitmix64 of `base + rep * golden gamma`.
pub fn derive_seed(base: u64, rep: u32) -> u64 {
    let mut z = base.wrapping_add((rep as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Applies every update of `seq` to `algo`, optionally recording the
/// maximum out-degree after each one.
pub fn replay(
    algo: &mut dyn DynamicOrientation,
    seq: &EditSequence,
    mut trajectory: Option<&mut Vec<u32>>,
) -> Result<(), AlgorithmError> {
    for op in &seq.ops {
        algo.apply(op)?;
        if let Some(t) = trajectory.as_deref_mut() {
            t.push(algo.current_delta());
        }
    }
    Ok(())
}

/// One timed replay. Only the update loop is timed.
pub fn run_cell(
    config: &AlgorithmConfig,
    instance: &Instance,
    repetition: u32,
    seed: u64,
) -> Result<BenchmarkRecord, AlgorithmError> {
    let config = config.clone().with_seed(seed);
    let mut algo = config.build(instance.sequence.n)?;
    let start = Instant::now();
    replay(algo.as_mut(), &instance.sequence, None)?;
    let elapsed = start.elapsed().as_secs_f64();
    Ok(BenchmarkRecord {
        algorithm: config.label(),
        instance: instance.label.clone(),
        repetition,
        seed,
        final_delta: algo.current_delta(),
        total_time_s: elapsed,
        flips: algo.flips(),
        n: instance.sequence.n,
        m_final: algo.edge_count(),
    })
}

fn run_group(
    config: &AlgorithmConfig,
    instance: &Instance,
    opts: &RunOptions,
) -> Vec<Result<BenchmarkRecord, CellFailure>> {
    if opts.warmup {
        let _ = run_cell(
            config,
            instance,
            u32::MAX,
            derive_seed(opts.base_seed, u32::MAX),
        );
    }
    (0..opts.repetitions)
        .map(|rep| {
            let seed = derive_seed(opts.base_seed, rep);
            run_cell(config, instance, rep, seed).map_err(|error| CellFailure {
                algorithm: config.label(),
                instance: instance.label.clone(),
                repetition: rep,
                error,
            })
        })
        .collect()
}

/// Runs every configuration on every instance `opts.repetitions` times. A
/// failing cell is reported in `failures` and does not stop the matrix.
pub fn run_matrix(
    configs: &[AlgorithmConfig],
    instances: &[Instance],
    opts: &RunOptions,
) -> MatrixOutcome {
    let groups: Vec<(&AlgorithmConfig, &Instance)> = configs
        .iter()
        .flat_map(|c| instances.iter().map(move |i| (c, i)))
        .collect();
    let results: Vec<Result<BenchmarkRecord, CellFailure>> = if opts.jobs <= 1 {
        groups
            .iter()
            .flat_map(|(c, i)| run_group(c, i, opts))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            groups
                .par_iter()
                .flat_map_iter(|(c, i)| run_group(c, i, opts))
                .collect()
        })
    };
    let mut outcome = MatrixOutcome::default();
    for r in results {
        match r {
            Ok(rec) => outcome.records.push(rec),
            Err(f) => outcome.failures.push(f),
        }
    }
    outcome.records.sort_by(|a, b| {
        (&a.algorithm, &a.instance, a.repetition).cmp(&(&b.algorithm, &b.instance, b.repetition))
    });
    outcome.failures.sort_by(|a, b| {
        (&a.algorithm, &a.instance, a.repetition).cmp(&(&b.algorithm, &b.instance, b.repetition))
    });
    outcome
}
