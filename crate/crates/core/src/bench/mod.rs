//! Benchmark harness: runs (algorithm x instance x repetition) matrices,
//! aggregates results and compares them against exact optima.

mod records;
mod runner;
pub mod stats;

pub use records::{
    read_records, write_metadata, write_profile, write_records, BenchmarkRecord, PROFILE_HEADER,
    RECORD_HEADER,
};
pub use runner::{
    derive_seed, replay, run_cell, run_matrix, CellFailure, Instance, MatrixOutcome, RunOptions,
};
pub use stats::{StatsError, ValueTable};

use std::collections::BTreeMap;

use crate::{Profile, ProfilePoint};

/// Which record column a profile ranks by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Final maximum out-degree, geometric mean over repetitions.
    Delta,
    /// Total update time, arithmetic mean over repetitions.
    Time,
    /// Total flips plus one, geometric mean over repetitions. The shift keeps
    /// zero-flip runs (Naive) in the profile.
    Flips,
}

/// Per (algorithm, instance) aggregate of `metric` over repetitions.
pub fn aggregate(records: &[BenchmarkRecord], metric: Metric) -> ValueTable<f64> {
    let mut grouped: BTreeMap<&str, BTreeMap<&str, Vec<f64>>> = BTreeMap::new();
    for r in records {
        let value = match metric {
            Metric::Delta => r.final_delta as f64,
            Metric::Time => r.total_time_s,
            Metric::Flips => r.flips as f64 + 1.0,
        };
        grouped
            .entry(&r.algorithm)
            .or_default()
            .entry(&r.instance)
            .or_default()
            .push(value);
    }
    grouped
        .into_iter()
        .map(|(alg, row)| {
            let row = row
                .into_iter()
                .map(|(inst, vals)| {
                    let v = match metric {
                        Metric::Delta | Metric::Flips => quality_mean(&vals),
                        Metric::Time => stats::arithmetic_mean(&vals).expect("group is nonempty"),
                    };
                    (inst.to_owned(), v)
                })
                .collect();
            (alg.to_owned(), row)
        })
        .collect()
}

/// Geometric mean of final degrees; 0 when any repetition ended with an
/// empty graph (then all of them did).
fn quality_mean(vals: &[f64]) -> f64 {
    if vals.iter().any(|&v| v <= 0.0) {
        0.0
    } else if vals.iter().all(|&v| v == vals[0]) {
        // exact for deterministic algorithms; exp(ln x) may be off by an ulp
        vals[0]
    } else {
        stats::geometric_mean(vals).expect("positive, nonempty")
    }
}

/// Performance profiles of `records` by `metric`.
pub fn performance_profile(
    records: &[BenchmarkRecord],
    metric: Metric,
) -> Result<Profile, StatsError> {
    stats::performance_profile(&aggregate(records, metric))
}

/// How close one algorithm came to the exact optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimumSummary {
    pub algorithm: String,
    pub instances: usize,
    /// Instances where every repetition ended at the optimum.
    pub optimal: usize,
    pub match_percent: f64,
    /// Geometric mean of (aggregated final delta) / phi over instances with
    /// phi > 0; `None` if there are none.
    pub ratio_geomean: Option<f64>,
}

/// Compares aggregated final degrees with exact optima per instance.
/// Instances without a known optimum are skipped.
pub fn compare_to_optimum(
    records: &[BenchmarkRecord],
    phi: &BTreeMap<String, u32>,
) -> Vec<OptimumSummary> {
    let mut missed: std::collections::BTreeSet<(&str, &str)> = Default::default();
    for r in records {
        if phi.get(&r.instance).is_some_and(|&p| r.final_delta != p) {
            missed.insert((&r.algorithm, &r.instance));
        }
    }
    aggregate(records, Metric::Delta)
        .into_iter()
        .map(|(algorithm, row)| {
            let mut instances = 0;
            let mut optimal = 0;
            let mut ratios = Vec::new();
            for (inst, value) in &row {
                let Some(&opt) = phi.get(inst) else { continue };
                instances += 1;
                if !missed.contains(&(algorithm.as_str(), inst.as_str())) {
                    optimal += 1;
                }
                if opt > 0 {
                    ratios.push(value / opt as f64);
                }
            }
            OptimumSummary {
                algorithm,
                instances,
                optimal,
                match_percent: percent(optimal, instances),
                ratio_geomean: stats::geometric_mean(&ratios).ok(),
            }
        })
        .collect()
}

pub fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

/// Flattens profiles into `(algorithm, point)` rows sorted by algorithm then
/// tau.
pub fn profile_rows(profile: &Profile) -> Vec<(String, ProfilePoint)> {
    profile
        .iter()
        .flat_map(|(alg, pts)| pts.iter().map(move |p| (alg.clone(), *p)))
        .collect()
}
