//! Aggregation over benchmark values, generic over the float type.

use std::collections::BTreeMap;

use num_traits::Float;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("cannot aggregate an empty list")]
    EmptyInput,
    #[error("geometric mean needs positive values")]
    NonPositive,
    #[error("no value for algorithm {algorithm:?} on instance {instance:?}")]
    MissingCell { algorithm: String, instance: String },
}

/// `exp(mean(ln x))` over strictly positive values.
pub fn geometric_mean<T: Float>(values: &[T]) -> Result<T, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut log_sum = T::zero();
    for &x in values {
        if x.is_nan() || x <= T::zero() {
            return Err(StatsError::NonPositive);
        }
        log_sum = log_sum + x.ln();
    }
    Ok((log_sum / count::<T>(values.len())).exp())
}

pub fn arithmetic_mean<T: Float>(values: &[T]) -> Result<T, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let sum = values.iter().fold(T::zero(), |acc, &x| acc + x);
    Ok(sum / count::<T>(values.len()))
}

fn count<T: Float>(n: usize) -> T {
    T::from(n).expect("count representable as float")
}

/// One breakpoint of a performance profile: from `tau` on (until the next
/// breakpoint) the algorithm is within factor `tau` of the best on
/// `fraction` of the instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint<T> {
    pub tau: T,
    pub fraction: T,
}

/// Value table: algorithm -> instance -> value.
pub type ValueTable<T> = BTreeMap<String, BTreeMap<String, T>>;

/// Performance profiles of every algorithm in `table`.
///
/// Per instance the best value is the minimum over algorithms; instances
/// whose best is not positive are left out. Each profile starts with a
/// point at `tau = 1` followed by one point per distinct larger ratio
/// `value / best`, so it is a non-decreasing step function reaching 1 at the
/// algorithm's worst ratio.
pub fn performance_profile<T: Float>(
    table: &ValueTable<T>,
) -> Result<BTreeMap<String, Vec<ProfilePoint<T>>>, StatsError> {
    let instances: std::collections::BTreeSet<&String> =
        table.values().flat_map(|row| row.keys()).collect();
    for (algorithm, row) in table {
        if let Some(missing) = instances.iter().find(|i| !row.contains_key(**i)) {
            return Err(StatsError::MissingCell {
                algorithm: algorithm.clone(),
                instance: (*missing).clone(),
            });
        }
    }
    let best: BTreeMap<&String, T> = instances
        .iter()
        .map(|&inst| {
            let b = table
                .values()
                .map(|row| row[inst])
                .fold(T::infinity(), T::min);
            (inst, b)
        })
        .filter(|(_, b)| *b > T::zero())
        .collect();
    let total = best.len();

    let mut profiles = BTreeMap::new();
    for (algorithm, row) in table {
        let mut ratios: Vec<T> = best.iter().map(|(inst, &b)| row[*inst] / b).collect();
        ratios.sort_by(|a, b| a.partial_cmp(b).expect("ratios are not NaN"));
        profiles.insert(algorithm.clone(), step_points(&ratios, total));
    }
    Ok(profiles)
}

fn step_points<T: Float>(sorted_ratios: &[T], total: usize) -> Vec<ProfilePoint<T>> {
    if total == 0 {
        return Vec::new();
    }
    let denom = count::<T>(total);
    let at_one = sorted_ratios.iter().take_while(|&&r| r <= T::one()).count();
    let mut points = vec![ProfilePoint {
        tau: T::one(),
        fraction: count::<T>(at_one) / denom,
    }];
    let mut i = at_one;
    while i < sorted_ratios.len() {
        let tau = sorted_ratios[i];
        while i < sorted_ratios.len() && sorted_ratios[i] <= tau {
            i += 1;
        }
        points.push(ProfilePoint {
            tau,
            fraction: count::<T>(i) / denom,
        });
    }
    points
}

/// Evaluates a profile step function at `tau`.
pub fn fraction_at<T: Float>(points: &[ProfilePoint<T>], tau: T) -> T {
    points
        .iter()
        .take_while(|p| p.tau <= tau)
        .last()
        .map_or(T::zero(), |p| p.fraction)
}

/// Checks the step-function shape: taus start at 1 and increase strictly,
/// fractions are non-decreasing and lie in `[0, 1]`.
pub fn validate_profile<T: Float>(points: &[ProfilePoint<T>]) -> Result<(), String> {
    if let Some(first) = points.first() {
        if first.tau != T::one() {
            return Err("profile does not start at tau = 1".into());
        }
    }
    for p in points {
        if p.fraction < T::zero() || p.fraction > T::one() {
            return Err("fraction outside [0, 1]".into());
        }
    }
    for w in points.windows(2) {
        if w[1].tau <= w[0].tau {
            return Err("taus not strictly increasing".into());
        }
        if w[1].fraction < w[0].fraction {
            return Err("fractions decrease".into());
        }
    }
    Ok(())
}
