use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::Profile;

/// Header of result files; field order of [`BenchmarkRecord`].
pub const RECORD_HEADER: &str =
    "algorithm,instance,repetition,seed,final_delta,total_time_s,flips,n,m_final";

pub const PROFILE_HEADER: &str = "algorithm,tau,fraction";

/// Outcome of one full replay of an instance by one algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkRecord {
    pub algorithm: String,
    pub instance: String,
    pub repetition: u32,
    pub seed: u64,
    /// Maximum out-degree after the last update.
    pub final_delta: u32,
    /// Wall-clock seconds spent in the update loop.
    pub total_time_s: f64,
    pub flips: u64,
    pub n: usize,
    pub m_final: usize,
}

pub fn write_records<W: Write>(out: W, records: &[BenchmarkRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(RECORD_HEADER.split(','))?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> csv::Result<Vec<BenchmarkRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// Writes `algorithm,tau,fraction` rows, sorted by algorithm then tau.
pub fn write_profile<W: Write>(out: W, profile: &Profile) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PROFILE_HEADER.split(','))?;
    for (alg, p) in super::profile_rows(profile) {
        w.write_record([alg, p.tau.to_string(), p.fraction.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `key:value` lines.
pub fn write_metadata<W: Write>(mut out: W, entries: &[(String, String)]) -> std::io::Result<()> {
    for (k, v) in entries {
        writeln!(out, "{k}:{v}")?;
    }
    Ok(())
}
