//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::{churn_stream, random_tree, random_updates, two_forest_union, ShadowSet};
use num_rational::Ratio;
use orient_core::algorithms::KFlips;
use orient_core::bench::{
    self, compare_to_optimum, performance_profile, read_records, run_cell, run_matrix, stats,
    write_profile, write_records, Instance, Metric, RunOptions,
};
use orient_core::exact::{brute_force_optimum, exact_optimum, validate_orientation};
use orient_core::io_ingest::{gen_random_graph, static_to_stream};
use orient_core::{
    AlgorithmConfig, AlgorithmKind, BenchmarkRecord, DynamicOrientation, EditOp, EditSequence,
    StaticGraph, ValueTable, VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn config(kind: AlgorithmKind) -> AlgorithmConfig {
    AlgorithmConfig::new(kind)
}

fn bfs(depth: u32) -> AlgorithmConfig {
    config(AlgorithmKind::Bfs { depth })
}

fn all_algorithms(alpha_bound: u32) -> Vec<AlgorithmConfig> {
    vec![
        config(AlgorithmKind::Naive),
        bfs(20),
        config(AlgorithmKind::RandomPath {
            depth: 20,
            repetitions: 5,
        }),
        config(AlgorithmKind::DescendingDegrees),
        config(AlgorithmKind::KFlips { k: 2 }),
        config(AlgorithmKind::BrodalFagerberg { alpha_bound }),
        config(AlgorithmKind::AdaptiveBrodalFagerberg {
            beta: Ratio::new(11, 10),
        }),
    ]
}

fn stream_instance(label: String, g: &StaticGraph, seed: u64) -> Instance {
    Instance {
        label,
        sequence: static_to_stream(g, seed),
    }
}

fn oracle_pair(g: &StaticGraph) -> Result<(), String> {
    let flow = exact_optimum(g);
    let brute = brute_force_optimum(g).map_err(|e| e.to_string())?;
    check(
        flow.phi == brute.phi,
        format!(
            "n={} edges={:?}: flow {} brute {}",
            g.n(),
            g.edges(),
            flow.phi,
            brute.phi
        ),
    )?;
    let witnessed = validate_orientation(g, &flow.witness)?;
    check(
        witnessed == flow.phi,
        format!("flow witness has degree {witnessed}, phi {}", flow.phi),
    )
}

fn ac1_oracle() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0usize;
    for n in 1..=5usize {
        let pairs: Vec<(VertexId, VertexId)> = (0..n as VertexId)
            .flat_map(|u| (u + 1..n as VertexId).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            oracle_pair(&StaticGraph::new(n, edges).map_err(|e| e.to_string())?)?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC1);
    for i in 0..500u64 {
        let n = rng.gen_range(1..=10usize);
        let m = rng.gen_range(0..=12.min(n * (n - 1) / 2)) as u64;
        let g = gen_random_graph(n, m, 0xAC1_0000 + i).map_err(|e| e.to_string())?;
        oracle_pair(&g)?;
        graphs += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < 120.0, format!("took {secs:.1}s"))?;
    Ok(format!("{graphs} graphs, flow optimum equals brute force"))
}

fn ac2_triangle() -> Outcome {
    let g = StaticGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).map_err(|e| e.to_string())?;
    let phi = exact_optimum(&g).phi;
    check(phi == 1, format!("triangle phi = {phi}"))?;
    let ops = [
        EditOp::insert(0, 1),
        EditOp::insert(1, 2),
        EditOp::insert(2, 0),
    ];
    let mut finals = Vec::new();
    for cfg in [
        bfs(1),
        bfs(2),
        bfs(3),
        bfs(20),
        config(AlgorithmKind::DescendingDegrees),
    ] {
        let mut algo = cfg.build(3).map_err(|e| e.to_string())?;
        for op in &ops {
            algo.apply(op).map_err(|e| e.to_string())?;
        }
        check(
            algo.current_delta() == 1,
            format!("{cfg} ends with delta {}", algo.current_delta()),
        )?;
        finals.push(format!("{cfg}=1"));
    }
    Ok(format!("phi=1, {}", finals.join(" ")))
}

fn ac3_optimality() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC3);
    let mut instances = Vec::new();
    let mut phi = BTreeMap::new();
    for i in 0..200u64 {
        let n = rng.gen_range(4..=12usize);
        let m = rng.gen_range(1..=30.min(n * (n - 1) / 2)) as u64;
        let g = gen_random_graph(n, m, 0xAC3_0000 + i).map_err(|e| e.to_string())?;
        let label = format!("small{i:03}");
        phi.insert(label.clone(), exact_optimum(&g).phi);
        instances.push(stream_instance(label, &g, i));
    }
    let opts = RunOptions {
        repetitions: 1,
        ..RunOptions::default()
    };
    let outcome = run_matrix(&[bfs(20), config(AlgorithmKind::Naive)], &instances, &opts);
    check(
        outcome.failures.is_empty(),
        format!("{} failed cells", outcome.failures.len()),
    )?;
    for r in &outcome.records {
        check(
            r.final_delta >= phi[&r.instance],
            format!("{} below optimum on {}", r.algorithm, r.instance),
        )?;
    }
    let summary = compare_to_optimum(&outcome.records, &phi);
    let get = |label: &str| {
        summary
            .iter()
            .find(|s| s.algorithm == label)
            .cloned()
            .expect("summary row")
    };
    let (b, nv) = (get("bfs_d20"), get("naive"));
    let ratio = b.ratio_geomean.unwrap_or(1.0);
    let detail = format!(
        "bfs_d20 optimal on {}/{} ({:.1}%), ratio {:.4}; naive {:.1}%",
        b.optimal, b.instances, b.match_percent, ratio, nv.match_percent
    );
    check(b.match_percent >= 80.0 && ratio <= 1.10, detail.clone())?;
    check(
        start.elapsed().as_secs_f64() < 300.0,
        "took longer than 5 minutes",
    )?;
    Ok(detail)
}

/// The pinned quality-ordering suite: sparse uniform random graphs, inserted
/// in random order. Instance `i` has `n = 1000 * (1 + i % 3)` vertices,
/// `m = n * (6 + i % 4) / 5` edges, graph seed `4000 + i` and stream seed
/// `5000 + i`. Regenerated suites shift both seeds by `offset`.
fn quality_suite(offset: u64) -> Result<Vec<Instance>, String> {
    (0..12u64)
        .map(|i| {
            let n = 1000 * (1 + i as usize % 3);
            let m = (n * (6 + i as usize % 4) / 5) as u64;
            let g = gen_random_graph(n, m, 4000 + offset + i).map_err(|e| e.to_string())?;
            Ok(stream_instance(
                format!("sparse{i:02}_n{n}_m{m}"),
                &g,
                5000 + offset + i,
            ))
        })
        .collect()
}

fn geomean_by_algorithm(table: &ValueTable) -> BTreeMap<String, f64> {
    table
        .iter()
        .map(|(alg, row)| {
            let vals: Vec<f64> = row.values().copied().collect();
            (
                alg.clone(),
                stats::geometric_mean(&vals).expect("positive values"),
            )
        })
        .collect()
}

/// Geometric-mean final delta of BFS_20, BFS_3, BFS_1 and Naive.
fn ordering_means(offset: u64) -> Result<[f64; 4], String> {
    let instances = quality_suite(offset)?;
    let configs = [bfs(20), bfs(3), bfs(1), config(AlgorithmKind::Naive)];
    let opts = RunOptions {
        repetitions: 1,
        jobs: 4,
        ..RunOptions::default()
    };
    let outcome = run_matrix(&configs, &instances, &opts);
    check(outcome.failures.is_empty(), "failed cells")?;
    let g = geomean_by_algorithm(&bench::aggregate(&outcome.records, Metric::Delta));
    Ok([g["bfs_d20"], g["bfs_d3"], g["bfs_d1"], g["naive"]])
}

fn ac4_ordering() -> Outcome {
    let [b20, b3, b1, nv] = ordering_means(0)?;
    let detail = format!(
        "geomean delta bfs_d20 {b20:.3}, bfs_d3 {b3:.3}, bfs_d1 {b1:.3}, naive {nv:.3}; bfs_d1/bfs_d20 {:.3}",
        b1 / b20
    );
    check(
        b20 <= b3 && b3 <= b1 && b20 <= nv && b1 >= 1.2 * b20,
        detail.clone(),
    )?;
    for offset in [100, 200, 300] {
        let [b20, b3, b1, nv] = ordering_means(offset)?;
        check(
            b20 <= b3 && b3 <= b1 && b20 <= nv,
            format!("seed offset {offset}: ordering broken ({b20:.3}, {b3:.3}, {b1:.3}, {nv:.3})"),
        )?;
    }
    Ok(format!(
        "{detail}; ordering also holds at seed offsets 100, 200, 300"
    ))
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn ac5_speed() -> Outcome {
    let n = 1_000_000usize;
    let g = gen_random_graph(n, 1_000_000, 0xAC5).map_err(|e| e.to_string())?;
    let inst = stream_instance("speed_n1e6_m1e6".into(), &g, 0xAC5);
    let mut times = BTreeMap::new();
    for cfg in [config(AlgorithmKind::Naive), bfs(20)] {
        let mut ts = Vec::new();
        for rep in 0..3 {
            let rec = run_cell(&cfg, &inst, rep, 0).map_err(|e| e.to_string())?;
            ts.push(rec.total_time_s);
        }
        times.insert(cfg.label(), median(ts));
    }
    let (tn, tb) = (times["naive"], times["bfs_d20"]);
    let detail = format!(
        "median naive {tn:.3}s, bfs_d20 {tb:.3}s, speedup {:.1}x",
        tb / tn
    );
    check(tb >= 2.0 * tn, detail.clone())?;
    Ok(detail)
}

fn replay_bounded(alpha: u32, n: usize, ops: &[EditOp]) -> Result<(), String> {
    let mut algo = config(AlgorithmKind::BrodalFagerberg { alpha_bound: alpha })
        .build(n)
        .map_err(|e| e.to_string())?;
    for (i, op) in ops.iter().enumerate() {
        algo.apply(op).map_err(|e| format!("update {i}: {e}"))?;
        check(
            algo.current_delta() <= alpha,
            format!("update {i}: delta {} > {alpha}", algo.current_delta()),
        )?;
    }
    algo.check_invariants()
}

fn ac6_brodal() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC6);
    let mut updates = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(2..=50usize);
        let tree = StaticGraph::new(n, random_tree(n, &mut rng)).map_err(|e| e.to_string())?;
        let ops = churn_stream(&tree, &mut rng);
        replay_bounded(2, n, &ops)?;
        updates += ops.len();
    }
    for _ in 0..100 {
        let n = rng.gen_range(2..=50usize);
        let g = two_forest_union(n, &mut rng);
        let ops = churn_stream(&g, &mut rng);
        replay_bounded(4, n, &ops)?;
        updates += ops.len();
    }
    Ok(format!(
        "200 graphs, {updates} updates, no budget overrun, delta within bound after each"
    ))
}

fn ac7_kflips() -> Outcome {
    let n = 300;
    let seq = random_updates(n, 100_000, 900, 0xAC7);
    let mut total_flips = 0;
    for k in [1u32, 3] {
        let mut algo = KFlips::new(n, k);
        let mut shadow = ShadowSet::default();
        for (i, op) in seq.ops.iter().enumerate() {
            algo.apply(op)
                .map_err(|e| format!("k={k} update {i}: {e}"))?;
            match op.kind {
                orient_core::io_ingest::EditKind::Insert => shadow.insert(op.u, op.v),
                orient_core::io_ingest::EditKind::Delete => shadow.remove(op.u, op.v),
            };
            for u in 0..n as VertexId {
                let walked = algo.queues().iter(u).count() as u32;
                check(
                    walked == algo.out_degree(u) && walked == algo.queues().len(u),
                    format!(
                        "k={k} update {i}: |Q_{u}| = {walked}, out-degree {}",
                        algo.out_degree(u)
                    ),
                )?;
            }
            algo.check_invariants()
                .map_err(|e| format!("k={k} update {i}: {e}"))?;
            if i % 1000 == 999 {
                let mut arcs: Vec<_> = algo
                    .arcs()
                    .into_iter()
                    .map(|(u, v)| common::key(u, v))
                    .collect();
                arcs.sort_unstable();
                check(
                    arcs == shadow.sorted(),
                    format!("k={k} update {i}: edge set differs"),
                )?;
            }
        }
        total_flips += algo.flips();
    }
    Ok(format!(
        "k in {{1, 3}}, 100000 updates each, {total_flips} flips, zero violations"
    ))
}

fn ac8_adjacency() -> Outcome {
    let n = 1000;
    let seq = random_updates(n, 100_000, 3000, 0xAC8);
    let mut lines = Vec::new();
    for cfg in all_algorithms(16) {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC8_0001);
        let mut algo = cfg.build(n).map_err(|e| e.to_string())?;
        let mut shadow = ShadowSet::default();
        let mut mismatches = 0usize;
        for op in &seq.ops {
            algo.apply(op).map_err(|e| format!("{cfg}: {e}"))?;
            match op.kind {
                orient_core::io_ingest::EditKind::Insert => shadow.insert(op.u, op.v),
                orient_core::io_ingest::EditKind::Delete => shadow.remove(op.u, op.v),
            };
            let (a, b) = if rng.gen_bool(0.5) {
                shadow.sample(&mut rng).unwrap_or((0, 1))
            } else {
                (
                    rng.gen_range(0..n) as VertexId,
                    rng.gen_range(0..n) as VertexId,
                )
            };
            let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            if algo.adjacent(a, b) != shadow.contains(a, b) {
                mismatches += 1;
            }
        }
        algo.check_invariants().map_err(|e| format!("{cfg}: {e}"))?;
        let secs = start.elapsed().as_secs_f64();
        check(mismatches == 0, format!("{cfg}: {mismatches} mismatches"))?;
        check(secs < 60.0, format!("{cfg}: {secs:.1}s"))?;
        lines.push(format!("{cfg} {secs:.2}s"));
    }
    Ok(format!(
        "100000 updates + 100000 queries each, zero mismatches ({})",
        lines.join(", ")
    ))
}

fn profile_csv(records: &[BenchmarkRecord], metric: Metric) -> Result<Vec<u8>, String> {
    let profile = performance_profile(records, metric).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    write_profile(&mut buf, &profile).map_err(|e| e.to_string())?;
    Ok(buf)
}

fn validate_profile_csv(bytes: &[u8]) -> Result<usize, String> {
    let mut reader = csv::Reader::from_reader(bytes);
    let mut by_alg: BTreeMap<String, Vec<orient_core::ProfilePoint>> = BTreeMap::new();
    for row in reader.records() {
        let row = row.map_err(|e| e.to_string())?;
        let tau: f64 = row[1].parse().map_err(|_| "bad tau")?;
        let fraction: f64 = row[2].parse().map_err(|_| "bad fraction")?;
        by_alg
            .entry(row[0].to_owned())
            .or_default()
            .push(orient_core::ProfilePoint { tau, fraction });
    }
    for (alg, pts) in &by_alg {
        stats::validate_profile(pts).map_err(|e| format!("{alg}: {e}"))?;
        check(
            pts.last().map(|p| p.fraction) == Some(1.0),
            format!("{alg}: profile never reaches 1"),
        )?;
    }
    Ok(by_alg.len())
}

fn ac9_profiles() -> Outcome {
    let table: ValueTable = [("A", [10.0, 20.0]), ("B", [12.0, 18.0])]
        .into_iter()
        .map(|(alg, vals)| {
            (
                alg.to_owned(),
                [("i1".to_owned(), vals[0]), ("i2".to_owned(), vals[1])].into(),
            )
        })
        .collect();
    let p = stats::performance_profile(&table).map_err(|e| e.to_string())?;
    for alg in ["A", "B"] {
        let at1 = stats::fraction_at(&p[alg], 1.0);
        let at12 = stats::fraction_at(&p[alg], 1.2);
        check(
            at1 == 0.5 && at12 == 1.0,
            format!("{alg}: {at1} at 1, {at12} at 1.2"),
        )?;
    }

    // generated results: a mixed matrix written to CSV and read back
    let mut instances = quality_suite(0)?.into_iter().take(3).collect::<Vec<_>>();
    instances.push(Instance {
        label: "churn".into(),
        sequence: random_updates(200, 5000, 400, 0xAC9),
    });
    let opts = RunOptions {
        repetitions: 3,
        base_seed: 9,
        jobs: 4,
        ..RunOptions::default()
    };
    let outcome = run_matrix(&all_algorithms(16), &instances, &opts);
    check(outcome.failures.is_empty(), "failed cells")?;
    let mut csv_bytes = Vec::new();
    write_records(&mut csv_bytes, &outcome.records).map_err(|e| e.to_string())?;
    let reread = read_records(csv_bytes.as_slice()).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for metric in [Metric::Delta, Metric::Time] {
        let first = profile_csv(&reread, metric)?;
        let second = profile_csv(
            &read_records(csv_bytes.as_slice()).map_err(|e| e.to_string())?,
            metric,
        )?;
        check(first == second, "re-aggregation changed the profile bytes")?;
        checked += validate_profile_csv(&first)?;
    }
    Ok(format!(
        "A/B example exact; {checked} generated profiles monotone in [0, 1]"
    ))
}

fn determinism_columns(records: &[BenchmarkRecord]) -> Result<Vec<u8>, String> {
    let mut buf = Vec::new();
    write_records(&mut buf, records).map_err(|e| e.to_string())?;
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| e.to_string())?;
        out.extend_from_slice(
            format!(
                "{},{},{},{},{},{}\n",
                &row[0], &row[1], &row[2], &row[3], &row[4], &row[6]
            )
            .as_bytes(),
        );
    }
    Ok(out)
}

fn ac10_determinism() -> Outcome {
    let mut instances = quality_suite(0)?.into_iter().step_by(4).collect::<Vec<_>>();
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC10);
    let g = two_forest_union(500, &mut rng);
    instances.push(Instance {
        label: "forests_churn".into(),
        sequence: EditSequence {
            n: 500,
            ops: churn_stream(&g, &mut rng),
            provenance: String::new(),
        },
    });
    instances.push(Instance {
        label: "random_updates".into(),
        sequence: random_updates(500, 20_000, 1500, 0xAC10),
    });
    let configs = all_algorithms(16);
    let first = run_matrix(
        &configs,
        &instances,
        &RunOptions {
            repetitions: 3,
            base_seed: 42,
            ..RunOptions::default()
        },
    );
    let second = run_matrix(
        &configs,
        &instances,
        &RunOptions {
            repetitions: 3,
            base_seed: 42,
            jobs: 4,
            ..RunOptions::default()
        },
    );
    check(
        first.failures.is_empty() && second.failures.is_empty(),
        "failed cells",
    )?;
    let (a, b) = (
        determinism_columns(&first.records)?,
        determinism_columns(&second.records)?,
    );
    check(a == b, "final_delta/flips columns differ between runs")?;
    Ok(format!(
        "{} records, final_delta and flips byte-identical (serial vs 4 workers)",
        first.records.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 oracle correctness", ac1_oracle),
        ("AC2 triangle anchor", ac2_triangle),
        ("AC3 optimality rate", ac3_optimality),
        ("AC4 quality ordering", ac4_ordering),
        ("AC5 speed ordering", ac5_speed),
        ("AC6 Brodal-Fagerberg safety", ac6_brodal),
        ("AC7 K-Flips queue invariant", ac7_kflips),
        ("AC8 adjacency fuzz", ac8_adjacency),
        ("AC9 performance profiles", ac9_profiles),
        ("AC10 determinism", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
