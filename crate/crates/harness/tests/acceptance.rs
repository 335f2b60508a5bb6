//! One line per acceptance criterion, each with its own time limit. Exits
//! nonzero if any criterion fails or overruns.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use amalgam::{GroupWord, Subgroup};
use amalgam_harness::report::CheckRecord;
use amalgam_harness::suites::{self, growth_test_set};
use amalgam_harness::Config;
use serde_json::{json, Value};

type Verdict = Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Verdict,
}

fn config(primes: &[u64]) -> Config {
    Config::with_primes(primes.to_vec()).unwrap()
}

fn all_pass(records: &[CheckRecord]) -> Verdict {
    match records.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} checks", records.len())),
        Some(r) => Err(format!("{} {}: {:?} {:?}", r.name, r.parameters, r.reason, r.witnesses)),
    }
}

fn group_axioms() -> Verdict {
    let r = suites::group_axioms(&config(&[2, 3, 5]));
    assert_eq!(r.parameters["samples"], 10_000);
    assert_eq!(r.parameters["max_word_length"], 8);
    assert_eq!(r.parameters["max_level"], 3);
    all_pass(&[r]).map(|_| "10000 triples".into())
}

fn amalgam_soundness() -> Verdict {
    let r = suites::amalgam_soundness(&config(&[2, 3, 5]));
    assert_eq!(r.parameters["samples"], 1_000);
    let built: u64 = r.details["words_by_stable_count"].as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(built, 1_000);
    all_pass(&[r]).map(|_| "1000 reduced words, none trivial".into())
}

fn conjugate_growth() -> Verdict {
    let cfg = config(&[2, 3, 5]);
    let set = growth_test_set(&cfg.primes).unwrap();
    assert_eq!(set.len(), 12);
    let class = |g: &GroupWord| match g.level() {
        0 if g.is_member(Subgroup::K) => "K - e",
        0 => "G0 - K",
        1 => "G1 - G0",
        _ => "G2 - G1",
    };
    for (label, g) in &set {
        assert!(!g.is_identity() && g.level() <= 2);
        assert_eq!(class(g), *label, "{g}");
    }
    for label in ["G0 - K", "K - e", "G1 - G0", "G2 - G1"] {
        assert!(set.iter().any(|(l, _)| *l == label));
    }
    let r = suites::conjugate_growth(&cfg);
    let smallest = r.details["profiles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["profile"][3].as_u64().unwrap())
        .min()
        .unwrap();
    all_pass(&[r]).map(|_| format!("12 elements, fewest conjugates at radius 3: {smallest}"))
}

fn orbit_classification() -> Verdict {
    let records = suites::orbit_classification(&config(&[2, 3, 5]));
    let sizes: Vec<Value> = records.iter().map(|r| r.details["sizes"].clone()).collect();
    let expect_sizes = [json!([1, 7]), json!([1, 7, 26, 182])];
    if sizes[..2] != expect_sizes {
        return Err(format!("sizes {sizes:?}"));
    }
    let third: Vec<u64> = sizes[2].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let blocks: Vec<Value> = records.iter().map(|r| r.details["blocks"].clone()).collect();
    if blocks != [json!(2), json!(4), json!(8)] || third.len() != 8 || third.iter().sum::<u64>() != 27_000 {
        return Err(format!("blocks {blocks:?}, sizes {third:?}"));
    }
    all_pass(&records).map(|_| format!("2, 4, 8 blocks; {third:?}"))
}

fn fixed_point_dimension() -> Verdict {
    let records = suites::fixed_point_dimensions(&config(&[2, 3, 5]));
    let dims: Vec<Value> = records.iter().map(|r| r.details["dimension"].clone()).collect();
    if dims != [json!(2), json!(4), json!(8)] {
        return Err(format!("dimensions {dims:?}"));
    }
    all_pass(&records).map(|_| "dimensions 2, 4, 8".into())
}

fn intertwining() -> Verdict {
    let r = suites::fourier_intertwining(&config(&[2, 3, 5, 7]));
    assert_eq!(r.parameters["indices"], json!([0, 1, 2, 3]));
    assert_eq!(r.parameters["tolerance"], 1e-9);
    let dev = r.details["max_deviation"].as_str().unwrap().to_string();
    all_pass(&[r]).map(|_| format!("12 generators x 4 primes, max deviation {dev}"))
}

fn projections() -> Verdict {
    let r = suites::projection_identities(&config(&[2, 3, 5, 7]));
    all_pass(&[r]).map(|_| "p = 2, 3, 5, 7".into())
}

fn witness_vectors() -> Verdict {
    let cfg = config(&[2, 3, 5, 7, 11]);
    let overlap = suites::xi_overlap(&cfg);
    let invariance = suites::xi_invariance(&cfg);
    let pairs: Vec<(u64, u64)> = invariance
        .iter()
        .map(|r| (r.parameters["level"].as_u64().unwrap(), r.parameters["index"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4)]);
    assert!(invariance.iter().all(|r| r.parameters["radius"] == 4));
    let balls: u64 = invariance.iter().map(|r| r.details["ball_size"].as_u64().unwrap_or(0)).sum();
    let mut records = vec![overlap];
    records.extend(invariance);
    all_pass(&records).map(|_| format!("6 (N, n) pairs, {balls} conjugations, no violations"))
}

fn disjointness() -> Verdict {
    let records = suites::disjointness(&config(&[2, 3, 5, 7, 11]));
    let levels: Vec<Value> = records.iter().map(|r| r.parameters["level"].clone()).collect();
    assert_eq!(levels, [json!(1), json!(2), json!(3)]);
    assert!(records.iter().all(|r| r.parameters["samples"] == 1_000));
    all_pass(&records).map(|_| "N = 1, 2, 3; 1000 + 1000 samples each".into())
}

fn orthogonality() -> Verdict {
    let records = suites::orthogonality(&config(&[2, 3, 5, 7, 11]));
    let levels: Vec<Value> = records.iter().map(|r| r.parameters["level"].clone()).collect();
    assert_eq!(levels, [json!(1), json!(2)]);
    assert!(records.iter().all(|r| r.parameters["samples"] == 500));
    all_pass(&records).map(|_| "N = 1, 2; 500 samples each, supports disjoint".into())
}

fn tail_and_bound() -> Verdict {
    let cfg = config(&[2, 3, 5, 7, 11]);
    let records = vec![
        suites::tail_trace_products(&cfg),
        suites::extreme_functions(&cfg),
        suites::unit_ball_samples(&cfg),
    ];
    assert_eq!(records[1].details["functions"], 256);
    assert_eq!(records[2].parameters["samples"], 1_000);
    all_pass(&records).map(|_| format!("{} ranges, 256 sign patterns, 1000 samples", records[0].details["ranges"]))
}

fn without_timing(path: &Path) -> String {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.contains("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cli_determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_amalgam");
    let dir = tempfile::tempdir().unwrap();
    let mut outs = Vec::new();
    for run in ["first", "second"] {
        let out = dir.path().join(run);
        let status = Command::new(bin)
            .args(["verify", "all", "--seed", "42", "--out", out.to_str().unwrap()])
            .output()
            .unwrap()
            .status;
        if status.code() != Some(0) {
            return Err(format!("verify all exited with {status}"));
        }
        outs.push(out);
    }
    for suite in ["icc", "orbits", "fourier", "xi", "disjoint", "bound"] {
        let file = format!("{suite}.json");
        if without_timing(&outs[0].join(&file)) != without_timing(&outs[1].join(&file)) {
            return Err(format!("{file} differs between runs"));
        }
    }
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    let contract = [
        (code(&["verify", "fourier", "--tolerance", "1e-300"]), Some(1)),
        (code(&["verify", "orbits", "--primes", "2,4"]), Some(2)),
        (code(&["verify", "unknown"]), Some(2)),
        (code(&["elem", "reduce", "h(0;1,0"]), Some(2)),
    ];
    for (got, want) in contract {
        if got != want {
            return Err(format!("exit code {got:?}, expected {want:?}"));
        }
    }
    Ok("6 reports identical modulo timing; exit codes 0/1/2".into())
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { name: "group axioms", limit: secs(30), run: group_axioms },
        Criterion { name: "amalgam soundness", limit: secs(10), run: amalgam_soundness },
        Criterion { name: "conjugate growth", limit: secs(60), run: conjugate_growth },
        Criterion { name: "orbit classification", limit: secs(10), run: orbit_classification },
        Criterion { name: "fixed-point dimension", limit: secs(10), run: fixed_point_dimension },
        Criterion { name: "fourier intertwining", limit: secs(10), run: intertwining },
        Criterion { name: "projection identities", limit: secs(1), run: projections },
        Criterion { name: "witness vectors", limit: secs(60), run: witness_vectors },
        Criterion { name: "disjointness", limit: secs(30), run: disjointness },
        Criterion { name: "orthogonality inequality", limit: secs(30), run: orthogonality },
        Criterion { name: "tail trace and bound", limit: secs(30), run: tail_and_bound },
        Criterion { name: "cli determinism", limit: None, run: cli_determinism },
    ];
    let mut failed = 0;
    for c in criteria {
        let started = Instant::now();
        let verdict = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        let verdict = match (verdict, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (v, _) => v,
        };
        let limit = c.limit.map(|l| format!(" / {l:?}")).unwrap_or_default();
        match verdict {
            Ok(msg) => println!("PASS {:<26} {:>9.2?}{limit}  {msg}", c.name, elapsed),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:<26} {:>9.2?}{limit}  {msg}", c.name, elapsed);
            }
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
