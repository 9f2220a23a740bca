use std::time::{Duration, Instant};

use dialgebra::experiments::{run_experiment, ExperimentConfig};
use dialgebra::field::FieldTag;
use dialgebra::report::Report;
use serde_json::json;

struct Outcome {
    pass: bool,
    note: String,
}

fn run(name: &str, field: FieldTag) -> (Report, Duration) {
    let cfg = ExperimentConfig {
        field,
        ..ExperimentConfig::default()
    };
    let start = Instant::now();
    let r = run_experiment(name, &cfg).unwrap_or_else(|e| panic!("{name}: {e}"));
    (r, start.elapsed())
}

/// Runs an experiment over F101 and checks its own assertions, the given
/// extra conditions and a time limit.
fn criterion(
    name: &str,
    field: FieldTag,
    limit: Option<f64>,
    extra: impl Fn(&Report) -> Vec<(&'static str, bool)>,
) -> Outcome {
    let (r, t) = run(name, field);
    let mut failed: Vec<String> = r.failed_checks().iter().map(|c| c.name.clone()).collect();
    for (label, ok) in extra(&r) {
        if !ok {
            failed.push(label.to_string());
        }
    }
    if let Some(secs) = limit {
        if t.as_secs_f64() >= secs {
            failed.push(format!("runtime {:.3}s over {secs}s", t.as_secs_f64()));
        }
    }
    let note = format!("{name}, {} checks, {:.3}s", r.checks.len(), t.as_secs_f64());
    if failed.is_empty() {
        Outcome { pass: true, note }
    } else {
        Outcome {
            pass: false,
            note: format!("{note}; failed: {}", failed.join("; ")),
        }
    }
}

fn shape(r: &Report, rows: usize, cols: usize) -> bool {
    r.matrix_shape == Some([rows, cols])
}

fn has_check(r: &Report, name: &str) -> bool {
    r.checks.iter().any(|c| c.name == name && c.pass)
}

const FIELD_RUNS: [&str; 8] = [
    "diproduct1-deg3",
    "diproduct2-deg3",
    "diproduct1-deg5",
    "diproduct2-deg5",
    "diproducts-deg5-both",
    "theorem-equivalence",
    "jordan-dialgebra-deg3",
    "jordan-dialgebra-deg5",
];

/// The field-independent numbers of a report.
fn summary(r: &Report) -> serde_json::Value {
    json!({
        "shape": r.matrix_shape,
        "rank": r.rank,
        "nullity": r.nullity,
        "trajectory": r.rank_trajectory,
        "accepted": r.accepted_indices,
        "generators": r.generators.len(),
        "details": r.details,
        "checks": r.checks.iter().map(|c| (&c.name, c.pass)).collect::<Vec<_>>(),
    })
}

fn field_agnostic() -> Outcome {
    let mut bad = Vec::new();
    for name in FIELD_RUNS {
        let (base, _) = run(name, FieldTag::Prime(101));
        for field in [FieldTag::Prime(103), FieldTag::Rational] {
            let (r, _) = run(name, field);
            if !r.passed() || summary(&r) != summary(&base) {
                bad.push(format!("{name} over {field:?}"));
            }
        }
    }
    let note = format!("{} experiments over F101, F103 and Q", FIELD_RUNS.len());
    Outcome {
        pass: bad.is_empty(),
        note: if bad.is_empty() {
            note
        } else {
            format!("{note}; differ: {}", bad.join(", "))
        },
    }
}

#[test]
fn acceptance() {
    let p101 = FieldTag::Prime(101);
    let outcomes = vec![
        criterion("diproduct1-deg3", p101, Some(0.1), |r| {
            vec![
                ("shape 18x6", shape(r, 18, 6)),
                ("rank 6", r.rank == Some(6)),
                ("nullity 0", r.nullity == Some(0)),
            ]
        }),
        criterion("diproduct2-deg3", p101, None, |r| {
            vec![
                ("nullity 3", r.nullity == Some(3)),
                (
                    "printed nullspace",
                    has_check(r, "nullspace basis equals the printed vectors"),
                ),
            ]
        }),
        criterion("diproduct1-deg5", p101, Some(5.0), |r| {
            vec![
                ("shape 600x360", shape(r, 600, 360)),
                ("rank 150", r.rank == Some(150)),
                ("nullity 210", r.nullity == Some(210)),
                (
                    "entries ±1",
                    has_check(r, "nullspace components are 0 or ±1"),
                ),
                (
                    "census",
                    r.details.get("support_census") == Some(&json!({"2": 30, "4": 120, "6": 60})),
                ),
                ("3 generators", r.generators.len() == 3),
                (
                    "printed module",
                    has_check(r, "same module as the printed generators"),
                ),
            ]
        }),
        criterion("diproduct2-deg5", p101, None, |r| {
            vec![
                ("shape 600x90", shape(r, 600, 90)),
                ("rank 90", r.rank == Some(90)),
                ("nullity 0", r.nullity == Some(0)),
            ]
        }),
        criterion("diproducts-deg5-both", p101, Some(10.0), |r| {
            vec![
                ("shape 600x690", shape(r, 600, 690)),
                ("rank 250", r.rank == Some(250)),
                ("nullity 440", r.nullity == Some(440)),
                (
                    "seed span 90",
                    r.rank_trajectory.first() == Some(&150) && has_check(r, "seed span"),
                ),
                ("6 generators", r.generators.len() == 6),
                (
                    "minimal",
                    has_check(r, "no proper subset of the generators suffices"),
                ),
                ("span 440", r.rank_trajectory.last() == Some(&440)),
            ]
        }),
        criterion("theorem-equivalence", p101, None, |r| {
            vec![
                (
                    "degree 3",
                    has_check(r, "degree 3: jtd-kp spans the diproduct identities"),
                ),
                (
                    "degree 5",
                    has_check(r, "degree 5: jtd-kp spans the diproduct identities"),
                ),
                (
                    "same sets",
                    has_check(r, "degree 5: jtd spans the diproduct identities"),
                ),
            ]
        }),
        criterion("jordan-dialgebra-deg3", FieldTag::Rational, None, |r| {
            vec![
                ("rank 15", r.rank == Some(15)),
                ("matrix", has_check(r, "matrix equals the printed matrix")),
                (
                    "rcf",
                    has_check(r, "row canonical form equals the printed form"),
                ),
                (
                    "right rows",
                    has_check(r, "right rows span the permutations of the symmetry"),
                ),
            ]
        }),
        criterion("jordan-dialgebra-deg5", p101, Some(60.0), |r| {
            vec![
                ("rank 2215", r.rank == Some(2215)),
                (
                    "trajectory",
                    r.rank_trajectory == [120, 240, 360, 390, 450, 470, 530, 560],
                ),
                ("8 accepted", r.accepted_indices.len() == 8),
                ("7 after pruning", has_check(r, "generators after pruning")),
                ("span 560", r.nullity == Some(560)),
            ]
        }),
        criterion("variety-verification", p101, None, |r| {
            vec![
                (
                    "diproducts",
                    has_check(r, "corrupted J5 fails for the diproducts"),
                ),
                (
                    "modulo",
                    has_check(r, "corrupted J5 fails in Jordan dialgebras"),
                ),
                (
                    "16 identity checks",
                    r.checks
                        .iter()
                        .filter(|c| c.name.contains(" holds "))
                        .count()
                        == 16,
                ),
            ]
        }),
        criterion("special-reduction", p101, None, |r| {
            vec![(
                "both triples",
                r.checks
                    .iter()
                    .filter(|c| c.name.contains("reduces to twice"))
                    .count()
                    == 2,
            )]
        }),
        criterion("instance-suite", p101, None, |r| {
            vec![
                ("200 trials", r.details.get("trials") == Some(&json!(200))),
                (
                    "zero violations",
                    has_check(r, "violations of J1-J8 by the differential operations"),
                ),
            ]
        }),
        field_agnostic(),
    ];
    for (i, o) in outcomes.iter().enumerate() {
        println!(
            "criterion {}: {} ({})",
            i + 1,
            if o.pass { "pass" } else { "FAIL" },
            o.note
        );
    }
    assert!(outcomes.iter().all(|o| o.pass));
}
