use dialgebra::experiments::{
    experiment_degree, parse_sign_matrix, run_experiment, ExperimentConfig, EXPERIMENTS, JD_DEG3_MATRIX,
    JD_DEG3_RCF,
};
use dialgebra::field::FieldTag;
use dialgebra::Error;

#[test]
fn every_experiment_passes_over_another_prime() {
    let cfg = ExperimentConfig {
        field: FieldTag::Prime(103),
        ..ExperimentConfig::default()
    };
    for name in EXPERIMENTS {
        let r = run_experiment(name, &cfg).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failed_checks());
        assert_eq!(r.modulus, Some(103));
    }
}

#[test]
fn field_and_name_errors() {
    let small = ExperimentConfig {
        field: FieldTag::Prime(5),
        ..ExperimentConfig::default()
    };
    assert!(matches!(
        run_experiment("diproduct1-deg5", &small),
        Err(Error::FieldConstraint(_))
    ));
    assert!(run_experiment("diproduct1-deg3", &small).unwrap().passed());
    let q = ExperimentConfig {
        field: FieldTag::Rational,
        ..ExperimentConfig::default()
    };
    assert!(matches!(
        run_experiment("instance-suite", &q),
        Err(Error::FieldConstraint(_))
    ));
    assert!(matches!(run_experiment("nope", &q), Err(Error::Unknown(_))));
    assert!(experiment_degree("nope").is_err());
}

#[test]
fn instance_suite_for_other_seeds() {
    for seed in [2, 3] {
        let cfg = ExperimentConfig {
            seed,
            trials: 40,
            ..ExperimentConfig::default()
        };
        let r = run_experiment("instance-suite", &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.details["corrupted_j5_violations"], 40);
    }
}

#[test]
fn fixtures_have_the_printed_shapes() {
    let f2 = parse_sign_matrix(JD_DEG3_MATRIX).unwrap();
    let f3 = parse_sign_matrix(JD_DEG3_RCF).unwrap();
    assert_eq!((f2.len(), f2[0].len()), (18, 24));
    assert_eq!((f3.len(), f3[0].len()), (15, 24));
    assert!(f3.iter().flatten().any(|c| *c.denom() == 2));
}
