use ado_forge_core::engine::{self, EngineConfig, Method, Step};
use ado_forge_core::lie::LieAlgebra;
use ado_forge_core::{fixtures, json, AdoError};

const CORPUS: [&str; 10] = [
    "abelian1",
    "abelian2",
    "abelian3",
    "heisenberg3",
    "heisenberg5",
    "filiform4",
    "free2_2",
    "free2_3",
    "free3_2",
    "free2_4",
];

fn config(method: Method) -> EngineConfig {
    EngineConfig {
        method,
        ..EngineConfig::default()
    }
}

#[test]
fn both_methods_succeed_on_the_corpus() {
    for name in CORPUS {
        let l = fixtures::by_name(name).unwrap();
        for method in [Method::Auto, Method::Graded, Method::Induction] {
            let c = engine::construct_faithful_nilpotent(&l, &config(method)).unwrap();
            let report = engine::verify_output(&l, &c.rep);
            assert!(report.accepted(), "{name} {method:?}: {report:?}");
            assert!(matches!(
                c.certificate.steps.last(),
                Some(Step::Verified { homomorphism: true, faithful: true, nilpotent: true })
            ));
        }
    }
}

#[test]
fn ungraded_inputs_use_the_induction() {
    for name in ["heisenberg5", "filiform4", "free2_3"] {
        let l = fixtures::by_name(name).unwrap().without_grading();
        let c = engine::construct_faithful_nilpotent(&l, &EngineConfig::default()).unwrap();
        assert!(matches!(c.certificate.steps[0], Step::Presented { .. }));
        assert!(engine::verify_output(&l, &c.rep).accepted());
    }
}

#[test]
fn glue_traces_descend() {
    for name in ["heisenberg5", "filiform4"] {
        let l = fixtures::by_name(name).unwrap();
        let c = engine::construct_faithful_nilpotent(&l, &config(Method::Induction)).unwrap();
        let mut glued = 0;
        for step in &c.certificate.steps {
            if let Step::Glue { kernel_dims, summand_dims, .. } = step {
                glued += 1;
                assert_eq!(kernel_dims.len(), summand_dims.len());
                assert!(kernel_dims.windows(2).all(|w| w[1] < w[0]));
                assert_eq!(kernel_dims.last(), Some(&0));
            }
        }
        assert!(glued > 0);
    }
}

#[test]
fn compression_is_optional() {
    let l = fixtures::filiform4();
    let cfg = EngineConfig {
        compress: false,
        ..config(Method::Induction)
    };
    let c = engine::construct_faithful_nilpotent(&l, &cfg).unwrap();
    assert!(engine::verify_output(&l, &c.rep).accepted());
    for step in &c.certificate.steps {
        if let Step::KernelSubmodule { carrier_dim, compressed_dim } = step {
            assert_eq!(carrier_dim, compressed_dim);
        }
    }
}

#[test]
fn constructions_are_deterministic_and_replay() {
    for name in ["heisenberg3", "filiform4", "heisenberg5"] {
        let l = fixtures::by_name(name).unwrap();
        for method in [Method::Graded, Method::Induction] {
            let a = engine::construct_faithful_nilpotent(&l, &config(method)).unwrap();
            let b = engine::construct_faithful_nilpotent(&l, &config(method)).unwrap();
            assert_eq!(json::rep_to_json(&a.rep), json::rep_to_json(&b.rep));
            assert_eq!(a.certificate, b.certificate);
            let text = json::to_pretty(&a.certificate);
            let parsed: engine::Certificate = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed, a.certificate);
            assert_eq!(engine::replay(&l, &parsed).unwrap(), a.rep);
        }
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let l = fixtures::filiform4();
    let mut cert = engine::construct_faithful_nilpotent(&l, &config(Method::Induction))
        .unwrap()
        .certificate;
    cert.output_digest = "0".repeat(64);
    assert!(matches!(engine::replay(&l, &cert), Err(AdoError::VerificationFailed(_))));
    assert_eq!(
        engine::replay(&fixtures::heisenberg3(), &cert),
        Err(AdoError::AlgebraMismatch)
    );
}

#[test]
fn budgets_are_enforced() {
    let l = fixtures::filiform4();
    let tiny = EngineConfig {
        rep_budget: 20,
        ..config(Method::Graded)
    };
    assert!(matches!(
        engine::construct_faithful_nilpotent(&l, &tiny),
        Err(AdoError::BudgetExceeded { .. })
    ));
    let small_free = EngineConfig {
        free_budget: 4,
        ..config(Method::Induction)
    };
    assert!(matches!(
        engine::construct_faithful_nilpotent(&l, &small_free),
        Err(AdoError::BudgetExceeded { .. })
    ));
}

#[test]
fn invalid_inputs_are_rejected() {
    let broken = LieAlgebra::new(
        "broken",
        3,
        [
            ((0, 1), ado_forge_core::linalg::SparseVec::unit(2)),
            ((0, 2), ado_forge_core::linalg::SparseVec::unit(0)),
        ],
    )
    .unwrap();
    assert!(!broken.validate().is_empty());
    assert!(matches!(
        engine::construct_faithful_nilpotent(&broken, &EngineConfig::default()),
        Err(AdoError::InvalidAlgebra(_))
    ));
    assert!(matches!(
        engine::construct_faithful_nilpotent(&fixtures::solvable2(), &EngineConfig::default()),
        Err(AdoError::NotNilpotent(_))
    ));
}
