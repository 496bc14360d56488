//! Full catalog sweep: every classification case must pass its soundness and
//! completeness directions at a moderate draw count. The acceptance suite
//! reruns the headline cases at full depth.

use harmlie::classification::{equivalence_sweep, theorem_catalog, verify_case, Expected};
use harmlie::AlgebraId;

#[test]
fn every_catalog_case_passes() {
    let cases = theorem_catalog();
    assert!(cases.len() >= 40);
    let mut failed = Vec::new();
    for case in &cases {
        let res = verify_case(case, 120, 20260809, 1e-9).expect("sweep runs");
        if !res.passed() {
            failed.push((case.id, res.failures.len(), res.failures.first().cloned()));
        }
        if case.expected == Expected::Probe {
            let tally = res.probe_tally.expect("probe tally");
            assert_eq!(
                tally.harmonic + tally.biharmonic_not_harmonic + tally.neither,
                res.n_condition_samples,
                "{}",
                case.id
            );
        }
    }
    assert!(
        failed.is_empty(),
        "{} failing cases: {:#?}",
        failed.len(),
        failed
    );
}

#[test]
fn nil_and_sol_equivalence_hold() {
    for id in [AlgebraId::Nil, AlgebraId::Sol] {
        let res = equivalence_sweep(id, 240, 7, 1e-9);
        assert!(
            res.failures.is_empty(),
            "{id}: {:?}",
            res.failures.first()
        );
    }
}

#[test]
fn e02_equivalence_fails_with_witnesses() {
    let res = equivalence_sweep(AlgebraId::E02, 240, 7, 1e-9);
    assert!(
        !res.failures.is_empty(),
        "expected biharmonic-not-harmonic witnesses on e02"
    );
    for f in &res.failures {
        assert!(f.biharmonic && !f.harmonic);
    }
}
