//! Acceptance suite: every criterion at its stated draw count and tolerance,
//! one pass/fail line each (visible with `--nocapture`). Criteria run under a
//! shared lock so their runtime budgets are measured without contention.

mod common;

use std::sync::Mutex;
use std::time::Instant;

use common::{random_automorphism, random_problem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use harmlie::audit::audit_cases;
use harmlie::classification::{theorem_catalog, verify_case, verify_equivalence};
use harmlie::connection::MetricLieAlgebra;
use harmlie::homomorphism::{
    conjugate, e02_xi1, sl2_rot_factor, su2_factor, su2_product, UnitPair,
};
use harmlie::metric::Metric;
use harmlie::search::{
    minimize, scan_biharmonic_not_harmonic, FreeParam, MetricSpec, Objective, SearchSpec,
};
use harmlie::{
    analyze, catalog, tau, tau2, tau2_via_trace, tau_via_trace, AlgebraId, Problem,
};

static GATE: Mutex<()> = Mutex::new(());

fn criterion(n: u32, started: Instant, budget_s: Option<f64>, detail: &str) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("PASS criterion {n}: {detail} ({elapsed:.1} s)");
    if let Some(budget) = budget_s {
        assert!(
            elapsed < budget,
            "criterion {n} exceeded its {budget} s budget: {elapsed:.1} s"
        );
    }
}

fn rel_residual(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let mut num = 0.0f64;
    let mut den = 1.0f64;
    for k in 0..3 {
        num = num.max((a[k] - b[k]).abs());
        den = den.max(a[k].abs()).max(b[k].abs());
    }
    num / den
}

/// Criterion 1 — closed-form audit: every printed tension/bitension/test
/// matrix/determinant expression agrees with the engine on 500 draws per
/// formula; exact equality on rationals, relative residual < 1e-9 on floats.
#[test]
fn criterion_1_closed_form_audit() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let cases = audit_cases();
    let outcomes: Vec<_> = cases
        .par_iter()
        .map(|case| (case.run(1, 500, true), case.run(2, 500, false)))
        .collect();
    for (exact, float) in &outcomes {
        assert!(exact.pass, "{} exact path", exact.id);
        assert_eq!(exact.max_rel_residual, 0.0, "{} exact path", exact.id);
        assert!(
            float.pass,
            "{} float path residual {}",
            float.id, float.max_rel_residual
        );
    }
    criterion(
        1,
        start,
        Some(60.0),
        &format!(
            "closed-form audit over {} expressions x 500 draws, exact and float paths",
            cases.len()
        ),
    );
}

/// Criterion 2 — dual-path oracle: frame-sum vs trace formulas on 1000
/// random problems per algebra, residual < 1e-9.
#[test]
fn criterion_2_dual_path_oracle() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut worst = 0.0f64;
    for id in AlgebraId::ALL {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + id as u64);
        let problems: Vec<Problem<f64>> =
            (0..1000).map(|_| random_problem(&mut rng, id)).collect();
        let w = problems
            .par_iter()
            .map(|p| {
                let t = tau(p).value;
                let r1 = rel_residual(&t.to_f64(), &tau_via_trace(p).to_f64());
                let t2 = tau2(p).value;
                let r2 = rel_residual(&t2.to_f64(), &tau2_via_trace(p).to_f64());
                r1.max(r2)
            })
            .reduce(|| 0.0, f64::max);
        assert!(w < 1e-9, "{id}: worst dual-path residual {w}");
        worst = worst.max(w);
    }
    criterion(
        2,
        start,
        Some(30.0),
        &format!("dual-path agreement on 5000 problems, worst residual {worst:.2e}"),
    );
}

/// Criterion 3 — equivalence sweeps: biharmonic ⇔ harmonic on nil and sol
/// with 2000 samples each, zero failures.
#[test]
fn criterion_3_equivalence_sweeps() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    for id in [AlgebraId::Nil, AlgebraId::Sol] {
        let res = verify_equivalence(id, 2000, 3, 1e-9).unwrap();
        assert!(
            res.failures.is_empty(),
            "{id}: {:?}",
            res.failures.first()
        );
        assert_eq!(res.n_generic_samples, 2000);
    }
    criterion(3, start, None, "nil and sol equivalence, 2000 samples each, zero failures");
}

/// Criterion 4 — biharmonic-not-harmonic witnesses reproduce with
/// ‖τ₂‖ < 1e-9·scale and ‖τ‖ > 1e-3·scale.
#[test]
fn criterion_4_witnesses_reproduce() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let check = |label: &str, p: &Problem<f64>| {
        let rep = analyze(p, 1e-9);
        assert!(rep.biharmonic && !rep.harmonic, "{label}");
        let tau_norm = rep.tau.max_abs();
        let tau2_norm = rep.tau2.max_abs();
        assert!(tau2_norm < 1e-9 * rep.tau2_scale, "{label}: tau2 {tau2_norm}");
        assert!(tau_norm > 1e-3 * rep.tau_scale, "{label}: tau {tau_norm}");
    };
    let mla = |id, m| MetricLieAlgebra::new(catalog(id), m).unwrap();

    // (a) the planar-column witness on e02
    let p = Problem::new(
        mla(AlgebraId::E02, Metric::from_diag(1.0, 0.7, 1.0).unwrap()),
        mla(AlgebraId::E02, Metric::from_diag(1.0, 0.5, 1.0).unwrap()),
        e02_xi1(1.0, 1.0, 0.0).unwrap(),
    )
    .unwrap();
    check("e02 column witness", &p);

    // (b) the squashed su2 product witness at cos a = cos b = 2^(-1/4)
    let q = 0.5f64.powf(0.25);
    let pair = UnitPair {
        cos: q,
        sin: (1.0 - q * q).sqrt(),
    };
    let p = Problem::new(
        mla(AlgebraId::Su2, Metric::from_diag(2.0, 1.0, 1.0).unwrap()),
        mla(AlgebraId::Su2, Metric::from_diag(3.0, 1.5, 1.5).unwrap()),
        su2_product(&pair, &pair, &UnitPair::from_angle(0.37)),
    )
    .unwrap();
    check("su2 squashed product witness", &p);

    // (c) the quarter-diagonal rotation on su2 and sl2 with distinct first
    // two metric entries on both sides
    let eighth = UnitPair::from_angle(std::f64::consts::FRAC_PI_4);
    let p = Problem::new(
        mla(AlgebraId::Su2, Metric::from_diag(2.0, 1.0, 1.0).unwrap()),
        mla(AlgebraId::Su2, Metric::from_diag(2.0, 1.0, 1.0).unwrap()),
        su2_factor(3, &eighth),
    )
    .unwrap();
    check("su2 rotation at pi/4", &p);
    let p = Problem::new(
        mla(AlgebraId::Sl2, Metric::from_diag(1.0, 2.0, 1.0).unwrap()),
        mla(AlgebraId::Sl2, Metric::from_diag(1.0, 1.5, 0.8).unwrap()),
        sl2_rot_factor(&eighth),
    )
    .unwrap();
    check("sl2 rotation at pi/4", &p);

    criterion(4, start, None, "all four biharmonic-not-harmonic witnesses reproduce");
}

/// Criterion 5 — determinant consistency: over 5000 random problems, no case
/// with |det M| above scale violates biharmonic ⇔ harmonic.
#[test]
fn criterion_5_determinant_consistency() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut checked = 0usize;
    for id in AlgebraId::ALL {
        let mut rng = ChaCha8Rng::seed_from_u64(5000 + id as u64);
        let problems: Vec<Problem<f64>> =
            (0..1000).map(|_| random_problem(&mut rng, id)).collect();
        let reports: Vec<_> = problems.par_iter().map(|p| analyze(p, 1e-9)).collect();
        for rep in reports {
            let det_scale = rep.test_matrix.max_abs().powi(3);
            if rep.det_test.abs() > 1e-6 * det_scale {
                checked += 1;
                assert_eq!(rep.harmonic, rep.biharmonic, "{id}");
            }
        }
    }
    criterion(
        5,
        start,
        None,
        &format!("determinant forces matching verdicts ({checked} of 5000 above scale)"),
    );
}

/// Criterion 6 — every printed test-matrix determinant formula matches
/// exactly on rationals, 500 draws each.
#[test]
fn criterion_6_determinant_formulas() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let det_ids: Vec<&str> = audit_cases()
        .iter()
        .map(|c| c.id)
        .filter(|id| id.ends_with(".det"))
        .collect();
    assert!(det_ids.len() >= 6, "expected the printed determinant set");
    let cases = audit_cases();
    for case in cases.iter().filter(|c| c.id.ends_with(".det")) {
        let outcome = case.run(6, 500, true);
        assert!(outcome.pass, "{}", case.id);
        assert_eq!(outcome.max_rel_residual, 0.0, "{}", case.id);
    }
    criterion(
        6,
        start,
        None,
        &format!(
            "{} determinant formulas match exactly on rationals (500 draws each)",
            det_ids.len()
        ),
    );
}

/// Criterion 7 — conjugation equivariance: τ(φ₂∘ξ∘φ₁⁻¹) = φ₂·τ(ξ) over 200
/// isometric conjugations per algebra, residual < 1e-9.
#[test]
fn criterion_7_conjugation_equivariance() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut worst = 0.0f64;
    for id in AlgebraId::ALL {
        let mut rng = ChaCha8Rng::seed_from_u64(7000 + id as u64);
        let mut done = 0;
        while done < 200 {
            let p: Problem<f64> = random_problem(&mut rng, id);
            let phi1 = random_automorphism::<f64>(&mut rng, id);
            let phi2 = random_automorphism::<f64>(&mut rng, id);
            let (xi2, g1, g2) =
                conjugate(&p.xi, &phi1, &phi2, &p.src.metric, &p.dst.metric).unwrap();
            let conj = match Problem::new(
                MetricLieAlgebra::new(catalog(id), g1).unwrap(),
                MetricLieAlgebra::new(catalog(id), g2).unwrap(),
                xi2,
            ) {
                Ok(q) => q,
                Err(_) => continue,
            };
            done += 1;
            let want = phi2.mul_vec(&tau(&p).value);
            let got = tau(&conj).value;
            let r = rel_residual(&got.to_f64(), &want.to_f64());
            assert!(r < 1e-9, "{id}: residual {r}");
            worst = worst.max(r);
        }
    }
    criterion(
        7,
        start,
        None,
        &format!("200 conjugations per algebra, worst tau residual {worst:.2e}"),
    );
}

/// Criterion 8 — search recovery: the rotation family's critical loci are
/// found from 20 restarts, and the nil scan stays empty.
#[test]
fn criterion_8_search_recovery() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let su2_metric = MetricSpec {
        family: "su2".into(),
        params: [
            ("lambda".to_string(), 2.0),
            ("mu".to_string(), 1.0),
            ("nu".to_string(), 1.0),
        ]
        .into_iter()
        .collect(),
    };
    let base = SearchSpec {
        algebra: AlgebraId::Su2,
        family: "su2-xi3".into(),
        metric1: su2_metric.clone(),
        metric2: su2_metric,
        fixed: Default::default(),
        free: vec![FreeParam {
            name: "a".into(),
            min: 0.5,
            max: 1.2,
        }],
        objective: Objective::BitensionNormSq,
        tolerance: 1e-12,
        max_evals: 20_000,
        restarts: 20,
    };
    let res = minimize(&base, 8).unwrap();
    assert!(res.converged);
    let a = res.minimizer[0].1;
    assert!(
        (a.cos().powi(2) - 0.5).abs() < 1e-6,
        "bitension minimizer a = {a}"
    );

    let mut tension = base.clone();
    tension.objective = Objective::TensionNormSq;
    tension.free[0] = FreeParam {
        name: "a".into(),
        min: 0.1,
        max: 3.0,
    };
    let res = minimize(&tension, 8).unwrap();
    assert!(res.converged);
    let a = res.minimizer[0].1;
    assert!((2.0 * a).sin().abs() < 1e-6, "tension minimizer a = {a}");

    // nil: bitension descent finds no biharmonic-not-harmonic witnesses
    let nil_metric = |l: f64| MetricSpec {
        family: "nil".into(),
        params: [("lambda".to_string(), l)].into_iter().collect(),
    };
    let scan = SearchSpec {
        algebra: AlgebraId::Nil,
        family: "nil-generic".into(),
        metric1: nil_metric(1.25),
        metric2: nil_metric(0.75),
        fixed: Default::default(),
        free: ["alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3"]
            .into_iter()
            .map(|name| FreeParam {
                name: name.into(),
                min: -2.0,
                max: 2.0,
            })
            .collect(),
        objective: Objective::BitensionNormSq,
        tolerance: 1e-12,
        max_evals: 20_000,
        restarts: 20,
    };
    let witnesses = scan_biharmonic_not_harmonic(&scan, 20, 8).unwrap();
    assert!(witnesses.is_empty(), "nil produced {} witnesses", witnesses.len());

    criterion(
        8,
        start,
        Some(30.0),
        "critical loci recovered to 1e-6, nil scan empty",
    );
}

/// Criterion 9 — the square-root variant probe: the a² = b²μ₂³ branch
/// verifies as biharmonic-not-harmonic while the √μ₁ alternate is recorded
/// and fails to annihilate the bitension.
#[test]
fn criterion_9_variant_probe() {
    let _g = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let cases = theorem_catalog();
    let mut verified = Vec::new();
    let mut recorded = Vec::new();
    for (asserted, probe) in [("thm4.2.2.b", "thm4.2.2.c"), ("thm4.2.3.b", "thm4.2.3.c")] {
        let case = cases.iter().find(|c| c.id == asserted).unwrap();
        let res = verify_case(case, 500, 9, 1e-9).unwrap();
        assert!(res.passed(), "{asserted}: {:?}", res.failures.first());
        verified.push(asserted);

        let case = cases.iter().find(|c| c.id == probe).unwrap();
        let res = verify_case(case, 500, 9, 1e-9).unwrap();
        let tally = res.probe_tally.unwrap();
        assert_eq!(
            tally.biharmonic_not_harmonic, 0,
            "{probe}: alternate variant unexpectedly annihilates the bitension"
        );
        assert_eq!(tally.neither, 500, "{probe}");
        recorded.push(probe);
    }
    // pinned-point confirmation of the verified branch: mu2 = 1/4 gives the
    // rational relation a = b·mu2^(3/2) = b/8
    {
        use harmlie::homomorphism::e02_xi2;
        let (mu1, mu2, nu1, nu2) = (0.5f64, 0.25f64, 1.0f64, 2.0f64);
        let b = 2.0f64;
        let a = b * mu2 * mu2.sqrt(); // = 1/4, exact in floats
        let m2m = mu2 - 1.0;
        let alpha = (mu1 * b * (mu2 * mu2 * nu2 + a * a * m2m * m2m)
            / (nu1 * m2m * m2m * (1.0 - mu1) * a))
            .sqrt();
        let p = Problem::new(
            MetricLieAlgebra::new(
                catalog(AlgebraId::E02),
                Metric::from_diag(1.0, mu1, nu1).unwrap(),
            )
            .unwrap(),
            MetricLieAlgebra::new(
                catalog(AlgebraId::E02),
                Metric::from_diag(1.0, mu2, nu2).unwrap(),
            )
            .unwrap(),
            e02_xi2(alpha, alpha, a, b),
        )
        .unwrap();
        let rep = analyze(&p, 1e-9);
        assert!(rep.biharmonic && !rep.harmonic, "pinned-point confirmation");
    }
    criterion(
        9,
        start,
        None,
        &format!(
            "variant discrimination: {:?} verify as biharmonic-not-harmonic, {:?} recorded with zero hits",
            verified, recorded
        ),
    );
}
