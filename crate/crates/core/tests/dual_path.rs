//! Dual-route oracles: the frame-sum engine against the trace formulas, the
//! test-matrix identity, determinant-based verdict consistency, and
//! conjugation equivariance.

mod common;

use common::{random_automorphism, random_problem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use harmlie::homomorphism::conjugate;
use harmlie::{
    analyze, tau, tau2, tau2_via_trace, tau_via_trace, test_matrix, AlgebraId, Problem, Rat,
    Vector3,
};

fn rel_residual(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let mut num = 0.0f64;
    let mut den = 1.0f64;
    for k in 0..3 {
        num = num.max((a[k] - b[k]).abs());
        den = den.max(a[k].abs()).max(b[k].abs());
    }
    num / den
}

#[test]
fn trace_routes_agree_exactly_on_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for id in AlgebraId::ALL {
        for _ in 0..100 {
            let p: Problem<Rat> = random_problem(&mut rng, id);
            let t = tau(&p);
            assert_eq!(t.value, tau_via_trace(&p), "{id}");
            assert_eq!(tau2(&p).value, tau2_via_trace(&p), "{id}");
        }
    }
}

#[test]
fn trace_routes_agree_on_floats() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for id in AlgebraId::ALL {
        for _ in 0..300 {
            let p: Problem<f64> = random_problem(&mut rng, id);
            let t = tau(&p).value;
            assert!(
                rel_residual(&t.to_f64(), &tau_via_trace(&p).to_f64()) < 1e-9,
                "{id}"
            );
            let t2 = tau2(&p).value;
            assert!(
                rel_residual(&t2.to_f64(), &tau2_via_trace(&p).to_f64()) < 1e-9,
                "{id}"
            );
        }
    }
}

/// With a unimodular source, G₂ τ₂ = M τ: the bitension lies in the image of
/// the test matrix. This ties all three computation routes together.
#[test]
fn bitension_factors_through_the_test_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for id in AlgebraId::ALL {
        for _ in 0..100 {
            let p: Problem<Rat> = random_problem(&mut rng, id);
            let t = tau(&p).value;
            let t2 = tau2(&p).value;
            let (m, _) = test_matrix(&p);
            let lhs = p.dst.metric.gram().mul_vec(&t2);
            assert_eq!(lhs, m.mul_vec(&t), "{id}");
        }
    }
}

/// Whenever the test matrix is invertible at scale, the verdicts coincide.
#[test]
fn determinant_forces_verdict_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for id in AlgebraId::ALL {
        for _ in 0..400 {
            let p: Problem<f64> = random_problem(&mut rng, id);
            let rep = analyze(&p, 1e-9);
            let det_scale = rep.test_matrix.max_abs().powi(3);
            if rep.det_test.abs() > 1e-6 * det_scale {
                assert_eq!(rep.harmonic, rep.biharmonic, "{id}");
            }
        }
    }
}

#[test]
fn conjugation_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    for id in AlgebraId::ALL {
        let mut done = 0;
        while done < 60 {
            let p: Problem<f64> = random_problem(&mut rng, id);
            let phi1 = random_automorphism::<f64>(&mut rng, id);
            let phi2 = random_automorphism::<f64>(&mut rng, id);
            let (xi2, g1, g2) =
                conjugate(&p.xi, &phi1, &phi2, &p.src.metric, &p.dst.metric).unwrap();
            let q = match Problem::new(
                harmlie::connection::MetricLieAlgebra::new(harmlie::catalog(id), g1).unwrap(),
                harmlie::connection::MetricLieAlgebra::new(harmlie::catalog(id), g2).unwrap(),
                xi2,
            ) {
                Ok(q) => q,
                // a large conjugated map can exceed the absolute bracket
                // residual gate; redraw
                Err(_) => continue,
            };
            done += 1;
            // tau transforms by phi2, and so does tau2
            let want: Vector3<f64> = {
                let t = tau(&p).value;
                phi2.mul_vec(&t)
            };
            let got = tau(&q).value;
            assert!(
                rel_residual(&got.to_f64(), &want.to_f64()) < 1e-9,
                "{id}: tau equivariance"
            );
            let want2 = phi2.mul_vec(&tau2(&p).value);
            let got2 = tau2(&q).value;
            assert!(
                rel_residual(&got2.to_f64(), &want2.to_f64()) < 1e-9,
                "{id}: tau2 equivariance"
            );
            // verdicts are invariant under isometric conjugation
            let (ra, rb) = (analyze(&p, 1e-9), analyze(&q, 1e-9));
            assert_eq!(ra.harmonic, rb.harmonic, "{id}");
            assert_eq!(ra.biharmonic, rb.biharmonic, "{id}");
        }
    }
}

/// The exact and float paths agree on verdicts for dyadic draws.
#[test]
fn paths_agree_on_shared_draws() {
    let mut rng_a = ChaCha8Rng::seed_from_u64(127);
    let mut rng_b = ChaCha8Rng::seed_from_u64(127);
    for id in AlgebraId::ALL {
        for _ in 0..50 {
            let pe: Problem<Rat> = random_problem(&mut rng_a, id);
            let pf: Problem<f64> = random_problem(&mut rng_b, id);
            let re = analyze(&pe, 1e-9);
            let rf = analyze(&pf, 1e-9);
            assert_eq!(re.harmonic, rf.harmonic, "{id}");
            assert_eq!(re.biharmonic, rf.biharmonic, "{id}");
            let tau_exact: [f64; 3] = re.tau.to_f64();
            assert!(rel_residual(&tau_exact, &rf.tau.to_f64()) < 1e-9, "{id}");
        }
    }
}
