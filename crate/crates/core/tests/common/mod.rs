//! Shared draw helpers for the integration suites: random valid problems per
//! algebra on both arithmetic paths, and random automorphisms.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use harmlie::connection::MetricLieAlgebra;
use harmlie::homomorphism::{
    self, e02_xi1, e02_xi2, e02_xi3, nil_generic, sl2_product, sol_xi1, sol_xi2, sol_xi3,
    su2_product, Homomorphism, HypPair, UnitPair,
};
use harmlie::metric::Metric;
use harmlie::{catalog, AlgebraId, Matrix3, Problem, Scalar};

#[allow(dead_code)]
pub fn u(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Multiples of 1/16 in [lo, hi]; exact on both scalar paths.
pub fn q<S: Scalar>(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> S {
    S::from_ratio(rng.gen_range(lo * 16..=hi * 16), 16)
}

pub fn q_pos<S: Scalar>(rng: &mut ChaCha8Rng, hi: i64) -> S {
    S::from_ratio(rng.gen_range(1..=hi * 16), 16)
}

fn gamma<S: Scalar>(rng: &mut ChaCha8Rng) -> S {
    loop {
        let k: i64 = rng.gen_range(-14..=14);
        if k.abs() != 16 {
            return S::from_ratio(k, 16);
        }
    }
}

fn mla<S: Scalar>(id: AlgebraId, m: Metric<S>) -> MetricLieAlgebra<S> {
    MetricLieAlgebra::new(catalog(id), m).unwrap()
}

pub fn random_metric<S: Scalar>(rng: &mut ChaCha8Rng, id: AlgebraId) -> Metric<S> {
    match id {
        AlgebraId::Nil => {
            let l: S = q_pos(rng, 4);
            Metric::new(Matrix3::diag(l.clone(), l, S::one())).unwrap()
        }
        AlgebraId::E02 => Metric::new(Matrix3::diag(
            S::one(),
            S::from_ratio(rng.gen_range(1..=16), 16),
            q_pos(rng, 4),
        ))
        .unwrap(),
        AlgebraId::Sol => {
            if rng.gen_bool(0.5) {
                Metric::new(Matrix3::diag(S::one(), S::one(), q_pos(rng, 4))).unwrap()
            } else {
                let mu = S::one() + q_pos(rng, 3);
                Metric::new(Matrix3::from_rows([
                    [S::one(), S::one(), S::zero()],
                    [S::one(), mu, S::zero()],
                    [S::zero(), S::zero(), q_pos(rng, 4)],
                ]))
                .unwrap()
            }
        }
        AlgebraId::Su2 => {
            let n: S = q_pos(rng, 3);
            let m = n.clone() + q_pos(rng, 3);
            let l = m.clone() + q_pos(rng, 3);
            Metric::new(Matrix3::diag(l, m, n)).unwrap()
        }
        AlgebraId::Sl2 => {
            let l: S = q_pos(rng, 3);
            let m = l.clone() + q_pos(rng, 3);
            Metric::new(Matrix3::diag(l, m, q_pos(rng, 3))).unwrap()
        }
    }
}

/// A random valid homomorphism of the algebra, drawn across its families.
pub fn random_homomorphism<S: Scalar>(rng: &mut ChaCha8Rng, id: AlgebraId) -> Homomorphism<S> {
    let v = |rng: &mut ChaCha8Rng| q::<S>(rng, -3, 3);
    match id {
        AlgebraId::Nil => nil_generic(v(rng), v(rng), v(rng), v(rng), v(rng), v(rng)),
        AlgebraId::E02 => match rng.gen_range(0..3) {
            0 => e02_xi1(v(rng), v(rng), gamma(rng)).unwrap(),
            1 => e02_xi2(v(rng), v(rng), v(rng), v(rng)),
            _ => e02_xi3(v(rng), v(rng), v(rng), v(rng)),
        },
        AlgebraId::Sol => match rng.gen_range(0..3) {
            0 => sol_xi1(v(rng), v(rng), gamma(rng)).unwrap(),
            1 => sol_xi2(v(rng), v(rng), v(rng), v(rng)),
            _ => sol_xi3(v(rng), v(rng), v(rng), v(rng)),
        },
        AlgebraId::Su2 => su2_product(
            &UnitPair::from_tangent(v(rng)),
            &UnitPair::from_tangent(v(rng)),
            &UnitPair::from_tangent(v(rng)),
        ),
        AlgebraId::Sl2 => sl2_product(
            &UnitPair::from_tangent(v(rng)),
            &HypPair::from_tangent(q_pos(rng, 4)).unwrap(),
            &HypPair::from_tangent(q_pos(rng, 4)).unwrap(),
        ),
    }
}

pub fn random_problem<S: Scalar>(rng: &mut ChaCha8Rng, id: AlgebraId) -> Problem<S> {
    Problem::new(
        mla(id, random_metric(rng, id)),
        mla(id, random_metric(rng, id)),
        random_homomorphism(rng, id),
    )
    .unwrap()
}

/// A random automorphism (bracket-preserving and invertible) of the algebra.
/// Draws stay well-conditioned so conjugated maps keep float bracket
/// residuals under the absolute validation threshold.
pub fn random_automorphism<S: Scalar>(rng: &mut ChaCha8Rng, id: AlgebraId) -> Matrix3<S> {
    // magnitude in [0.5, 1.5] with either sign
    let nz = |rng: &mut ChaCha8Rng| {
        let x = S::from_ratio(rng.gen_range(8..=24), 16);
        if rng.gen_bool(0.5) {
            x
        } else {
            -x
        }
    };
    let small = |rng: &mut ChaCha8Rng| q::<S>(rng, -1, 1);
    match id {
        AlgebraId::Nil => loop {
            let m = nil_generic::<S>(
                nz(rng),
                small(rng),
                small(rng),
                small(rng),
                nz(rng),
                small(rng),
            );
            if m.mat.det().abs_f64() > 0.25 {
                break m.mat;
            }
        },
        AlgebraId::E02 => {
            if rng.gen_bool(0.5) {
                e02_xi2::<S>(nz(rng), small(rng), small(rng), small(rng)).mat
            } else {
                e02_xi3::<S>(nz(rng), small(rng), small(rng), small(rng)).mat
            }
        }
        AlgebraId::Sol => {
            if rng.gen_bool(0.5) {
                sol_xi2::<S>(nz(rng), nz(rng), small(rng), small(rng)).mat
            } else {
                sol_xi3::<S>(nz(rng), nz(rng), small(rng), small(rng)).mat
            }
        }
        AlgebraId::Su2 => random_homomorphism::<S>(rng, id).mat,
        AlgebraId::Sl2 => sl2_product(
            &UnitPair::from_tangent(q(rng, -2, 2)),
            &HypPair::from_tangent(S::from_ratio(rng.gen_range(8..=32), 16)).unwrap(),
            &HypPair::from_tangent(S::from_ratio(rng.gen_range(8..=32), 16)).unwrap(),
        )
        .mat,
    }
}

// Keep the module usable from test targets that only need part of it.
#[allow(dead_code)]
pub fn unit_pair<S: Scalar>(rng: &mut ChaCha8Rng) -> UnitPair<S> {
    UnitPair::from_tangent(q(rng, -3, 3))
}

#[allow(dead_code)]
pub fn algebra_module_is_linked() -> usize {
    homomorphism::Family::ALL.len()
}
