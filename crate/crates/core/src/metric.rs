//! Left-invariant metrics as Gram matrices in the fixed basis, orthonormal
//! frames, metric adjoints, and the catalog of metric equivalence-class
//! families carried by each algebra.

use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::linalg::{inner, Matrix3, Vector3};
use crate::params::Params;
use crate::scalar::Scalar;

/// A left-invariant metric: symmetric positive-definite Gram matrix
/// `G[i][j] = ⟨X_i, X_j⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct Metric<S> {
    gram: Matrix3<S>,
}

impl<S: Scalar> Metric<S> {
    /// Validates symmetry (exact) and positive definiteness (leading
    /// principal minors, exact on rationals).
    pub fn new(gram: Matrix3<S>) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::DegenerateMetric);
        }
        let m = &gram.0;
        let m1 = m[0][0].clone();
        let m2 = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        let m3 = gram.det();
        let zero = S::zero();
        if m1 <= zero || m2 <= zero || m3 <= zero {
            return Err(Error::DegenerateMetric);
        }
        Ok(Metric { gram })
    }

    pub fn euclidean() -> Self {
        Metric {
            gram: Matrix3::identity(),
        }
    }

    pub fn from_diag(a: S, b: S, c: S) -> Result<Self> {
        Self::new(Matrix3::diag(a, b, c))
    }

    pub fn gram(&self) -> &Matrix3<S> {
        &self.gram
    }

    pub fn gram_inv(&self) -> Matrix3<S> {
        self.gram.inverse().expect("validated positive definite")
    }

    pub fn inner(&self, u: &Vector3<S>, v: &Vector3<S>) -> S {
        inner(&self.gram, u, v)
    }

    pub fn is_diagonal(&self) -> bool {
        let m = &self.gram.0;
        m[0][1].is_zero() && m[0][2].is_zero() && m[1][2].is_zero()
    }

    /// Columns of an orthonormal basis in fixed-basis coordinates, from the
    /// Cholesky factorization `G = RᵀR`, `E = R⁻¹`. Deterministic. On the
    /// exact path this needs every pivot to be a perfect rational square and
    /// reports [`Error::InexactFrame`] otherwise.
    pub fn orthonormal_frame(&self) -> Result<OrthonormalFrame<S>> {
        let g = &self.gram.0;
        let mut r = Matrix3::<S>::zero();
        for i in 0..3 {
            for j in i..3 {
                let mut acc = g[i][j].clone();
                for k in 0..i {
                    acc = acc - r.0[k][i].clone() * r.0[k][j].clone();
                }
                if i == j {
                    let piv = acc.sqrt_checked().ok_or_else(|| {
                        if acc <= S::zero() {
                            Error::DegenerateMetric
                        } else {
                            Error::InexactFrame
                        }
                    })?;
                    if piv.is_zero() {
                        return Err(Error::DegenerateMetric);
                    }
                    r.0[i][i] = piv;
                } else {
                    r.0[i][j] = acc / r.0[i][i].clone();
                }
            }
        }
        let cols = r.inverse().ok_or(Error::DegenerateMetric)?;
        Ok(OrthonormalFrame { cols })
    }
}

/// An orthonormal basis for a metric, stored as the column matrix `E` with
/// `Eᵀ G E = I`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalFrame<S> {
    pub cols: Matrix3<S>,
}

impl<S: Scalar> OrthonormalFrame<S> {
    pub fn vector(&self, i: usize) -> Vector3<S> {
        self.cols.col(i)
    }

    /// Max deviation of `Eᵀ G E` from the identity, as `f64`.
    pub fn residual(&self, metric: &Metric<S>) -> f64 {
        self.cols
            .transpose()
            .mul(metric.gram())
            .mul(&self.cols)
            .sub(&Matrix3::identity())
            .max_abs()
    }
}

/// Adjoint of the linear map `L : (src, G₁) → (dst, G₂)` with respect to the
/// two inner products: `L* = G₁⁻¹ Lᵀ G₂`, so that `⟨L*u, v⟩₁ = ⟨u, Lv⟩₂`.
pub fn adjoint_map<S: Scalar>(
    m_src: &Metric<S>,
    m_dst: &Metric<S>,
    l: &Matrix3<S>,
) -> Matrix3<S> {
    m_src.gram_inv().mul(&l.transpose()).mul(m_dst.gram())
}

/// Adjoint of an endomorphism of a single metric space.
pub fn adjoint_endo<S: Scalar>(m: &Metric<S>, l: &Matrix3<S>) -> Matrix3<S> {
    adjoint_map(m, m, l)
}

/// The metric equivalence-class families carried by each algebra. Parameter
/// constraints are exactly the printed ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricFamily {
    /// `diag(λ, λ, 1)`, λ > 0.
    Nil,
    /// `diag(1, μ, ν)`, 0 < μ ≤ 1, ν > 0.
    E02,
    /// `diag(1, 1, ν)`, ν > 0.
    SolDiag,
    /// `[[1,1,0],[1,μ,0],[0,0,ν]]`, μ > 1, ν > 0.
    SolNonDiag,
    /// `diag(λ, μ, ν)`, 0 < ν ≤ μ ≤ λ.
    Su2,
    /// `diag(λ, μ, ν)`, 0 < λ ≤ μ, ν > 0.
    Sl2,
}

impl MetricFamily {
    pub fn tag(self) -> &'static str {
        match self {
            MetricFamily::Nil => "nil",
            MetricFamily::E02 => "e02",
            MetricFamily::SolDiag => "sol-diag",
            MetricFamily::SolNonDiag => "sol-nondiag",
            MetricFamily::Su2 => "su2",
            MetricFamily::Sl2 => "sl2",
        }
    }

    pub fn algebra(self) -> AlgebraId {
        match self {
            MetricFamily::Nil => AlgebraId::Nil,
            MetricFamily::E02 => AlgebraId::E02,
            MetricFamily::SolDiag | MetricFamily::SolNonDiag => AlgebraId::Sol,
            MetricFamily::Su2 => AlgebraId::Su2,
            MetricFamily::Sl2 => AlgebraId::Sl2,
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            MetricFamily::Nil => &["lambda"],
            MetricFamily::E02 => &["mu", "nu"],
            MetricFamily::SolDiag => &["nu"],
            MetricFamily::SolNonDiag => &["mu", "nu"],
            MetricFamily::Su2 | MetricFamily::Sl2 => &["lambda", "mu", "nu"],
        }
    }

    /// Families valid for an algebra, in catalog order.
    pub fn for_algebra(id: AlgebraId) -> &'static [MetricFamily] {
        match id {
            AlgebraId::Nil => &[MetricFamily::Nil],
            AlgebraId::E02 => &[MetricFamily::E02],
            AlgebraId::Sol => &[MetricFamily::SolDiag, MetricFamily::SolNonDiag],
            AlgebraId::Su2 => &[MetricFamily::Su2],
            AlgebraId::Sl2 => &[MetricFamily::Sl2],
        }
    }

    /// Builds the printed Gram matrix after checking the printed parameter
    /// constraints.
    pub fn instantiate<S: Scalar>(self, params: &Params<S>) -> Result<Metric<S>> {
        let require = |name: &str| -> Result<S> {
            params.get(name).cloned().ok_or_else(|| Error::MissingParam {
                family: self.tag().to_string(),
                param: name.to_string(),
            })
        };
        let err = |param: &str, constraint: &str| Error::ParamOutOfRange {
            family: self.tag().to_string(),
            param: param.to_string(),
            constraint: constraint.to_string(),
        };
        let zero = S::zero();
        let one = S::one();
        match self {
            MetricFamily::Nil => {
                let l = require("lambda")?;
                if l <= zero {
                    return Err(err("lambda", "lambda > 0"));
                }
                Metric::new(Matrix3::diag(l.clone(), l, one))
            }
            MetricFamily::E02 => {
                let mu = require("mu")?;
                let nu = require("nu")?;
                if mu <= zero || mu > one {
                    return Err(err("mu", "0 < mu <= 1"));
                }
                if nu <= zero {
                    return Err(err("nu", "nu > 0"));
                }
                Metric::new(Matrix3::diag(one, mu, nu))
            }
            MetricFamily::SolDiag => {
                let nu = require("nu")?;
                if nu <= zero {
                    return Err(err("nu", "nu > 0"));
                }
                Metric::new(Matrix3::diag(one.clone(), one, nu))
            }
            MetricFamily::SolNonDiag => {
                let mu = require("mu")?;
                let nu = require("nu")?;
                if mu <= one {
                    return Err(err("mu", "mu > 1"));
                }
                if nu <= zero {
                    return Err(err("nu", "nu > 0"));
                }
                Metric::new(Matrix3::from_rows([
                    [one.clone(), one.clone(), zero.clone()],
                    [one, mu, zero.clone()],
                    [zero.clone(), zero, nu],
                ]))
            }
            MetricFamily::Su2 => {
                let l = require("lambda")?;
                let mu = require("mu")?;
                let nu = require("nu")?;
                if nu <= zero || mu < nu || l < mu {
                    return Err(err("lambda,mu,nu", "0 < nu <= mu <= lambda"));
                }
                Metric::new(Matrix3::diag(l, mu, nu))
            }
            MetricFamily::Sl2 => {
                let l = require("lambda")?;
                let mu = require("mu")?;
                let nu = require("nu")?;
                if l <= zero || mu < l {
                    return Err(err("lambda,mu", "0 < lambda <= mu"));
                }
                if nu <= zero {
                    return Err(err("nu", "nu > 0"));
                }
                Metric::new(Matrix3::diag(l, mu, nu))
            }
        }
    }
}

impl fmt::Display for MetricFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MetricFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nil" => Ok(MetricFamily::Nil),
            "e02" => Ok(MetricFamily::E02),
            "sol-diag" => Ok(MetricFamily::SolDiag),
            "sol-nondiag" => Ok(MetricFamily::SolNonDiag),
            "su2" => Ok(MetricFamily::Su2),
            "sl2" => Ok(MetricFamily::Sl2),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    type MetricParams<S> = Params<S>;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rp(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn rejects_asymmetric_and_indefinite_grams() {
        let asym = Matrix3::<f64>::from_int_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert!(matches!(Metric::new(asym), Err(Error::DegenerateMetric)));
        let indef = Matrix3::<f64>::from_int_rows([[1, 2, 0], [2, 1, 0], [0, 0, 1]]);
        assert!(matches!(Metric::new(indef), Err(Error::DegenerateMetric)));
        let neg = Matrix3::<f64>::diag(-1.0, 1.0, 1.0);
        assert!(matches!(Metric::new(neg), Err(Error::DegenerateMetric)));
    }

    #[test]
    fn euclidean_frame_is_identity() {
        let m = Metric::<Rat>::euclidean();
        assert_eq!(m.orthonormal_frame().unwrap().cols, Matrix3::identity());
    }

    #[test]
    fn diagonal_square_gram_has_exact_frame() {
        let m = Metric::<Rat>::from_diag(rp(4, 1), rp(1, 1), rp(1, 1)).unwrap();
        let frame = m.orthonormal_frame().unwrap();
        assert_eq!(
            frame.cols,
            Matrix3::diag(rp(1, 2), rp(1, 1), rp(1, 1))
        );
    }

    #[test]
    fn sol_nondiagonal_frame_float_fallback() {
        // mu = 2, nu = 1: exact frame needs sqrt(mu - 1) and is available here,
        // but mu = 3 needs sqrt(2) and must report InexactFrame on rationals.
        let g = |mu: i64| {
            Matrix3::<Rat>::from_rows([
                [rp(1, 1), rp(1, 1), rp(0, 1)],
                [rp(1, 1), rp(mu, 1), rp(0, 1)],
                [rp(0, 1), rp(0, 1), rp(1, 1)],
            ])
        };
        let exact = Metric::new(g(2)).unwrap();
        let frame = exact.orthonormal_frame().unwrap();
        assert!(frame.residual(&exact) == 0.0);

        let inexact = Metric::new(g(3)).unwrap();
        assert!(matches!(
            inexact.orthonormal_frame(),
            Err(Error::InexactFrame)
        ));

        // Same Gram on the float path verifies to machine precision.
        let gf = Matrix3::<f64>::from_rows([
            [1.0, 1.0, 0.0],
            [1.0, 3.0, 0.0],
            [0.0, 0.0, 1.0],
        ]);
        let mf = Metric::new(gf).unwrap();
        let ff = mf.orthonormal_frame().unwrap();
        assert!(ff.residual(&mf) < 1e-12);
    }

    #[test]
    fn metric_families_match_printed_grams() {
        let nil = MetricFamily::Nil
            .instantiate(&MetricParams::new([("lambda", rp(2, 1))]))
            .unwrap();
        assert_eq!(nil.gram(), &Matrix3::diag(rp(2, 1), rp(2, 1), rp(1, 1)));

        let sol = MetricFamily::SolNonDiag
            .instantiate(&MetricParams::new([("mu", rp(3, 1)), ("nu", rp(1, 1))]))
            .unwrap();
        assert_eq!(
            sol.gram(),
            &Matrix3::from_rows([
                [rp(1, 1), rp(1, 1), rp(0, 1)],
                [rp(1, 1), rp(3, 1), rp(0, 1)],
                [rp(0, 1), rp(0, 1), rp(1, 1)],
            ])
        );

        let su2 = MetricFamily::Su2
            .instantiate(&MetricParams::new([
                ("lambda", 1.0),
                ("mu", 1.0),
                ("nu", 1.0),
            ]))
            .unwrap();
        assert_eq!(su2.gram(), &Matrix3::identity());
    }

    #[test]
    fn family_constraints_are_enforced() {
        let bad = MetricFamily::E02.instantiate(&MetricParams::new([("mu", 1.5), ("nu", 1.0)]));
        assert!(matches!(bad, Err(Error::ParamOutOfRange { .. })));
        let bad = MetricFamily::SolNonDiag
            .instantiate(&MetricParams::new([("mu", 1.0), ("nu", 1.0)]));
        assert!(matches!(bad, Err(Error::ParamOutOfRange { .. })));
        let bad = MetricFamily::Su2.instantiate(&MetricParams::new([
            ("lambda", 1.0),
            ("mu", 2.0),
            ("nu", 1.0),
        ]));
        assert!(matches!(bad, Err(Error::ParamOutOfRange { .. })));
        let missing = MetricFamily::Nil.instantiate(&MetricParams::<f64>::default());
        assert!(matches!(missing, Err(Error::MissingParam { .. })));
    }

    #[test]
    fn random_family_instances_are_positive_definite() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let l = rng.gen_range(0.01..10.0);
            let mu01 = rng.gen_range(0.01..1.0f64);
            let nu = rng.gen_range(0.01..10.0);
            let mu_gt1 = 1.0 + rng.gen_range(0.01..9.0);
            let checks = [
                MetricFamily::Nil.instantiate(&MetricParams::new([("lambda", l)])),
                MetricFamily::E02.instantiate(&MetricParams::new([("mu", mu01), ("nu", nu)])),
                MetricFamily::SolDiag.instantiate(&MetricParams::new([("nu", nu)])),
                MetricFamily::SolNonDiag
                    .instantiate(&MetricParams::new([("mu", mu_gt1), ("nu", nu)])),
                MetricFamily::Su2.instantiate(&MetricParams::new([
                    ("lambda", l + 2.0),
                    ("mu", l + 1.0),
                    ("nu", l),
                ])),
                MetricFamily::Sl2.instantiate(&MetricParams::new([
                    ("lambda", l),
                    ("mu", l + 1.0),
                    ("nu", nu),
                ])),
            ];
            for c in checks {
                c.unwrap();
            }
        }
    }

    #[test]
    fn adjoint_satisfies_defining_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut rr = || rp(rng.gen_range(-12..=12), rng.gen_range(1..=6));
        for _ in 0..100 {
            let (x, y) = (rr(), rr());
            let src = Metric::from_diag(
                rp(1, 1) + x.clone() * x,
                rp(2, 1),
                rp(1, 3) + y.clone() * y,
            )
            .unwrap();
            let dst = Metric::new(Matrix3::from_rows([
                [rp(2, 1), rp(1, 2), rp(0, 1)],
                [rp(1, 2), rp(3, 1), rp(0, 1)],
                [rp(0, 1), rp(0, 1), rp(5, 1)],
            ]))
            .unwrap();
            let l = Matrix3::from_fn(|_, _| rr());
            let lstar = adjoint_map(&src, &dst, &l);
            for _ in 0..10 {
                let u = Vector3::from_fn(|_| rr());
                let v = Vector3::from_fn(|_| rr());
                // ⟨L*u, v⟩_src = ⟨u, Lv⟩_dst, exactly
                assert_eq!(
                    src.inner(&lstar.mul_vec(&u), &v),
                    dst.inner(&u, &l.mul_vec(&v))
                );
            }
            // (L*)* = L
            assert_eq!(adjoint_map(&dst, &src, &lstar), l);
        }
    }

    #[test]
    fn adjoint_special_cases() {
        let id = Metric::<Rat>::euclidean();
        let l = Matrix3::from_int_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        assert_eq!(adjoint_map(&id, &id, &l), l.transpose());
        let m = Metric::from_diag(rp(3, 1), rp(5, 1), rp(7, 1)).unwrap();
        assert_eq!(adjoint_endo(&m, &Matrix3::identity()), Matrix3::identity());
    }
}
