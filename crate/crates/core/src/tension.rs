//! Tension and bitension fields of a homomorphism between metric Lie
//! algebras, their trace-formula duals, the test matrix, and verdicts.
//!
//! The orthonormal-frame sums are evaluated without constructing a frame:
//! for any frame `(e_i)` of the source, `Σ_i e_i e_iᵀ = G₁⁻¹`, so a sum of a
//! bilinear expression over the frame equals its `G₁⁻¹`-weighted basis
//! expansion. This keeps the whole pipeline exact on the rational path.

use crate::algebra::LieAlgebra;
use crate::connection::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::homomorphism::Homomorphism;
use crate::linalg::{Matrix3, Vector3};
use crate::metric::adjoint_endo;
use crate::scalar::Scalar;

/// Default relative tolerance for zero verdicts on the float path.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A homomorphism between two metric Lie algebras, validated on construction.
#[derive(Clone, Debug)]
pub struct Problem<S> {
    pub src: MetricLieAlgebra<S>,
    pub dst: MetricLieAlgebra<S>,
    pub xi: Homomorphism<S>,
}

impl<S: Scalar> Problem<S> {
    pub fn new(
        src: MetricLieAlgebra<S>,
        dst: MetricLieAlgebra<S>,
        xi: Homomorphism<S>,
    ) -> Result<Self> {
        if src.algebra.id != xi.src || dst.algebra.id != xi.dst {
            return Err(Error::AlgebraMismatch);
        }
        if !xi.validate() {
            return Err(Error::NotHomomorphism {
                residual: xi.residual(),
            });
        }
        Ok(Problem { src, dst, xi })
    }

    fn xi_cols(&self) -> [Vector3<S>; 3] {
        [self.xi.mat.col(0), self.xi.mat.col(1), self.xi.mat.col(2)]
    }

    /// `ξ* = G₁⁻¹ ξᵀ G₂`.
    fn xi_star(&self) -> Matrix3<S> {
        self.src
            .gram_inv()
            .mul(&self.xi.mat.transpose())
            .mul(self.dst.metric.gram())
    }
}

/// A field value together with a bound on the intermediate magnitudes that
/// entered its accumulation; verdicts compare against `tol * scale`. The
/// bound is carried through every bilinear application with absolute values,
/// so cancellation inside a term cannot shrink it.
#[derive(Clone, Debug)]
pub struct Accumulated<S> {
    pub value: Vector3<S>,
    pub scale: f64,
}

impl<S: Scalar> Accumulated<S> {
    fn new() -> Self {
        Accumulated {
            value: Vector3::zero(),
            scale: 0.0,
        }
    }

    fn push(&mut self, term: Vector3<S>, bound: f64) {
        self.scale = self.scale.max(bound).max(term.max_abs());
        self.value = self.value.add(&term);
    }

    /// Zero test: exact on rationals, relative residual on floats.
    pub fn is_zero(&self, tol: f64) -> bool {
        if S::EXACT {
            self.value.is_zero()
        } else {
            self.value.max_abs() <= tol * self.scale
        }
    }
}

/// Componentwise absolute-value shadows of the Levi-Civita table and the
/// bracket, used to propagate magnitude bounds through nested applications.
struct AbsShadow {
    lc: [[[f64; 3]; 3]; 3],
    br: [[[f64; 3]; 3]; 3],
}

impl AbsShadow {
    fn new<S: Scalar>(m: &crate::connection::MetricLieAlgebra<S>) -> Self {
        let mut lc = [[[0.0; 3]; 3]; 3];
        let mut br = [[[0.0; 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    lc[i][j][k] = m.lc().table[i][j].0[k].abs_f64();
                    br[i][j][k] = (m.algebra.c[i][j][k] as f64).abs();
                }
            }
        }
        AbsShadow { lc, br }
    }

    fn apply(table: &[[[f64; 3]; 3]; 3], u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for i in 0..3 {
            for j in 0..3 {
                let w = u[i] * v[j];
                for k in 0..3 {
                    out[k] += w * table[i][j][k];
                }
            }
        }
        out
    }

    fn lc(&self, u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
        Self::apply(&self.lc, u, v)
    }

    fn bracket(&self, u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
        Self::apply(&self.br, u, v)
    }
}

fn abs_vec<S: Scalar>(v: &Vector3<S>) -> [f64; 3] {
    [v.0[0].abs_f64(), v.0[1].abs_f64(), v.0[2].abs_f64()]
}

fn max_entry(v: &[f64; 3]) -> f64 {
    v[0].max(v[1]).max(v[2])
}

/// τ(ξ) = Σ_i B_{ξe_i} ξe_i − ξ(U^𝔤), summed over any orthonormal frame of
/// the source, with `B` the target Levi-Civita product.
pub fn tau<S: Scalar>(p: &Problem<S>) -> Accumulated<S> {
    let cols = p.xi_cols();
    let abs_cols: [[f64; 3]; 3] = [abs_vec(&cols[0]), abs_vec(&cols[1]), abs_vec(&cols[2])];
    let g1_inv = p.src.gram_inv();
    let b = p.dst.lc();
    let shadow = AbsShadow::new(&p.dst);
    let mut acc = Accumulated::new();
    for i in 0..3 {
        for j in 0..3 {
            let w = g1_inv.0[i][j].clone();
            if w.is_zero() {
                continue;
            }
            let bound = w.abs_f64() * max_entry(&shadow.lc(&abs_cols[i], &abs_cols[j]));
            acc.push(b.apply(&cols[i], &cols[j]).scale(&w), bound);
        }
    }
    let u_src = p.src.unimodular_vector();
    acc.push(p.xi.mat.mul_vec(&u_src).neg(), 0.0);
    acc
}

/// τ(ξ) through the independent trace route: solve `G₂ τ = t` where
/// `t_j = tr(ξ* ∘ ad_{X_j} ∘ ξ)`. Valid because every catalog source is
/// unimodular.
pub fn tau_via_trace<S: Scalar>(p: &Problem<S>) -> Vector3<S> {
    let xs = p.xi_star();
    let dst_alg: &LieAlgebra = p.dst.algebra;
    let t = Vector3::from_fn(|j| {
        xs.mul(&dst_alg.ad(&Vector3::basis(j)))
            .mul(&p.xi.mat)
            .trace()
    });
    p.dst.gram_inv().mul_vec(&t)
}

/// τ₂(ξ) = −Σ_i (B_{ξe_i} B_{ξe_i} τ + K(τ, ξe_i) ξe_i) + B_{ξ(U^𝔤)} τ.
/// The last term vanishes for every catalog algebra but is evaluated anyway.
pub fn tau2<S: Scalar>(p: &Problem<S>) -> Accumulated<S> {
    tau2_given(p, &tau(p).value)
}

/// τ₂ evaluated at an externally supplied τ (used by the dual-route checks).
pub fn tau2_given<S: Scalar>(p: &Problem<S>, tau_val: &Vector3<S>) -> Accumulated<S> {
    let cols = p.xi_cols();
    let abs_cols: [[f64; 3]; 3] = [abs_vec(&cols[0]), abs_vec(&cols[1]), abs_vec(&cols[2])];
    let abs_tau = abs_vec(tau_val);
    let g1_inv = p.src.gram_inv();
    let b = p.dst.lc();
    let shadow = AbsShadow::new(&p.dst);
    let mut acc = Accumulated::new();
    for i in 0..3 {
        for j in 0..3 {
            let w = g1_inv.0[i][j].clone();
            if w.is_zero() {
                continue;
            }
            let wa = w.abs_f64();
            let t1 = b.apply(&cols[i], &b.apply(&cols[j], tau_val));
            let b1 = wa * max_entry(&shadow.lc(&abs_cols[i], &shadow.lc(&abs_cols[j], &abs_tau)));
            // K(τ, ξe_i)ξe_j = B_τ B_{ξe_i} ξe_j − B_{ξe_i} B_τ ξe_j − B_{[τ,ξe_i]} ξe_j
            let t2 = p.dst.curvature_apply(tau_val, &cols[i], &cols[j]);
            let b2 = wa
                * (max_entry(&shadow.lc(&abs_tau, &shadow.lc(&abs_cols[i], &abs_cols[j])))
                    + max_entry(&shadow.lc(&abs_cols[i], &shadow.lc(&abs_tau, &abs_cols[j])))
                    + max_entry(
                        &shadow.lc(&shadow.bracket(&abs_tau, &abs_cols[i]), &abs_cols[j]),
                    ));
            acc.push(t1.scale(&w).neg(), b1);
            acc.push(t2.scale(&w).neg(), b2);
        }
    }
    let u_src = p.src.unimodular_vector();
    let xi_u = p.xi.mat.mul_vec(&u_src);
    let bu = max_entry(&shadow.lc(&abs_vec(&xi_u), &abs_tau));
    acc.push(b.apply(&xi_u, tau_val), bu);
    acc
}

/// τ₂(ξ) through the trace route: solve `G₂ τ₂ = t` with
/// `t_j = tr(ξ* ∘ (ad_{X_j} + ad_{X_j}*) ∘ ad_{τ} ∘ ξ) − ⟨[X_j, τ], τ⟩₂`.
pub fn tau2_via_trace<S: Scalar>(p: &Problem<S>) -> Vector3<S> {
    let tau_val = tau(p).value;
    let xs = p.xi_star();
    let dst_alg: &LieAlgebra = p.dst.algebra;
    let ad_tau = dst_alg.ad(&tau_val);
    let t = Vector3::from_fn(|j| {
        let e = Vector3::basis(j);
        let ad_u = dst_alg.ad(&e);
        let ad_u_star = adjoint_endo(&p.dst.metric, &ad_u);
        let tr = xs
            .mul(&ad_u.add(&ad_u_star))
            .mul(&ad_tau)
            .mul(&p.xi.mat)
            .trace();
        let lie = dst_alg.bracket(&e, &tau_val);
        tr - p.dst.metric.inner(&lie, &tau_val)
    });
    p.dst.gram_inv().mul_vec(&t)
}

/// The test matrix in the fixed target basis:
/// `m_ij = tr(ξ*∘(ad_{f_i}+ad_{f_i}*)∘ad_{f_j}∘ξ) − tr(ξ*∘ad_{[f_i,f_j]}∘ξ)`,
/// together with its determinant. A nonzero determinant forces
/// biharmonic ⇔ harmonic.
pub fn test_matrix<S: Scalar>(p: &Problem<S>) -> (Matrix3<S>, S) {
    let xs = p.xi_star();
    let dst_alg: &LieAlgebra = p.dst.algebra;
    let basis: [Vector3<S>; 3] = [Vector3::basis(0), Vector3::basis(1), Vector3::basis(2)];
    let ads: [Matrix3<S>; 3] = [
        dst_alg.ad(&basis[0]),
        dst_alg.ad(&basis[1]),
        dst_alg.ad(&basis[2]),
    ];
    let m = Matrix3::from_fn(|i, j| {
        let ad_i_star = adjoint_endo(&p.dst.metric, &ads[i]);
        let first = xs
            .mul(&ads[i].add(&ad_i_star))
            .mul(&ads[j])
            .mul(&p.xi.mat)
            .trace();
        let lie = dst_alg.bracket_basis::<S>(i, j);
        let second = xs.mul(&dst_alg.ad(&lie)).mul(&p.xi.mat).trace();
        first - second
    });
    let det = m.det();
    (m, det)
}

/// Full analysis of a problem: both fields, the test matrix, and verdicts at
/// the given relative tolerance (exact zero tests on the rational path).
#[derive(Clone, Debug)]
pub struct TensionReport<S> {
    pub tau: Vector3<S>,
    pub tau_scale: f64,
    pub tau2: Vector3<S>,
    pub tau2_scale: f64,
    pub test_matrix: Matrix3<S>,
    pub det_test: S,
    pub harmonic: bool,
    pub biharmonic: bool,
    pub tolerance_used: f64,
}

pub fn analyze<S: Scalar>(p: &Problem<S>, tol: f64) -> TensionReport<S> {
    let tau_acc = tau(p);
    let tau2_acc = tau2_given(p, &tau_acc.value);
    let (m, det) = test_matrix(p);
    let harmonic = tau_acc.is_zero(tol);
    // τ = 0 forces τ₂ = 0: every bitension term carries a τ factor, so a
    // point accepted as harmonic is biharmonic by the same tolerance.
    let biharmonic = harmonic || tau2_acc.is_zero(tol);
    TensionReport {
        tau: tau_acc.value,
        tau_scale: tau_acc.scale,
        tau2: tau2_acc.value,
        tau2_scale: tau2_acc.scale,
        test_matrix: m,
        det_test: det,
        harmonic,
        biharmonic,
        tolerance_used: tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, AlgebraId};
    use crate::homomorphism::{
        e02_xi1, nil_generic, sol_xi2, su2_factor, Homomorphism, UnitPair,
    };
    use crate::metric::Metric;
    use crate::scalar::Rat;

    fn rp(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn ri(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn mla<S: Scalar>(id: AlgebraId, m: Metric<S>) -> MetricLieAlgebra<S> {
        MetricLieAlgebra::new(catalog(id), m).unwrap()
    }

    #[test]
    fn nil_example_has_tau_minus_x2() {
        // alpha1 = beta2 = 1, alpha3 = 1, rest 0, metrics euclidean:
        // tau = ((a3 b1 + b3 b2)X1 - (a3 a1 + b3 a2)X2)/(l1 l2) = -X2
        let xi = nil_generic(ri(1), ri(0), ri(1), ri(0), ri(1), ri(0));
        let p = Problem::new(
            mla(AlgebraId::Nil, Metric::euclidean()),
            mla(AlgebraId::Nil, Metric::euclidean()),
            xi,
        )
        .unwrap();
        let want = Vector3::from_ints(0, -1, 0);
        assert_eq!(tau(&p).value, want);
        assert_eq!(tau_via_trace(&p), want);
    }

    #[test]
    fn e02_example_has_tau_minus_half_x3() {
        // gamma = 0, a = b = 1, mu2 = 1/2, nu1 = nu2 = 1
        let xi = e02_xi1(ri(1), ri(1), ri(0)).unwrap();
        let src = mla(AlgebraId::E02, Metric::euclidean());
        let dst = mla(
            AlgebraId::E02,
            Metric::from_diag(ri(1), rp(1, 2), ri(1)).unwrap(),
        );
        let p = Problem::new(src, dst, xi).unwrap();
        let want = Vector3([ri(0), ri(0), rp(-1, 2)]);
        assert_eq!(tau(&p).value, want);
        assert_eq!(tau_via_trace(&p), want);
        // tau2 = 0 while tau != 0: biharmonic not harmonic
        assert!(tau2(&p).value.is_zero());
        assert!(tau2_via_trace(&p).is_zero());
        let rep = analyze(&p, DEFAULT_TOL);
        assert!(!rep.harmonic);
        assert!(rep.biharmonic);
    }

    #[test]
    fn identity_with_equal_metrics_is_harmonic() {
        for id in AlgebraId::ALL {
            let m = Metric::from_diag(rp(3, 2), rp(3, 2), rp(3, 2)).unwrap();
            let p = Problem::new(
                mla(id, m.clone()),
                mla(id, m),
                Homomorphism::identity(id),
            )
            .unwrap();
            let rep = analyze(&p, DEFAULT_TOL);
            assert!(rep.harmonic && rep.biharmonic, "{id}");
        }
    }

    #[test]
    fn su2_rotation_at_pi_over_4() {
        // metrics diag(2,1,1) both sides: tau(xi3(pi/4)) = -1/4 X3
        let m = || Metric::from_diag(2.0, 1.0, 1.0).unwrap();
        let xi = su2_factor(3, &UnitPair::from_angle(std::f64::consts::FRAC_PI_4));
        let p = Problem::new(mla(AlgebraId::Su2, m()), mla(AlgebraId::Su2, m()), xi).unwrap();
        let t = tau(&p).value;
        assert!((t.0[2] + 0.25).abs() < 1e-14);
        assert!(t.0[0].abs() < 1e-15 && t.0[1].abs() < 1e-15);
        // cos^2(pi/4) = 1/2: biharmonic not harmonic
        let rep = analyze(&p, DEFAULT_TOL);
        assert!(!rep.harmonic);
        assert!(rep.biharmonic);
    }

    #[test]
    fn zero_homomorphism_kills_everything() {
        let xi = Homomorphism::new(AlgebraId::Sol, AlgebraId::Sol, Matrix3::<Rat>::zero());
        let p = Problem::new(
            mla(AlgebraId::Sol, Metric::euclidean()),
            mla(AlgebraId::Sol, Metric::euclidean()),
            xi,
        )
        .unwrap();
        assert!(tau(&p).value.is_zero());
        assert!(tau_via_trace(&p).is_zero());
        let (m, det) = test_matrix(&p);
        assert!(m.is_zero());
        assert!(det.is_zero());
    }

    #[test]
    fn sol_xi2_test_matrix_det_matches_printed_formula() {
        // diag/diag pairing: det = 2(alpha^2+beta^2)/nu1^2
        let (alpha, beta, a, b) = (rp(3, 2), rp(-1, 3), rp(2, 1), rp(1, 4));
        let nu1 = rp(4, 3);
        let xi = sol_xi2(alpha.clone(), beta.clone(), a, b);
        let p = Problem::new(
            mla(
                AlgebraId::Sol,
                Metric::from_diag(ri(1), ri(1), nu1.clone()).unwrap(),
            ),
            mla(AlgebraId::Sol, Metric::from_diag(ri(1), ri(1), rp(7, 5)).unwrap()),
            xi,
        )
        .unwrap();
        let (_, det) = test_matrix(&p);
        let want = ri(2) * (alpha.clone() * alpha + beta.clone() * beta)
            / (nu1.clone() * nu1);
        assert_eq!(det, want);
    }

    #[test]
    fn sol_gamma_one_column_map_is_neither() {
        // gamma = 1 is a valid homomorphism (only the family classification
        // excludes it); with a = 1, b = 0, euclidean metrics both fields are
        // nonzero.
        let xi = Homomorphism::new(
            AlgebraId::Sol,
            AlgebraId::Sol,
            Matrix3::from_rows([
                [ri(0), ri(0), ri(1)],
                [ri(0), ri(0), ri(0)],
                [ri(0), ri(0), ri(1)],
            ]),
        );
        let p = Problem::new(
            mla(AlgebraId::Sol, Metric::euclidean()),
            mla(AlgebraId::Sol, Metric::euclidean()),
            xi,
        )
        .unwrap();
        let rep = analyze(&p, DEFAULT_TOL);
        assert!(!rep.harmonic);
        assert!(!rep.biharmonic);
        assert!(!rep.tau2.0[0].is_zero());
    }

    #[test]
    fn problem_rejects_invalid_homomorphism() {
        let xi = Homomorphism::new(
            AlgebraId::Su2,
            AlgebraId::Su2,
            Matrix3::<f64>::diag(1.0, 1.0, 2.0),
        );
        let err = Problem::new(
            mla(AlgebraId::Su2, Metric::euclidean()),
            mla(AlgebraId::Su2, Metric::euclidean()),
            xi,
        );
        assert!(matches!(err, Err(Error::NotHomomorphism { .. })));
    }

    /// τ₂ = G₂⁻¹ M τ whenever the source is unimodular; this ties the trace
    /// formulas, the test matrix and the frame-sum route together.
    #[test]
    fn tau2_equals_gram_inverse_times_m_tau() {
        let xi = sol_xi2(rp(1, 2), rp(5, 3), rp(-3, 4), rp(2, 5));
        let p = Problem::new(
            mla(AlgebraId::Sol, Metric::from_diag(ri(1), ri(1), rp(3, 2)).unwrap()),
            mla(
                AlgebraId::Sol,
                Metric::new(Matrix3::from_rows([
                    [ri(1), ri(1), ri(0)],
                    [ri(1), ri(3), ri(0)],
                    [ri(0), ri(0), rp(5, 4)],
                ]))
                .unwrap(),
            ),
            xi,
        )
        .unwrap();
        let t = tau(&p).value;
        let t2 = tau2(&p).value;
        let (m, _) = test_matrix(&p);
        let via_m = p.dst.gram_inv().mul_vec(&m.mul_vec(&t));
        assert_eq!(t2, via_m);
    }
}
