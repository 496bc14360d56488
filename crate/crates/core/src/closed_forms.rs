//! Closed-form tension/bitension expressions and test matrices for the
//! catalog families, used as an independent route against the frame-sum
//! engine.
//!
//! Metric conventions per algebra: nil carries `diag(λ, λ, 1)`; e02 carries
//! `diag(1, μ, ν)`; sol carries either `diag(1, 1, ν)` or the non-diagonal
//! `[[1,1,0],[1,μ,0],[0,0,ν]]`; su2 and sl2 carry `diag(λ, μ, ν)`. Indices 1
//! and 2 refer to the source and target metric.

use crate::homomorphism::{HypPair, UnitPair};
use crate::linalg::{Matrix3, Vector3};
use crate::scalar::Scalar;

fn sq<S: Scalar>(x: &S) -> S {
    x.clone() * x.clone()
}

fn int<S: Scalar>(n: i64) -> S {
    S::from_int(n)
}

fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}

// ---------------------------------------------------------------------------
// nil
// ---------------------------------------------------------------------------

/// τ of the generic nil endomorphism
/// `[[α1,α2,0],[β1,β2,0],[α3,β3,α1β2−α2β1]]` under `diag(λᵢ,λᵢ,1)`.
#[allow(clippy::too_many_arguments)]
pub fn nil_generic_tau<S: Scalar>(
    l1: &S,
    l2: &S,
    a1: &S,
    a2: &S,
    a3: &S,
    b1: &S,
    b2: &S,
    b3: &S,
) -> Vector3<S> {
    let den = l2.clone() * l1.clone();
    Vector3([
        (a3.clone() * b1.clone() + b3.clone() * b2.clone()) / den.clone(),
        -((a3.clone() * a1.clone() + b3.clone() * a2.clone()) / den),
        S::zero(),
    ])
}

// ---------------------------------------------------------------------------
// e02 — metrics diag(1, μᵢ, νᵢ)
// ---------------------------------------------------------------------------

/// τ of the column family `[[0,0,a],[0,0,b],[0,0,γ]]`.
pub fn e02_xi1_tau<S: Scalar>(mu2: &S, nu1: &S, nu2: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    Vector3([
        -(g.clone() * mu2.clone() * b.clone() / nu1.clone()),
        g.clone() * a.clone() / (mu2.clone() * nu1.clone()),
        b.clone() * a.clone() * (mu2.clone() - int(1)) / (nu2.clone() * nu1.clone()),
    ])
}

/// τ₂ of the column family, full γ version.
pub fn e02_xi1_tau2<S: Scalar>(mu2: &S, nu1: &S, nu2: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    let (a2, b2, g2, m2sq) = (sq(a), sq(b), sq(g), sq(mu2));
    let nu1sq = sq(nu1);
    let w1 = -(b.clone()
        * g.clone()
        * ((g2.clone() * nu2.clone() + a2.clone()) * m2sq.clone()
            - int::<S>(2) * a2.clone() * mu2.clone()
            + a2.clone())
        / (nu1sq.clone() * nu2.clone()));
    let w2 = g.clone()
        * a.clone()
        * (b2.clone() * mu2.clone() * sq(&(mu2.clone() - int(1))) + g2.clone() * nu2.clone())
        / (nu1sq.clone() * m2sq.clone() * nu2.clone());
    let w3 = ((g2.clone() * nu2.clone() + a2.clone() - b2.clone()) * m2sq
        + (g2.clone() * nu2.clone() - a2 + b2) * mu2.clone()
        + g2 * nu2.clone())
        * b.clone()
        * (mu2.clone() - int(1))
        * a.clone()
        / (nu1sq * sq(nu2) * mu2.clone());
    Vector3([w1, w2, w3])
}

/// τ₂ of the column family at γ = 0.
pub fn e02_xi1_tau2_gamma0<S: Scalar>(mu2: &S, nu1: &S, nu2: &S, a: &S, b: &S) -> Vector3<S> {
    Vector3([
        S::zero(),
        S::zero(),
        (a.clone() - b.clone())
            * (a.clone() + b.clone())
            * sq(&(mu2.clone() - int(1)))
            * b.clone()
            * a.clone()
            / (sq(nu1) * sq(nu2)),
    ])
}

/// τ of `[[α,−β,a],[β,α,b],[0,0,1]]`.
#[allow(clippy::too_many_arguments)]
pub fn e02_xi2_tau<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    Vector3([
        -(mu2.clone() * b.clone() / nu1.clone()),
        a.clone() / (mu2.clone() * nu1.clone()),
        (mu2.clone() - int(1))
            * (alpha.clone() * beta.clone() * nu1.clone() * (mu1.clone() - int(1))
                + a.clone() * b.clone() * mu1.clone())
            / (mu1.clone() * nu1.clone() * nu2.clone()),
    ])
}

/// τ of `[[α,β,a],[β,−α,b],[0,0,−1]]`: the planar components flip sign.
#[allow(clippy::too_many_arguments)]
pub fn e02_xi3_tau<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let t = e02_xi2_tau(mu1, mu2, nu1, nu2, alpha, beta, a, b);
    Vector3([-t.0[0].clone(), -t.0[1].clone(), t.0[2].clone()])
}

/// τ₂ of `[[α,−β,a],[β,α,b],[0,0,1]]`.
#[allow(clippy::too_many_arguments)]
pub fn e02_xi2_tau2<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (al, be) = (alpha.clone(), beta.clone());
    let (a2, b2) = (sq(a), sq(b));
    let (m1m, m2m) = (mu1.clone() - int::<S>(1), mu2.clone() - int::<S>(1));
    let (m1m_sq, m2m_sq) = (sq(&m1m), sq(&m2m));
    let (mu2sq, nu1sq) = (sq(mu2), sq(nu1));

    let x1 = -((b.clone() * mu1.clone() * m2m_sq.clone() * a2.clone()
        + be.clone() * al.clone() * nu1.clone() * m2m_sq.clone() * m1m.clone() * a.clone()
        + b.clone() * mu1.clone() * mu2sq.clone() * nu2.clone())
        / (mu1.clone() * nu1sq.clone() * nu2.clone()));

    // shared subterm αν1(μ1−1)β + abμ1
    let core =
        al.clone() * nu1.clone() * m1m.clone() * be.clone() + a.clone() * b.clone() * mu1.clone();
    let mu2cb = mu2sq.clone() * mu2.clone();
    let x2 = (core.clone() * b.clone() * mu2cb
        - int::<S>(2) * core.clone() * b.clone() * mu2sq.clone()
        + core * b.clone() * mu2.clone()
        + a.clone() * mu1.clone() * nu2.clone())
        / (nu1sq.clone() * mu2sq.clone() * nu2.clone() * mu1.clone());

    let (al2, be2) = (sq(&al), sq(&be));
    let x3num = mu2.clone()
        * be.clone()
        * nu1sq.clone()
        * m1m_sq
        * m2m_sq.clone()
        * al2.clone()
        * al.clone()
        + mu2.clone()
            * nu1.clone()
            * a.clone()
            * b.clone()
            * mu1.clone()
            * m2m_sq.clone()
            * m1m.clone()
            * al2.clone()
        + mu2.clone()
            * be.clone()
            * nu1.clone()
            * m1m.clone()
            * (-(be2.clone() * mu1.clone() * nu1.clone()) + a2.clone() * mu1.clone()
                - b2.clone() * mu1.clone()
                + be2.clone() * nu1.clone())
            * m2m_sq
            * al.clone()
        + a.clone()
            * b.clone()
            * mu1.clone()
            * (-(be2.clone() * mu1.clone() * mu2sq.clone() * nu1.clone())
                + mu1.clone() * mu2sq.clone() * nu2.clone()
                + a2.clone() * mu1.clone() * mu2sq.clone()
                - b2.clone() * mu1.clone() * mu2sq.clone()
                + be2.clone() * mu1.clone() * mu2.clone() * nu1.clone()
                + be2.clone() * mu2sq.clone() * nu1.clone()
                + mu1.clone() * mu2.clone() * nu2.clone()
                - a2 * mu1.clone() * mu2.clone()
                + b2 * mu1.clone() * mu2.clone()
                - be2 * mu2.clone() * nu1.clone()
                + mu1.clone() * nu2.clone())
            * m2m;
    let x3 = x3num / (sq(mu1) * nu1sq * sq(nu2) * mu2.clone());
    Vector3([x1, x2, x3])
}

/// τ₂ components `(X1, X2)` of the ξ2 family at μ1 = 1.
pub fn e02_xi2_tau2_unit_mu1<S: Scalar>(mu2: &S, nu1: &S, nu2: &S, a: &S, b: &S) -> (S, S) {
    let (a2, b2, mu2sq) = (sq(a), sq(b), sq(mu2));
    let nu1sq = sq(nu1);
    let x1 = -((b.clone() * sq(&(mu2.clone() - int(1))) * a2 + b.clone() * mu2sq.clone() * nu2.clone())
        / (nu1sq.clone() * nu2.clone()));
    let x2 = (b2.clone() * a.clone() * mu2sq.clone() * mu2.clone()
        - int::<S>(2) * b2.clone() * a.clone() * mu2sq.clone()
        + b2 * a.clone() * mu2.clone()
        + a.clone() * nu2.clone())
        / (nu1sq * mu2sq * nu2.clone());
    (x1, x2)
}

/// Test matrix and determinant of the ξ2 family:
/// `det = μ2(μ2−1)(α²−β²)(μ1−1)/(ν1²μ1)`.
#[allow(clippy::too_many_arguments)]
pub fn e02_xi2_test_matrix<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> (Matrix3<S>, S) {
    let m2m = mu2.clone() - int::<S>(1);
    let (al2, be2) = (sq(alpha), sq(beta));
    // (μ2−1)(((α²−β²)ν1 + a² − b²)μ1 + ν1(β² − α²)) / (μ1 ν1)
    let m33 = (m2m.clone()
        * ((al2.clone() - be2.clone()) * nu1.clone() + sq(a) - sq(b))
        * mu1.clone()
        + m2m.clone() * nu1.clone() * (be2.clone() - al2.clone()))
        / (mu1.clone() * nu1.clone());
    let m = Matrix3::from_rows([
        [
            mu2.clone() / nu1.clone(),
            S::zero(),
            -(a.clone() * m2m.clone() / nu1.clone()),
        ],
        [
            S::zero(),
            S::one() / nu1.clone(),
            b.clone() * m2m.clone() / nu1.clone(),
        ],
        [
            -(mu2.clone() * a.clone() / nu1.clone()),
            -(b.clone() / nu1.clone()),
            m33,
        ],
    ]);
    let det = mu2.clone() * m2m * (al2 - be2) * (mu1.clone() - int(1)) / (sq(nu1) * mu1.clone());
    (m, det)
}

/// Kernel generator of the ξ2 test matrix on the α² = β² locus:
/// `v = a(μ2−1)X1 − b(μ2−1)μ2 X2 + μ2 X3`.
pub fn e02_xi2_kernel_vector<S: Scalar>(mu2: &S, a: &S, b: &S) -> Vector3<S> {
    let m2m = mu2.clone() - int::<S>(1);
    Vector3([
        a.clone() * m2m.clone(),
        -(b.clone() * m2m * mu2.clone()),
        mu2.clone(),
    ])
}

// ---------------------------------------------------------------------------
// sol — pairings of diag(1,1,ν) and [[1,1,0],[1,μ,0],[0,0,ν]]
// ---------------------------------------------------------------------------

/// τ of the column family into a diagonal target (shared by both source
/// metrics).
pub fn sol_diag_xi1_tau<S: Scalar>(nu1: &S, nu2: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    Vector3([
        -(g.clone() * a.clone() / nu1.clone()),
        g.clone() * b.clone() / nu1.clone(),
        (sq(a) - sq(b)) / (nu2.clone() * nu1.clone()),
    ])
}

pub fn sol_diag_xi2_tau<S: Scalar>(
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    Vector3([
        -(a.clone() / nu1.clone()),
        b.clone() / nu1.clone(),
        ((sq(alpha) - sq(beta)) * nu1.clone() + sq(a) - sq(b)) / (nu2.clone() * nu1.clone()),
    ])
}

pub fn sol_diag_xi3_tau<S: Scalar>(
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    Vector3([
        a.clone() / nu1.clone(),
        -(b.clone() / nu1.clone()),
        ((sq(beta) - sq(alpha)) * nu1.clone() + sq(a) - sq(b)) / (nu2.clone() * nu1.clone()),
    ])
}

/// Planar τ components shared by every family into the non-diagonal target:
/// `(−((a+2b)μ2+a), bμ2+2a+b) / ((μ2−1)ν1)`.
fn sol_nondiag_plane<S: Scalar>(mu2: &S, nu1: &S, a: &S, b: &S) -> (S, S) {
    let den = (mu2.clone() - int::<S>(1)) * nu1.clone();
    (
        -(((a.clone() + int::<S>(2) * b.clone()) * mu2.clone() + a.clone()) / den.clone()),
        (b.clone() * mu2.clone() + int::<S>(2) * a.clone() + b.clone()) / den,
    )
}

pub fn sol_p2_xi1_tau<S: Scalar>(mu2: &S, nu1: &S, nu2: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    let (x, y) = sol_nondiag_plane(mu2, nu1, a, b);
    Vector3([
        x * g.clone(),
        y * g.clone(),
        (sq(a) - sq(b) * mu2.clone()) / (nu2.clone() * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p2_xi2_tau<S: Scalar>(
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (x, y) = sol_nondiag_plane(mu2, nu1, a, b);
    Vector3([
        x,
        y,
        ((sq(alpha) - sq(beta) * mu2.clone()) * nu1.clone() - sq(b) * mu2.clone() + sq(a))
            / (nu2.clone() * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p2_xi3_tau<S: Scalar>(
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (x, y) = sol_nondiag_plane(mu2, nu1, a, b);
    Vector3([
        -x,
        -y,
        ((sq(beta) - sq(alpha) * mu2.clone()) * nu1.clone() - sq(b) * mu2.clone() + sq(a))
            / (nu2.clone() * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p3_xi2_tau<S: Scalar>(
    mu1: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    Vector3([
        -(a.clone() / nu1.clone()),
        b.clone() / nu1.clone(),
        ((sq(alpha) * nu1.clone() + sq(a) - sq(b)) * mu1.clone() - sq(beta) * nu1.clone() - sq(a)
            + sq(b))
            / (nu2.clone() * (mu1.clone() - int(1)) * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p3_xi3_tau<S: Scalar>(
    mu1: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    Vector3([
        a.clone() / nu1.clone(),
        -(b.clone() / nu1.clone()),
        ((-(sq(alpha) * nu1.clone()) + sq(a) - sq(b)) * mu1.clone() + sq(beta) * nu1.clone()
            - sq(a)
            + sq(b))
            / (nu2.clone() * (mu1.clone() - int(1)) * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p4_xi2_tau<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (x, y) = sol_nondiag_plane(mu2, nu1, a, b);
    Vector3([
        x,
        y,
        ((sq(alpha) * nu1.clone() - sq(b) * mu2.clone() + sq(a)) * mu1.clone()
            + (sq(b) - sq(beta) * nu1.clone()) * mu2.clone()
            - sq(a))
            / (nu2.clone() * (mu1.clone() - int(1)) * nu1.clone()),
    ])
}

#[allow(clippy::too_many_arguments)]
pub fn sol_p4_xi3_tau<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (x, y) = sol_nondiag_plane(mu2, nu1, a, b);
    Vector3([
        -x,
        -y,
        (((-(sq(alpha) * nu1.clone()) - sq(b)) * mu2.clone() + sq(a)) * mu1.clone()
            + sq(b) * mu2.clone()
            + sq(beta) * nu1.clone()
            - sq(a))
            / (nu2.clone() * (mu1.clone() - int(1)) * nu1.clone()),
    ])
}

/// τ₂ of the column family into a diagonal target.
pub fn sol_diag_xi1_tau2<S: Scalar>(nu1: &S, nu2: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    let (a2, b2, g2) = (sq(a), sq(b), sq(g));
    let nu1sq = sq(nu1);
    Vector3([
        -(int::<S>(2)
            * (half::<S>() * g2.clone() * nu2.clone() + a2.clone() - b2.clone())
            * a.clone()
            * g.clone()
            / (nu1sq.clone() * nu2.clone())),
        -(int::<S>(2)
            * (-(half::<S>() * g2.clone() * nu2.clone()) + a2.clone() - b2.clone())
            * g.clone()
            * b.clone()
            / (nu1sq.clone() * nu2.clone())),
        (g2 * (a2.clone() - b2.clone()) * nu2.clone() + int::<S>(2) * sq(&a2)
            - int::<S>(2) * sq(&b2))
            / (sq(nu2) * nu1sq),
    ])
}

pub fn sol_diag_xi2_tau2<S: Scalar>(
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (a2, b2, al2, be2) = (sq(a), sq(b), sq(alpha), sq(beta));
    let nu1sq = sq(nu1);
    let core = (al2.clone() - be2.clone()) * nu1.clone() + a2.clone() - b2.clone();
    Vector3([
        -(int::<S>(2) * a.clone() * (core.clone() + half::<S>() * nu2.clone())
            / (nu1sq.clone() * nu2.clone())),
        -(int::<S>(2) * (core - half::<S>() * nu2.clone()) * b.clone()
            / (nu1sq.clone() * nu2.clone())),
        (int::<S>(2) * sq(&al2) * nu1sq.clone() - int::<S>(2) * sq(&be2) * nu1sq.clone()
            + int::<S>(4) * a2.clone() * al2 * nu1.clone()
            - int::<S>(4) * b2.clone() * be2 * nu1.clone()
            + int::<S>(2) * sq(&a2)
            - int::<S>(2) * sq(&b2)
            + a2 * nu2.clone()
            - b2 * nu2.clone())
            / (nu1sq * sq(nu2)),
    ])
}

pub fn sol_diag_xi3_tau2<S: Scalar>(
    nu1: &S,
    nu2: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
) -> Vector3<S> {
    let (a2, b2, al2, be2) = (sq(a), sq(b), sq(alpha), sq(beta));
    let nu1sq = sq(nu1);
    let core = -(int::<S>(2) * al2.clone() * nu1.clone())
        + int::<S>(2) * be2.clone() * nu1.clone()
        + int::<S>(2) * a2.clone()
        - int::<S>(2) * b2.clone();
    Vector3([
        a.clone() * (core.clone() + nu2.clone()) / (nu1sq.clone() * nu2.clone()),
        b.clone() * (core - nu2.clone()) / (nu1sq.clone() * nu2.clone()),
        (-(int::<S>(2) * sq(&al2) * nu1sq.clone()) + int::<S>(2) * sq(&be2) * nu1sq.clone()
            + int::<S>(4) * a2.clone() * be2 * nu1.clone()
            - int::<S>(4) * al2 * b2.clone() * nu1.clone()
            + int::<S>(2) * sq(&a2)
            - int::<S>(2) * sq(&b2)
            + a2 * nu2.clone()
            - b2 * nu2.clone())
            / (nu1sq * sq(nu2)),
    ])
}

/// τ₂ of the column family into the non-diagonal target (shared by both
/// source metrics).
pub fn sol_nondiag_xi1_tau2<S: Scalar>(
    mu2: &S,
    nu1: &S,
    nu2: &S,
    a: &S,
    b: &S,
    g: &S,
) -> Vector3<S> {
    let (a2, b2, g2) = (sq(a), sq(b), sq(g));
    let (a3, b3) = (a2.clone() * a.clone(), b2.clone() * b.clone());
    let (mu2sq, nu1sq) = (sq(mu2), sq(nu1));
    let mu2cb = mu2sq.clone() * mu2.clone();
    let m2m = mu2.clone() - int::<S>(1);
    let gn = g2 * nu2.clone();

    let w1 = -(int::<S>(2)
        * g.clone()
        * (-(b2.clone() * (a.clone() - b.clone()) * mu2cb.clone())
            + (a3.clone() - a2.clone() * b.clone()
                + (half::<S>() * gn.clone() + b2.clone()) * a.clone()
                + int::<S>(2) * b.clone() * gn.clone()
                - b3.clone())
                * mu2sq.clone()
            + (int::<S>(3) * a.clone() * gn.clone() + int::<S>(2) * b.clone() * gn.clone()
                - a3.clone()
                + a2.clone() * b.clone())
                * mu2.clone()
            + half::<S>() * a.clone() * gn.clone())
        / (nu1sq.clone() * nu2.clone() * sq(&m2m)));

    let w2 = int::<S>(2)
        * g.clone()
        * (b3 * mu2cb
            - b.clone()
                * (-(half::<S>() * gn.clone()) + a2.clone() + a.clone() * b.clone() + b2.clone())
                * mu2sq
            + (a.clone() * b2.clone()
                + (int::<S>(3) * gn.clone() + a2.clone()) * b.clone()
                + int::<S>(2) * a.clone() * gn.clone()
                + a3.clone())
                * mu2.clone()
            + int::<S>(2) * a.clone() * gn.clone()
            + half::<S>() * b.clone() * gn.clone()
            - a3)
        / (nu1sq.clone() * nu2.clone() * sq(&m2m));

    let w3 = int::<S>(2)
        * (a2.clone() - b2.clone() * mu2.clone())
        * (b2.clone() * sq(mu2)
            + (half::<S>() * gn.clone() + a2.clone() - b2) * mu2.clone()
            + S::from_ratio(3, 2) * gn
            - a2)
        / (nu1sq * sq(nu2) * m2m);
    Vector3([w1, w2, w3])
}

/// τ₂ of the column family into the non-diagonal target at μ2 = a²/b².
pub fn sol_nondiag_xi1_tau2_critical<S: Scalar>(nu1: &S, a: &S, b: &S, g: &S) -> Vector3<S> {
    let apb = sq(&(a.clone() + b.clone()));
    let amb = sq(&(a.clone() - b.clone()));
    let g3 = sq(g) * g.clone();
    Vector3([
        -(apb.clone() * g3.clone() * a.clone() / (amb.clone() * sq(nu1))),
        b.clone() * apb * g3 / (amb * sq(nu1)),
        S::zero(),
    ])
}

/// Test matrix and determinant for ξ2/ξ3 over diag→diag:
/// `det = 2(α²+β²)/ν1²` for both families.
pub fn sol_p1_test_matrix<S: Scalar>(
    nu1: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
    xi3: bool,
) -> (Matrix3<S>, S) {
    let s: S = if xi3 { int(1) } else { int(-1) };
    let inv = S::one() / nu1.clone();
    let m33 = (int::<S>(2) * sq(alpha) * nu1.clone()
        + int::<S>(2) * sq(beta) * nu1.clone()
        + int::<S>(2) * sq(a)
        + int::<S>(2) * sq(b))
        / nu1.clone();
    let m = Matrix3::from_rows([
        [
            inv.clone(),
            S::zero(),
            s.clone() * int::<S>(2) * a.clone() / nu1.clone(),
        ],
        [
            S::zero(),
            inv,
            s.clone() * int::<S>(2) * b.clone() / nu1.clone(),
        ],
        [
            s.clone() * a.clone() / nu1.clone(),
            s * b.clone() / nu1.clone(),
            m33,
        ],
    ]);
    let det = int::<S>(2) * (sq(alpha) + sq(beta)) / sq(nu1);
    (m, det)
}

/// Test matrix and determinant for ξ2/ξ3 over diag→nondiag:
/// `det = 2(μ2−1)(β²μ2+α²)/ν1²` for ξ2, `2(μ2−1)(α²μ2+β²)/ν1²` for ξ3.
pub fn sol_p2_test_matrix<S: Scalar>(
    mu2: &S,
    nu1: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
    xi3: bool,
) -> (Matrix3<S>, S) {
    let s: S = if xi3 { int(1) } else { int(-1) };
    let inv = S::one() / nu1.clone();
    let (m33, det) = if xi3 {
        (
            (int::<S>(2) * sq(alpha) * mu2.clone() * nu1.clone()
                + int::<S>(2) * sq(b) * mu2.clone()
                + int::<S>(2) * sq(beta) * nu1.clone()
                + int::<S>(2) * sq(a))
                / nu1.clone(),
            int::<S>(2) * (mu2.clone() - int(1)) * (sq(alpha) * mu2.clone() + sq(beta)) / sq(nu1),
        )
    } else {
        (
            (int::<S>(2) * sq(beta) * mu2.clone() * nu1.clone()
                + int::<S>(2) * sq(alpha) * nu1.clone()
                + int::<S>(2) * sq(b) * mu2.clone()
                + int::<S>(2) * sq(a))
                / nu1.clone(),
            int::<S>(2) * (mu2.clone() - int(1)) * (sq(beta) * mu2.clone() + sq(alpha)) / sq(nu1),
        )
    };
    let m = Matrix3::from_rows([
        [
            inv.clone(),
            -inv.clone(),
            s.clone() * int::<S>(2) * a.clone() / nu1.clone(),
        ],
        [
            -inv,
            mu2.clone() / nu1.clone(),
            s.clone() * int::<S>(2) * b.clone() * mu2.clone() / nu1.clone(),
        ],
        [
            s.clone() * (a.clone() - b.clone()) / nu1.clone(),
            s * (b.clone() * mu2.clone() - a.clone()) / nu1.clone(),
            m33,
        ],
    ]);
    (m, det)
}

/// Test matrix and determinant for ξ2/ξ3 over nondiag→diag:
/// `det = 2(α²μ1+β²)/(ν1²(μ1−1))` for both families.
pub fn sol_p3_test_matrix<S: Scalar>(
    mu1: &S,
    nu1: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
    xi3: bool,
) -> (Matrix3<S>, S) {
    let s: S = if xi3 { int(1) } else { int(-1) };
    let inv = S::one() / nu1.clone();
    let m33 = ((int::<S>(2) * sq(alpha) * nu1.clone() + int::<S>(2) * sq(a) + int::<S>(2) * sq(b))
        * mu1.clone()
        + int::<S>(2) * sq(beta) * nu1.clone()
        - int::<S>(2) * sq(a)
        - int::<S>(2) * sq(b))
        / ((mu1.clone() - int::<S>(1)) * nu1.clone());
    let m = Matrix3::from_rows([
        [
            inv.clone(),
            S::zero(),
            s.clone() * int::<S>(2) * a.clone() / nu1.clone(),
        ],
        [
            S::zero(),
            inv,
            s.clone() * int::<S>(2) * b.clone() / nu1.clone(),
        ],
        [
            s.clone() * a.clone() / nu1.clone(),
            s * b.clone() / nu1.clone(),
            m33,
        ],
    ]);
    let det =
        int::<S>(2) * (sq(alpha) * mu1.clone() + sq(beta)) / (sq(nu1) * (mu1.clone() - int(1)));
    (m, det)
}

/// Test matrix and determinant for ξ2/ξ3 over nondiag→nondiag:
/// `det = 2(μ2−1)(α²μ1+β²μ2)/(ν1²(μ1−1))` for ξ2 and
/// `2(μ2−1)(α²μ1μ2+β²)/(ν1²(μ1−1))` for ξ3.
#[allow(clippy::too_many_arguments)]
pub fn sol_p4_test_matrix<S: Scalar>(
    mu1: &S,
    mu2: &S,
    nu1: &S,
    alpha: &S,
    beta: &S,
    a: &S,
    b: &S,
    xi3: bool,
) -> (Matrix3<S>, S) {
    let s: S = if xi3 { int(1) } else { int(-1) };
    let inv = S::one() / nu1.clone();
    let m1m = mu1.clone() - int::<S>(1);
    let (m33, det) = if xi3 {
        (
            (((int::<S>(2) * sq(alpha) * nu1.clone() + int::<S>(2) * sq(b)) * mu2.clone()
                + int::<S>(2) * sq(a))
                * mu1.clone()
                - int::<S>(2) * sq(b) * mu2.clone()
                + int::<S>(2) * sq(beta) * nu1.clone()
                - int::<S>(2) * sq(a))
                / (nu1.clone() * m1m.clone()),
            int::<S>(2) * (mu2.clone() - int(1)) * (sq(alpha) * mu1.clone() * mu2.clone() + sq(beta))
                / (sq(nu1) * m1m.clone()),
        )
    } else {
        (
            ((int::<S>(2) * sq(alpha) * nu1.clone()
                + int::<S>(2) * sq(b) * mu2.clone()
                + int::<S>(2) * sq(a))
                * mu1.clone()
                + (int::<S>(2) * sq(beta) * nu1.clone() - int::<S>(2) * sq(b)) * mu2.clone()
                - int::<S>(2) * sq(a))
                / (nu1.clone() * m1m.clone()),
            int::<S>(2) * (mu2.clone() - int(1)) * (sq(alpha) * mu1.clone() + sq(beta) * mu2.clone())
                / (sq(nu1) * m1m.clone()),
        )
    };
    let m = Matrix3::from_rows([
        [
            inv.clone(),
            -inv.clone(),
            s.clone() * int::<S>(2) * a.clone() / nu1.clone(),
        ],
        [
            -inv,
            mu2.clone() / nu1.clone(),
            s.clone() * int::<S>(2) * mu2.clone() * b.clone() / nu1.clone(),
        ],
        [
            s.clone() * (a.clone() - b.clone()) / nu1.clone(),
            s * (mu2.clone() * b.clone() - a.clone()) / nu1.clone(),
            m33,
        ],
    ]);
    (m, det)
}

// ---------------------------------------------------------------------------
// su2 — metrics diag(λᵢ, μᵢ, νᵢ)
// ---------------------------------------------------------------------------

/// Source/target metric sextuple (λ1, μ1, ν1, λ2, μ2, ν2).
#[derive(Clone, Debug)]
pub struct DiagPair<S> {
    pub l1: S,
    pub m1: S,
    pub n1: S,
    pub l2: S,
    pub m2: S,
    pub n2: S,
}

pub fn su2_xi1_tau<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(p.sin.clone()
        * p.cos.clone()
        * (g.m2.clone() - g.n2.clone())
        * (g.m1.clone() - g.n1.clone())
        / (g.l2.clone() * g.m1.clone() * g.n1.clone()));
    Vector3([v, S::zero(), S::zero()])
}

pub fn su2_xi1_tau2<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(int::<S>(2)
        * sq(&(g.m2.clone() - g.n2.clone()))
        * sq(&(g.m1.clone() - g.n1.clone()))
        * p.cos.clone()
        * (sq(&p.cos) - half())
        * p.sin.clone()
        / (sq(&g.m1) * sq(&g.n1) * sq(&g.l2)));
    Vector3([v, S::zero(), S::zero()])
}

pub fn su2_xi2_tau<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = p.sin.clone()
        * p.cos.clone()
        * (g.l2.clone() - g.n2.clone())
        * (g.l1.clone() - g.n1.clone())
        / (g.m2.clone() * g.l1.clone() * g.n1.clone());
    Vector3([S::zero(), v, S::zero()])
}

pub fn su2_xi2_tau2<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = (int::<S>(2) * sq(&p.cos) - int(1))
        * p.cos.clone()
        * sq(&(g.l2.clone() - g.n2.clone()))
        * sq(&(g.l1.clone() - g.n1.clone()))
        * p.sin.clone()
        / (sq(&g.l1) * sq(&g.n1) * sq(&g.m2));
    Vector3([S::zero(), v, S::zero()])
}

pub fn su2_xi3_tau<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(p.cos.clone()
        * p.sin.clone()
        * (g.l2.clone() - g.m2.clone())
        * (g.l1.clone() - g.m1.clone())
        / (g.l1.clone() * g.m1.clone() * g.n2.clone()));
    Vector3([S::zero(), S::zero(), v])
}

pub fn su2_xi3_tau2<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(int::<S>(2)
        * p.cos.clone()
        * p.sin.clone()
        * (sq(&p.cos) - half())
        * sq(&(g.m2.clone() - g.l2.clone()))
        * sq(&(g.m1.clone() - g.l1.clone()))
        / (sq(&g.l1) * sq(&g.m1) * sq(&g.n2)));
    Vector3([S::zero(), S::zero(), v])
}

/// τ of the full su2 automorphism `ξ3(a)∘ξ2(b)∘ξ1(c)` via its polynomial
/// decomposition `(cos(b)(μ2−ν2)R, (λ2−ν2)cos(b)S, −z)` over the common
/// denominators.
pub fn su2_product_tau<S: Scalar>(
    g: &DiagPair<S>,
    pa: &UnitPair<S>,
    pb: &UnitPair<S>,
    pc: &UnitPair<S>,
) -> Vector3<S> {
    let (sa, ca) = (pa.sin.clone(), pa.cos.clone());
    let (sb, cb) = (pb.sin.clone(), pb.cos.clone());
    let (sc, cc) = (pc.sin.clone(), pc.cos.clone());
    let m1n = g.m1.clone() - g.n1.clone();
    let l1m = g.l1.clone() - g.m1.clone();

    let r = sa.clone() * sb.clone() * g.l1.clone() * m1n.clone() * sq(&cc)
        - sc.clone() * g.l1.clone() * ca.clone() * m1n.clone() * cc.clone()
        + sa.clone() * sb.clone() * g.n1.clone() * l1m.clone();
    let s = sb.clone()
        * (g.l1.clone() * m1n.clone() * sq(&cc) + g.n1.clone() * l1m.clone())
        * ca.clone()
        + cc.clone() * sa.clone() * sc.clone() * g.l1.clone() * m1n.clone();
    let z = (g.l2.clone() - g.m2.clone())
        * (int::<S>(2) * cc.clone() * sb.clone() * sc.clone() * g.l1.clone() * m1n.clone()
            * sq(&ca)
            + (g.l1.clone() * (sq(&cb) - int(2)) * m1n.clone() * sq(&cc)
                + g.n1.clone() * l1m * sq(&cb)
                + g.l1.clone() * m1n.clone())
                * sa
                * ca
            - cc * sb * sc * g.l1.clone() * m1n);

    let den = g.l1.clone() * g.m1.clone() * g.n1.clone();
    Vector3([
        cb.clone() * (g.m2.clone() - g.n2.clone()) * r / (g.l2.clone() * den.clone()),
        (g.l2.clone() - g.n2.clone()) * cb * s / (g.m2.clone() * den.clone()),
        -(z / (g.n2.clone() * den)),
    ])
}

/// τ of the su2 automorphism under `diag(λ1,λ1,ν1) → diag(λ2,μ2,μ2)`, via
/// the reduced pair `(R1, S1)`.
pub fn su2_product_tau_squashed<S: Scalar>(
    l1: &S,
    n1: &S,
    l2: &S,
    m2: &S,
    pa: &UnitPair<S>,
    pb: &UnitPair<S>,
    pc: &UnitPair<S>,
) -> Vector3<S> {
    let (sa, ca) = (pa.sin.clone(), pa.cos.clone());
    let (sb, cb) = (pb.sin.clone(), pb.cos.clone());
    let (sc, cc) = (pc.sin.clone(), pc.cos.clone());
    let r1 = sa.clone() * sc.clone() + ca.clone() * sb.clone() * cc.clone();
    let s1 = sb.clone() * sq(&ca) * sc.clone() * cc.clone()
        + half::<S>() * sa * (S::one() + (sq(&cb) - int(2)) * sq(&cc)) * ca
        - half::<S>() * sb * sc * cc.clone();
    let dif = (l1.clone() - n1.clone()) * (l2.clone() - m2.clone());
    let den = m2.clone() * l1.clone() * n1.clone();
    Vector3([
        S::zero(),
        cb * cc * dif.clone() * r1 / den.clone(),
        -(int::<S>(2) * dif * s1 / den),
    ])
}

// ---------------------------------------------------------------------------
// sl2 — metrics diag(λᵢ, μᵢ, νᵢ)
// ---------------------------------------------------------------------------

pub fn sl2_xi1_tau<S: Scalar>(g: &DiagPair<S>, p: &HypPair<S>) -> Vector3<S> {
    let v = -(p.cosh.clone()
        * p.sinh.clone()
        * (g.m2.clone() + g.n2.clone())
        * (g.n1.clone() + g.m1.clone())
        / (g.l2.clone() * g.m1.clone() * g.n1.clone()));
    Vector3([v, S::zero(), S::zero()])
}

pub fn sl2_xi1_tau2<S: Scalar>(g: &DiagPair<S>, p: &HypPair<S>) -> Vector3<S> {
    let v = -(int::<S>(2)
        * sq(&(g.m2.clone() + g.n2.clone()))
        * (sq(&p.cosh) - half())
        * sq(&(g.n1.clone() + g.m1.clone()))
        * p.cosh.clone()
        * p.sinh.clone()
        / (sq(&g.m1) * sq(&g.n1) * sq(&g.l2)));
    Vector3([v, S::zero(), S::zero()])
}

pub fn sl2_xi2_tau<S: Scalar>(g: &DiagPair<S>, p: &HypPair<S>) -> Vector3<S> {
    let v = p.cosh.clone()
        * p.sinh.clone()
        * (g.l2.clone() + g.n2.clone())
        * (g.n1.clone() + g.l1.clone())
        / (g.m2.clone() * g.l1.clone() * g.n1.clone());
    Vector3([S::zero(), v, S::zero()])
}

pub fn sl2_xi2_tau2<S: Scalar>(g: &DiagPair<S>, p: &HypPair<S>) -> Vector3<S> {
    let v = (int::<S>(2) * sq(&p.cosh) - int(1))
        * p.cosh.clone()
        * sq(&(g.l2.clone() + g.n2.clone()))
        * sq(&(g.n1.clone() + g.l1.clone()))
        * p.sinh.clone()
        / (sq(&g.l1) * sq(&g.n1) * sq(&g.m2));
    Vector3([S::zero(), v, S::zero()])
}

pub fn sl2_xi3_tau<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(p.sin.clone()
        * p.cos.clone()
        * (g.l2.clone() - g.m2.clone())
        * (g.l1.clone() - g.m1.clone())
        / (g.n2.clone() * g.l1.clone() * g.m1.clone()));
    Vector3([S::zero(), S::zero(), v])
}

pub fn sl2_xi3_tau2<S: Scalar>(g: &DiagPair<S>, p: &UnitPair<S>) -> Vector3<S> {
    let v = -(int::<S>(2)
        * p.sin.clone()
        * p.cos.clone()
        * sq(&(g.m2.clone() - g.l2.clone()))
        * sq(&(g.m1.clone() - g.l1.clone()))
        * (sq(&p.cos) - half())
        / (sq(&g.l1) * sq(&g.m1) * sq(&g.n2)));
    Vector3([S::zero(), S::zero(), v])
}

/// τ of the full sl2 automorphism `ξ3(a)∘ξ2(b)∘ξ1(c)` via the `(R, S, Q)`
/// decomposition `((μ2+ν2)R, (λ2+ν2)S, (λ2−μ2)Q)` over the common
/// denominators.
pub fn sl2_product_tau<S: Scalar>(
    g: &DiagPair<S>,
    pa: &UnitPair<S>,
    pb: &HypPair<S>,
    pc: &HypPair<S>,
) -> Vector3<S> {
    let (sa, ca) = (pa.sin.clone(), pa.cos.clone());
    let (shb, chb) = (pb.sinh.clone(), pb.cosh.clone());
    let (shc, chc) = (pc.sinh.clone(), pc.cosh.clone());
    let m1n = g.m1.clone() + g.n1.clone();
    let l1m = g.l1.clone() - g.m1.clone();

    let r = chb.clone()
        * (shb.clone() * g.l1.clone() * sa.clone() * m1n.clone() * sq(&chc)
            - shc.clone() * g.l1.clone() * ca.clone() * m1n.clone() * chc.clone()
            - shb.clone() * g.n1.clone() * sa.clone() * l1m.clone());
    let s = chb.clone()
        * (shb.clone() * g.l1.clone() * ca.clone() * m1n.clone() * sq(&chc)
            + shc.clone() * g.l1.clone() * sa.clone() * m1n.clone() * chc.clone()
            - shb.clone() * g.n1.clone() * ca.clone() * l1m.clone());
    let q = -(int::<S>(2)
        * chc.clone()
        * shb.clone()
        * shc.clone()
        * g.l1.clone()
        * m1n.clone()
        * sq(&ca))
        + chc.clone() * shb * shc * g.l1.clone() * m1n.clone()
        + sa
            * (g.l1.clone() * (sq(&chb) - int(2)) * m1n.clone() * sq(&chc)
                - g.n1.clone() * l1m * sq(&chb)
                + g.l1.clone() * m1n)
            * ca;

    let den = g.l1.clone() * g.m1.clone() * g.n1.clone();
    Vector3([
        (g.m2.clone() + g.n2.clone()) * r / (g.l2.clone() * den.clone()),
        (g.l2.clone() + g.n2.clone()) * s / (g.m2.clone() * den.clone()),
        (g.l2.clone() - g.m2.clone()) * q / (g.n2.clone() * den),
    ])
}
