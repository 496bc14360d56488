//! Cross-checks the frame-sum engine against the closed forms on random
//! parameter draws: every audited expression is evaluated through both routes
//! and compared exactly (rational path) or to a relative residual (floats).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{catalog, AlgebraId};
use crate::closed_forms as cf;
use crate::connection::MetricLieAlgebra;
use crate::homomorphism::{
    e02_xi1, e02_xi2, e02_xi3, nil_generic, sl2_product, sol_xi1, sol_xi2, sol_xi3, su2_product,
    Homomorphism, HypPair, UnitPair,
};
use crate::linalg::Matrix3;
use crate::metric::Metric;
use crate::scalar::{Rat, Scalar};
use crate::tension::{tau, tau2, test_matrix, Problem};

/// One audited expression; `run` draws `n` samples from the given seed on the
/// requested arithmetic path and reports the outcome.
pub struct AuditCase {
    pub id: &'static str,
    run: fn(seed: u64, n: usize, exact: bool) -> AuditOutcome,
}

#[derive(Clone, Debug)]
pub struct AuditOutcome {
    pub id: &'static str,
    pub n: usize,
    pub exact_path: bool,
    /// Worst relative residual over all draws (0 when the path is exact and
    /// every comparison held literally).
    pub max_rel_residual: f64,
    pub pass: bool,
}

impl AuditCase {
    pub fn run(&self, seed: u64, n: usize, exact: bool) -> AuditOutcome {
        (self.run)(seed, n, exact)
    }
}

/// Tolerance for the float path of the audit.
pub const AUDIT_FLOAT_TOL: f64 = 1e-9;

fn compare<S: Scalar>(engine: &[S], closed: &[S]) -> (bool, f64) {
    assert_eq!(engine.len(), closed.len());
    if S::EXACT {
        let ok = engine == closed;
        (ok, if ok { 0.0 } else { f64::INFINITY })
    } else {
        let mut num = 0.0f64;
        let mut den = 1.0f64;
        for (e, c) in engine.iter().zip(closed) {
            num = num.max((e.to_f64() - c.to_f64()).abs());
            den = den.max(e.abs_f64()).max(c.abs_f64());
        }
        let rel = num / den;
        (rel < AUDIT_FLOAT_TOL, rel)
    }
}

fn run_generic<S: Scalar>(
    id: &'static str,
    f: fn(&mut ChaCha8Rng) -> (Vec<S>, Vec<S>),
    seed: u64,
    n: usize,
) -> AuditOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut pass = true;
    for _ in 0..n {
        let (engine, closed) = f(&mut rng);
        let (ok, rel) = compare(&engine, &closed);
        pass &= ok;
        worst = worst.max(rel);
    }
    AuditOutcome {
        id,
        n,
        exact_path: S::EXACT,
        max_rel_residual: worst,
        pass,
    }
}

macro_rules! case {
    ($id:literal, $f:ident) => {
        AuditCase {
            id: $id,
            run: |seed, n, exact| {
                if exact {
                    run_generic::<Rat>($id, $f::<Rat>, seed, n)
                } else {
                    run_generic::<f64>($id, $f::<f64>, seed, n)
                }
            },
        }
    };
}

// --------------------------- draw helpers ----------------------------------

/// Uniform over multiples of 1/16 in [lo, hi]; identical distribution on both
/// scalar paths (and exactly representable as floats).
fn draw<S: Scalar>(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> S {
    S::from_ratio(rng.gen_range(lo * 16..=hi * 16), 16)
}

/// Strictly positive draw in (0, hi].
fn draw_pos<S: Scalar>(rng: &mut ChaCha8Rng, hi: i64) -> S {
    S::from_ratio(rng.gen_range(1..=hi * 16), 16)
}

/// γ draw avoiding the excluded γ² = 1 locus.
fn draw_gamma<S: Scalar>(rng: &mut ChaCha8Rng) -> S {
    loop {
        let k: i64 = rng.gen_range(-47..=47);
        if k.abs() != 16 {
            return S::from_ratio(k, 16);
        }
    }
}

/// μ draw in (0, 1) for the e02 family, clear of μ = 1.
fn draw_mu01<S: Scalar>(rng: &mut ChaCha8Rng) -> S {
    S::from_ratio(rng.gen_range(1..=15), 16)
}

fn unit<S: Scalar>(rng: &mut ChaCha8Rng) -> UnitPair<S> {
    UnitPair::from_tangent(draw(rng, -3, 3))
}

fn hyp<S: Scalar>(rng: &mut ChaCha8Rng) -> HypPair<S> {
    HypPair::from_tangent(draw_pos(rng, 4)).expect("positive tangent")
}

fn mla<S: Scalar>(id: AlgebraId, gram: Matrix3<S>) -> MetricLieAlgebra<S> {
    MetricLieAlgebra::new(catalog(id), Metric::new(gram).expect("valid gram")).unwrap()
}

fn problem<S: Scalar>(
    id: AlgebraId,
    g1: Matrix3<S>,
    g2: Matrix3<S>,
    xi: Homomorphism<S>,
) -> Problem<S> {
    Problem::new(mla(id, g1), mla(id, g2), xi).expect("valid problem")
}

fn diag<S: Scalar>(a: S, b: S, c: S) -> Matrix3<S> {
    Matrix3::diag(a, b, c)
}

fn sol_nondiag_gram<S: Scalar>(mu: &S, nu: &S) -> Matrix3<S> {
    Matrix3::from_rows([
        [S::one(), S::one(), S::zero()],
        [S::one(), mu.clone(), S::zero()],
        [S::zero(), S::zero(), nu.clone()],
    ])
}

/// Generic su2 metric draw: 0 < ν < μ < λ strictly.
fn su2_metric<S: Scalar>(rng: &mut ChaCha8Rng) -> (S, S, S) {
    let n: S = draw_pos(rng, 3);
    let m = n.clone() + draw_pos(rng, 3);
    let l = m.clone() + draw_pos(rng, 3);
    (l, m, n)
}

/// Generic sl2 metric draw: 0 < λ < μ, ν > 0.
fn sl2_metric<S: Scalar>(rng: &mut ChaCha8Rng) -> (S, S, S) {
    let l: S = draw_pos(rng, 3);
    let m = l.clone() + draw_pos(rng, 3);
    (l, m, draw_pos(rng, 3))
}

fn vals<S: Scalar>(v: &crate::linalg::Vector3<S>) -> Vec<S> {
    v.0.to_vec()
}

// ------------------------------- nil ---------------------------------------

fn nil_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let (l1, l2): (S, S) = (draw_pos(rng, 4), draw_pos(rng, 4));
    let p: [S; 6] = std::array::from_fn(|_| draw(rng, -3, 3));
    let xi = nil_generic(
        p[0].clone(),
        p[1].clone(),
        p[2].clone(),
        p[3].clone(),
        p[4].clone(),
        p[5].clone(),
    );
    let pr = problem(
        AlgebraId::Nil,
        diag(l1.clone(), l1.clone(), S::one()),
        diag(l2.clone(), l2.clone(), S::one()),
        xi,
    );
    let closed = cf::nil_generic_tau(&l1, &l2, &p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
    (vals(&tau(&pr).value), vals(&closed))
}

// ------------------------------- e02 ----------------------------------------

struct E02Draw<S> {
    mu1: S,
    mu2: S,
    nu1: S,
    nu2: S,
}

fn e02_metrics<S: Scalar>(rng: &mut ChaCha8Rng) -> E02Draw<S> {
    E02Draw {
        mu1: draw_mu01(rng),
        mu2: draw_mu01(rng),
        nu1: draw_pos(rng, 4),
        nu2: draw_pos(rng, 4),
    }
}

fn e02_problem<S: Scalar>(d: &E02Draw<S>, xi: Homomorphism<S>) -> Problem<S> {
    problem(
        AlgebraId::E02,
        diag(S::one(), d.mu1.clone(), d.nu1.clone()),
        diag(S::one(), d.mu2.clone(), d.nu2.clone()),
        xi,
    )
}

fn e02_xi1_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (a, b, g): (S, S, S) = (draw(rng, -3, 3), draw(rng, -3, 3), draw_gamma(rng));
    let pr = e02_problem(&d, e02_xi1(a.clone(), b.clone(), g.clone()).unwrap());
    let closed = cf::e02_xi1_tau(&d.mu2, &d.nu1, &d.nu2, &a, &b, &g);
    (vals(&tau(&pr).value), vals(&closed))
}

fn e02_xi1_tau2_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (a, b, g): (S, S, S) = (draw(rng, -3, 3), draw(rng, -3, 3), draw_gamma(rng));
    let pr = e02_problem(&d, e02_xi1(a.clone(), b.clone(), g.clone()).unwrap());
    let closed = cf::e02_xi1_tau2(&d.mu2, &d.nu1, &d.nu2, &a, &b, &g);
    (vals(&tau2(&pr).value), vals(&closed))
}

fn e02_xi1_tau2_gamma0_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (a, b): (S, S) = (draw(rng, -3, 3), draw(rng, -3, 3));
    let pr = e02_problem(&d, e02_xi1(a.clone(), b.clone(), S::zero()).unwrap());
    let closed = cf::e02_xi1_tau2_gamma0(&d.mu2, &d.nu1, &d.nu2, &a, &b);
    (vals(&tau2(&pr).value), vals(&closed))
}

fn e02_affine_params<S: Scalar>(rng: &mut ChaCha8Rng) -> (S, S, S, S) {
    (
        draw(rng, -3, 3),
        draw(rng, -3, 3),
        draw(rng, -3, 3),
        draw(rng, -3, 3),
    )
}

fn e02_xi2_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi2(al.clone(), be.clone(), a.clone(), b.clone()));
    let closed = cf::e02_xi2_tau(&d.mu1, &d.mu2, &d.nu1, &d.nu2, &al, &be, &a, &b);
    (vals(&tau(&pr).value), vals(&closed))
}

fn e02_xi3_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi3(al.clone(), be.clone(), a.clone(), b.clone()));
    let closed = cf::e02_xi3_tau(&d.mu1, &d.mu2, &d.nu1, &d.nu2, &al, &be, &a, &b);
    (vals(&tau(&pr).value), vals(&closed))
}

fn e02_xi2_tau2_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi2(al.clone(), be.clone(), a.clone(), b.clone()));
    let closed = cf::e02_xi2_tau2(&d.mu1, &d.mu2, &d.nu1, &d.nu2, &al, &be, &a, &b);
    (vals(&tau2(&pr).value), vals(&closed))
}

fn e02_xi2_tau2_unit_mu1_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let mut d = e02_metrics(rng);
    d.mu1 = S::one();
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi2(al, be, a.clone(), b.clone()));
    let got = tau2(&pr).value;
    let (x1, x2) = cf::e02_xi2_tau2_unit_mu1(&d.mu2, &d.nu1, &d.nu2, &a, &b);
    (vec![got.0[0].clone(), got.0[1].clone()], vec![x1, x2])
}

fn e02_xi2_m_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi2(al.clone(), be.clone(), a.clone(), b.clone()));
    let (m, det) = test_matrix(&pr);
    let (mc, detc) = cf::e02_xi2_test_matrix(&d.mu1, &d.mu2, &d.nu1, &al, &be, &a, &b);
    let mut engine = m.to_flat().to_vec();
    engine.push(det);
    let mut closed = mc.to_flat().to_vec();
    closed.push(detc);
    (engine, closed)
}

fn e02_xi2_det_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let (al, be, a, b): (S, S, S, S) = e02_affine_params(rng);
    let pr = e02_problem(&d, e02_xi2(al.clone(), be.clone(), a.clone(), b.clone()));
    let (_, det) = test_matrix(&pr);
    let (_, detc) = cf::e02_xi2_test_matrix(&d.mu1, &d.mu2, &d.nu1, &al, &be, &a, &b);
    (vec![det], vec![detc])
}

/// On the α² = β² locus the printed kernel vector annihilates the engine's
/// test matrix.
fn e02_xi2_kernel_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let d = e02_metrics(rng);
    let al: S = draw(rng, -3, 3);
    let be = if rng.gen_bool(0.5) {
        al.clone()
    } else {
        -al.clone()
    };
    let (a, b): (S, S) = (draw(rng, -3, 3), draw(rng, -3, 3));
    let pr = e02_problem(&d, e02_xi2(al, be, a.clone(), b.clone()));
    let (m, _) = test_matrix(&pr);
    let v = cf::e02_xi2_kernel_vector(&d.mu2, &a, &b);
    (vals(&m.mul_vec(&v)), vec![S::zero(), S::zero(), S::zero()])
}

// ------------------------------- sol ----------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum SolPairing {
    P1,
    P2,
    P3,
    P4,
}

struct SolDraw<S> {
    mu1: S,
    mu2: S,
    nu1: S,
    nu2: S,
    pairing: SolPairing,
}

fn sol_metrics<S: Scalar>(rng: &mut ChaCha8Rng, pairing: SolPairing) -> SolDraw<S> {
    SolDraw {
        mu1: S::one() + draw_pos(rng, 3),
        mu2: S::one() + draw_pos(rng, 3),
        nu1: draw_pos(rng, 4),
        nu2: draw_pos(rng, 4),
        pairing,
    }
}

fn sol_problem<S: Scalar>(d: &SolDraw<S>, xi: Homomorphism<S>) -> Problem<S> {
    let diag1 = diag(S::one(), S::one(), d.nu1.clone());
    let diag2 = diag(S::one(), S::one(), d.nu2.clone());
    let (g1, g2) = match d.pairing {
        SolPairing::P1 => (diag1, diag2),
        SolPairing::P2 => (diag1, sol_nondiag_gram(&d.mu2, &d.nu2)),
        SolPairing::P3 => (sol_nondiag_gram(&d.mu1, &d.nu1), diag2),
        SolPairing::P4 => (
            sol_nondiag_gram(&d.mu1, &d.nu1),
            sol_nondiag_gram(&d.mu2, &d.nu2),
        ),
    };
    problem(AlgebraId::Sol, g1, g2, xi)
}

fn sol_family<S: Scalar>(rng: &mut ChaCha8Rng, which: usize) -> (Homomorphism<S>, [S; 5]) {
    let (al, be): (S, S) = (draw(rng, -3, 3), draw(rng, -3, 3));
    let (a, b): (S, S) = (draw(rng, -3, 3), draw(rng, -3, 3));
    let g: S = draw_gamma(rng);
    let xi = match which {
        1 => sol_xi1(a.clone(), b.clone(), g.clone()).unwrap(),
        2 => sol_xi2(al.clone(), be.clone(), a.clone(), b.clone()),
        3 => sol_xi3(al.clone(), be.clone(), a.clone(), b.clone()),
        _ => unreachable!(),
    };
    (xi, [al, be, a, b, g])
}

macro_rules! sol_tau_case {
    ($name:ident, $pairing:expr, $which:expr, |$d:ident, $p:ident| $closed:expr) => {
        fn $name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let $d = sol_metrics::<S>(rng, $pairing);
            let (xi, $p) = sol_family::<S>(rng, $which);
            let pr = sol_problem(&$d, xi);
            (vals(&tau(&pr).value), vals(&$closed))
        }
    };
}

sol_tau_case!(sol_p1_xi1_tau_case, SolPairing::P1, 1, |d, p| {
    cf::sol_diag_xi1_tau(&d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau_case!(sol_p1_xi2_tau_case, SolPairing::P1, 2, |d, p| {
    cf::sol_diag_xi2_tau(&d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p1_xi3_tau_case, SolPairing::P1, 3, |d, p| {
    cf::sol_diag_xi3_tau(&d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p2_xi1_tau_case, SolPairing::P2, 1, |d, p| {
    cf::sol_p2_xi1_tau(&d.mu2, &d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau_case!(sol_p2_xi2_tau_case, SolPairing::P2, 2, |d, p| {
    cf::sol_p2_xi2_tau(&d.mu2, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p2_xi3_tau_case, SolPairing::P2, 3, |d, p| {
    cf::sol_p2_xi3_tau(&d.mu2, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p3_xi1_tau_case, SolPairing::P3, 1, |d, p| {
    cf::sol_diag_xi1_tau(&d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau_case!(sol_p3_xi2_tau_case, SolPairing::P3, 2, |d, p| {
    cf::sol_p3_xi2_tau(&d.mu1, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p3_xi3_tau_case, SolPairing::P3, 3, |d, p| {
    cf::sol_p3_xi3_tau(&d.mu1, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p4_xi1_tau_case, SolPairing::P4, 1, |d, p| {
    cf::sol_p2_xi1_tau(&d.mu2, &d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau_case!(sol_p4_xi2_tau_case, SolPairing::P4, 2, |d, p| {
    cf::sol_p4_xi2_tau(&d.mu1, &d.mu2, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau_case!(sol_p4_xi3_tau_case, SolPairing::P4, 3, |d, p| {
    cf::sol_p4_xi3_tau(&d.mu1, &d.mu2, &d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});

macro_rules! sol_tau2_case {
    ($name:ident, $pairing:expr, $which:expr, |$d:ident, $p:ident| $closed:expr) => {
        fn $name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let $d = sol_metrics::<S>(rng, $pairing);
            let (xi, $p) = sol_family::<S>(rng, $which);
            let pr = sol_problem(&$d, xi);
            (vals(&tau2(&pr).value), vals(&$closed))
        }
    };
}

sol_tau2_case!(sol_p1_xi1_tau2_case, SolPairing::P1, 1, |d, p| {
    cf::sol_diag_xi1_tau2(&d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau2_case!(sol_p1_xi2_tau2_case, SolPairing::P1, 2, |d, p| {
    cf::sol_diag_xi2_tau2(&d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau2_case!(sol_p1_xi3_tau2_case, SolPairing::P1, 3, |d, p| {
    cf::sol_diag_xi3_tau2(&d.nu1, &d.nu2, &p[0], &p[1], &p[2], &p[3])
});
sol_tau2_case!(sol_p3_xi1_tau2_case, SolPairing::P3, 1, |d, p| {
    cf::sol_diag_xi1_tau2(&d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau2_case!(sol_p2_xi1_tau2_case, SolPairing::P2, 1, |d, p| {
    cf::sol_nondiag_xi1_tau2(&d.mu2, &d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});
sol_tau2_case!(sol_p4_xi1_tau2_case, SolPairing::P4, 1, |d, p| {
    cf::sol_nondiag_xi1_tau2(&d.mu2, &d.nu1, &d.nu2, &p[2], &p[3], &p[4])
});

/// μ2 = a²/b² specialization of the ξ1 bitension into the non-diagonal
/// target (requires a² > b² so that μ2 > 1).
fn sol_p2_xi1_tau2_critical_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let b: S = draw_pos(rng, 2);
    let a = b.clone() + draw_pos(rng, 2);
    let g: S = draw_gamma(rng);
    let mu2 = a.clone() * a.clone() / (b.clone() * b.clone());
    let d = SolDraw {
        mu1: S::one() + draw_pos(rng, 3),
        mu2,
        nu1: draw_pos(rng, 4),
        nu2: draw_pos(rng, 4),
        pairing: SolPairing::P2,
    };
    let pr = sol_problem(&d, sol_xi1(a.clone(), b.clone(), g.clone()).unwrap());
    let closed = cf::sol_nondiag_xi1_tau2_critical(&d.nu1, &a, &b, &g);
    (vals(&tau2(&pr).value), vals(&closed))
}

macro_rules! sol_m_case {
    ($name:ident, $det_name:ident, $pairing:expr, $which:expr, |$d:ident, $p:ident| $closed:expr) => {
        fn $name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let $d = sol_metrics::<S>(rng, $pairing);
            let (xi, $p) = sol_family::<S>(rng, $which);
            let pr = sol_problem(&$d, xi);
            let (m, det) = test_matrix(&pr);
            let (mc, detc) = $closed;
            let mut engine = m.to_flat().to_vec();
            engine.push(det);
            let mut closed = mc.to_flat().to_vec();
            closed.push(detc);
            (engine, closed)
        }

        fn $det_name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let $d = sol_metrics::<S>(rng, $pairing);
            let (xi, $p) = sol_family::<S>(rng, $which);
            let pr = sol_problem(&$d, xi);
            let (_, det) = test_matrix(&pr);
            let (_, detc) = $closed;
            (vec![det], vec![detc])
        }
    };
}

sol_m_case!(
    sol_p1_xi2_m_case,
    sol_p1_xi2_det_case,
    SolPairing::P1,
    2,
    |d, p| cf::sol_p1_test_matrix(&d.nu1, &p[0], &p[1], &p[2], &p[3], false)
);
sol_m_case!(
    sol_p1_xi3_m_case,
    sol_p1_xi3_det_case,
    SolPairing::P1,
    3,
    |d, p| cf::sol_p1_test_matrix(&d.nu1, &p[0], &p[1], &p[2], &p[3], true)
);
sol_m_case!(
    sol_p2_xi2_m_case,
    sol_p2_xi2_det_case,
    SolPairing::P2,
    2,
    |d, p| cf::sol_p2_test_matrix(&d.mu2, &d.nu1, &p[0], &p[1], &p[2], &p[3], false)
);
sol_m_case!(
    sol_p2_xi3_m_case,
    sol_p2_xi3_det_case,
    SolPairing::P2,
    3,
    |d, p| cf::sol_p2_test_matrix(&d.mu2, &d.nu1, &p[0], &p[1], &p[2], &p[3], true)
);
sol_m_case!(
    sol_p3_xi2_m_case,
    sol_p3_xi2_det_case,
    SolPairing::P3,
    2,
    |d, p| cf::sol_p3_test_matrix(&d.mu1, &d.nu1, &p[0], &p[1], &p[2], &p[3], false)
);
sol_m_case!(
    sol_p3_xi3_m_case,
    sol_p3_xi3_det_case,
    SolPairing::P3,
    3,
    |d, p| cf::sol_p3_test_matrix(&d.mu1, &d.nu1, &p[0], &p[1], &p[2], &p[3], true)
);
sol_m_case!(
    sol_p4_xi2_m_case,
    sol_p4_xi2_det_case,
    SolPairing::P4,
    2,
    |d, p| cf::sol_p4_test_matrix(&d.mu1, &d.mu2, &d.nu1, &p[0], &p[1], &p[2], &p[3], false)
);
sol_m_case!(
    sol_p4_xi3_m_case,
    sol_p4_xi3_det_case,
    SolPairing::P4,
    3,
    |d, p| cf::sol_p4_test_matrix(&d.mu1, &d.mu2, &d.nu1, &p[0], &p[1], &p[2], &p[3], true)
);

// ------------------------------ su2 / sl2 -----------------------------------

fn su2_pair<S: Scalar>(rng: &mut ChaCha8Rng) -> cf::DiagPair<S> {
    let (l1, m1, n1) = su2_metric(rng);
    let (l2, m2, n2) = su2_metric(rng);
    cf::DiagPair {
        l1,
        m1,
        n1,
        l2,
        m2,
        n2,
    }
}

fn sl2_pair<S: Scalar>(rng: &mut ChaCha8Rng) -> cf::DiagPair<S> {
    let (l1, m1, n1) = sl2_metric(rng);
    let (l2, m2, n2) = sl2_metric(rng);
    cf::DiagPair {
        l1,
        m1,
        n1,
        l2,
        m2,
        n2,
    }
}

fn pair_problem<S: Scalar>(
    id: AlgebraId,
    g: &cf::DiagPair<S>,
    xi: Homomorphism<S>,
) -> Problem<S> {
    problem(
        id,
        diag(g.l1.clone(), g.m1.clone(), g.n1.clone()),
        diag(g.l2.clone(), g.m2.clone(), g.n2.clone()),
        xi,
    )
}

macro_rules! su2_factor_case {
    ($name:ident, $axis:expr, $field:ident, $closed:path) => {
        fn $name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let g = su2_pair::<S>(rng);
            let p = unit::<S>(rng);
            let pr = pair_problem(
                AlgebraId::Su2,
                &g,
                crate::homomorphism::su2_factor($axis, &p),
            );
            (vals(&$field(&pr).value), vals(&$closed(&g, &p)))
        }
    };
}

su2_factor_case!(su2_xi1_tau_case, 1, tau, cf::su2_xi1_tau);
su2_factor_case!(su2_xi1_tau2_case, 1, tau2, cf::su2_xi1_tau2);
su2_factor_case!(su2_xi2_tau_case, 2, tau, cf::su2_xi2_tau);
su2_factor_case!(su2_xi2_tau2_case, 2, tau2, cf::su2_xi2_tau2);
su2_factor_case!(su2_xi3_tau_case, 3, tau, cf::su2_xi3_tau);
su2_factor_case!(su2_xi3_tau2_case, 3, tau2, cf::su2_xi3_tau2);

fn su2_product_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let g = su2_pair::<S>(rng);
    let (pa, pb, pc) = (unit::<S>(rng), unit::<S>(rng), unit::<S>(rng));
    let pr = pair_problem(AlgebraId::Su2, &g, su2_product(&pa, &pb, &pc));
    (
        vals(&tau(&pr).value),
        vals(&cf::su2_product_tau(&g, &pa, &pb, &pc)),
    )
}

fn su2_product_tau_squashed_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    // metrics diag(l1, l1, n1) -> diag(l2, m2, m2), n1 < l1 and m2 < l2
    let n1: S = draw_pos(rng, 3);
    let l1 = n1.clone() + draw_pos(rng, 3);
    let m2: S = draw_pos(rng, 3);
    let l2 = m2.clone() + draw_pos(rng, 3);
    let (pa, pb, pc) = (unit::<S>(rng), unit::<S>(rng), unit::<S>(rng));
    let pr = problem(
        AlgebraId::Su2,
        diag(l1.clone(), l1.clone(), n1.clone()),
        diag(l2.clone(), m2.clone(), m2.clone()),
        su2_product(&pa, &pb, &pc),
    );
    (
        vals(&tau(&pr).value),
        vals(&cf::su2_product_tau_squashed(&l1, &n1, &l2, &m2, &pa, &pb, &pc)),
    )
}

macro_rules! sl2_boost_case {
    ($name:ident, $axis:expr, $field:ident, $closed:path) => {
        fn $name<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
            let g = sl2_pair::<S>(rng);
            let p = hyp::<S>(rng);
            let pr = pair_problem(
                AlgebraId::Sl2,
                &g,
                crate::homomorphism::sl2_boost_factor($axis, &p),
            );
            (vals(&$field(&pr).value), vals(&$closed(&g, &p)))
        }
    };
}

sl2_boost_case!(sl2_xi1_tau_case, 1, tau, cf::sl2_xi1_tau);
sl2_boost_case!(sl2_xi1_tau2_case, 1, tau2, cf::sl2_xi1_tau2);
sl2_boost_case!(sl2_xi2_tau_case, 2, tau, cf::sl2_xi2_tau);
sl2_boost_case!(sl2_xi2_tau2_case, 2, tau2, cf::sl2_xi2_tau2);

fn sl2_xi3_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let g = sl2_pair::<S>(rng);
    let p = unit::<S>(rng);
    let pr = pair_problem(AlgebraId::Sl2, &g, crate::homomorphism::sl2_rot_factor(&p));
    (vals(&tau(&pr).value), vals(&cf::sl2_xi3_tau(&g, &p)))
}

fn sl2_xi3_tau2_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let g = sl2_pair::<S>(rng);
    let p = unit::<S>(rng);
    let pr = pair_problem(AlgebraId::Sl2, &g, crate::homomorphism::sl2_rot_factor(&p));
    (vals(&tau2(&pr).value), vals(&cf::sl2_xi3_tau2(&g, &p)))
}

fn sl2_product_tau_case<S: Scalar>(rng: &mut ChaCha8Rng) -> (Vec<S>, Vec<S>) {
    let g = sl2_pair::<S>(rng);
    let pa = unit::<S>(rng);
    let (pb, pc) = (hyp::<S>(rng), hyp::<S>(rng));
    let pr = pair_problem(AlgebraId::Sl2, &g, sl2_product(&pa, &pb, &pc));
    (
        vals(&tau(&pr).value),
        vals(&cf::sl2_product_tau(&g, &pa, &pb, &pc)),
    )
}

/// Every audited closed form, in catalog order.
pub fn audit_cases() -> Vec<AuditCase> {
    vec![
        case!("nil.tau", nil_tau_case),
        case!("e02.xi1.tau", e02_xi1_tau_case),
        case!("e02.xi1.tau2", e02_xi1_tau2_case),
        case!("e02.xi1.tau2.gamma0", e02_xi1_tau2_gamma0_case),
        case!("e02.xi2.tau", e02_xi2_tau_case),
        case!("e02.xi3.tau", e02_xi3_tau_case),
        case!("e02.xi2.tau2", e02_xi2_tau2_case),
        case!("e02.xi2.tau2.mu1eq1", e02_xi2_tau2_unit_mu1_case),
        case!("e02.xi2.m", e02_xi2_m_case),
        case!("e02.xi2.det", e02_xi2_det_case),
        case!("e02.xi2.kernel", e02_xi2_kernel_case),
        case!("sol.p1.xi1.tau", sol_p1_xi1_tau_case),
        case!("sol.p1.xi2.tau", sol_p1_xi2_tau_case),
        case!("sol.p1.xi3.tau", sol_p1_xi3_tau_case),
        case!("sol.p2.xi1.tau", sol_p2_xi1_tau_case),
        case!("sol.p2.xi2.tau", sol_p2_xi2_tau_case),
        case!("sol.p2.xi3.tau", sol_p2_xi3_tau_case),
        case!("sol.p3.xi1.tau", sol_p3_xi1_tau_case),
        case!("sol.p3.xi2.tau", sol_p3_xi2_tau_case),
        case!("sol.p3.xi3.tau", sol_p3_xi3_tau_case),
        case!("sol.p4.xi1.tau", sol_p4_xi1_tau_case),
        case!("sol.p4.xi2.tau", sol_p4_xi2_tau_case),
        case!("sol.p4.xi3.tau", sol_p4_xi3_tau_case),
        case!("sol.p1.xi1.tau2", sol_p1_xi1_tau2_case),
        case!("sol.p1.xi2.tau2", sol_p1_xi2_tau2_case),
        case!("sol.p1.xi3.tau2", sol_p1_xi3_tau2_case),
        case!("sol.p3.xi1.tau2", sol_p3_xi1_tau2_case),
        case!("sol.p2.xi1.tau2", sol_p2_xi1_tau2_case),
        case!("sol.p4.xi1.tau2", sol_p4_xi1_tau2_case),
        case!("sol.p2.xi1.tau2.critical", sol_p2_xi1_tau2_critical_case),
        case!("sol.p1.xi2.m", sol_p1_xi2_m_case),
        case!("sol.p1.xi2.det", sol_p1_xi2_det_case),
        case!("sol.p1.xi3.m", sol_p1_xi3_m_case),
        case!("sol.p1.xi3.det", sol_p1_xi3_det_case),
        case!("sol.p2.xi2.m", sol_p2_xi2_m_case),
        case!("sol.p2.xi2.det", sol_p2_xi2_det_case),
        case!("sol.p2.xi3.m", sol_p2_xi3_m_case),
        case!("sol.p2.xi3.det", sol_p2_xi3_det_case),
        case!("sol.p3.xi2.m", sol_p3_xi2_m_case),
        case!("sol.p3.xi2.det", sol_p3_xi2_det_case),
        case!("sol.p3.xi3.m", sol_p3_xi3_m_case),
        case!("sol.p3.xi3.det", sol_p3_xi3_det_case),
        case!("sol.p4.xi2.m", sol_p4_xi2_m_case),
        case!("sol.p4.xi2.det", sol_p4_xi2_det_case),
        case!("sol.p4.xi3.m", sol_p4_xi3_m_case),
        case!("sol.p4.xi3.det", sol_p4_xi3_det_case),
        case!("su2.xi1.tau", su2_xi1_tau_case),
        case!("su2.xi1.tau2", su2_xi1_tau2_case),
        case!("su2.xi2.tau", su2_xi2_tau_case),
        case!("su2.xi2.tau2", su2_xi2_tau2_case),
        case!("su2.xi3.tau", su2_xi3_tau_case),
        case!("su2.xi3.tau2", su2_xi3_tau2_case),
        case!("su2.product.tau", su2_product_tau_case),
        case!("su2.product.tau.squashed", su2_product_tau_squashed_case),
        case!("sl2.xi1.tau", sl2_xi1_tau_case),
        case!("sl2.xi1.tau2", sl2_xi1_tau2_case),
        case!("sl2.xi2.tau", sl2_xi2_tau_case),
        case!("sl2.xi2.tau2", sl2_xi2_tau2_case),
        case!("sl2.xi3.tau", sl2_xi3_tau_case),
        case!("sl2.xi3.tau2", sl2_xi3_tau2_case),
        case!("sl2.product.tau", sl2_product_tau_case),
    ]
}
