//! The case catalog: one entry per condition branch of the classification,
//! with on-locus samplers, free samplers and decidable conditions.
//!
//! Free samplers mix plain uniform draws with delegated on-locus draws so the
//! completeness direction exercises both sides of each condition.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{
    any_branch, branch, CaseSample, CondStatus, EquivalenceCombo, EquivalenceDraw, Expected,
    TheoremCase,
};
use crate::algebra::{catalog as algebra_catalog, AlgebraId};
use crate::connection::MetricLieAlgebra;
use crate::homomorphism::{
    e02_xi1, e02_xi2, e02_xi3, nil_generic, nil_singular, sl2_boost_factor, sl2_product,
    sl2_rot_factor, sol_xi1, sol_xi2, sol_xi3, su2_factor, su2_product, Homomorphism, HypPair,
    UnitPair,
};
use crate::linalg::Matrix3;
use crate::metric::Metric;
use crate::params::Params;
use crate::tension::Problem;

// --------------------------- small draw helpers ------------------------------

fn u(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// Uniform draw with magnitude at least 0.05 (clear of every guard margin).
fn nonzero(rng: &mut ChaCha8Rng, hi: f64) -> f64 {
    let v = u(rng, 0.05, hi);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn sign(rng: &mut ChaCha8Rng) -> f64 {
    if rng.gen_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

fn pget(p: &Params<f64>, k: &str) -> f64 {
    *p.get(k).unwrap_or_else(|| panic!("missing param {k}"))
}

fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.abs().max(b.abs()).max(c.abs())
}

fn make_problem(id: AlgebraId, g1: Metric<f64>, g2: Metric<f64>, xi: Homomorphism<f64>) -> Problem<f64> {
    Problem::new(
        MetricLieAlgebra::new(algebra_catalog(id), g1).expect("valid metric"),
        MetricLieAlgebra::new(algebra_catalog(id), g2).expect("valid metric"),
        xi,
    )
    .expect("catalog sample must instantiate")
}

// ------------------------------ case builder --------------------------------

struct Builder(TheoremCase);

fn case<F>(id: &'static str, group: AlgebraId, expected: Expected, sample_on: F) -> Builder
where
    F: Fn(&mut ChaCha8Rng) -> Option<CaseSample> + Send + Sync + 'static,
{
    Builder(TheoremCase {
        id,
        group,
        expected,
        note: None,
        sample_on: Box::new(sample_on),
        generic: None,
        bih_completeness: false,
    })
}

impl Builder {
    fn generic<F, C>(mut self, sampler: F, condition: C) -> Self
    where
        F: Fn(&mut ChaCha8Rng) -> Option<CaseSample> + Send + Sync + 'static,
        C: Fn(&Params<f64>) -> CondStatus + Send + Sync + 'static,
    {
        self.0.generic = Some((Box::new(sampler), Box::new(condition)));
        self
    }

    fn note(mut self, note: &'static str) -> Self {
        self.0.note = Some(note);
        self
    }

    fn bih_completeness(mut self) -> Self {
        self.0.bih_completeness = true;
        self
    }

    fn build(self) -> TheoremCase {
        self.0
    }
}

/// Every catalog case, in classification order. Ids follow the
/// `thm<sec>.<item>[.<branch>]` / `prop<sec>.<item>` scheme used by the
/// verification CLI.
pub fn theorem_catalog() -> Vec<TheoremCase> {
    let mut cases = Vec::new();
    cases.extend(nil_cases());
    cases.extend(e02_cases());
    cases.extend(sol_cases());
    cases.extend(su2_cases());
    cases.extend(sl2_cases());
    cases
}

// --------------------------------- nil --------------------------------------

fn nil_metrics(rng: &mut ChaCha8Rng) -> (f64, f64, Metric<f64>, Metric<f64>) {
    let l1 = u(rng, 0.2, 4.0);
    let l2 = u(rng, 0.2, 4.0);
    (
        l1,
        l2,
        Metric::from_diag(l1, l1, 1.0).unwrap(),
        Metric::from_diag(l2, l2, 1.0).unwrap(),
    )
}

fn nil_sample(rng: &mut ChaCha8Rng, p: [f64; 6]) -> CaseSample {
    let (l1, l2, g1, g2) = nil_metrics(rng);
    let xi = nil_generic(p[0], p[1], p[2], p[3], p[4], p[5]);
    CaseSample {
        problem: make_problem(AlgebraId::Nil, g1, g2, xi),
        params: Params::new([
            ("alpha1", p[0]),
            ("alpha2", p[1]),
            ("alpha3", p[2]),
            ("beta1", p[3]),
            ("beta2", p[4]),
            ("beta3", p[5]),
            ("lambda1", l1),
            ("lambda2", l2),
        ]),
    }
}

fn nil_cases() -> Vec<TheoremCase> {
    // harmonic iff the planar block annihilates the (alpha3, beta3) column:
    // alpha3 beta1 + beta3 beta2 = 0 and alpha3 alpha1 + beta3 alpha2 = 0
    let cond = |p: &Params<f64>| {
        let (a1, a2, a3) = (pget(p, "alpha1"), pget(p, "alpha2"), pget(p, "alpha3"));
        let (b1, b2, b3) = (pget(p, "beta1"), pget(p, "beta2"), pget(p, "beta3"));
        branch((a3 * b1 + b3 * b2).abs().max((a3 * a1 + b3 * a2).abs()), &[])
    };
    vec![
        case("thm3.1", AlgebraId::Nil, Expected::Harmonic, |rng| {
            let mut p: [f64; 6] = std::array::from_fn(|_| u(rng, -3.0, 3.0));
            p[2] = 0.0;
            p[5] = 0.0;
            Some(nil_sample(rng, p))
        })
        .generic(
            move |rng| {
                let mut p: [f64; 6] = std::array::from_fn(|_| u(rng, -3.0, 3.0));
                // occasionally land on the harmonic families
                if rng.gen_bool(0.25) {
                    p[2] = 0.0;
                    p[5] = 0.0;
                }
                Some(nil_sample(rng, p))
            },
            cond,
        )
        .bih_completeness()
        .build(),
        case("thm3.1.b", AlgebraId::Nil, Expected::Harmonic, |rng| {
            let (a, b) = (u(rng, -3.0, 3.0), u(rng, -3.0, 3.0));
            let (a3, b3) = (nonzero(rng, 3.0), nonzero(rng, 3.0));
            let (l1, l2, g1, g2) = nil_metrics(rng);
            let xi = nil_singular(a, b, a3, b3);
            Some(CaseSample {
                problem: make_problem(AlgebraId::Nil, g1, g2, xi),
                params: Params::new([
                    ("a", a),
                    ("b", b),
                    ("alpha3", a3),
                    ("beta3", b3),
                    ("lambda1", l1),
                    ("lambda2", l2),
                ]),
            })
        })
        .build(),
    ]
}

// --------------------------------- e02 --------------------------------------

struct E02Metrics {
    mu1: f64,
    mu2: f64,
    nu1: f64,
    nu2: f64,
}

impl E02Metrics {
    fn grams(&self) -> (Metric<f64>, Metric<f64>) {
        (
            Metric::from_diag(1.0, self.mu1, self.nu1).unwrap(),
            Metric::from_diag(1.0, self.mu2, self.nu2).unwrap(),
        )
    }
}

/// μ draws stay clear of 1 unless a branch pins μ = 1 exactly.
fn e02_metrics(rng: &mut ChaCha8Rng, mu1: Option<f64>, mu2: Option<f64>) -> E02Metrics {
    E02Metrics {
        mu1: mu1.unwrap_or_else(|| u(rng, 0.05, 0.95)),
        mu2: mu2.unwrap_or_else(|| u(rng, 0.05, 0.95)),
        nu1: u(rng, 0.2, 3.0),
        nu2: u(rng, 0.2, 3.0),
    }
}

fn e02_sample(
    m: E02Metrics,
    which: usize,
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    gamma: f64,
) -> Option<CaseSample> {
    let (g1, g2) = m.grams();
    let xi = match which {
        1 => e02_xi1(a, b, gamma).ok()?,
        2 => e02_xi2(alpha, beta, a, b),
        3 => e02_xi3(alpha, beta, a, b),
        _ => unreachable!(),
    };
    Some(CaseSample {
        problem: make_problem(AlgebraId::E02, g1, g2, xi),
        params: Params::new([
            ("alpha", alpha),
            ("beta", beta),
            ("a", a),
            ("b", b),
            ("gamma", gamma),
            ("mu1", m.mu1),
            ("mu2", m.mu2),
            ("nu1", m.nu1),
            ("nu2", m.nu2),
        ]),
    })
}

/// Harmonicity condition of the e02 column family:
/// (a≠0, b≠0, γ=0, μ2=1), (ab=0, (a,b)≠0, γ=0) or (a=b=0).
fn cond_e02_xi1(p: &Params<f64>) -> CondStatus {
    let (a, b, g, mu2) = (pget(p, "a"), pget(p, "b"), pget(p, "gamma"), pget(p, "mu2"));
    any_branch(&[
        branch(g.abs().max((mu2 - 1.0).abs()), &[a, b]),
        branch(g.abs().max(a.abs().min(b.abs())), &[a.abs().max(b.abs())]),
        branch(a.abs().max(b.abs()), &[]),
    ])
}

/// Harmonicity condition of the e02 planar families:
/// a = b = 0 together with α = 0, β = 0, μ1 = 1 or μ2 = 1.
fn cond_e02_planar(p: &Params<f64>) -> CondStatus {
    let (al, be) = (pget(p, "alpha"), pget(p, "beta"));
    let (a, b) = (pget(p, "a"), pget(p, "b"));
    let (mu1, mu2) = (pget(p, "mu1"), pget(p, "mu2"));
    let ab = a.abs().max(b.abs());
    any_branch(&[
        branch(ab.max(al.abs()), &[]),
        branch(ab.max(be.abs()), &[]),
        branch(ab.max((mu1 - 1.0).abs()), &[]),
        branch(ab.max((mu2 - 1.0).abs()), &[]),
    ])
}

/// Biharmonic-not-harmonic condition of the column family:
/// γ = 0, a² = b², ab ≠ 0 (and μ2 ≠ 1, where the map would be harmonic).
fn cond_e02_xi1_bnh(p: &Params<f64>) -> CondStatus {
    let (a, b, g, mu2) = (pget(p, "a"), pget(p, "b"), pget(p, "gamma"), pget(p, "mu2"));
    branch(g.abs().max((a * a - b * b).abs()), &[a * b, mu2 - 1.0])
}

/// Expected α² on the biharmonic locus of the planar families with
/// a² = b²μ2³.
fn e02_alpha_sq_expected(mu1: f64, mu2: f64, nu1: f64, nu2: f64, a: f64, b: f64) -> f64 {
    mu1 * b.abs() * (mu2 * mu2 * nu2 + a * a * (mu2 - 1.0) * (mu2 - 1.0))
        / (nu1 * (mu2 - 1.0) * (mu2 - 1.0) * (1.0 - mu1) * a.abs())
}

/// Biharmonic-not-harmonic condition of the planar families (μ1, μ2 < 1):
/// either a = b = 0, α² = β², αβ ≠ 0, or a² = b²μ2³ with the matched α².
fn cond_e02_planar_bnh(p: &Params<f64>) -> CondStatus {
    let (al, be) = (pget(p, "alpha"), pget(p, "beta"));
    let (a, b) = (pget(p, "a"), pget(p, "b"));
    let (mu1, mu2) = (pget(p, "mu1"), pget(p, "mu2"));
    let (nu1, nu2) = (pget(p, "nu1"), pget(p, "nu2"));
    let b1 = branch(
        max3(a, b, al * al - be * be),
        &[al * be, mu1 - 1.0, mu2 - 1.0],
    );
    let b2 = if a.abs() > f64::EPSILON
        && b.abs() > f64::EPSILON
        && (al * be).signum() == (a * b).signum()
    {
        let alsq = e02_alpha_sq_expected(mu1, mu2, nu1, nu2, a, b);
        branch(
            max3(
                a * a - b * b * mu2.powi(3),
                al * al - alsq,
                al.abs() - be.abs(),
            ),
            &[a * b, al * be, mu1 - 1.0, mu2 - 1.0],
        )
    } else {
        CondStatus::Fails
    };
    any_branch(&[b1, b2])
}

fn e02_free_planar(rng: &mut ChaCha8Rng, which: usize) -> Option<CaseSample> {
    // mixed draw: uniform parameters with occasional exact specials
    let mu1 = if rng.gen_bool(0.15) { Some(1.0) } else { None };
    let mu2 = if rng.gen_bool(0.15) { Some(1.0) } else { None };
    let m = e02_metrics(rng, mu1, mu2);
    let (mut a, mut b) = (u(rng, -3.0, 3.0), u(rng, -3.0, 3.0));
    if rng.gen_bool(0.35) {
        a = 0.0;
        b = 0.0;
    }
    let mut al = u(rng, -3.0, 3.0);
    let mut be = u(rng, -3.0, 3.0);
    if rng.gen_bool(0.2) {
        al = nonzero(rng, 3.0);
        be = sign(rng) * al;
    } else if rng.gen_bool(0.15) {
        if rng.gen_bool(0.5) {
            al = 0.0;
        } else {
            be = 0.0;
        }
    }
    e02_sample(m, which, al, be, a, b, 0.0)
}

fn e02_bnh_locus(rng: &mut ChaCha8Rng, which: usize, proof_variant: bool) -> Option<CaseSample> {
    let m = e02_metrics(rng, None, None);
    let eps = sign(rng);
    let b = nonzero(rng, 2.0);
    let a = if proof_variant {
        eps * b * m.mu2 * m.mu2.sqrt()
    } else {
        eps * b * m.mu2 * m.mu1.sqrt()
    };
    let alsq = if proof_variant {
        e02_alpha_sq_expected(m.mu1, m.mu2, m.nu1, m.nu2, a, b)
    } else {
        m.mu1.sqrt() * (m.mu2 * m.mu2 * m.nu2 + a * a * (m.mu2 - 1.0) * (m.mu2 - 1.0))
            / (m.mu2 * m.nu1 * (m.mu2 - 1.0) * (m.mu2 - 1.0) * (1.0 - m.mu1))
    };
    if alsq <= 0.0 {
        return None;
    }
    let al = alsq.sqrt();
    let be = eps * al;
    e02_sample(m, which, al, be, a, b, 0.0)
}

fn e02_cases() -> Vec<TheoremCase> {
    let mut out = Vec::new();

    // harmonic branches of the column family
    out.push(
        case("thm4.1.1.a", AlgebraId::E02, Expected::Harmonic, |rng| {
            let m = e02_metrics(rng, None, Some(1.0));
            e02_sample(m, 1, 0.0, 0.0, nonzero(rng, 3.0), nonzero(rng, 3.0), 0.0)
        })
        .generic(
            |rng| {
                let mu2 = if rng.gen_bool(0.3) { Some(1.0) } else { None };
                let m = e02_metrics(rng, None, mu2);
                let mut a = u(rng, -3.0, 3.0);
                let mut b = u(rng, -3.0, 3.0);
                let mut g = u(rng, -0.9, 0.9);
                if rng.gen_bool(0.3) {
                    g = 0.0;
                }
                if rng.gen_bool(0.2) {
                    if rng.gen_bool(0.5) {
                        a = 0.0;
                    } else {
                        b = 0.0;
                    }
                }
                if rng.gen_bool(0.15) {
                    a = 0.0;
                    b = 0.0;
                }
                e02_sample(m, 1, 0.0, 0.0, a, b, g)
            },
            cond_e02_xi1,
        )
        .build(),
    );
    out.push(
        case("thm4.1.1.b", AlgebraId::E02, Expected::Harmonic, |rng| {
            let m = e02_metrics(rng, None, None);
            let (a, b) = if rng.gen_bool(0.5) {
                (nonzero(rng, 3.0), 0.0)
            } else {
                (0.0, nonzero(rng, 3.0))
            };
            e02_sample(m, 1, 0.0, 0.0, a, b, 0.0)
        })
        .build(),
    );
    out.push(
        case("thm4.1.1.c", AlgebraId::E02, Expected::Harmonic, |rng| {
            let m = e02_metrics(rng, None, None);
            e02_sample(m, 1, 0.0, 0.0, 0.0, 0.0, u(rng, -0.9, 0.9))
        })
        .build(),
    );

    // harmonic branches of the planar families
    for (base, which) in [("thm4.1.2", 2usize), ("thm4.1.3", 3usize)] {
        let ids: [&'static str; 4] = match which {
            2 => ["thm4.1.2.a", "thm4.1.2.b", "thm4.1.2.c", "thm4.1.2.d"],
            _ => ["thm4.1.3.a", "thm4.1.3.b", "thm4.1.3.c", "thm4.1.3.d"],
        };
        let _ = base;
        for (k, id) in ids.into_iter().enumerate() {
            let sampler = move |rng: &mut ChaCha8Rng| {
                let (mu1, mu2) = match k {
                    2 => (Some(1.0), None),
                    3 => (None, Some(1.0)),
                    _ => (None, None),
                };
                let m = e02_metrics(rng, mu1, mu2);
                let (al, be) = match k {
                    0 => (0.0, u(rng, -3.0, 3.0)),
                    1 => (u(rng, -3.0, 3.0), 0.0),
                    _ => (nonzero(rng, 3.0), nonzero(rng, 3.0)),
                };
                e02_sample(m, which, al, be, 0.0, 0.0, 0.0)
            };
            let mut b = case(id, AlgebraId::E02, Expected::Harmonic, sampler);
            if k == 0 {
                b = b.generic(move |rng| e02_free_planar(rng, which), cond_e02_planar);
            }
            out.push(b.build());
        }
    }

    // biharmonic-not-harmonic: column family on the diagonal locus
    out.push(
        case("thm4.2.1", AlgebraId::E02, Expected::BiharmonicNotHarmonic, |rng| {
            let m = e02_metrics(rng, None, None);
            let b = nonzero(rng, 3.0);
            let a = sign(rng) * b;
            e02_sample(m, 1, 0.0, 0.0, a, b, 0.0)
        })
        .generic(
            |rng| {
                let m = e02_metrics(rng, None, None);
                let (mut a, mut b) = (u(rng, -3.0, 3.0), u(rng, -3.0, 3.0));
                let mut g = u(rng, -0.9, 0.9);
                if rng.gen_bool(0.3) {
                    g = 0.0;
                }
                if rng.gen_bool(0.25) {
                    b = nonzero(rng, 3.0);
                    a = sign(rng) * b;
                }
                e02_sample(m, 1, 0.0, 0.0, a, b, g)
            },
            cond_e02_xi1_bnh,
        )
        .build(),
    );

    // biharmonic-not-harmonic: planar families
    for (ids, which) in [
        (["thm4.2.2.a", "thm4.2.2.b", "thm4.2.2.c"], 2usize),
        (["thm4.2.3.a", "thm4.2.3.b", "thm4.2.3.c"], 3usize),
    ] {
        out.push(
            case(ids[0], AlgebraId::E02, Expected::BiharmonicNotHarmonic, move |rng| {
                let m = e02_metrics(rng, None, None);
                let al = nonzero(rng, 3.0);
                let be = sign(rng) * al;
                e02_sample(m, which, al, be, 0.0, 0.0, 0.0)
            })
            .generic(
                move |rng| {
                    if rng.gen_bool(0.3) {
                        let m = e02_metrics(rng, None, None);
                        let al = nonzero(rng, 3.0);
                        let be = sign(rng) * al;
                        e02_sample(m, which, al, be, 0.0, 0.0, 0.0)
                    } else if rng.gen_bool(0.3) {
                        e02_bnh_locus(rng, which, true)
                    } else {
                        e02_free_planar(rng, which)
                    }
                },
                cond_e02_planar_bnh,
            )
            .build(),
        );
        out.push(
            case(ids[1], AlgebraId::E02, Expected::BiharmonicNotHarmonic, move |rng| {
                e02_bnh_locus(rng, which, true)
            })
            .note("square-root constraint a = εbμ₂√μ₂ (a² = b²μ₂³)")
            .build(),
        );
        out.push(
            case(ids[2], AlgebraId::E02, Expected::Probe, move |rng| {
                e02_bnh_locus(rng, which, false)
            })
            .note("alternate square-root constraint a = εbμ₂√μ₁; tallied for comparison with the √μ₂ branch")
            .build(),
        );
    }
    out
}

// --------------------------------- sol --------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum SolPairing {
    P1,
    P2,
    P3,
    P4,
}

impl SolPairing {
    fn grams(self, rng: &mut ChaCha8Rng) -> (Metric<f64>, Metric<f64>, f64, f64, f64, f64) {
        let (nu1, nu2) = (u(rng, 0.2, 3.0), u(rng, 0.2, 3.0));
        let (mu1, mu2) = (1.0 + u(rng, 0.2, 2.5), 1.0 + u(rng, 0.2, 2.5));
        let nd = |mu: f64, nu: f64| {
            Metric::new(Matrix3::from_rows([
                [1.0, 1.0, 0.0],
                [1.0, mu, 0.0],
                [0.0, 0.0, nu],
            ]))
            .unwrap()
        };
        let d = |nu: f64| Metric::from_diag(1.0, 1.0, nu).unwrap();
        let (g1, g2) = match self {
            SolPairing::P1 => (d(nu1), d(nu2)),
            SolPairing::P2 => (d(nu1), nd(mu2, nu2)),
            SolPairing::P3 => (nd(mu1, nu1), d(nu2)),
            SolPairing::P4 => (nd(mu1, nu1), nd(mu2, nu2)),
        };
        (g1, g2, mu1, mu2, nu1, nu2)
    }
}

fn sol_sample(
    rng: &mut ChaCha8Rng,
    pairing: SolPairing,
    which: usize,
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    gamma: f64,
) -> Option<CaseSample> {
    let (g1, g2, mu1, mu2, nu1, nu2) = pairing.grams(rng);
    let xi = match which {
        1 => sol_xi1(a, b, gamma).ok()?,
        2 => sol_xi2(alpha, beta, a, b),
        3 => sol_xi3(alpha, beta, a, b),
        _ => unreachable!(),
    };
    Some(CaseSample {
        problem: make_problem(AlgebraId::Sol, g1, g2, xi),
        params: Params::new([
            ("alpha", alpha),
            ("beta", beta),
            ("a", a),
            ("b", b),
            ("gamma", gamma),
            ("mu1", mu1),
            ("mu2", mu2),
            ("nu1", nu1),
            ("nu2", nu2),
        ]),
    })
}

/// Per (pairing, family) harmonicity residual: the zero set of the planar
/// components together with the distinguished third-component locus.
fn sol_condition(pairing: SolPairing, which: usize, p: &Params<f64>) -> CondStatus {
    let (al, be) = (pget(p, "alpha"), pget(p, "beta"));
    let (a, b, g) = (pget(p, "a"), pget(p, "b"), pget(p, "gamma"));
    let (mu1, mu2) = (pget(p, "mu1"), pget(p, "mu2"));
    let ab = a.abs().max(b.abs());
    match (pairing, which) {
        (SolPairing::P1 | SolPairing::P3, 1) => any_branch(&[
            branch(ab, &[]),
            branch(g.abs().max((a * a - b * b).abs()), &[]),
        ]),
        (SolPairing::P2 | SolPairing::P4, 1) => any_branch(&[
            branch(ab, &[]),
            branch(g.abs().max((a * a - mu2 * b * b).abs()), &[]),
        ]),
        (SolPairing::P1, 2 | 3) => branch(ab.max((al * al - be * be).abs()), &[]),
        (SolPairing::P2, 2) => branch(ab.max((al * al - mu2 * be * be).abs()), &[]),
        (SolPairing::P2, 3) => branch(ab.max((be * be - mu2 * al * al).abs()), &[]),
        (SolPairing::P3, 2 | 3) => branch(ab.max((be * be - mu1 * al * al).abs()), &[]),
        (SolPairing::P4, 2) => branch(ab.max((al * al * mu1 - be * be * mu2).abs()), &[]),
        (SolPairing::P4, 3) => branch(ab.max((al * al * mu1 * mu2 - be * be).abs()), &[]),
        _ => unreachable!(),
    }
}

fn sol_free(rng: &mut ChaCha8Rng, pairing: SolPairing, which: usize) -> Option<CaseSample> {
    let (mut a, mut b) = (u(rng, -3.0, 3.0), u(rng, -3.0, 3.0));
    let (al, be) = (u(rng, -3.0, 3.0), u(rng, -3.0, 3.0));
    let mut g = u(rng, -0.9, 0.9);
    if rng.gen_bool(0.3) {
        g = 0.0;
    }
    if rng.gen_bool(0.3) {
        a = 0.0;
        b = 0.0;
    }
    sol_sample(rng, pairing, which, al, be, a, b, g)
}

fn sol_cases() -> Vec<TheoremCase> {
    let mut out = Vec::new();
    let pairings = [
        ("thm5.1.1", SolPairing::P1),
        ("thm5.1.2", SolPairing::P2),
        ("thm5.1.3", SolPairing::P3),
        ("thm5.1.4", SolPairing::P4),
    ];
    // branch ids are static strings; build the full table up front
    let ids: [[&'static str; 6]; 4] = [
        [
            "thm5.1.1.xi1.a",
            "thm5.1.1.xi1.b",
            "thm5.1.1.xi2",
            "thm5.1.1.xi3",
            "",
            "",
        ],
        [
            "thm5.1.2.xi1.a",
            "thm5.1.2.xi1.b",
            "thm5.1.2.xi2.a",
            "thm5.1.2.xi2.b",
            "thm5.1.2.xi3.a",
            "thm5.1.2.xi3.b",
        ],
        [
            "thm5.1.3.xi1.a",
            "thm5.1.3.xi1.b",
            "thm5.1.3.xi2.a",
            "thm5.1.3.xi2.b",
            "thm5.1.3.xi3.a",
            "thm5.1.3.xi3.b",
        ],
        [
            "thm5.1.4.xi1.a",
            "thm5.1.4.xi1.b",
            "thm5.1.4.xi2.a",
            "thm5.1.4.xi2.b",
            "thm5.1.4.xi3.a",
            "thm5.1.4.xi3.b",
        ],
    ];

    for (pi, (_base, pairing)) in pairings.into_iter().enumerate() {
        let table = ids[pi];

        // xi1.a: a = b = 0, gamma free
        out.push(
            case(table[0], AlgebraId::Sol, Expected::Harmonic, move |rng| {
                let g = u(rng, -0.9, 0.9);
                sol_sample(rng, pairing, 1, 0.0, 0.0, 0.0, 0.0, g)
            })
            .generic(
                move |rng| sol_free(rng, pairing, 1),
                move |p| sol_condition(pairing, 1, p),
            )
            .bih_completeness()
            .build(),
        );
        // xi1.b: gamma = 0 and the third-component locus
        out.push(
            case(table[1], AlgebraId::Sol, Expected::Harmonic, move |rng| {
                let b = nonzero(rng, 2.0);
                // needs the metric draw first for mu2-dependent loci; draw a
                // placeholder then synthesize a via the drawn mu2
                let (g1, g2, mu1, mu2, nu1, nu2) = pairing.grams(rng);
                let a = match pairing {
                    SolPairing::P1 | SolPairing::P3 => sign(rng) * b,
                    SolPairing::P2 | SolPairing::P4 => sign(rng) * mu2.sqrt() * b,
                };
                let xi = sol_xi1(a, b, 0.0).ok()?;
                Some(CaseSample {
                    problem: make_problem(AlgebraId::Sol, g1, g2, xi),
                    params: Params::new([
                        ("alpha", 0.0),
                        ("beta", 0.0),
                        ("a", a),
                        ("b", b),
                        ("gamma", 0.0),
                        ("mu1", mu1),
                        ("mu2", mu2),
                        ("nu1", nu1),
                        ("nu2", nu2),
                    ]),
                })
            })
            .build(),
        );

        for (offset, which) in [(2usize, 2usize), (4usize, 3usize)] {
            let (id_a, id_b) = if pairing == SolPairing::P1 {
                // single printed branch for the diagonal pairing
                (table[2 + (which - 2)], "")
            } else {
                (table[offset], table[offset + 1])
            };

            if pairing == SolPairing::P1 {
                out.push(
                    case(id_a, AlgebraId::Sol, Expected::Harmonic, move |rng| {
                        let al = u(rng, -3.0, 3.0);
                        let be = sign(rng) * al;
                        sol_sample(rng, pairing, which, al, be, 0.0, 0.0, 0.0)
                    })
                    .generic(
                        move |rng| {
                            let mut s = sol_free(rng, pairing, which)?;
                            if rng.gen_bool(0.25) {
                                // land on the locus
                                let al = pget(&s.params, "alpha");
                                let be = sign(rng) * al;
                                s = sol_sample(rng, pairing, which, al, be, 0.0, 0.0, 0.0)?;
                            }
                            Some(s)
                        },
                        move |p| sol_condition(pairing, which, p),
                    )
                    .bih_completeness()
                    .build(),
                );
                continue;
            }

            // zero branch
            out.push(
                case(id_a, AlgebraId::Sol, Expected::Harmonic, move |rng| {
                    sol_sample(rng, pairing, which, 0.0, 0.0, 0.0, 0.0, 0.0)
                })
                .build(),
            );
            // ratio branch; condition differs per (pairing, family)
            let mut b = case(id_b, AlgebraId::Sol, Expected::Harmonic, move |rng| {
                let (g1, g2, mu1, mu2, nu1, nu2) = pairing.grams(rng);
                let (al, be) = match (pairing, which) {
                    (SolPairing::P2, 2) => {
                        let be = nonzero(rng, 2.0);
                        (sign(rng) * mu2.sqrt() * be, be)
                    }
                    (SolPairing::P2, 3) => {
                        let al = nonzero(rng, 2.0);
                        (al, sign(rng) * mu2.sqrt() * al)
                    }
                    (SolPairing::P3, _) => {
                        let al = nonzero(rng, 2.0);
                        (al, sign(rng) * mu1.sqrt() * al)
                    }
                    (SolPairing::P4, 2) => {
                        let al = nonzero(rng, 2.0);
                        (al, sign(rng) * (mu1 / mu2).sqrt() * al)
                    }
                    (SolPairing::P4, 3) => {
                        let al = nonzero(rng, 2.0);
                        (al, sign(rng) * (mu1 * mu2).sqrt() * al)
                    }
                    _ => unreachable!(),
                };
                let xi = match which {
                    2 => sol_xi2(al, be, 0.0, 0.0),
                    _ => sol_xi3(al, be, 0.0, 0.0),
                };
                Some(CaseSample {
                    problem: make_problem(AlgebraId::Sol, g1, g2, xi),
                    params: Params::new([
                        ("alpha", al),
                        ("beta", be),
                        ("a", 0.0),
                        ("b", 0.0),
                        ("gamma", 0.0),
                        ("mu1", mu1),
                        ("mu2", mu2),
                        ("nu1", nu1),
                        ("nu2", nu2),
                    ]),
                })
            })
            .generic(
                move |rng| sol_free(rng, pairing, which),
                move |p| sol_condition(pairing, which, p),
            )
            .bih_completeness();
            if pairing == SolPairing::P2 && which == 3 {
                b = b.note(
                    "locus encoded from the verified tension formula: α²μ₂ = β², \
                     i.e. μ₂ = β²/α², the reciprocal of the listed ratio",
                );
            }
            out.push(b.build());
        }
    }
    out
}

// --------------------------------- su2 --------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum Pat {
    /// 0 < ν < μ < λ with margins.
    Gen,
    /// ν = μ < λ.
    MuNu,
    /// ν < μ = λ.
    LamMu,
    /// λ = μ = ν.
    Round,
}

fn su2_metric(rng: &mut ChaCha8Rng, pat: Pat) -> (f64, f64, f64) {
    let step = |rng: &mut ChaCha8Rng| u(rng, 0.25, 1.2);
    match pat {
        Pat::Gen => {
            let n = step(rng);
            let m = n + step(rng);
            (m + step(rng), m, n)
        }
        Pat::MuNu => {
            let n = step(rng);
            (n + step(rng), n, n)
        }
        Pat::LamMu => {
            let n = step(rng);
            let m = n + step(rng);
            (m, m, n)
        }
        Pat::Round => {
            let v = u(rng, 0.3, 2.0);
            (v, v, v)
        }
    }
}

type Pair = UnitPair<f64>;

fn free_pair(rng: &mut ChaCha8Rng) -> Pair {
    UnitPair::from_angle(u(rng, -3.2, 3.2))
}

/// Exact kπ/2 turn (the sin 2a = 0 locus).
fn quarter(rng: &mut ChaCha8Rng) -> Pair {
    UnitPair::quarter_turn(rng.gen_range(0i32..4))
}

/// Exact kπ turn (the sin a = 0 locus).
fn half_turn(rng: &mut ChaCha8Rng) -> Pair {
    UnitPair::quarter_turn(2 * rng.gen_range(0i32..2))
}

/// Exact π/2 + kπ turn (the cos a = 0 locus).
fn cos_zero_pair(rng: &mut ChaCha8Rng) -> Pair {
    UnitPair::quarter_turn(1 + 2 * rng.gen_range(0i32..2))
}

fn su2_prod_sample(
    rng: &mut ChaCha8Rng,
    pat1: Pat,
    pat2: Pat,
    pa: &Pair,
    pb: &Pair,
    pc: &Pair,
) -> CaseSample {
    let (l1, m1, n1) = su2_metric(rng, pat1);
    let (l2, m2, n2) = su2_metric(rng, pat2);
    let xi = su2_product(pa, pb, pc);
    CaseSample {
        problem: make_problem(
            AlgebraId::Su2,
            Metric::from_diag(l1, m1, n1).unwrap(),
            Metric::from_diag(l2, m2, n2).unwrap(),
            xi,
        ),
        params: Params::new([
            ("a", pa.angle()),
            ("b", pb.angle()),
            ("c", pc.angle()),
            ("lambda1", l1),
            ("mu1", m1),
            ("nu1", n1),
            ("lambda2", l2),
            ("mu2", m2),
            ("nu2", n2),
        ]),
    }
}

type AngleBranch = fn(&mut ChaCha8Rng) -> (Pair, Pair, Pair);

fn ang_free(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), free_pair(rng), free_pair(rng))
}

/// cos b = 0, sin b = 1, sin(2(a−c)) = 0.
fn ang_bpos_rel(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    let c = free_pair(rng);
    let a = quarter(rng).compose(&c);
    (a, UnitPair::quarter_turn(1), c)
}

/// cos b = 0, sin b = −1, sin(2(a+c)) = 0.
fn ang_bneg_rel(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    let c = free_pair(rng);
    let a = quarter(rng).compose(&c.conjugate());
    (a, UnitPair::quarter_turn(3), c)
}

/// sin b = 0, sin 2c = 0, sin 2a = 0.
fn ang_sb0_s2c0_s2a0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (quarter(rng), half_turn(rng), quarter(rng))
}

/// sin b = 0, sin a = 0, c free.
fn ang_sb0_sa0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (half_turn(rng), half_turn(rng), free_pair(rng))
}

/// sin b = 0, sin 2c = 0, cos a = 0.
fn ang_sb0_s2c0_ca0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (cos_zero_pair(rng), half_turn(rng), quarter(rng))
}

/// sin b = 0, sin a = 0, sin 2c = 0.
fn ang_sb0_sa0_s2c0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (half_turn(rng), half_turn(rng), quarter(rng))
}

/// cos b = 0, a and c free.
fn ang_cb0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), cos_zero_pair(rng), free_pair(rng))
}

/// sin b = 0, sin 2c = 0, a free.
fn ang_sb0_s2c0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), half_turn(rng), quarter(rng))
}

/// sin b = 0, sin 2a = 0, c free.
fn ang_sb0_s2a0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (quarter(rng), half_turn(rng), free_pair(rng))
}

/// cos a = 0, b and c free.
fn ang_ca0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (cos_zero_pair(rng), free_pair(rng), free_pair(rng))
}

/// sin 2b = 0, a and c free.
fn ang_s2b0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), quarter(rng), free_pair(rng))
}

/// cos c = 0, a and b free.
fn ang_cc0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), free_pair(rng), cos_zero_pair(rng))
}

/// sin b = sin c = 0, a free.
fn ang_sb0_sc0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (free_pair(rng), half_turn(rng), half_turn(rng))
}

/// cos c = 0, sin 2a = 0, b free.
fn ang_cc0_s2a0(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    (quarter(rng), free_pair(rng), cos_zero_pair(rng))
}

/// The phase-locked locus cos a = (−1)^k sin c / D,
/// sin a = (−1)^{k+1} sin b cos c / D with D = √(sin²c + sin²b cos²c).
fn ang_phase_locked(rng: &mut ChaCha8Rng) -> (Pair, Pair, Pair) {
    let b = sign(rng) * u(rng, 0.3, 1.2);
    let c = sign(rng) * u(rng, 0.3, 1.2);
    let d = (c.sin().powi(2) + b.sin().powi(2) * c.cos().powi(2)).sqrt();
    let par = sign(rng);
    let a = UnitPair {
        cos: par * c.sin() / d,
        sin: -par * b.sin() * c.cos() / d,
    };
    (a, UnitPair::from_angle(b), UnitPair::from_angle(c))
}

// condition pieces for the product cases
fn c_bpos(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    branch(
        max3(b.cos(), b.sin() - 1.0, (2.0 * (a - c)).sin()),
        &[],
    )
}

fn c_bneg(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    branch(
        max3(b.cos(), b.sin() + 1.0, (2.0 * (a + c)).sin()),
        &[],
    )
}

fn cond61_1(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    any_branch(&[
        c_bpos(p),
        c_bneg(p),
        branch(max3(b.sin(), (2.0 * c).sin(), (2.0 * a).sin()), &[]),
    ])
}

fn cond61_2(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    any_branch(&[
        c_bpos(p),
        c_bneg(p),
        branch(b.sin().abs().max(a.sin().abs()), &[]),
        branch(max3(b.sin(), (2.0 * c).sin(), a.cos()), &[]),
    ])
}

fn cond61_3(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    any_branch(&[
        c_bpos(p),
        c_bneg(p),
        branch(max3(b.sin(), a.sin(), (2.0 * c).sin()), &[]),
        branch(max3(b.sin(), a.cos(), (2.0 * c).sin()), &[]),
    ])
}

fn cond61_4(p: &Params<f64>) -> CondStatus {
    let (b, c) = (pget(p, "b"), pget(p, "c"));
    any_branch(&[
        branch(b.cos().abs(), &[]),
        branch(b.sin().abs().max((2.0 * c).sin().abs()), &[]),
    ])
}

fn cond61_5(p: &Params<f64>) -> CondStatus {
    let (a, b) = (pget(p, "a"), pget(p, "b"));
    any_branch(&[
        branch(b.cos().abs(), &[]),
        branch(b.sin().abs().max((2.0 * a).sin().abs()), &[]),
    ])
}

fn cond61_6(p: &Params<f64>) -> CondStatus {
    let (a, b) = (pget(p, "a"), pget(p, "b"));
    any_branch(&[
        branch(b.cos().abs(), &[]),
        branch(a.cos().abs(), &[]),
        branch(b.sin().abs().max(a.sin().abs()), &[]),
    ])
}

fn cond61_7(p: &Params<f64>) -> CondStatus {
    branch((2.0 * pget(p, "b")).sin().abs(), &[])
}

fn cond61_8(p: &Params<f64>) -> CondStatus {
    let (b, c) = (pget(p, "b"), pget(p, "c"));
    any_branch(&[
        branch((b.cos() * c.cos()).abs(), &[]),
        branch(b.sin().abs().max(c.sin().abs()), &[]),
    ])
}

fn cond61_9(p: &Params<f64>) -> CondStatus {
    let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
    let locked = {
        let d = (c.sin().powi(2) + b.sin().powi(2) * c.cos().powi(2)).sqrt();
        if d < super::BOUNDARY_MARGIN {
            CondStatus::NearBoundary
        } else {
            let r = [1.0f64, -1.0]
                .into_iter()
                .map(|par| {
                    (a.cos() - par * c.sin() / d)
                        .abs()
                        .max((a.sin() + par * b.sin() * c.cos() / d).abs())
                })
                .fold(f64::INFINITY, f64::min);
            branch(r, &[b.cos(), c.cos()])
        }
    };
    any_branch(&[
        c_bpos(p),
        c_bneg(p),
        branch(c.cos().abs().max((2.0 * a).sin().abs()), &[]),
        branch(b.sin().abs().max(c.sin().abs()), &[]),
        locked,
    ])
}

/// Builds the product cases of one metric-pattern item.
fn su2_item(
    ids: &'static [&'static str],
    pat1: Pat,
    pat2: Pat,
    branches: &'static [AngleBranch],
    cond: fn(&Params<f64>) -> CondStatus,
    note: Option<&'static str>,
) -> Vec<TheoremCase> {
    assert_eq!(ids.len(), branches.len());
    let mut out = Vec::new();
    for (k, id) in ids.iter().enumerate() {
        let br = branches[k];
        let mut b = case(id, AlgebraId::Su2, Expected::Harmonic, move |rng| {
            let (pa, pb, pc) = br(rng);
            Some(su2_prod_sample(rng, pat1, pat2, &pa, &pb, &pc))
        });
        if k == 0 {
            b = b.generic(
                move |rng| {
                    let (pa, pb, pc) = if rng.gen_bool(0.5) {
                        let pick = rng.gen_range(0..branches.len());
                        branches[pick](rng)
                    } else {
                        ang_free(rng)
                    };
                    Some(su2_prod_sample(rng, pat1, pat2, &pa, &pb, &pc))
                },
                cond,
            );
        }
        if let Some(n) = note {
            if k == 0 {
                b = b.note(n);
            }
        }
        out.push(b.build());
    }
    out
}

fn su2_factor_sample(
    rng: &mut ChaCha8Rng,
    axis: usize,
    pat1: Pat,
    pat2: Pat,
    pair: &Pair,
) -> CaseSample {
    let (l1, m1, n1) = su2_metric(rng, pat1);
    let (l2, m2, n2) = su2_metric(rng, pat2);
    CaseSample {
        problem: make_problem(
            AlgebraId::Su2,
            Metric::from_diag(l1, m1, n1).unwrap(),
            Metric::from_diag(l2, m2, n2).unwrap(),
            su2_factor(axis, pair),
        ),
        params: Params::new([
            ("a", pair.angle()),
            ("lambda1", l1),
            ("mu1", m1),
            ("nu1", n1),
            ("lambda2", l2),
            ("mu2", m2),
            ("nu2", n2),
        ]),
    }
}

fn su2_cases() -> Vec<TheoremCase> {
    let mut out = Vec::new();

    // single factors: degenerate-metric branches and the generic loci.
    // factor axes pair with the metric entries they mix: xi1 ~ (mu, nu),
    // xi2 ~ (lambda, nu) [round when equal], xi3 ~ (lambda, mu).
    struct FactorItem {
        harmonic_ids: [&'static str; 2],
        locus_ids: [&'static str; 2],
        axis: usize,
        eq_pat: Pat,
    }
    let items = [
        FactorItem {
            harmonic_ids: ["prop6.1.1.a", "prop6.1.1.b"],
            locus_ids: ["prop6.1.2.h", "prop6.1.2.bnh"],
            axis: 1,
            eq_pat: Pat::MuNu,
        },
        FactorItem {
            harmonic_ids: ["prop6.1.3.a", "prop6.1.3.b"],
            locus_ids: ["prop6.1.4.h", "prop6.1.4.bnh"],
            axis: 2,
            eq_pat: Pat::Round,
        },
        FactorItem {
            harmonic_ids: ["prop6.1.5.a", "prop6.1.5.b"],
            locus_ids: ["prop6.1.6.h", "prop6.1.6.bnh"],
            axis: 3,
            eq_pat: Pat::LamMu,
        },
    ];
    for item in items {
        let axis = item.axis;
        let eq = item.eq_pat;
        // equal metric entries on the target side, then the source side
        out.push(
            case(item.harmonic_ids[0], AlgebraId::Su2, Expected::Harmonic, move |rng| {
                let pair = free_pair(rng);
                Some(su2_factor_sample(rng, axis, Pat::Gen, eq, &pair))
            })
            .build(),
        );
        out.push(
            case(item.harmonic_ids[1], AlgebraId::Su2, Expected::Harmonic, move |rng| {
                let pair = free_pair(rng);
                Some(su2_factor_sample(rng, axis, eq, Pat::Gen, &pair))
            })
            .build(),
        );
        // generic metrics: harmonic iff sin 2a = 0
        out.push(
            case(item.locus_ids[0], AlgebraId::Su2, Expected::Harmonic, move |rng| {
                let pair = quarter(rng);
                Some(su2_factor_sample(rng, axis, Pat::Gen, Pat::Gen, &pair))
            })
            .generic(
                move |rng| {
                    let pair = if rng.gen_bool(0.4) {
                        quarter(rng)
                    } else {
                        free_pair(rng)
                    };
                    Some(su2_factor_sample(rng, axis, Pat::Gen, Pat::Gen, &pair))
                },
                |p| branch((2.0 * pget(p, "a")).sin().abs(), &[]),
            )
            .build(),
        );
        // generic metrics: biharmonic-not-harmonic iff cos²a = ½
        out.push(
            case(
                item.locus_ids[1],
                AlgebraId::Su2,
                Expected::BiharmonicNotHarmonic,
                move |rng| {
                    let pair =
                        UnitPair::from_angle(std::f64::consts::FRAC_PI_4).compose(&quarter(rng));
                    Some(su2_factor_sample(rng, axis, Pat::Gen, Pat::Gen, &pair))
                },
            )
            .generic(
                move |rng| {
                    let pair = if rng.gen_bool(0.4) {
                        UnitPair::from_angle(std::f64::consts::FRAC_PI_4).compose(&quarter(rng))
                    } else {
                        free_pair(rng)
                    };
                    Some(su2_factor_sample(rng, axis, Pat::Gen, Pat::Gen, &pair))
                },
                |p| branch((pget(p, "a").cos().powi(2) - 0.5).abs(), &[]),
            )
            .build(),
        );
    }

    // product items
    out.extend(su2_item(
        &["thm6.1.1.i", "thm6.1.1.ii", "thm6.1.1.iii"],
        Pat::Gen,
        Pat::Gen,
        &[ang_bpos_rel, ang_bneg_rel, ang_sb0_s2c0_s2a0],
        cond61_1,
        Some("the two listed metric-ordering hypotheses coincide; implemented once"),
    ));
    out.extend(su2_item(
        &["thm6.1.2.i", "thm6.1.2.ii", "thm6.1.2.iii", "thm6.1.2.iv"],
        Pat::Gen,
        Pat::MuNu,
        &[ang_bpos_rel, ang_bneg_rel, ang_sb0_sa0, ang_sb0_s2c0_ca0],
        cond61_2,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.3.i", "thm6.1.3.ii", "thm6.1.3.iii", "thm6.1.3.iv"],
        Pat::LamMu,
        Pat::Gen,
        &[ang_bpos_rel, ang_bneg_rel, ang_sb0_sa0_s2c0, ang_sb0_s2c0_ca0],
        cond61_3,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.4.a", "thm6.1.4.b"],
        Pat::Gen,
        Pat::LamMu,
        &[ang_cb0, ang_sb0_s2c0],
        cond61_4,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.5.a", "thm6.1.5.b"],
        Pat::MuNu,
        Pat::Gen,
        &[ang_cb0, ang_sb0_s2a0],
        cond61_5,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.6.a", "thm6.1.6.b", "thm6.1.6.c"],
        Pat::MuNu,
        Pat::MuNu,
        &[ang_cb0, ang_ca0, ang_sb0_sa0],
        cond61_6,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.7"],
        Pat::MuNu,
        Pat::LamMu,
        &[ang_s2b0],
        cond61_7,
        None,
    ));
    out.extend(su2_item(
        &["thm6.1.8.a", "thm6.1.8.b", "thm6.1.8.c"],
        Pat::LamMu,
        Pat::LamMu,
        &[ang_cb0, ang_cc0, ang_sb0_sc0],
        cond61_8,
        None,
    ));
    out.extend(su2_item(
        &[
            "thm6.1.9.i",
            "thm6.1.9.ii",
            "thm6.1.9.iii",
            "thm6.1.9.iv",
            "thm6.1.9.v",
        ],
        Pat::LamMu,
        Pat::MuNu,
        &[
            ang_bpos_rel,
            ang_bneg_rel,
            ang_cc0_s2a0,
            ang_sb0_sc0,
            ang_phase_locked,
        ],
        cond61_9,
        None,
    ));

    // the squashed-metric biharmonic-not-harmonic example
    out.push(
        case(
            "example6.1",
            AlgebraId::Su2,
            Expected::BiharmonicNotHarmonic,
            |rng| {
                let q = 0.5f64.powf(0.25);
                let pa = UnitPair {
                    cos: q,
                    sin: (1.0 - q * q).sqrt(),
                };
                let pb = pa.clone();
                let pc = free_pair(rng);
                let n1 = u(rng, 0.25, 1.2);
                let l1 = n1 + u(rng, 0.25, 1.2);
                let m2 = u(rng, 0.25, 1.2);
                let l2 = m2 + u(rng, 0.25, 1.2);
                let xi = su2_product(&pa, &pb, &pc);
                Some(CaseSample {
                    problem: make_problem(
                        AlgebraId::Su2,
                        Metric::from_diag(l1, n1, n1).unwrap(),
                        Metric::from_diag(l2, m2, m2).unwrap(),
                        xi,
                    ),
                    params: Params::new([
                        ("a", pa.angle()),
                        ("b", pb.angle()),
                        ("c", pc.angle()),
                        ("lambda1", l1),
                        ("mu1", n1),
                        ("nu1", n1),
                        ("lambda2", l2),
                        ("mu2", m2),
                        ("nu2", m2),
                    ]),
                })
            },
        )
        .note("cos a = cos b = 2^(-1/4) with both metrics equal on the last two axes")
        .build(),
    );

    // bi-invariant metric on either side makes every automorphism harmonic
    for (id, round_first) in [("prop.bi.1", true), ("prop.bi.2", false)] {
        out.push(
            case(id, AlgebraId::Su2, Expected::Harmonic, move |rng| {
                let (pat1, pat2) = if round_first {
                    (Pat::Round, Pat::Gen)
                } else {
                    (Pat::Gen, Pat::Round)
                };
                let (pa, pb, pc) = ang_free(rng);
                Some(su2_prod_sample(rng, pat1, pat2, &pa, &pb, &pc))
            })
            .build(),
        );
    }
    out
}

// --------------------------------- sl2 --------------------------------------

fn sl2_metric(rng: &mut ChaCha8Rng, lam_eq_mu: bool) -> (f64, f64, f64) {
    let l = u(rng, 0.3, 1.5);
    let m = if lam_eq_mu { l } else { l + u(rng, 0.25, 1.2) };
    (l, m, u(rng, 0.2, 2.0))
}

fn sl2_boost_sample(rng: &mut ChaCha8Rng, axis: usize, a: f64) -> CaseSample {
    let (l1, m1, n1) = sl2_metric(rng, false);
    let (l2, m2, n2) = sl2_metric(rng, false);
    CaseSample {
        problem: make_problem(
            AlgebraId::Sl2,
            Metric::from_diag(l1, m1, n1).unwrap(),
            Metric::from_diag(l2, m2, n2).unwrap(),
            sl2_boost_factor(axis, &HypPair::from_angle(a)),
        ),
        params: Params::new([
            ("a", a),
            ("lambda1", l1),
            ("mu1", m1),
            ("nu1", n1),
            ("lambda2", l2),
            ("mu2", m2),
            ("nu2", n2),
        ]),
    }
}

fn sl2_rot_sample(
    rng: &mut ChaCha8Rng,
    lam_eq_mu1: bool,
    lam_eq_mu2: bool,
    pair: &Pair,
) -> CaseSample {
    let (l1, m1, n1) = sl2_metric(rng, lam_eq_mu1);
    let (l2, m2, n2) = sl2_metric(rng, lam_eq_mu2);
    CaseSample {
        problem: make_problem(
            AlgebraId::Sl2,
            Metric::from_diag(l1, m1, n1).unwrap(),
            Metric::from_diag(l2, m2, n2).unwrap(),
            sl2_rot_factor(pair),
        ),
        params: Params::new([
            ("a", pair.angle()),
            ("lambda1", l1),
            ("mu1", m1),
            ("nu1", n1),
            ("lambda2", l2),
            ("mu2", m2),
            ("nu2", n2),
        ]),
    }
}

fn sl2_cases() -> Vec<TheoremCase> {
    let mut out = Vec::new();

    // boosts are harmonic (and biharmonic) only at the identity
    for (id, axis) in [("prop7.1.1", 1usize), ("prop7.1.2", 2usize)] {
        out.push(
            case(id, AlgebraId::Sl2, Expected::Harmonic, move |rng| {
                Some(sl2_boost_sample(rng, axis, 0.0))
            })
            .generic(
                move |rng| {
                    let a = if rng.gen_bool(0.3) { 0.0 } else { u(rng, -2.5, 2.5) };
                    Some(sl2_boost_sample(rng, axis, a))
                },
                |p| branch(pget(p, "a").abs(), &[]),
            )
            .bih_completeness()
            .build(),
        );
    }

    // the rotation factor mirrors the su2 behaviour in lambda, mu
    out.push(
        case("prop7.1.3.a", AlgebraId::Sl2, Expected::Harmonic, |rng| {
            let pair = free_pair(rng);
            Some(sl2_rot_sample(rng, false, true, &pair))
        })
        .build(),
    );
    out.push(
        case("prop7.1.3.b", AlgebraId::Sl2, Expected::Harmonic, |rng| {
            let pair = free_pair(rng);
            Some(sl2_rot_sample(rng, true, false, &pair))
        })
        .build(),
    );
    out.push(
        case("prop7.1.4.h", AlgebraId::Sl2, Expected::Harmonic, |rng| {
            let pair = quarter(rng);
            Some(sl2_rot_sample(rng, false, false, &pair))
        })
        .generic(
            |rng| {
                let pair = if rng.gen_bool(0.4) {
                    quarter(rng)
                } else {
                    free_pair(rng)
                };
                Some(sl2_rot_sample(rng, false, false, &pair))
            },
            |p| branch((2.0 * pget(p, "a")).sin().abs(), &[]),
        )
        .build(),
    );
    out.push(
        case(
            "prop7.1.4.bnh",
            AlgebraId::Sl2,
            Expected::BiharmonicNotHarmonic,
            |rng| {
                let pair =
                    UnitPair::from_angle(std::f64::consts::FRAC_PI_4).compose(&quarter(rng));
                Some(sl2_rot_sample(rng, false, false, &pair))
            },
        )
        .generic(
            |rng| {
                let pair = if rng.gen_bool(0.4) {
                    UnitPair::from_angle(std::f64::consts::FRAC_PI_4).compose(&quarter(rng))
                } else {
                    free_pair(rng)
                };
                Some(sl2_rot_sample(rng, false, false, &pair))
            },
            |p| branch((pget(p, "a").cos().powi(2) - 0.5).abs(), &[]),
        )
        .build(),
    );

    // full product: harmonic iff both boosts are trivial and the rotation is
    // harmonic
    fn sl2_prod_sample(
        rng: &mut ChaCha8Rng,
        pa: &Pair,
        hb: &HypPair<f64>,
        hc: &HypPair<f64>,
    ) -> CaseSample {
        let (l1, m1, n1) = sl2_metric(rng, false);
        let (l2, m2, n2) = sl2_metric(rng, false);
        let xi = sl2_product(pa, hb, hc);
        CaseSample {
            problem: make_problem(
                AlgebraId::Sl2,
                Metric::from_diag(l1, m1, n1).unwrap(),
                Metric::from_diag(l2, m2, n2).unwrap(),
                xi,
            ),
            params: Params::new([
                ("a", pa.angle()),
                ("b", hb.sinh.asinh()),
                ("c", hc.sinh.asinh()),
                ("lambda1", l1),
                ("mu1", m1),
                ("nu1", n1),
                ("lambda2", l2),
                ("mu2", m2),
                ("nu2", n2),
            ]),
        }
    }
    out.push(
        case("thm7.1", AlgebraId::Sl2, Expected::Harmonic, move |rng| {
            let pa = quarter(rng);
            Some(sl2_prod_sample(rng, &pa, &HypPair::one(), &HypPair::one()))
        })
        .generic(
            move |rng| {
                if rng.gen_bool(0.35) {
                    let pa = quarter(rng);
                    Some(sl2_prod_sample(rng, &pa, &HypPair::one(), &HypPair::one()))
                } else {
                    let pa = free_pair(rng);
                    let hb = HypPair::from_angle(u(rng, -2.5, 2.5));
                    let hc = HypPair::from_angle(u(rng, -2.5, 2.5));
                    Some(sl2_prod_sample(rng, &pa, &hb, &hc))
                }
            },
            |p| {
                let (a, b, c) = (pget(p, "a"), pget(p, "b"), pget(p, "c"));
                branch(max3(b.sinh(), c.sinh(), (2.0 * a).sin()), &[])
            },
        )
        .build(),
    );
    out
}

// --------------------------- equivalence combos ------------------------------

/// Family × metric-pairing draws for the biharmonic ⇔ harmonic sweeps. Every
/// combo also carries the free-parameter box and rebuild closure handed to
/// the bitension descent.
pub(crate) fn equivalence_combos(id: AlgebraId) -> Vec<EquivalenceCombo> {
    match id {
        AlgebraId::Nil => vec![
            nil_equiv_combo(),
            EquivalenceCombo {
                draw: Box::new(|rng| {
                    // singular family: descent over (a, b, alpha3, beta3)
                    let bounds = vec![(-3.0, 3.0), (-3.0, 3.0), (-3.0, 3.0), (-3.0, 3.0)];
                    let start: Vec<f64> = bounds.iter().map(|(lo, hi)| u(rng, *lo, *hi)).collect();
                    let l1 = u(rng, 0.3, 3.0);
                    let l2 = u(rng, 0.3, 3.0);
                    let rebuild = move |x: &[f64]| -> Option<CaseSample> {
                        let xi = nil_singular(x[0], x[1], x[2], x[3]);
                        Some(CaseSample {
                            problem: make_problem(
                                AlgebraId::Nil,
                                Metric::from_diag(l1, l1, 1.0).ok()?,
                                Metric::from_diag(l2, l2, 1.0).ok()?,
                                xi,
                            ),
                            params: Params::new([
                                ("a", x[0]),
                                ("b", x[1]),
                                ("alpha3", x[2]),
                                ("beta3", x[3]),
                            ]),
                        })
                    };
                    let sample = rebuild(&start).unwrap();
                    EquivalenceDraw {
                        sample,
                        start,
                        objective_box: bounds,
                        rebuild: Box::new(rebuild),
                    }
                }),
            },
        ],
        AlgebraId::Sol => {
            let mut combos = Vec::new();
            for pairing in [
                SolPairing::P1,
                SolPairing::P2,
                SolPairing::P3,
                SolPairing::P4,
            ] {
                for which in [1usize, 2, 3] {
                    combos.push(sol_equiv_combo(pairing, which));
                }
            }
            combos
        }
        AlgebraId::E02 => {
            let mut combos = Vec::new();
            for which in [1usize, 2, 3] {
                combos.push(e02_equiv_combo(which));
            }
            combos
        }
        _ => panic!("equivalence combos exist for nil, sol and e02 only"),
    }
}

fn nil_equiv_combo() -> EquivalenceCombo {
    EquivalenceCombo {
        draw: Box::new(|rng| {
            let bounds = vec![(-3.0, 3.0); 6];
            let start: Vec<f64> = bounds.iter().map(|(lo, hi)| u(rng, *lo, *hi)).collect();
            let l1 = u(rng, 0.3, 3.0);
            let l2 = u(rng, 0.3, 3.0);
            let rebuild = move |x: &[f64]| -> Option<CaseSample> {
                let xi = nil_generic(x[0], x[1], x[2], x[3], x[4], x[5]);
                Some(CaseSample {
                    problem: make_problem(
                        AlgebraId::Nil,
                        Metric::from_diag(l1, l1, 1.0).ok()?,
                        Metric::from_diag(l2, l2, 1.0).ok()?,
                        xi,
                    ),
                    params: Params::new([
                        ("alpha1", x[0]),
                        ("alpha2", x[1]),
                        ("alpha3", x[2]),
                        ("beta1", x[3]),
                        ("beta2", x[4]),
                        ("beta3", x[5]),
                    ]),
                })
            };
            let sample = rebuild(&start).unwrap();
            EquivalenceDraw {
                sample,
                start,
                objective_box: bounds,
                rebuild: Box::new(rebuild),
            }
        }),
    }
}

fn sol_equiv_combo(pairing: SolPairing, which: usize) -> EquivalenceCombo {
    EquivalenceCombo {
        draw: Box::new(move |rng| {
            let bounds: Vec<(f64, f64)> = if which == 1 {
                vec![(-3.0, 3.0), (-3.0, 3.0), (-0.9, 0.9)]
            } else {
                vec![(-3.0, 3.0); 4]
            };
            let start: Vec<f64> = bounds.iter().map(|(lo, hi)| u(rng, *lo, *hi)).collect();
            let (nu1, nu2) = (u(rng, 0.2, 3.0), u(rng, 0.2, 3.0));
            let (mu1, mu2) = (1.0 + u(rng, 0.2, 2.5), 1.0 + u(rng, 0.2, 2.5));
            let rebuild = move |x: &[f64]| -> Option<CaseSample> {
                let nd = |mu: f64, nu: f64| {
                    Metric::new(Matrix3::from_rows([
                        [1.0, 1.0, 0.0],
                        [1.0, mu, 0.0],
                        [0.0, 0.0, nu],
                    ]))
                    .ok()
                };
                let d = |nu: f64| Metric::from_diag(1.0, 1.0, nu).ok();
                let (g1, g2) = match pairing {
                    SolPairing::P1 => (d(nu1)?, d(nu2)?),
                    SolPairing::P2 => (d(nu1)?, nd(mu2, nu2)?),
                    SolPairing::P3 => (nd(mu1, nu1)?, d(nu2)?),
                    SolPairing::P4 => (nd(mu1, nu1)?, nd(mu2, nu2)?),
                };
                let (xi, params) = if which == 1 {
                    (
                        sol_xi1(x[0], x[1], x[2]).ok()?,
                        Params::new([("a", x[0]), ("b", x[1]), ("gamma", x[2])]),
                    )
                } else {
                    let xi = if which == 2 {
                        sol_xi2(x[0], x[1], x[2], x[3])
                    } else {
                        sol_xi3(x[0], x[1], x[2], x[3])
                    };
                    (
                        xi,
                        Params::new([
                            ("alpha", x[0]),
                            ("beta", x[1]),
                            ("a", x[2]),
                            ("b", x[3]),
                        ]),
                    )
                };
                Some(CaseSample {
                    problem: make_problem(AlgebraId::Sol, g1, g2, xi),
                    params,
                })
            };
            let sample = rebuild(&start).unwrap();
            EquivalenceDraw {
                sample,
                start,
                objective_box: bounds,
                rebuild: Box::new(rebuild),
            }
        }),
    }
}

fn e02_equiv_combo(which: usize) -> EquivalenceCombo {
    EquivalenceCombo {
        draw: Box::new(move |rng| {
            let bounds: Vec<(f64, f64)> = if which == 1 {
                vec![(-3.0, 3.0), (-3.0, 3.0), (-0.9, 0.9)]
            } else {
                vec![(-3.0, 3.0); 4]
            };
            let start: Vec<f64> = bounds.iter().map(|(lo, hi)| u(rng, *lo, *hi)).collect();
            let (mu1, mu2) = (u(rng, 0.05, 0.95), u(rng, 0.05, 0.95));
            let (nu1, nu2) = (u(rng, 0.2, 3.0), u(rng, 0.2, 3.0));
            let rebuild = move |x: &[f64]| -> Option<CaseSample> {
                let g1 = Metric::from_diag(1.0, mu1, nu1).ok()?;
                let g2 = Metric::from_diag(1.0, mu2, nu2).ok()?;
                let (xi, params) = if which == 1 {
                    (
                        e02_xi1(x[0], x[1], x[2]).ok()?,
                        Params::new([("a", x[0]), ("b", x[1]), ("gamma", x[2])]),
                    )
                } else {
                    let xi = if which == 2 {
                        e02_xi2(x[0], x[1], x[2], x[3])
                    } else {
                        e02_xi3(x[0], x[1], x[2], x[3])
                    };
                    (
                        xi,
                        Params::new([
                            ("alpha", x[0]),
                            ("beta", x[1]),
                            ("a", x[2]),
                            ("b", x[3]),
                        ]),
                    )
                };
                Some(CaseSample {
                    problem: make_problem(AlgebraId::E02, g1, g2, xi),
                    params,
                })
            };
            let sample = rebuild(&start).unwrap();
            EquivalenceDraw {
                sample,
                start,
                objective_box: bounds,
                rebuild: Box::new(rebuild),
            }
        }),
    }
}
