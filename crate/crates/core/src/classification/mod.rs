//! Classification case catalog and sweep verification.
//!
//! Each case encodes one condition branch of the harmonic/biharmonic
//! classification: a sampler that constructs parameters on the condition
//! locus, the expected verdict there, and (for the completeness direction) a
//! free sampler plus a decidable condition predicate. `verify_case` asserts
//! the expected verdict on `n` on-locus samples and, on `n` free samples,
//! that a positive verdict only ever occurs when the condition holds.
//! Samples within a margin of the condition boundary are discarded from the
//! free pool, not asserted.

mod catalog;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::search::{descend, Objective};
use crate::tension::analyze;

pub use catalog::theorem_catalog;

/// Margin around condition boundaries: free samples closer than this to the
/// condition set are logged and skipped rather than asserted.
pub const BOUNDARY_MARGIN: f64 = 1e-3;

/// Residual below which a constructed sample counts as lying on its locus.
pub const LOCUS_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    /// Condition samples must be harmonic (hence also biharmonic).
    Harmonic,
    /// Condition samples must be biharmonic and not harmonic.
    BiharmonicNotHarmonic,
    /// Condition samples are analyzed and tallied without assertion.
    Probe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondStatus {
    Holds,
    Fails,
    NearBoundary,
}

/// Combines disjunctive branches: any hold wins, boundaries taint.
pub fn any_branch(branches: &[CondStatus]) -> CondStatus {
    if branches.contains(&CondStatus::Holds) {
        CondStatus::Holds
    } else if branches.contains(&CondStatus::NearBoundary) {
        CondStatus::NearBoundary
    } else {
        CondStatus::Fails
    }
}

/// Grades a conjunctive branch: `eq_residual` collects equality residuals
/// (max-abs), `guards` collects quantities required to stay away from zero.
pub fn branch(eq_residual: f64, guards: &[f64]) -> CondStatus {
    if eq_residual <= LOCUS_EPS {
        if guards.iter().all(|g| g.abs() >= BOUNDARY_MARGIN) {
            CondStatus::Holds
        } else {
            CondStatus::NearBoundary
        }
    } else if eq_residual <= BOUNDARY_MARGIN {
        CondStatus::NearBoundary
    } else {
        CondStatus::Fails
    }
}

/// A parameter draw together with the problem it instantiates.
pub use crate::search::EvalPoint as CaseSample;

pub type Sampler = Box<dyn Fn(&mut ChaCha8Rng) -> Option<CaseSample> + Send + Sync>;
pub type Condition = Box<dyn Fn(&Params<f64>) -> CondStatus + Send + Sync>;

pub struct TheoremCase {
    pub id: &'static str,
    pub group: AlgebraId,
    pub expected: Expected,
    pub note: Option<&'static str>,
    pub(crate) sample_on: Sampler,
    pub(crate) generic: Option<(Sampler, Condition)>,
    /// When set, the completeness direction also asserts that a biharmonic
    /// verdict implies the condition (families where biharmonic ⇔ harmonic).
    pub(crate) bih_completeness: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub phase: &'static str,
    pub params: Vec<(String, f64)>,
    pub harmonic: bool,
    pub biharmonic: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ProbeTally {
    pub harmonic: usize,
    pub biharmonic_not_harmonic: usize,
    pub neither: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub id: String,
    pub expected: Expected,
    pub n_condition_samples: usize,
    pub n_generic_samples: usize,
    pub n_boundary_skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe_tally: Option<ProbeTally>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn case_seed(seed: u64, id: &str) -> u64 {
    // FNV-1a over the case id, mixed with the run seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in id.as_bytes() {
        h ^= u64::from(*byte);
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    h ^ seed
}

fn params_vec(p: &Params<f64>) -> Vec<(String, f64)> {
    p.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Runs one catalog case: `n` condition samples and (when the case carries a
/// generic direction) `n` free samples. Deterministic for a fixed seed.
pub fn verify_case(case: &TheoremCase, n: usize, seed: u64, tol: f64) -> Result<SweepResult> {
    if n == 0 {
        return Err(Error::InvalidInput("sample count must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, case.id));
    let mut draw_many = |sampler: &Sampler, n: usize| -> Result<Vec<CaseSample>> {
        let mut out = Vec::with_capacity(n);
        let mut misses = 0usize;
        while out.len() < n {
            match sampler(&mut rng) {
                Some(s) => out.push(s),
                None => {
                    misses += 1;
                    if misses > 1000 * n {
                        return Err(Error::SamplingInfeasible(case.id.to_string()));
                    }
                }
            }
        }
        Ok(out)
    };

    let on_locus = draw_many(&case.sample_on, n)?;
    let reports: Vec<_> = on_locus
        .par_iter()
        .map(|s| analyze(&s.problem, tol))
        .collect();

    let mut failures = Vec::new();
    let mut tally = ProbeTally::default();
    for (sample, rep) in on_locus.iter().zip(&reports) {
        match case.expected {
            Expected::Harmonic => {
                if !(rep.harmonic && rep.biharmonic) {
                    failures.push(Failure {
                        phase: "soundness",
                        params: params_vec(&sample.params),
                        harmonic: rep.harmonic,
                        biharmonic: rep.biharmonic,
                    });
                }
            }
            Expected::BiharmonicNotHarmonic => {
                if !(rep.biharmonic && !rep.harmonic) {
                    failures.push(Failure {
                        phase: "soundness",
                        params: params_vec(&sample.params),
                        harmonic: rep.harmonic,
                        biharmonic: rep.biharmonic,
                    });
                }
            }
            Expected::Probe => {
                if rep.harmonic {
                    tally.harmonic += 1;
                } else if rep.biharmonic {
                    tally.biharmonic_not_harmonic += 1;
                } else {
                    tally.neither += 1;
                }
            }
        }
    }

    let mut n_generic = 0;
    let mut n_boundary = 0;
    if let Some((free_sampler, condition)) = &case.generic {
        let free = draw_many(free_sampler, n)?;
        let free_reports: Vec<_> = free
            .par_iter()
            .map(|s| analyze(&s.problem, tol))
            .collect();
        for (sample, rep) in free.iter().zip(&free_reports) {
            match condition(&sample.params) {
                CondStatus::NearBoundary => n_boundary += 1,
                status => {
                    n_generic += 1;
                    let positive = match case.expected {
                        Expected::Harmonic => rep.harmonic,
                        Expected::BiharmonicNotHarmonic => rep.biharmonic && !rep.harmonic,
                        Expected::Probe => false,
                    };
                    let bih_leak =
                        case.bih_completeness && rep.biharmonic && status == CondStatus::Fails;
                    if (positive && status == CondStatus::Fails) || bih_leak {
                        failures.push(Failure {
                            phase: "completeness",
                            params: params_vec(&sample.params),
                            harmonic: rep.harmonic,
                            biharmonic: rep.biharmonic,
                        });
                    }
                }
            }
        }
    }

    failures.sort_by(|a, b| {
        a.params
            .iter()
            .map(|(_, v)| *v)
            .partial_cmp(b.params.iter().map(|(_, v)| *v))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(SweepResult {
        id: case.id.to_string(),
        expected: case.expected,
        n_condition_samples: on_locus.len(),
        n_generic_samples: n_generic,
        n_boundary_skipped: n_boundary,
        probe_tally: if case.expected == Expected::Probe {
            Some(tally)
        } else {
            None
        },
        failures,
        note: case.note.map(str::to_string),
    })
}

/// Biharmonic ⇔ harmonic sweep for an algebra: random problems across every
/// homomorphism family × metric pairing must report matching verdicts, and a
/// bitension-norm descent started from each draw must not terminate at a
/// biharmonic point that fails to be harmonic.
pub fn verify_equivalence(id: AlgebraId, n: usize, seed: u64, tol: f64) -> Result<SweepResult> {
    if !matches!(id, AlgebraId::Nil | AlgebraId::Sol) {
        return Err(Error::InvalidInput(format!(
            "equivalence sweep is part of the catalog only for nil and sol, got {id}"
        )));
    }
    Ok(equivalence_sweep(id, n, seed, tol))
}

/// The underlying sweep without the algebra restriction (used in tests to
/// demonstrate the existence of witnesses on e02).
pub fn equivalence_sweep(id: AlgebraId, n: usize, seed: u64, tol: f64) -> SweepResult {
    let combos = catalog::equivalence_combos(id);
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, &format!("{id}.equivalence")));
    let mut draws = Vec::with_capacity(n);
    for k in 0..n {
        let combo = &combos[k % combos.len()];
        draws.push((combo.draw)(&mut rng));
    }

    // A violation witness must be decisively two-sided: bitension at zero
    // within tolerance while the tension stays macroscopically nonzero.
    // Points drifting toward a harmonic locus shrink the bitension like the
    // cube of the tension and would otherwise masquerade as witnesses.
    let is_witness = |rep: &crate::tension::TensionReport<f64>| {
        rep.biharmonic && !rep.harmonic && rep.tau.max_abs() > 1e-3 * rep.tau_scale
    };
    let outcomes: Vec<Option<Failure>> = draws
        .par_iter()
        .map(|d| {
            // direct verdict agreement on the raw draw
            let rep = analyze(&d.sample.problem, tol);
            if is_witness(&rep) {
                return Some(Failure {
                    phase: "verdict-agreement",
                    params: params_vec(&d.sample.params),
                    harmonic: rep.harmonic,
                    biharmonic: rep.biharmonic,
                });
            }
            // bitension descent from this draw: any biharmonic endpoint must
            // be harmonic as well
            if let Some(end) = descend(
                &d.objective_box,
                Objective::BitensionNormSq,
                &*d.rebuild,
                &d.start,
                4000,
            ) {
                let rep = analyze(&end.problem, tol);
                if is_witness(&rep) {
                    return Some(Failure {
                        phase: "bitension-descent",
                        params: params_vec(&end.params),
                        harmonic: rep.harmonic,
                        biharmonic: rep.biharmonic,
                    });
                }
            }
            None
        })
        .collect();

    let failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    SweepResult {
        id: format!("{id}.equivalence"),
        expected: Expected::Harmonic,
        n_condition_samples: 0,
        n_generic_samples: n,
        n_boundary_skipped: 0,
        probe_tally: None,
        failures,
        note: Some("harmonic and biharmonic verdicts must coincide".to_string()),
    }
}

/// One family × metric pairing entry of the equivalence sweep.
pub(crate) struct EquivalenceCombo {
    pub(crate) draw: Box<dyn Fn(&mut ChaCha8Rng) -> EquivalenceDraw + Send + Sync>,
}

/// A random draw plus the box and rebuild closure handed to the bitension
/// descent.
pub(crate) struct EquivalenceDraw {
    pub(crate) sample: CaseSample,
    pub(crate) start: Vec<f64>,
    pub(crate) objective_box: Vec<(f64, f64)>,
    pub(crate) rebuild: Box<dyn Fn(&[f64]) -> Option<CaseSample> + Send + Sync>,
}
