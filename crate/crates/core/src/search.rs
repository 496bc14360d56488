//! Derivative-free minimization of tension/bitension norms over family
//! parameter boxes: a bounded Nelder–Mead simplex with deterministic random
//! restarts, plus a scan that looks for biharmonic-not-harmonic witnesses.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{catalog, AlgebraId};
use crate::connection::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::homomorphism::Family;
use crate::metric::MetricFamily;
use crate::params::Params;
use crate::tension::{tau, tau2_given, Problem};

/// Objective convergence tolerance (squared norm), so converged points carry
/// a field residual around 1e-6.
pub const DEFAULT_OBJECTIVE_TOL: f64 = 1e-12;
/// Simplex diameter below which a run is considered collapsed and restarted.
pub const SIMPLEX_COLLAPSE: f64 = 1e-10;
pub const DEFAULT_RESTARTS: usize = 20;
pub const DEFAULT_MAX_EVALS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    TensionNormSq,
    BitensionNormSq,
}

/// A rebuilt problem at a parameter vector, carrying the named parameters it
/// came from.
pub struct EvalPoint {
    pub problem: Problem<f64>,
    pub params: Params<f64>,
}

pub fn objective_value(obj: Objective, problem: &Problem<f64>) -> f64 {
    let t = tau(problem);
    match obj {
        Objective::TensionNormSq => norm_sq(&t.value.to_f64()),
        Objective::BitensionNormSq => norm_sq(&tau2_given(problem, &t.value).value.to_f64()),
    }
}

fn norm_sq(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

// ---------------------------------------------------------------------------
// Bounded Nelder–Mead
// ---------------------------------------------------------------------------

struct NmRun {
    x: Vec<f64>,
    fx: f64,
    evals: usize,
    converged: bool,
}

fn clamp(x: &mut [f64], bounds: &[(f64, f64)]) {
    for (v, (lo, hi)) in x.iter_mut().zip(bounds) {
        *v = v.clamp(*lo, *hi);
    }
}

fn diameter(simplex: &[Vec<f64>]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..simplex.len() {
        for j in (i + 1)..simplex.len() {
            let dist = simplex[i]
                .iter()
                .zip(&simplex[j])
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            d = d.max(dist);
        }
    }
    d
}

/// One simplex descent from `start`: reflection 1, expansion 2, contraction
/// ½, shrink ½; stops on convergence (objective below `tol`), simplex
/// collapse, or the evaluation budget.
fn nelder_mead(
    f: &(dyn Fn(&[f64]) -> f64 + Sync),
    bounds: &[(f64, f64)],
    start: &[f64],
    tol: f64,
    max_evals: usize,
) -> NmRun {
    let dim = bounds.len();
    let evals = std::cell::Cell::new(0usize);
    let eval = |x: &[f64]| {
        evals.set(evals.get() + 1);
        f(x)
    };

    // initial simplex: start plus axis steps of 5% of each box width
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    let mut fvals: Vec<f64> = Vec::with_capacity(dim + 1);
    let mut s0 = start.to_vec();
    clamp(&mut s0, bounds);
    simplex.push(s0.clone());
    for k in 0..dim {
        let mut p = s0.clone();
        let step = 0.05 * (bounds[k].1 - bounds[k].0).max(1e-6);
        p[k] = if p[k] + step <= bounds[k].1 {
            p[k] + step
        } else {
            p[k] - step
        };
        simplex.push(p);
    }
    for p in &simplex {
        fvals.push(eval(p));
    }

    loop {
        // order ascending by objective
        let mut idx: Vec<usize> = (0..=dim).collect();
        idx.sort_by(|&a, &b| fvals[a].partial_cmp(&fvals[b]).unwrap());
        let ordered: Vec<Vec<f64>> = idx.iter().map(|&i| simplex[i].clone()).collect();
        let fordered: Vec<f64> = idx.iter().map(|&i| fvals[i]).collect();
        simplex = ordered;
        fvals = fordered;

        if fvals[0] < tol {
            return NmRun {
                x: simplex[0].clone(),
                fx: fvals[0],
                evals: evals.get(),
                converged: true,
            };
        }
        if evals.get() >= max_evals || diameter(&simplex) < SIMPLEX_COLLAPSE {
            return NmRun {
                x: simplex[0].clone(),
                fx: fvals[0],
                evals: evals.get(),
                converged: false,
            };
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|k| simplex[..dim].iter().map(|p| p[k]).sum::<f64>() / dim as f64)
            .collect();
        let at = |coef: f64| -> Vec<f64> {
            let mut p: Vec<f64> = centroid
                .iter()
                .zip(&simplex[dim])
                .map(|(c, w)| c + coef * (c - w))
                .collect();
            clamp(&mut p, bounds);
            p
        };

        let reflected = at(1.0);
        let fr = eval(&reflected);
        if fr < fvals[0] {
            let expanded = at(2.0);
            let fe = eval(&expanded);
            if fe < fr {
                simplex[dim] = expanded;
                fvals[dim] = fe;
            } else {
                simplex[dim] = reflected;
                fvals[dim] = fr;
            }
        } else if fr < fvals[dim - 1] {
            simplex[dim] = reflected;
            fvals[dim] = fr;
        } else {
            let contracted = if fr < fvals[dim] { at(0.5) } else { at(-0.5) };
            let fc = eval(&contracted);
            if fc < fvals[dim].min(fr) {
                simplex[dim] = contracted;
                fvals[dim] = fc;
            } else {
                // shrink toward the best vertex
                for k in 1..=dim {
                    let shrunk: Vec<f64> = simplex[0]
                        .iter()
                        .zip(&simplex[k])
                        .map(|(b, p)| b + 0.5 * (p - b))
                        .collect();
                    simplex[k] = shrunk;
                    fvals[k] = eval(&simplex[k]);
                }
            }
        }
    }
}

/// One descent from a given start, rebuilding the endpoint; used by the
/// equivalence sweeps.
pub fn descend(
    bounds: &[(f64, f64)],
    objective: Objective,
    rebuild: &(dyn Fn(&[f64]) -> Option<EvalPoint> + Send + Sync),
    start: &[f64],
    max_evals: usize,
) -> Option<EvalPoint> {
    let f = |x: &[f64]| match rebuild(x) {
        Some(pt) => objective_value(objective, &pt.problem),
        None => f64::INFINITY,
    };
    let run = nelder_mead(&f, bounds, start, DEFAULT_OBJECTIVE_TOL, max_evals);
    rebuild(&run.x)
}

// ---------------------------------------------------------------------------
// Named search specifications
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FreeParam {
    pub name: String,
    pub min: f64,
    pub max: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MetricSpec {
    pub family: String,
    pub params: std::collections::BTreeMap<String, f64>,
}

/// A minimization problem over a homomorphism family: fixed parameters pin
/// part of the space, free parameters range over boxes. Free names address
/// family parameters directly and metric parameters as `metric1.<name>` /
/// `metric2.<name>`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchSpec {
    pub algebra: AlgebraId,
    pub family: String,
    pub metric1: MetricSpec,
    pub metric2: MetricSpec,
    #[serde(default)]
    pub fixed: std::collections::BTreeMap<String, f64>,
    pub free: Vec<FreeParam>,
    pub objective: Objective,
    #[serde(default = "default_tol")]
    pub tolerance: f64,
    #[serde(default = "default_max_evals")]
    pub max_evals: usize,
    #[serde(default = "default_restarts")]
    pub restarts: usize,
}

fn default_tol() -> f64 {
    DEFAULT_OBJECTIVE_TOL
}
fn default_max_evals() -> usize {
    DEFAULT_MAX_EVALS
}
fn default_restarts() -> usize {
    DEFAULT_RESTARTS
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub minimizer: Vec<(String, f64)>,
    pub objective: f64,
    pub evals: usize,
    pub restarts_used: usize,
    pub converged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub params: Vec<(String, f64)>,
    pub tension_norm_sq: f64,
    pub bitension_norm_sq: f64,
}

struct CompiledSpec {
    family: Family,
    bounds: Vec<(f64, f64)>,
    names: Vec<String>,
}

impl SearchSpec {
    fn compile(&self) -> Result<CompiledSpec> {
        if self.free.is_empty() {
            return Err(Error::NoFreeParams);
        }
        let family: Family = self.family.parse()?;
        if family.algebra() != self.algebra {
            return Err(Error::InvalidInput(format!(
                "family {} does not belong to algebra {}",
                self.family, self.algebra
            )));
        }
        let names: Vec<String> = self.free.iter().map(|f| f.name.clone()).collect();
        for name in &names {
            let known = family.param_names().contains(&name.as_str())
                || name.starts_with("metric1.")
                || name.starts_with("metric2.");
            if !known {
                return Err(Error::InvalidInput(format!("unknown free parameter {name}")));
            }
        }
        let bounds = self
            .free
            .iter()
            .map(|f| {
                if f.min < f.max {
                    Ok((f.min, f.max))
                } else {
                    Err(Error::InvalidInput(format!(
                        "empty box for free parameter {}",
                        f.name
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CompiledSpec {
            family,
            bounds,
            names,
        })
    }

    /// Instantiates the problem at a free-parameter vector.
    fn rebuild(&self, compiled: &CompiledSpec, x: &[f64]) -> Option<EvalPoint> {
        let mut fam_params = Params::<f64>::default();
        for (k, v) in &self.fixed {
            fam_params.set(k.clone(), *v);
        }
        let mut m1: std::collections::BTreeMap<String, f64> = self.metric1.params.clone();
        let mut m2: std::collections::BTreeMap<String, f64> = self.metric2.params.clone();
        let mut all = Params::<f64>::default();
        for (k, v) in &self.fixed {
            all.set(k.clone(), *v);
        }
        for (name, v) in compiled.names.iter().zip(x) {
            all.set(name.clone(), *v);
            if let Some(p) = name.strip_prefix("metric1.") {
                m1.insert(p.to_string(), *v);
            } else if let Some(p) = name.strip_prefix("metric2.") {
                m2.insert(p.to_string(), *v);
            } else {
                fam_params.set(name.clone(), *v);
            }
        }
        let mf1: MetricFamily = self.metric1.family.parse().ok()?;
        let mf2: MetricFamily = self.metric2.family.parse().ok()?;
        let g1 = mf1.instantiate(&Params::new(m1)).ok()?;
        let g2 = mf2.instantiate(&Params::new(m2)).ok()?;
        let xi = compiled.family.instantiate(&fam_params).ok()?;
        let src = MetricLieAlgebra::new(catalog(self.algebra), g1).ok()?;
        let dst = MetricLieAlgebra::new(catalog(self.algebra), g2).ok()?;
        let problem = Problem::new(src, dst, xi).ok()?;
        Some(EvalPoint {
            problem,
            params: all,
        })
    }
}

/// Simplex minimization with deterministic random restarts; every restart
/// runs to completion and the best endpoint wins (ties by objective value).
pub fn minimize(spec: &SearchSpec, seed: u64) -> Result<SearchResult> {
    let compiled = spec.compile()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<Vec<f64>> = (0..spec.restarts.max(1))
        .map(|_| {
            compiled
                .bounds
                .iter()
                .map(|(lo, hi)| rng.gen_range(*lo..*hi))
                .collect()
        })
        .collect();

    let budget = spec.max_evals / spec.restarts.max(1);
    let runs: Vec<NmRun> = starts
        .par_iter()
        .map(|start| {
            let f = |x: &[f64]| match spec.rebuild(&compiled, x) {
                Some(pt) => objective_value(spec.objective, &pt.problem),
                None => f64::INFINITY,
            };
            nelder_mead(&f, &compiled.bounds, start, spec.tolerance, budget.max(200))
        })
        .collect();

    let evals = runs.iter().map(|r| r.evals).sum();
    let best = runs
        .into_iter()
        .min_by(|a, b| {
            a.fx.partial_cmp(&b.fx)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.x.partial_cmp(&b.x).unwrap_or(std::cmp::Ordering::Equal))
        })
        .expect("at least one restart");
    Ok(SearchResult {
        minimizer: compiled
            .names
            .iter()
            .cloned()
            .zip(best.x.iter().copied())
            .collect(),
        objective: best.fx,
        evals,
        restarts_used: starts.len(),
        converged: best.converged,
    })
}

/// Minimizes the bitension norm from `n` random starts and keeps the
/// converged endpoints whose tension norm stays macroscopically nonzero
/// (`‖τ‖² > 10³ · tolerance`): candidate biharmonic-not-harmonic witnesses.
pub fn scan_biharmonic_not_harmonic(
    spec: &SearchSpec,
    n: usize,
    seed: u64,
) -> Result<Vec<Witness>> {
    let compiled = spec.compile()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<Vec<f64>> = (0..n.max(1))
        .map(|_| {
            compiled
                .bounds
                .iter()
                .map(|(lo, hi)| rng.gen_range(*lo..*hi))
                .collect()
        })
        .collect();

    let mut witnesses: Vec<Witness> = starts
        .par_iter()
        .filter_map(|start| {
            let f = |x: &[f64]| match spec.rebuild(&compiled, x) {
                Some(pt) => objective_value(Objective::BitensionNormSq, &pt.problem),
                None => f64::INFINITY,
            };
            // run to simplex collapse rather than the first sub-tolerance
            // value: shallow valleys where the bitension scales like the
            // square of the tension must bottom out before classification
            let run = nelder_mead(&f, &compiled.bounds, start, 0.0, spec.max_evals);
            if run.fx >= spec.tolerance {
                return None;
            }
            let pt = spec.rebuild(&compiled, &run.x)?;
            let t = tau(&pt.problem);
            let tension = norm_sq(&t.value.to_f64());
            // a witness needs the tension macroscopically nonzero both
            // absolutely and relative to the accumulation scale; endpoints
            // drifting into a harmonic locus fail the relative gate
            if tension > 1e3 * spec.tolerance && t.value.max_abs() > 1e-3 * t.scale {
                Some(Witness {
                    params: compiled
                        .names
                        .iter()
                        .cloned()
                        .zip(run.x.iter().copied())
                        .collect(),
                    tension_norm_sq: tension,
                    bitension_norm_sq: run.fx,
                })
            } else {
                None
            }
        })
        .collect();
    witnesses.sort_by(|a, b| {
        a.bitension_norm_sq
            .partial_cmp(&b.bitension_norm_sq)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.params
                    .iter()
                    .map(|(_, v)| *v)
                    .partial_cmp(b.params.iter().map(|(_, v)| *v))
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    Ok(witnesses)
}
