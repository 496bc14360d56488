//! JSON problem input and report output.
//!
//! Problems arrive as `{algebra, metric1, metric2, xi}` where metrics are
//! row-major 9-element arrays or `{family, params}` objects, and `xi` is a
//! row-major 9-element array or a homomorphism family instantiation. Numbers
//! may be JSON numbers or exact-rational strings like `"3/4"`; on the exact
//! path JSON floats convert losslessly (every finite float is a dyadic
//! rational).

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{catalog, AlgebraId};
use crate::connection::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::homomorphism::{Family, Homomorphism};
use crate::linalg::Matrix3;
use crate::metric::{Metric, MetricFamily};
use crate::params::Params;
use crate::scalar::{Rat, Scalar};
use crate::tension::{Problem, TensionReport};

/// A literal number from an input file: a float or an exact rational string.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum NumberLit {
    Float(f64),
    Exact(String),
}

impl NumberLit {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S> {
        match self {
            NumberLit::Float(f) => {
                if !f.is_finite() {
                    return Err(Error::InvalidInput("non-finite number".into()));
                }
                Ok(S::from_f64(*f))
            }
            NumberLit::Exact(s) => {
                let r = Rat::from_str(s).map_err(|_| {
                    Error::InvalidInput(format!("cannot parse rational literal {s:?}"))
                })?;
                if S::EXACT {
                    // route through f64-free reconstruction: numerator and
                    // denominator as scalars
                    let num = big_to_scalar::<S>(r.numer())?;
                    let den = big_to_scalar::<S>(r.denom())?;
                    Ok(num / den)
                } else {
                    Ok(S::from_f64(r.to_f64()))
                }
            }
        }
    }
}

fn big_to_scalar<S: Scalar>(n: &num::BigInt) -> Result<S> {
    use num::ToPrimitive;
    n.to_i64().map(S::from_int).ok_or_else(|| {
        Error::InvalidInput("rational literal exceeds the supported magnitude".into())
    })
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum MetricInput {
    Flat(Vec<NumberLit>),
    Family {
        family: String,
        params: BTreeMap<String, NumberLit>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum XiInput {
    Flat(Vec<NumberLit>),
    Family {
        family: String,
        params: BTreeMap<String, NumberLit>,
    },
}

/// A problem description as read from an input file.
#[derive(Clone, Debug, Deserialize)]
pub struct ProblemSpec {
    pub algebra: AlgebraId,
    pub metric1: MetricInput,
    pub metric2: MetricInput,
    pub xi: XiInput,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    /// True when the description only instantiates exactly on floats
    /// (angle-parameterized rotation/boost families).
    pub fn needs_float(&self) -> bool {
        match &self.xi {
            XiInput::Flat(_) => false,
            XiInput::Family { family, .. } => matches!(
                family.parse::<Family>(),
                Ok(f) if matches!(
                    f,
                    Family::Su2Xi1
                        | Family::Su2Xi2
                        | Family::Su2Xi3
                        | Family::Su2Product
                        | Family::Sl2Xi1
                        | Family::Sl2Xi2
                        | Family::Sl2Xi3
                        | Family::Sl2Product
                )
            ),
        }
    }

    fn metric<S: Scalar>(&self, input: &MetricInput) -> Result<Metric<S>> {
        match input {
            MetricInput::Flat(v) => {
                let entries = v.iter().map(NumberLit::to_scalar).collect::<Result<Vec<S>>>()?;
                let m = Matrix3::from_flat(&entries).ok_or_else(|| {
                    Error::InvalidInput("metric arrays carry exactly 9 entries".into())
                })?;
                Metric::new(m)
            }
            MetricInput::Family { family, params } => {
                let fam: MetricFamily = family.parse()?;
                if fam.algebra() != self.algebra {
                    return Err(Error::InvalidInput(format!(
                        "metric family {family} does not belong to algebra {}",
                        self.algebra
                    )));
                }
                let p: Params<S> = params
                    .iter()
                    .map(|(k, v)| Ok((k.clone(), v.to_scalar()?)))
                    .collect::<Result<Vec<(String, S)>>>()?
                    .into_iter()
                    .collect();
                fam.instantiate(&p)
            }
        }
    }

    fn xi_f64(&self) -> Result<Homomorphism<f64>> {
        match &self.xi {
            XiInput::Flat(_) => self.xi_flat(),
            XiInput::Family { family, params } => {
                let fam: Family = family.parse()?;
                if fam.algebra() != self.algebra {
                    return Err(Error::InvalidInput(format!(
                        "homomorphism family {family} does not belong to algebra {}",
                        self.algebra
                    )));
                }
                let p: Params<f64> = params
                    .iter()
                    .map(|(k, v)| Ok((k.clone(), v.to_scalar()?)))
                    .collect::<Result<Vec<(String, f64)>>>()?
                    .into_iter()
                    .collect();
                fam.instantiate(&p)
            }
        }
    }

    fn xi_flat<S: Scalar>(&self) -> Result<Homomorphism<S>> {
        match &self.xi {
            XiInput::Flat(v) => {
                let entries = v.iter().map(NumberLit::to_scalar).collect::<Result<Vec<S>>>()?;
                let m = Matrix3::from_flat(&entries).ok_or_else(|| {
                    Error::InvalidInput("xi arrays carry exactly 9 entries".into())
                })?;
                Ok(Homomorphism::new(self.algebra, self.algebra, m))
            }
            XiInput::Family { .. } => unreachable!("flat accessor on family input"),
        }
    }

    /// Builds the problem on the float path.
    pub fn build_f64(&self) -> Result<Problem<f64>> {
        let g1 = self.metric::<f64>(&self.metric1)?;
        let g2 = self.metric::<f64>(&self.metric2)?;
        let xi = self.xi_f64()?;
        Problem::new(
            MetricLieAlgebra::new(catalog(self.algebra), g1)?,
            MetricLieAlgebra::new(catalog(self.algebra), g2)?,
            xi,
        )
    }

    /// Builds the problem on the exact path; errors when the description
    /// needs trigonometric instantiation.
    pub fn build_exact(&self) -> Result<Problem<Rat>> {
        if self.needs_float() {
            return Err(Error::InvalidInput(
                "rotation/boost families instantiate from angles and run on the float path"
                    .into(),
            ));
        }
        let g1 = self.metric::<Rat>(&self.metric1)?;
        let g2 = self.metric::<Rat>(&self.metric2)?;
        let xi = match &self.xi {
            XiInput::Flat(_) => self.xi_flat::<Rat>()?,
            XiInput::Family { family, params } => {
                exact_family(self.algebra, family, params)?
            }
        };
        Problem::new(
            MetricLieAlgebra::new(catalog(self.algebra), g1)?,
            MetricLieAlgebra::new(catalog(self.algebra), g2)?,
            xi,
        )
    }
}

/// Exact-path instantiation of the polynomial homomorphism families.
fn exact_family(
    algebra: AlgebraId,
    family: &str,
    params: &BTreeMap<String, NumberLit>,
) -> Result<Homomorphism<Rat>> {
    let fam: Family = family.parse()?;
    if fam.algebra() != algebra {
        return Err(Error::InvalidInput(format!(
            "homomorphism family {family} does not belong to algebra {algebra}"
        )));
    }
    let get = |name: &str| -> Result<Rat> {
        params
            .get(name)
            .ok_or_else(|| Error::MissingParam {
                family: family.to_string(),
                param: name.to_string(),
            })?
            .to_scalar()
    };
    use crate::homomorphism as h;
    Ok(match fam {
        Family::NilGeneric => h::nil_generic(
            get("alpha1")?,
            get("alpha2")?,
            get("alpha3")?,
            get("beta1")?,
            get("beta2")?,
            get("beta3")?,
        ),
        Family::NilSingular => {
            h::nil_singular(get("a")?, get("b")?, get("alpha3")?, get("beta3")?)
        }
        Family::E02Xi1 => h::e02_xi1(get("a")?, get("b")?, get("gamma")?)?,
        Family::E02Xi2 => h::e02_xi2(get("alpha")?, get("beta")?, get("a")?, get("b")?),
        Family::E02Xi3 => h::e02_xi3(get("alpha")?, get("beta")?, get("a")?, get("b")?),
        Family::SolXi1 => h::sol_xi1(get("a")?, get("b")?, get("gamma")?)?,
        Family::SolXi2 => h::sol_xi2(get("alpha")?, get("beta")?, get("a")?, get("b")?),
        Family::SolXi3 => h::sol_xi3(get("alpha")?, get("beta")?, get("a")?, get("b")?),
        _ => unreachable!("trig families rejected by needs_float"),
    })
}

/// Serialized tension report: float views always, exact strings on the
/// rational path, schema evolves additively.
#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub tau: [f64; 3],
    pub tau2: [f64; 3],
    pub test_matrix: [f64; 9],
    pub det_test: f64,
    pub harmonic: bool,
    pub biharmonic: bool,
    pub tolerance_used: f64,
    pub arithmetic_path: &'static str,
    pub tau_scale: f64,
    pub tau2_scale: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValues>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactValues {
    pub tau: [String; 3],
    pub tau2: [String; 3],
    pub test_matrix: [String; 9],
    pub det_test: String,
}

pub fn report_json<S: Scalar>(rep: &TensionReport<S>, notes: Vec<String>) -> ReportJson {
    let flat = rep.test_matrix.to_flat();
    ReportJson {
        tau: rep.tau.to_f64(),
        tau2: rep.tau2.to_f64(),
        test_matrix: std::array::from_fn(|i| flat[i].to_f64()),
        det_test: rep.det_test.to_f64(),
        harmonic: rep.harmonic,
        biharmonic: rep.biharmonic,
        tolerance_used: rep.tolerance_used,
        arithmetic_path: if S::EXACT { "rational" } else { "float" },
        tau_scale: rep.tau_scale,
        tau2_scale: rep.tau2_scale,
        exact: S::EXACT.then(|| ExactValues {
            tau: std::array::from_fn(|i| rep.tau.0[i].to_string()),
            tau2: std::array::from_fn(|i| rep.tau2.0[i].to_string()),
            test_matrix: std::array::from_fn(|i| flat[i].to_string()),
            det_test: rep.det_test.to_string(),
        }),
        notes,
    }
}

/// Notes for the exact path: when a metric admits no exact orthonormal frame
/// the frame-based checks fall back to floats; the fallback is recorded and
/// its residual verified.
pub fn frame_notes<S: Scalar>(p: &Problem<S>) -> Vec<String> {
    if !S::EXACT {
        return Vec::new();
    }
    let mut notes = Vec::new();
    for (side, mla) in [("metric1", &p.src), ("metric2", &p.dst)] {
        if matches!(mla.metric.orthonormal_frame(), Err(Error::InexactFrame)) {
            let gram = Matrix3::<f64>::from_fn(|i, j| mla.metric.gram().0[i][j].to_f64());
            let residual = Metric::new(gram)
                .and_then(|m| m.orthonormal_frame().map(|f| f.residual(&m)))
                .map(|r| format!("{r:.2e}"))
                .unwrap_or_else(|_| "unavailable".to_string());
            notes.push(format!(
                "{side}: no exact orthonormal frame over the rationals; frame-based checks use \
                 a float Cholesky frame (orthonormality residual {residual})"
            ));
        }
    }
    notes
}
