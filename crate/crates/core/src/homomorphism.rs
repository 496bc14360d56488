//! Lie algebra homomorphisms as matrices in the fixed basis, their
//! bracket-compatibility validation, conjugation by automorphisms, and the
//! catalog of homomorphism families per algebra (including the rotation and
//! boost factorizations of the su(2) and sl(2,ℝ) automorphism groups).

use std::fmt;
use std::str::FromStr;

use crate::algebra::{catalog, AlgebraId};
use crate::error::{Error, Result};
use crate::linalg::Matrix3;
use crate::metric::Metric;
use crate::params::Params;
use crate::scalar::Scalar;

/// Absolute residual below which a float-path map counts as bracket
/// compatible.
pub const VALIDATE_TOL: f64 = 1e-12;

/// Strict exclusion width around γ² = 1 for the column families, on the float
/// path.
pub const GAMMA_EXCLUSION: f64 = 1e-9;

/// A linear map `ξ : src → dst` in fixed-basis coordinates (columns are the
/// images of the basis vectors).
#[derive(Clone, Debug, PartialEq)]
pub struct Homomorphism<S> {
    pub src: AlgebraId,
    pub dst: AlgebraId,
    pub mat: Matrix3<S>,
}

impl<S: Scalar> Homomorphism<S> {
    pub fn new(src: AlgebraId, dst: AlgebraId, mat: Matrix3<S>) -> Self {
        Homomorphism { src, dst, mat }
    }

    pub fn identity(id: AlgebraId) -> Self {
        Homomorphism::new(id, id, Matrix3::identity())
    }

    /// Max absolute entry over the nine scalar equations
    /// `ξ[X_i,X_j] − [ξX_i, ξX_j]`, `i < j`.
    pub fn residual(&self) -> f64 {
        let src = catalog(self.src);
        let dst = catalog(self.dst);
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let lhs = self.mat.mul_vec(&src.bracket_basis::<S>(i, j));
                let rhs = dst.bracket(&self.mat.col(i), &self.mat.col(j));
                worst = worst.max(lhs.sub(&rhs).max_abs());
            }
        }
        worst
    }

    /// Bracket compatibility: exact on the rational path, within
    /// [`VALIDATE_TOL`] on floats.
    pub fn validate(&self) -> bool {
        if S::EXACT {
            let src = catalog(self.src);
            let dst = catalog(self.dst);
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let lhs = self.mat.mul_vec(&src.bracket_basis::<S>(i, j));
                    let rhs = dst.bracket(&self.mat.col(i), &self.mat.col(j));
                    if !lhs.sub(&rhs).is_zero() {
                        return false;
                    }
                }
            }
            true
        } else {
            self.residual() < VALIDATE_TOL
        }
    }

    pub fn compose(&self, inner: &Homomorphism<S>) -> Homomorphism<S> {
        Homomorphism::new(inner.src, self.dst, self.mat.mul(&inner.mat))
    }
}

/// Replaces `ξ` by `φ₂ ∘ ξ ∘ φ₁⁻¹` and pushes the metrics forward so that
/// `φ₁` and `φ₂` become isometric: `G' = φ⁻ᵀ G φ⁻¹`. Errors when either map
/// fails bracket compatibility ([`Error::NotAutomorphism`]) or is singular.
pub fn conjugate<S: Scalar>(
    h: &Homomorphism<S>,
    phi1: &Matrix3<S>,
    phi2: &Matrix3<S>,
    m_src: &Metric<S>,
    m_dst: &Metric<S>,
) -> Result<(Homomorphism<S>, Metric<S>, Metric<S>)> {
    for (id, phi) in [(h.src, phi1), (h.dst, phi2)] {
        if !Homomorphism::new(id, id, phi.clone()).validate() {
            return Err(Error::NotAutomorphism);
        }
    }
    let phi1_inv = phi1.inverse().ok_or(Error::Singular)?;
    let phi2_inv = phi2.inverse().ok_or(Error::Singular)?;
    let xi = phi2.mul(&h.mat).mul(&phi1_inv);
    // Congruence of an SPD matrix is SPD but float rounding breaks the exact
    // symmetry Metric::new demands; symmetrize before validating.
    let push = |g: &Matrix3<S>, inv: &Matrix3<S>| {
        let m = inv.transpose().mul(g).mul(inv);
        m.add(&m.transpose()).scale(&S::from_ratio(1, 2))
    };
    let m1 = Metric::new(push(m_src.gram(), &phi1_inv))?;
    let m2 = Metric::new(push(m_dst.gram(), &phi2_inv))?;
    Ok((Homomorphism::new(h.src, h.dst, xi), m1, m2))
}

/// A point on the unit circle: `cos² + sin² = 1`. Exact-path instances come
/// from the rational parametrization `t ↦ ((1−t²)/(1+t²), 2t/(1+t²))`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitPair<S> {
    pub cos: S,
    pub sin: S,
}

impl UnitPair<f64> {
    pub fn from_angle(a: f64) -> Self {
        UnitPair {
            cos: a.cos(),
            sin: a.sin(),
        }
    }
}

impl<S: Scalar> UnitPair<S> {
    pub fn one() -> Self {
        UnitPair {
            cos: S::one(),
            sin: S::zero(),
        }
    }

    pub fn from_tangent(t: S) -> Self {
        let one = S::one();
        let den = one.clone() + t.clone() * t.clone();
        UnitPair {
            cos: (one - t.clone() * t.clone()) / den.clone(),
            sin: (S::from_int(2) * t) / den,
        }
    }

    /// Exact quarter turn by `k·π/2`: entries are literal 0 and ±1.
    pub fn quarter_turn(k: i32) -> Self {
        let (c, s) = match k.rem_euclid(4) {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        UnitPair {
            cos: S::from_int(c),
            sin: S::from_int(s),
        }
    }

    /// Angle addition.
    pub fn compose(&self, other: &Self) -> Self {
        UnitPair {
            cos: self.cos.clone() * other.cos.clone() - self.sin.clone() * other.sin.clone(),
            sin: self.sin.clone() * other.cos.clone() + self.cos.clone() * other.sin.clone(),
        }
    }

    /// Angle negation.
    pub fn conjugate(&self) -> Self {
        UnitPair {
            cos: self.cos.clone(),
            sin: -self.sin.clone(),
        }
    }
}

impl UnitPair<f64> {
    pub fn angle(&self) -> f64 {
        self.sin.atan2(self.cos)
    }
}

/// A point on the unit hyperbola: `cosh² − sinh² = 1`. Exact-path instances
/// come from `t ↦ ((t + 1/t)/2, (t − 1/t)/2)`, `t > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypPair<S> {
    pub cosh: S,
    pub sinh: S,
}

impl HypPair<f64> {
    pub fn from_angle(a: f64) -> Self {
        HypPair {
            cosh: a.cosh(),
            sinh: a.sinh(),
        }
    }
}

impl<S: Scalar> HypPair<S> {
    pub fn one() -> Self {
        HypPair {
            cosh: S::one(),
            sinh: S::zero(),
        }
    }

    pub fn from_tangent(t: S) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::InvalidInput("hyperbolic parameter t = 0".into()));
        }
        let half = S::from_ratio(1, 2);
        let inv = S::one() / t.clone();
        Ok(HypPair {
            cosh: (t.clone() + inv.clone()) * half.clone(),
            sinh: (t - inv) * half,
        })
    }
}

/// Rotation in the (x,y)-plane fixing the third axis.
pub fn rot_xy<S: Scalar>(p: &UnitPair<S>) -> Matrix3<S> {
    let (c, s) = (p.cos.clone(), p.sin.clone());
    Matrix3::from_rows([
        [c.clone(), s.clone(), S::zero()],
        [-s, c, S::zero()],
        [S::zero(), S::zero(), S::one()],
    ])
}

pub fn rot_xz<S: Scalar>(p: &UnitPair<S>) -> Matrix3<S> {
    let (c, s) = (p.cos.clone(), p.sin.clone());
    Matrix3::from_rows([
        [c.clone(), S::zero(), s.clone()],
        [S::zero(), S::one(), S::zero()],
        [-s, S::zero(), c],
    ])
}

pub fn rot_yz<S: Scalar>(p: &UnitPair<S>) -> Matrix3<S> {
    let (c, s) = (p.cos.clone(), p.sin.clone());
    Matrix3::from_rows([
        [S::one(), S::zero(), S::zero()],
        [S::zero(), c.clone(), s.clone()],
        [S::zero(), -s, c],
    ])
}

pub fn boost_xz<S: Scalar>(p: &HypPair<S>) -> Matrix3<S> {
    let (c, s) = (p.cosh.clone(), p.sinh.clone());
    Matrix3::from_rows([
        [c.clone(), S::zero(), s.clone()],
        [S::zero(), S::one(), S::zero()],
        [s, S::zero(), c],
    ])
}

pub fn boost_yz<S: Scalar>(p: &HypPair<S>) -> Matrix3<S> {
    let (c, s) = (p.cosh.clone(), p.sinh.clone());
    Matrix3::from_rows([
        [S::one(), S::zero(), S::zero()],
        [S::zero(), c.clone(), s.clone()],
        [S::zero(), s, c],
    ])
}

// ---------------------------------------------------------------------------
// Structured constructors for the catalog families.
// ---------------------------------------------------------------------------

/// `[[α1,α2,0],[β1,β2,0],[α3,β3,α1β2−α2β1]]` — every endomorphism of nil has
/// this shape.
pub fn nil_generic<S: Scalar>(a1: S, a2: S, a3: S, b1: S, b2: S, b3: S) -> Homomorphism<S> {
    let det = a1.clone() * b2.clone() - a2.clone() * b1.clone();
    Homomorphism::new(
        AlgebraId::Nil,
        AlgebraId::Nil,
        Matrix3::from_rows([
            [a1, a2, S::zero()],
            [b1, b2, S::zero()],
            [a3, b3, det],
        ]),
    )
}

/// `[[aβ3,−aα3,0],[bβ3,−bα3,0],[α3,β3,0]]` — the singular harmonic family.
pub fn nil_singular<S: Scalar>(a: S, b: S, a3: S, b3: S) -> Homomorphism<S> {
    Homomorphism::new(
        AlgebraId::Nil,
        AlgebraId::Nil,
        Matrix3::from_rows([
            [a.clone() * b3.clone(), -(a * a3.clone()), S::zero()],
            [b.clone() * b3.clone(), -(b * a3.clone()), S::zero()],
            [a3, b3, S::zero()],
        ]),
    )
}

fn column_map<S: Scalar>(id: AlgebraId, a: S, b: S, gamma: S) -> Result<Homomorphism<S>> {
    let gsq = gamma.clone() * gamma.clone();
    let excluded = if S::EXACT {
        gsq == S::one()
    } else {
        (gsq.to_f64() - 1.0).abs() <= GAMMA_EXCLUSION
    };
    if excluded {
        return Err(Error::ParamOutOfRange {
            family: format!("{}-xi1", id.name()),
            param: "gamma".into(),
            constraint: "gamma^2 != 1".into(),
        });
    }
    Ok(Homomorphism::new(
        id,
        id,
        Matrix3::from_rows([
            [S::zero(), S::zero(), a],
            [S::zero(), S::zero(), b],
            [S::zero(), S::zero(), gamma],
        ]),
    ))
}

/// e02 column family `[[0,0,a],[0,0,b],[0,0,γ]]`, γ² ≠ 1.
pub fn e02_xi1<S: Scalar>(a: S, b: S, gamma: S) -> Result<Homomorphism<S>> {
    column_map(AlgebraId::E02, a, b, gamma)
}

/// `[[α,−β,a],[β,α,b],[0,0,1]]`.
pub fn e02_xi2<S: Scalar>(alpha: S, beta: S, a: S, b: S) -> Homomorphism<S> {
    Homomorphism::new(
        AlgebraId::E02,
        AlgebraId::E02,
        Matrix3::from_rows([
            [alpha.clone(), -beta.clone(), a],
            [beta, alpha, b],
            [S::zero(), S::zero(), S::one()],
        ]),
    )
}

/// `[[α,β,a],[β,−α,b],[0,0,−1]]`.
pub fn e02_xi3<S: Scalar>(alpha: S, beta: S, a: S, b: S) -> Homomorphism<S> {
    Homomorphism::new(
        AlgebraId::E02,
        AlgebraId::E02,
        Matrix3::from_rows([
            [alpha.clone(), beta.clone(), a],
            [beta, -alpha, b],
            [S::zero(), S::zero(), -S::one()],
        ]),
    )
}

/// sol column family `[[0,0,a],[0,0,b],[0,0,γ]]`, γ² ≠ 1.
pub fn sol_xi1<S: Scalar>(a: S, b: S, gamma: S) -> Result<Homomorphism<S>> {
    column_map(AlgebraId::Sol, a, b, gamma)
}

/// `[[α,0,a],[0,β,b],[0,0,1]]`.
pub fn sol_xi2<S: Scalar>(alpha: S, beta: S, a: S, b: S) -> Homomorphism<S> {
    Homomorphism::new(
        AlgebraId::Sol,
        AlgebraId::Sol,
        Matrix3::from_rows([
            [alpha, S::zero(), a],
            [S::zero(), beta, b],
            [S::zero(), S::zero(), S::one()],
        ]),
    )
}

/// `[[0,β,a],[α,0,b],[0,0,−1]]`.
pub fn sol_xi3<S: Scalar>(alpha: S, beta: S, a: S, b: S) -> Homomorphism<S> {
    Homomorphism::new(
        AlgebraId::Sol,
        AlgebraId::Sol,
        Matrix3::from_rows([
            [S::zero(), beta, a],
            [alpha, S::zero(), b],
            [S::zero(), S::zero(), -S::one()],
        ]),
    )
}

/// su(2) one-parameter automorphism factors: ξ1 = Rot_yz, ξ2 = Rot_xz,
/// ξ3 = Rot_xy.
pub fn su2_factor<S: Scalar>(axis: usize, p: &UnitPair<S>) -> Homomorphism<S> {
    let mat = match axis {
        1 => rot_yz(p),
        2 => rot_xz(p),
        3 => rot_xy(p),
        _ => panic!("su2 factor axis must be 1, 2 or 3"),
    };
    Homomorphism::new(AlgebraId::Su2, AlgebraId::Su2, mat)
}

/// The full su(2) automorphism `ξ3(a) ∘ ξ2(b) ∘ ξ1(c)`.
pub fn su2_product<S: Scalar>(
    pa: &UnitPair<S>,
    pb: &UnitPair<S>,
    pc: &UnitPair<S>,
) -> Homomorphism<S> {
    let mat = rot_xy(pa).mul(&rot_xz(pb)).mul(&rot_yz(pc));
    Homomorphism::new(AlgebraId::Su2, AlgebraId::Su2, mat)
}

/// sl(2,ℝ) one-parameter automorphism factors: ξ1 = Boost_yz, ξ2 = Boost_xz.
pub fn sl2_boost_factor<S: Scalar>(axis: usize, p: &HypPair<S>) -> Homomorphism<S> {
    let mat = match axis {
        1 => boost_yz(p),
        2 => boost_xz(p),
        _ => panic!("sl2 boost axis must be 1 or 2"),
    };
    Homomorphism::new(AlgebraId::Sl2, AlgebraId::Sl2, mat)
}

/// sl(2,ℝ) rotation factor ξ3 = Rot_xy.
pub fn sl2_rot_factor<S: Scalar>(p: &UnitPair<S>) -> Homomorphism<S> {
    Homomorphism::new(AlgebraId::Sl2, AlgebraId::Sl2, rot_xy(p))
}

/// The full sl(2,ℝ) automorphism `ξ3(a) ∘ ξ2(b) ∘ ξ1(c)`.
pub fn sl2_product<S: Scalar>(
    pa: &UnitPair<S>,
    pb: &HypPair<S>,
    pc: &HypPair<S>,
) -> Homomorphism<S> {
    let mat = rot_xy(pa).mul(&boost_xz(pb)).mul(&boost_yz(pc));
    Homomorphism::new(AlgebraId::Sl2, AlgebraId::Sl2, mat)
}

// ---------------------------------------------------------------------------
// Named families for the CLI, sweeps and search.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    NilGeneric,
    NilSingular,
    E02Xi1,
    E02Xi2,
    E02Xi3,
    SolXi1,
    SolXi2,
    SolXi3,
    Su2Xi1,
    Su2Xi2,
    Su2Xi3,
    Su2Product,
    Sl2Xi1,
    Sl2Xi2,
    Sl2Xi3,
    Sl2Product,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::NilGeneric,
        Family::NilSingular,
        Family::E02Xi1,
        Family::E02Xi2,
        Family::E02Xi3,
        Family::SolXi1,
        Family::SolXi2,
        Family::SolXi3,
        Family::Su2Xi1,
        Family::Su2Xi2,
        Family::Su2Xi3,
        Family::Su2Product,
        Family::Sl2Xi1,
        Family::Sl2Xi2,
        Family::Sl2Xi3,
        Family::Sl2Product,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::NilGeneric => "nil-generic",
            Family::NilSingular => "nil-singular",
            Family::E02Xi1 => "e02-xi1",
            Family::E02Xi2 => "e02-xi2",
            Family::E02Xi3 => "e02-xi3",
            Family::SolXi1 => "sol-xi1",
            Family::SolXi2 => "sol-xi2",
            Family::SolXi3 => "sol-xi3",
            Family::Su2Xi1 => "su2-xi1",
            Family::Su2Xi2 => "su2-xi2",
            Family::Su2Xi3 => "su2-xi3",
            Family::Su2Product => "su2-xi3xi2xi1",
            Family::Sl2Xi1 => "sl2-xi1",
            Family::Sl2Xi2 => "sl2-xi2",
            Family::Sl2Xi3 => "sl2-xi3",
            Family::Sl2Product => "sl2-xi3xi2xi1",
        }
    }

    pub fn algebra(self) -> AlgebraId {
        match self {
            Family::NilGeneric | Family::NilSingular => AlgebraId::Nil,
            Family::E02Xi1 | Family::E02Xi2 | Family::E02Xi3 => AlgebraId::E02,
            Family::SolXi1 | Family::SolXi2 | Family::SolXi3 => AlgebraId::Sol,
            Family::Su2Xi1 | Family::Su2Xi2 | Family::Su2Xi3 | Family::Su2Product => {
                AlgebraId::Su2
            }
            Family::Sl2Xi1 | Family::Sl2Xi2 | Family::Sl2Xi3 | Family::Sl2Product => {
                AlgebraId::Sl2
            }
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::NilGeneric => &["alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3"],
            Family::NilSingular => &["a", "b", "alpha3", "beta3"],
            Family::E02Xi1 | Family::SolXi1 => &["a", "b", "gamma"],
            Family::E02Xi2 | Family::E02Xi3 | Family::SolXi2 | Family::SolXi3 => {
                &["alpha", "beta", "a", "b"]
            }
            Family::Su2Xi1 | Family::Su2Xi2 | Family::Su2Xi3 | Family::Sl2Xi1
            | Family::Sl2Xi2 | Family::Sl2Xi3 => &["a"],
            Family::Su2Product | Family::Sl2Product => &["a", "b", "c"],
        }
    }

    /// Instantiates on the float path; trig and boost families take angles.
    pub fn instantiate(self, params: &Params<f64>) -> Result<Homomorphism<f64>> {
        let get = |name: &str| -> Result<f64> {
            params.get(name).copied().ok_or_else(|| Error::MissingParam {
                family: self.tag().to_string(),
                param: name.to_string(),
            })
        };
        let h = match self {
            Family::NilGeneric => nil_generic(
                get("alpha1")?,
                get("alpha2")?,
                get("alpha3")?,
                get("beta1")?,
                get("beta2")?,
                get("beta3")?,
            ),
            Family::NilSingular => {
                nil_singular(get("a")?, get("b")?, get("alpha3")?, get("beta3")?)
            }
            Family::E02Xi1 => e02_xi1(get("a")?, get("b")?, get("gamma")?)?,
            Family::E02Xi2 => e02_xi2(get("alpha")?, get("beta")?, get("a")?, get("b")?),
            Family::E02Xi3 => e02_xi3(get("alpha")?, get("beta")?, get("a")?, get("b")?),
            Family::SolXi1 => sol_xi1(get("a")?, get("b")?, get("gamma")?)?,
            Family::SolXi2 => sol_xi2(get("alpha")?, get("beta")?, get("a")?, get("b")?),
            Family::SolXi3 => sol_xi3(get("alpha")?, get("beta")?, get("a")?, get("b")?),
            Family::Su2Xi1 => su2_factor(1, &UnitPair::from_angle(get("a")?)),
            Family::Su2Xi2 => su2_factor(2, &UnitPair::from_angle(get("a")?)),
            Family::Su2Xi3 => su2_factor(3, &UnitPair::from_angle(get("a")?)),
            Family::Su2Product => su2_product(
                &UnitPair::from_angle(get("a")?),
                &UnitPair::from_angle(get("b")?),
                &UnitPair::from_angle(get("c")?),
            ),
            Family::Sl2Xi1 => sl2_boost_factor(1, &HypPair::from_angle(get("a")?)),
            Family::Sl2Xi2 => sl2_boost_factor(2, &HypPair::from_angle(get("a")?)),
            Family::Sl2Xi3 => sl2_rot_factor(&UnitPair::from_angle(get("a")?)),
            Family::Sl2Product => sl2_product(
                &UnitPair::from_angle(get("a")?),
                &HypPair::from_angle(get("b")?),
                &HypPair::from_angle(get("c")?),
            ),
        };
        debug_assert!(h.validate(), "family {} instantiation", self.tag());
        Ok(h)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rp(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn identity_validates_everywhere() {
        for id in AlgebraId::ALL {
            assert!(Homomorphism::<Rat>::identity(id).validate());
        }
    }

    #[test]
    fn su2_diagonal_stretch_is_not_a_homomorphism() {
        // ξ[X1,X2] = 2X3 but [ξX1, ξX2] = X3
        let h = Homomorphism::<f64>::new(
            AlgebraId::Su2,
            AlgebraId::Su2,
            Matrix3::diag(1.0, 1.0, 2.0),
        );
        assert!(!h.validate());
        assert!((h.residual() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unit_and_hyp_pairs_lie_on_their_curves() {
        let p = UnitPair::from_tangent(rp(3, 7));
        assert_eq!(
            p.cos.clone() * p.cos.clone() + p.sin.clone() * p.sin.clone(),
            Rat::from_int(1)
        );
        let h = HypPair::from_tangent(rp(5, 2)).unwrap();
        assert_eq!(
            h.cosh.clone() * h.cosh.clone() - h.sinh.clone() * h.sinh.clone(),
            Rat::from_int(1)
        );
        assert!(HypPair::from_tangent(Rat::from_int(0)).is_err());
    }

    #[test]
    fn printed_sol_xi3_matrix() {
        let h = sol_xi3(1.0, 1.0, 0.0, 0.0);
        assert_eq!(
            h.mat,
            Matrix3::from_rows([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
        );
        assert!(h.validate());
    }

    #[test]
    fn printed_sl2_boost_rows() {
        let h = Family::Sl2Xi1
            .instantiate(&Params::new([("a", 1.0f64)]))
            .unwrap();
        let (c, s) = (1.0f64.cosh(), 1.0f64.sinh());
        assert_eq!(
            h.mat,
            Matrix3::from_rows([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, s, c]])
        );
    }

    #[test]
    fn su2_product_at_zero_angles_is_identity() {
        let h = Family::Su2Product
            .instantiate(&Params::new([("a", 0.0), ("b", 0.0), ("c", 0.0)]))
            .unwrap();
        assert_eq!(h.mat, Matrix3::identity());
    }

    #[test]
    fn gamma_exclusion_is_enforced() {
        assert!(matches!(
            e02_xi1(1.0, 1.0, 1.0),
            Err(Error::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            sol_xi1(0.5, 0.5, -1.0 + 1e-12),
            Err(Error::ParamOutOfRange { .. })
        ));
        assert!(e02_xi1(1.0, 1.0, 0.9).is_ok());
        // exact path excludes only literal gamma^2 = 1
        assert!(sol_xi1(rp(1, 1), rp(1, 1), rp(1, 1)).is_err());
        assert!(sol_xi1(rp(1, 1), rp(1, 1), rp(999999, 1000000)).is_ok());
    }

    /// Per-parameter sampling width keeping float residuals of genuinely
    /// valid maps below the absolute validation threshold (boost entries grow
    /// like cosh² and amplify rounding).
    fn sample_width(fam: Family, name: &str) -> f64 {
        match fam {
            Family::Sl2Xi1 | Family::Sl2Xi2 => 2.5,
            Family::Sl2Product if name != "a" => 2.5,
            Family::Su2Xi1 | Family::Su2Xi2 | Family::Su2Xi3 | Family::Su2Product
            | Family::Sl2Xi3 | Family::Sl2Product => 3.2,
            Family::NilSingular => 4.0,
            _ => 10.0,
        }
    }

    #[test]
    fn every_family_validates_on_random_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for fam in Family::ALL {
            for _ in 0..500 {
                let params: Params<f64> = fam
                    .param_names()
                    .iter()
                    .map(|n| {
                        let v: f64 = if *n == "gamma" {
                            // stay clear of the excluded gamma^2 = 1 locus
                            rng.gen_range(-0.9..0.9)
                        } else {
                            let w = sample_width(fam, n);
                            rng.gen_range(-w..w)
                        };
                        (n.to_string(), v)
                    })
                    .collect();
                let h = fam.instantiate(&params).unwrap();
                assert!(h.validate(), "{} {:?}", fam.tag(), params);
            }
        }
    }

    #[test]
    fn nil_generic_validates_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..100 {
            let mut r = || rp(rng.gen_range(-20..=20), rng.gen_range(1..=6));
            let h = nil_generic(r(), r(), r(), r(), r(), r());
            assert!(h.validate());
        }
    }

    #[test]
    fn rotation_conjugation_on_su2() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let m1 = Metric::from_diag(2.0, 1.5, 1.0).unwrap();
        let m2 = Metric::from_diag(3.0, 2.0, 0.5).unwrap();
        let h = su2_product(
            &UnitPair::from_angle(0.3),
            &UnitPair::from_angle(0.7),
            &UnitPair::from_angle(-0.2),
        );
        for _ in 0..50 {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let phi = rot_xy(&UnitPair::from_angle(theta));
            assert!(Homomorphism::new(AlgebraId::Su2, AlgebraId::Su2, phi.clone()).validate());
            let (h2, g1, g2) = conjugate(&h, &phi, &phi, &m1, &m2).unwrap();
            assert!(h2.validate());
            // pushed metrics make phi isometric: phi^T G' phi = G
            let back = phi.transpose().mul(g1.gram()).mul(&phi);
            assert!(back.sub(m1.gram()).max_abs() < 1e-12);
            let back = phi.transpose().mul(g2.gram()).mul(&phi);
            assert!(back.sub(m2.gram()).max_abs() < 1e-12);
        }
    }

    #[test]
    fn identity_conjugation_is_a_no_op() {
        let m = Metric::from_diag(1.0, 2.0, 3.0).unwrap();
        let h = sol_xi2(1.0, 2.0, 0.5, -0.5);
        let (h2, g1, g2) =
            conjugate(&h, &Matrix3::identity(), &Matrix3::identity(), &m, &m).unwrap();
        assert_eq!(h2.mat, h.mat);
        assert_eq!(g1.gram(), m.gram());
        assert_eq!(g2.gram(), m.gram());
    }

    #[test]
    fn conjugation_rejects_non_automorphisms() {
        let m = Metric::from_diag(1.0, 1.0, 1.0).unwrap();
        let h = Homomorphism::identity(AlgebraId::Su2);
        let bad = Matrix3::diag(1.0, 1.0, 2.0);
        assert!(matches!(
            conjugate(&h, &bad, &Matrix3::identity(), &m, &m),
            Err(Error::NotAutomorphism)
        ));
    }
}
