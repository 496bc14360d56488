//! The five non-abelian unimodular 3D Lie algebras, fixed in their standard
//! basis `(X1, X2, X3)`, as dense structure-constant tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{Matrix3, Vector3};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraId {
    Nil,
    E02,
    Sol,
    Su2,
    Sl2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [
        AlgebraId::Nil,
        AlgebraId::E02,
        AlgebraId::Sol,
        AlgebraId::Su2,
        AlgebraId::Sl2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Nil => "nil",
            AlgebraId::E02 => "e02",
            AlgebraId::Sol => "sol",
            AlgebraId::Su2 => "su2",
            AlgebraId::Sl2 => "sl2",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "nil" => Ok(AlgebraId::Nil),
            "e02" => Ok(AlgebraId::E02),
            "sol" => Ok(AlgebraId::Sol),
            "su2" => Ok(AlgebraId::Su2),
            "sl2" => Ok(AlgebraId::Sl2),
            other => Err(Error::UnknownAlgebra(other.to_string())),
        }
    }
}

/// A 3D Lie algebra given by integer structure constants in the fixed basis:
/// `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub id: AlgebraId,
    pub c: [[[i64; 3]; 3]; 3],
}

const fn constants(pairs: &[((usize, usize), [i64; 3])]) -> [[[i64; 3]; 3]; 3] {
    let mut c = [[[0i64; 3]; 3]; 3];
    let mut n = 0;
    while n < pairs.len() {
        let ((i, j), v) = pairs[n];
        c[i][j] = v;
        c[j][i] = [-v[0], -v[1], -v[2]];
        n += 1;
    }
    c
}

// [X1,X2] = X3
const NIL: LieAlgebra = LieAlgebra {
    id: AlgebraId::Nil,
    c: constants(&[((0, 1), [0, 0, 1])]),
};

// [X3,X1] = X2, [X3,X2] = -X1
const E02: LieAlgebra = LieAlgebra {
    id: AlgebraId::E02,
    c: constants(&[((2, 0), [0, 1, 0]), ((2, 1), [-1, 0, 0])]),
};

// [X3,X1] = X1, [X3,X2] = -X2
const SOL: LieAlgebra = LieAlgebra {
    id: AlgebraId::Sol,
    c: constants(&[((2, 0), [1, 0, 0]), ((2, 1), [0, -1, 0])]),
};

// [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2
const SU2: LieAlgebra = LieAlgebra {
    id: AlgebraId::Su2,
    c: constants(&[((0, 1), [0, 0, 1]), ((1, 2), [1, 0, 0]), ((2, 0), [0, 1, 0])]),
};

// [X1,X2] = -X3, [X2,X3] = X1, [X3,X1] = X2
const SL2: LieAlgebra = LieAlgebra {
    id: AlgebraId::Sl2,
    c: constants(&[((0, 1), [0, 0, -1]), ((1, 2), [1, 0, 0]), ((2, 0), [0, 1, 0])]),
};

/// The built-in catalog entry for `id`.
pub fn catalog(id: AlgebraId) -> &'static LieAlgebra {
    match id {
        AlgebraId::Nil => &NIL,
        AlgebraId::E02 => &E02,
        AlgebraId::Sol => &SOL,
        AlgebraId::Su2 => &SU2,
        AlgebraId::Sl2 => &SL2,
    }
}

impl LieAlgebra {
    /// `[X_i, X_j]` lifted into the scalar type.
    pub fn bracket_basis<S: Scalar>(&self, i: usize, j: usize) -> Vector3<S> {
        Vector3::from_fn(|k| S::from_int(self.c[i][j][k]))
    }

    /// `[u, v]` by bilinear expansion over the structure constants.
    pub fn bracket<S: Scalar>(&self, u: &Vector3<S>, v: &Vector3<S>) -> Vector3<S> {
        let mut out: Vector3<S> = Vector3::zero();
        for i in 0..3 {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if v.0[j].is_zero() {
                    continue;
                }
                let w = u.0[i].clone() * v.0[j].clone();
                for k in 0..3 {
                    if self.c[i][j][k] != 0 {
                        out.0[k] = out.0[k].clone() + w.clone() * S::from_int(self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_u : v ↦ [u, v]` in the fixed basis.
    pub fn ad<S: Scalar>(&self, u: &Vector3<S>) -> Matrix3<S> {
        Matrix3::from_fn(|k, j| {
            let mut acc = S::zero();
            for i in 0..3 {
                if self.c[i][j][k] != 0 {
                    acc = acc + u.0[i].clone() * S::from_int(self.c[i][j][k]);
                }
            }
            acc
        })
    }

    /// Exact integer check of antisymmetry, the Jacobi identity, and
    /// unimodularity of the structure constants.
    pub fn check_invariants(&self) -> bool {
        let c = &self.c;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if c[i][j][k] != -c[j][i][k] {
                        return false;
                    }
                }
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let mut s = 0i64;
                        for m in 0..3 {
                            s += c[i][j][m] * c[m][k][l]
                                + c[j][k][m] * c[m][i][l]
                                + c[k][i][m] * c[m][j][l];
                        }
                        if s != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        // trace(ad_{X_i}) = Σ_j c[i][j][j]
        for i in 0..3 {
            let tr: i64 = (0..3).map(|j| c[i][j][j]).sum();
            if tr != 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_entries_satisfy_invariants() {
        for id in AlgebraId::ALL {
            assert!(catalog(id).check_invariants(), "{id}");
        }
    }

    #[test]
    fn catalog_matches_printed_brackets() {
        let nil = catalog(AlgebraId::Nil);
        assert_eq!(nil.c[0][1], [0, 0, 1]);
        let sl2 = catalog(AlgebraId::Sl2);
        assert_eq!(sl2.c[0][1], [0, 0, -1]);
        assert_eq!(sl2.c[1][2], [1, 0, 0]);
        assert_eq!(sl2.c[2][0], [0, 1, 0]);
    }

    #[test]
    fn su2_bracket_of_first_two_basis_vectors() {
        let su2 = catalog(AlgebraId::Su2);
        let x1 = Vector3::<Rat>::basis(0);
        let x2 = Vector3::<Rat>::basis(1);
        assert_eq!(su2.bracket(&x1, &x2), Vector3::basis(2));
    }

    #[test]
    fn bracket_of_vector_with_itself_vanishes() {
        let sol = catalog(AlgebraId::Sol);
        let u = Vector3::<Rat>::from_ints(3, -2, 7);
        assert!(sol.bracket(&u, &u).is_zero());
    }

    #[test]
    fn sol_bracket_is_linear_over_printed_relations() {
        // [X3, X1 + X2] = X1 - X2
        let sol = catalog(AlgebraId::Sol);
        let x3 = Vector3::<Rat>::basis(2);
        let u = Vector3::from_ints(1, 1, 0);
        assert_eq!(sol.bracket(&x3, &u), Vector3::from_ints(1, -1, 0));
    }

    #[test]
    fn e02_ad_of_x3_rotates_the_plane() {
        let e02 = catalog(AlgebraId::E02);
        let m = e02.ad::<Rat>(&Vector3::basis(2));
        assert_eq!(m.mul_vec(&Vector3::basis(0)), Vector3::basis(1));
        assert_eq!(m.mul_vec(&Vector3::basis(1)), Vector3::basis(0).neg());
        assert!(m.mul_vec(&Vector3::basis(2)).is_zero());
    }

    #[test]
    fn ad_of_zero_is_zero() {
        let su2 = catalog(AlgebraId::Su2);
        assert!(su2.ad::<f64>(&Vector3::zero()).is_zero());
    }

    #[test]
    fn sol_ad_x3_is_traceless() {
        let sol = catalog(AlgebraId::Sol);
        assert!(sol.ad::<Rat>(&Vector3::basis(2)).trace().is_zero());
    }

    fn random_rat_vec(rng: &mut ChaCha8Rng) -> Vector3<Rat> {
        Vector3::from_fn(|_| Rat::from_ratio(rng.gen_range(-24..=24), rng.gen_range(1..=8)))
    }

    #[test]
    fn jacobi_bracket_ad_and_unimodularity_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for id in AlgebraId::ALL {
            let g = catalog(id);
            for _ in 0..1000 {
                let (u, v, w) = (
                    random_rat_vec(&mut rng),
                    random_rat_vec(&mut rng),
                    random_rat_vec(&mut rng),
                );
                // Jacobi identity, exactly.
                let jac = g
                    .bracket(&u, &g.bracket(&v, &w))
                    .add(&g.bracket(&v, &g.bracket(&w, &u)))
                    .add(&g.bracket(&w, &g.bracket(&u, &v)));
                assert!(jac.is_zero(), "{id}");
                // bracket(u, v) = ad(u) v
                assert_eq!(g.bracket(&u, &v), g.ad(&u).mul_vec(&v), "{id}");
                // unimodularity: trace(ad_u) = 0
                assert!(g.ad(&u).trace().is_zero(), "{id}");
            }
        }
    }
}
