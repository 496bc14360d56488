//! Dense 3-dimensional vectors and matrices over a [`Scalar`].
//!
//! Everything here is hand-rolled because the exact path needs adjugate
//! inverses and Cholesky pivots over arbitrary-precision rationals; at fixed
//! dimension three that is a handful of cofactors.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Vector3<S>(pub [S; 3]);

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix3<S>(pub [[S; 3]; 3]);

impl<S: Scalar> Default for Vector3<S> {
    fn default() -> Self {
        Vector3::zero()
    }
}

impl<S: Scalar> Vector3<S> {
    pub fn zero() -> Self {
        Vector3([S::zero(), S::zero(), S::zero()])
    }

    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v.0[k] = S::one();
        v
    }

    pub fn from_fn(mut f: impl FnMut(usize) -> S) -> Self {
        Vector3([f(0), f(1), f(2)])
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Vector3([S::from_int(a), S::from_int(b), S::from_int(c)])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i| self.0[i].clone() + rhs.0[i].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i| self.0[i].clone() - rhs.0[i].clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(|i| -self.0[i].clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|i| self.0[i].clone() * s.clone())
    }

    /// Plain coordinate dot product (no metric).
    pub fn dot(&self, rhs: &Self) -> S {
        let mut acc = S::zero();
        for i in 0..3 {
            acc = acc + self.0[i].clone() * rhs.0[i].clone();
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|x| x.abs_f64()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.0[0].to_f64(), self.0[1].to_f64(), self.0[2].to_f64()]
    }
}

impl<S: Scalar> Matrix3<S> {
    pub fn zero() -> Self {
        Matrix3([
            [S::zero(), S::zero(), S::zero()],
            [S::zero(), S::zero(), S::zero()],
            [S::zero(), S::zero(), S::zero()],
        ])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Matrix3([
            [f(0, 0), f(0, 1), f(0, 2)],
            [f(1, 0), f(1, 1), f(1, 2)],
            [f(2, 0), f(2, 1), f(2, 2)],
        ])
    }

    pub fn from_rows(rows: [[S; 3]; 3]) -> Self {
        Matrix3(rows)
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| S::from_int(rows[i][j]))
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn col(&self, j: usize) -> Vector3<S> {
        Vector3::from_fn(|i| self.0[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() + rhs.0[i][j].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() - rhs.0[i][j].clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() * s.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = S::zero();
            for k in 0..3 {
                acc = acc + self.0[i][k].clone() * rhs.0[k][j].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &Vector3<S>) -> Vector3<S> {
        Vector3::from_fn(|i| {
            let mut acc = S::zero();
            for k in 0..3 {
                acc = acc + self.0[i][k].clone() * v.0[k].clone();
            }
            acc
        })
    }

    pub fn trace(&self) -> S {
        self.0[0][0].clone() + self.0[1][1].clone() + self.0[2][2].clone()
    }

    pub fn det(&self) -> S {
        let m = &self.0;
        m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
            - m[0][1].clone()
                * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
            + m[0][2].clone()
                * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
    }

    /// Adjugate inverse; exact on the rational path. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.0;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
        };
        // adj[i][j] = cofactor(j, i)
        let adj = Matrix3([
            [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
            [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
            [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
        ]);
        Some(Self::from_fn(|i, j| adj.0[i][j].clone() / d.clone()))
    }

    /// Solves `self * x = rhs` through the adjugate inverse.
    pub fn solve(&self, rhs: &Vector3<S>) -> Option<Vector3<S>> {
        Some(self.inverse()?.mul_vec(rhs))
    }

    pub fn is_symmetric(&self) -> bool {
        self.0[0][1] == self.0[1][0] && self.0[0][2] == self.0[2][0] && self.0[1][2] == self.0[2][1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|x| x.abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn to_flat(&self) -> [S; 9] {
        let m = &self.0;
        [
            m[0][0].clone(), m[0][1].clone(), m[0][2].clone(),
            m[1][0].clone(), m[1][1].clone(), m[1][2].clone(),
            m[2][0].clone(), m[2][1].clone(), m[2][2].clone(),
        ]
    }

    pub fn from_flat(v: &[S]) -> Option<Self> {
        if v.len() != 9 {
            return None;
        }
        Some(Matrix3([
            [v[0].clone(), v[1].clone(), v[2].clone()],
            [v[3].clone(), v[4].clone(), v[5].clone()],
            [v[6].clone(), v[7].clone(), v[8].clone()],
        ]))
    }
}

/// ⟨u, v⟩ with respect to the Gram matrix `g`.
pub fn inner<S: Scalar>(g: &Matrix3<S>, u: &Vector3<S>, v: &Vector3<S>) -> S {
    u.dot(&g.mul_vec(v))
}
