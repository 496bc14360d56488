//! Levi-Civita product of a metric Lie algebra, the unimodularity vector, and
//! the curvature operator of the product.

use crate::algebra::LieAlgebra;
use crate::error::Result;
use crate::linalg::{Matrix3, Vector3};
use crate::metric::Metric;
use crate::scalar::Scalar;

/// The Levi-Civita product `A` stored as `A[i][j] = A_{X_i} X_j` in the fixed
/// basis. It is the unique bilinear product with
/// `A_u v − A_v u = [u, v]` and `⟨A_u v, w⟩ + ⟨v, A_u w⟩ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LCProduct<S> {
    pub table: [[Vector3<S>; 3]; 3],
}

impl<S: Scalar> LCProduct<S> {
    /// `A_u v` by bilinear expansion of the cached basis table.
    pub fn apply(&self, u: &Vector3<S>, v: &Vector3<S>) -> Vector3<S> {
        let mut out = Vector3::zero();
        for i in 0..3 {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if v.0[j].is_zero() {
                    continue;
                }
                let w = u.0[i].clone() * v.0[j].clone();
                out = out.add(&self.table[i][j].scale(&w));
            }
        }
        out
    }
}

/// A Lie algebra together with a left-invariant metric, with the Gram inverse
/// and Levi-Civita product precomputed. Immutable after construction.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra<S> {
    pub algebra: &'static LieAlgebra,
    pub metric: Metric<S>,
    gram_inv: Matrix3<S>,
    lc: LCProduct<S>,
}

impl<S: Scalar> MetricLieAlgebra<S> {
    pub fn new(algebra: &'static LieAlgebra, metric: Metric<S>) -> Result<Self> {
        let gram_inv = metric.gram_inv();
        let lc = levi_civita(algebra, &metric, &gram_inv);
        Ok(MetricLieAlgebra {
            algebra,
            metric,
            gram_inv,
            lc,
        })
    }

    pub fn gram_inv(&self) -> &Matrix3<S> {
        &self.gram_inv
    }

    pub fn lc(&self) -> &LCProduct<S> {
        &self.lc
    }

    /// The unimodularity vector through the trace route: solve
    /// `⟨U, v⟩ = tr(ad_v)` for `U`. Zero exactly for every catalog algebra.
    pub fn unimodular_vector(&self) -> Vector3<S> {
        let t = Vector3::from_fn(|k| {
            self.algebra
                .ad::<S>(&Vector3::basis(k))
                .trace()
        });
        self.gram_inv.mul_vec(&t)
    }

    /// The unimodularity vector through the orthonormal-frame route,
    /// `Σ_i A_{e_i} e_i`. For any orthonormal frame the sum collapses to
    /// `Σ_{p,q} (G⁻¹)_{pq} A_{X_p} X_q`, which is what is evaluated here; it
    /// stays exact on the rational path even when no exact frame exists.
    pub fn unimodular_vector_frame_sum(&self) -> Vector3<S> {
        let mut out = Vector3::zero();
        for p in 0..3 {
            for q in 0..3 {
                let w = self.gram_inv.0[p][q].clone();
                if w.is_zero() {
                    continue;
                }
                out = out.add(&self.lc.table[p][q].scale(&w));
            }
        }
        out
    }

    /// Matrix of `w ↦ K(u,v)w = A_u A_v w − A_v A_u w − A_{[u,v]} w`.
    pub fn curvature(&self, u: &Vector3<S>, v: &Vector3<S>) -> Matrix3<S> {
        let lie = self.algebra.bracket(u, v);
        let mut cols = [Vector3::zero(), Vector3::zero(), Vector3::zero()];
        for (k, col) in cols.iter_mut().enumerate() {
            let w = Vector3::basis(k);
            let t1 = self.lc.apply(u, &self.lc.apply(v, &w));
            let t2 = self.lc.apply(v, &self.lc.apply(u, &w));
            let t3 = self.lc.apply(&lie, &w);
            *col = t1.sub(&t2).sub(&t3);
        }
        Matrix3::from_fn(|i, j| cols[j].0[i].clone())
    }

    /// `K(u,v)w` without materializing the matrix.
    pub fn curvature_apply(&self, u: &Vector3<S>, v: &Vector3<S>, w: &Vector3<S>) -> Vector3<S> {
        let t1 = self.lc.apply(u, &self.lc.apply(v, w));
        let t2 = self.lc.apply(v, &self.lc.apply(u, w));
        let t3 = self.lc.apply(&self.algebra.bracket(u, v), w);
        t1.sub(&t2).sub(&t3)
    }
}

/// Builds the Levi-Civita table by solving, for each basis pair `(i, j)`,
/// `G · A_{X_i}X_j = rhs` with
/// `rhs_k = ½(⟨[X_i,X_j],X_k⟩ + ⟨[X_k,X_i],X_j⟩ + ⟨[X_k,X_j],X_i⟩)`.
fn levi_civita<S: Scalar>(
    algebra: &LieAlgebra,
    metric: &Metric<S>,
    gram_inv: &Matrix3<S>,
) -> LCProduct<S> {
    let half = S::from_ratio(1, 2);
    let basis: [Vector3<S>; 3] = [Vector3::basis(0), Vector3::basis(1), Vector3::basis(2)];
    let mut table: [[Vector3<S>; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let bij = algebra.bracket_basis::<S>(i, j);
            let rhs = Vector3::from_fn(|k| {
                let bki = algebra.bracket_basis::<S>(k, i);
                let bkj = algebra.bracket_basis::<S>(k, j);
                half.clone()
                    * (metric.inner(&bij, &basis[k])
                        + metric.inner(&bki, &basis[j])
                        + metric.inner(&bkj, &basis[i]))
            });
            table[i][j] = gram_inv.mul_vec(&rhs);
        }
    }
    LCProduct { table }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, AlgebraId};
    use crate::linalg::inner;
    use crate::metric::MetricFamily;
    use crate::params::Params as MetricParams;
    use crate::scalar::Rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rp(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn mla(id: AlgebraId, metric: Metric<Rat>) -> MetricLieAlgebra<Rat> {
        MetricLieAlgebra::new(catalog(id), metric).unwrap()
    }

    #[test]
    fn round_su2_product_is_half_bracket() {
        let m = mla(AlgebraId::Su2, Metric::euclidean());
        let a12 = &m.lc().table[0][1];
        assert_eq!(*a12, Vector3::basis(2).scale(&rp(1, 2)));
        // A_u v = ½[u,v] for every basis pair under a bi-invariant metric
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    m.lc().table[i][j],
                    m.algebra
                        .bracket_basis::<Rat>(i, j)
                        .scale(&rp(1, 2))
                );
            }
        }
    }

    #[test]
    fn su2_squashed_metric_kills_a12() {
        // G = diag(2,1,1): A_{X1}X2 = ((1 + 1 - 2) / 2)X3 = 0
        let m = mla(
            AlgebraId::Su2,
            Metric::from_diag(rp(2, 1), rp(1, 1), rp(1, 1)).unwrap(),
        );
        assert!(m.lc().table[0][1].is_zero());
    }

    #[test]
    fn nil_a33_vanishes() {
        let m = mla(
            AlgebraId::Nil,
            Metric::from_diag(rp(5, 2), rp(5, 2), rp(1, 1)).unwrap(),
        );
        assert!(m.lc().table[2][2].is_zero());
    }

    fn random_metric(rng: &mut ChaCha8Rng, id: AlgebraId) -> Metric<Rat> {
        let fams = MetricFamily::for_algebra(id);
        let fam = fams[rng.gen_range(0..fams.len())];
        let pos = |rng: &mut ChaCha8Rng| rp(rng.gen_range(1..=24), rng.gen_range(1..=8));
        let params = match fam {
            MetricFamily::Nil => MetricParams::new([("lambda", pos(rng))]),
            MetricFamily::E02 => MetricParams::new([
                ("mu", rp(rng.gen_range(1..=8), 8)),
                ("nu", pos(rng)),
            ]),
            MetricFamily::SolDiag => MetricParams::new([("nu", pos(rng))]),
            MetricFamily::SolNonDiag => {
                MetricParams::new([("mu", rp(1, 1) + pos(rng)), ("nu", pos(rng))])
            }
            MetricFamily::Su2 => {
                let nu = pos(rng);
                let mu = nu.clone() + pos(rng);
                let l = mu.clone() + pos(rng);
                MetricParams::new([("lambda", l), ("mu", mu), ("nu", nu)])
            }
            MetricFamily::Sl2 => {
                let l = pos(rng);
                let mu = l.clone() + pos(rng);
                MetricParams::new([("lambda", l), ("mu", mu), ("nu", pos(rng))])
            }
        };
        fam.instantiate(&params).unwrap()
    }

    #[test]
    fn torsion_and_compatibility_hold_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for id in AlgebraId::ALL {
            for _ in 0..100 {
                let m = mla(id, random_metric(&mut rng, id));
                let basis: [Vector3<Rat>; 3] =
                    [Vector3::basis(0), Vector3::basis(1), Vector3::basis(2)];
                for i in 0..3 {
                    for j in 0..3 {
                        // torsion: A_u v − A_v u = [u, v]
                        let lhs = m.lc().table[i][j].sub(&m.lc().table[j][i]);
                        assert_eq!(lhs, m.algebra.bracket_basis::<Rat>(i, j), "{id}");
                        // compatibility: ⟨A_u v, w⟩ + ⟨v, A_u w⟩ = 0
                        for k in 0..3 {
                            let s = m.metric.inner(&m.lc().table[i][j], &basis[k])
                                + m.metric.inner(&basis[j], &m.lc().table[i][k]);
                            assert!(s.is_zero(), "{id}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unimodular_vector_vanishes_both_routes() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for id in AlgebraId::ALL {
            for _ in 0..50 {
                let m = mla(id, random_metric(&mut rng, id));
                assert!(m.unimodular_vector().is_zero(), "{id}");
                assert!(m.unimodular_vector_frame_sum().is_zero(), "{id}");
            }
        }
    }

    #[test]
    fn e02_unimodular_vector_random_float_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let mu: f64 = rng.gen_range(0.05..1.0);
            let nu: f64 = rng.gen_range(0.05..10.0);
            let m = MetricLieAlgebra::new(
                catalog(AlgebraId::E02),
                Metric::from_diag(1.0, mu, nu).unwrap(),
            )
            .unwrap();
            assert!(m.unimodular_vector_frame_sum().max_abs() < 1e-12);
            assert!(m.unimodular_vector().max_abs() < 1e-12);
        }
    }

    /// The frame-based sum must not depend on which orthonormal frame is used:
    /// recompute it literally over a Cholesky frame twirled by a random
    /// orthogonal matrix and compare with the closed form.
    #[test]
    fn frame_sum_is_frame_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for id in AlgebraId::ALL {
            for _ in 0..20 {
                let gram = {
                    let m = random_metric(&mut rng, id);
                    Matrix3::<f64>::from_fn(|i, j| m.gram().0[i][j].to_f64())
                };
                let metric = Metric::new(gram).unwrap();
                let m = MetricLieAlgebra::new(catalog(id), metric).unwrap();
                let frame = m.metric.orthonormal_frame().unwrap();
                // random rotation built from three angle factors
                let (a, b, c) = (
                    rng.gen_range(0.0..std::f64::consts::TAU),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                );
                let rot = |t: f64, i: usize, j: usize| {
                    let mut r = Matrix3::<f64>::identity();
                    r.0[i][i] = t.cos();
                    r.0[j][j] = t.cos();
                    r.0[i][j] = t.sin();
                    r.0[j][i] = -t.sin();
                    r
                };
                let q = rot(a, 0, 1).mul(&rot(b, 0, 2)).mul(&rot(c, 1, 2));
                let twirled = frame.cols.mul(&q);
                let mut sum = Vector3::<f64>::zero();
                for i in 0..3 {
                    let e = twirled.col(i);
                    sum = sum.add(&m.lc().apply(&e, &e));
                }
                let closed = m.unimodular_vector_frame_sum();
                assert!(sum.sub(&closed).max_abs() < 1e-12, "{id}");
            }
        }
    }

    #[test]
    fn curvature_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for id in AlgebraId::ALL {
            for _ in 0..25 {
                let m = mla(id, random_metric(&mut rng, id));
                let rv = |rng: &mut ChaCha8Rng| {
                    Vector3::from_fn(|_| rp(rng.gen_range(-12..=12), rng.gen_range(1..=4)))
                };
                let (u, v, w, z) = (rv(&mut rng), rv(&mut rng), rv(&mut rng), rv(&mut rng));
                // K(u,u) = 0
                assert!(m.curvature(&u, &u).is_zero(), "{id}");
                // antisymmetry in (u, v)
                assert_eq!(
                    m.curvature(&u, &v),
                    m.curvature(&v, &u).scale(&rp(-1, 1)),
                    "{id}"
                );
                // skew-adjointness: ⟨K(u,v)w, z⟩ = −⟨K(u,v)z, w⟩
                let k = m.curvature(&u, &v);
                let lhs = inner(m.metric.gram(), &k.mul_vec(&w), &z);
                let rhs = inner(m.metric.gram(), &k.mul_vec(&z), &w);
                assert!((lhs + rhs).is_zero(), "{id}");
            }
        }
    }

    #[test]
    fn round_su2_sectional_curvature_is_quarter() {
        let m = mla(AlgebraId::Su2, Metric::euclidean());
        let k = m.curvature(&Vector3::basis(0), &Vector3::basis(1));
        let val = inner(
            m.metric.gram(),
            &k.mul_vec(&Vector3::basis(1)),
            &Vector3::basis(0),
        );
        assert_eq!(val, rp(1, 4));
    }
}
