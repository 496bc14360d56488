//! Property tests for the algebraic identities that every construction must
//! satisfy regardless of parameters.

use proptest::prelude::*;

use harmlie::connection::MetricLieAlgebra;
use harmlie::homomorphism::{HypPair, UnitPair};
use harmlie::linalg::inner;
use harmlie::metric::{adjoint_map, Metric};
use harmlie::{catalog, AlgebraId, Matrix3, Vector3};

fn algebra_strategy() -> impl Strategy<Value = AlgebraId> {
    prop_oneof![
        Just(AlgebraId::Nil),
        Just(AlgebraId::E02),
        Just(AlgebraId::Sol),
        Just(AlgebraId::Su2),
        Just(AlgebraId::Sl2),
    ]
}

fn vec3() -> impl Strategy<Value = Vector3<f64>> {
    prop::array::uniform3(-5.0f64..5.0).prop_map(Vector3)
}

/// Diagonal SPD metric with entries bounded away from zero.
fn diag_metric() -> impl Strategy<Value = Metric<f64>> {
    prop::array::uniform3(0.2f64..4.0)
        .prop_map(|[a, b, c]| Metric::from_diag(a, b, c).unwrap())
}

proptest! {
    #[test]
    fn bracket_is_bilinear_antisymmetric_and_jacobi(
        id in algebra_strategy(),
        u in vec3(),
        v in vec3(),
        w in vec3(),
        s in -3.0f64..3.0,
    ) {
        let g = catalog(id);
        // antisymmetry
        let uv = g.bracket(&u, &v);
        prop_assert!(uv.add(&g.bracket(&v, &u)).max_abs() < 1e-10);
        // bilinearity in the first slot
        let lhs = g.bracket(&u.scale(&s).add(&w), &v);
        let rhs = uv.scale(&s).add(&g.bracket(&w, &v));
        prop_assert!(lhs.sub(&rhs).max_abs() < 1e-9);
        // Jacobi identity
        let jac = g
            .bracket(&u, &g.bracket(&v, &w))
            .add(&g.bracket(&v, &g.bracket(&w, &u)))
            .add(&g.bracket(&w, &g.bracket(&u, &v)));
        prop_assert!(jac.max_abs() < 1e-9);
        // ad matches the bracket
        prop_assert!(g.ad(&u).mul_vec(&v).sub(&uv).max_abs() < 1e-10);
    }

    #[test]
    fn levi_civita_product_has_torsion_and_compatibility(
        id in algebra_strategy(),
        m in diag_metric(),
        u in vec3(),
        v in vec3(),
        w in vec3(),
    ) {
        let mla = MetricLieAlgebra::new(catalog(id), m).unwrap();
        let a_uv = mla.lc().apply(&u, &v);
        let a_vu = mla.lc().apply(&v, &u);
        prop_assert!(a_uv.sub(&a_vu).sub(&catalog(id).bracket(&u, &v)).max_abs() < 1e-9);
        let s = mla.metric.inner(&a_uv, &w) + mla.metric.inner(&v, &mla.lc().apply(&u, &w));
        prop_assert!(s.abs() < 1e-9);
    }

    #[test]
    fn curvature_is_antisymmetric_and_skew_adjoint(
        id in algebra_strategy(),
        m in diag_metric(),
        u in vec3(),
        v in vec3(),
        w in vec3(),
        z in vec3(),
    ) {
        let mla = MetricLieAlgebra::new(catalog(id), m).unwrap();
        prop_assert!(mla.curvature(&u, &u).max_abs() < 1e-9);
        let k = mla.curvature(&u, &v);
        let k_swapped = mla.curvature(&v, &u);
        prop_assert!(k.add(&k_swapped).max_abs() < 1e-9);
        let lhs = inner(mla.metric.gram(), &k.mul_vec(&w), &z);
        let rhs = inner(mla.metric.gram(), &k.mul_vec(&z), &w);
        prop_assert!((lhs + rhs).abs() < 1e-8);
    }

    #[test]
    fn adjoint_map_satisfies_its_identity(
        src in diag_metric(),
        dst in diag_metric(),
        entries in prop::array::uniform9(-4.0f64..4.0),
        u in vec3(),
        v in vec3(),
    ) {
        let l = Matrix3::from_flat(&entries).unwrap();
        let lstar = adjoint_map(&src, &dst, &l);
        let lhs = src.inner(&lstar.mul_vec(&u), &v);
        let rhs = dst.inner(&u, &l.mul_vec(&v));
        prop_assert!((lhs - rhs).abs() < 1e-8);
        // involution
        let back = adjoint_map(&dst, &src, &lstar);
        prop_assert!(back.sub(&l).max_abs() < 1e-9);
    }

    #[test]
    fn unit_and_hyperbola_pairs_stay_on_curve(t in -20.0f64..20.0, h in 0.05f64..20.0) {
        let p = UnitPair::from_tangent(t);
        prop_assert!((p.cos * p.cos + p.sin * p.sin - 1.0).abs() < 1e-12);
        let b = HypPair::from_tangent(h).unwrap();
        prop_assert!((b.cosh * b.cosh - b.sinh * b.sinh - 1.0).abs() < 1e-9);
    }

    #[test]
    fn frame_is_orthonormal_for_spd_grams(
        id in algebra_strategy(),
        m in diag_metric(),
        offdiag in -0.15f64..0.15,
    ) {
        // bend the diagonal metric a little while keeping it SPD
        let mut gram = m.gram().clone();
        gram.0[0][1] = offdiag * (gram.0[0][0] * gram.0[1][1]).sqrt();
        gram.0[1][0] = gram.0[0][1];
        let metric = Metric::new(gram).unwrap();
        let frame = metric.orthonormal_frame().unwrap();
        prop_assert!(frame.residual(&metric) < 1e-12);
        let _ = catalog(id);
    }
}
