use std::f64::consts::PI;

use proptest::prelude::*;
use rodrigues::rotation::HALF_TURN_ANGLE_TOL;
use rodrigues::*;

fn vec3(scale: f64) -> impl Strategy<Value = Vec3> {
    (-scale..scale, -scale..scale, -scale..scale).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn unit() -> impl Strategy<Value = UnitVector> {
    vec3(1.0)
        .prop_filter("away from zero", |v| v.norm() > 1e-3)
        .prop_map(|v| UnitVector::normalize(v).unwrap())
}

/// Rotation with |θ| ≤ π − 1e-3.
fn rodrigues_vec() -> impl Strategy<Value = RodriguesVector> {
    (unit(), -(PI - 1e-3)..(PI - 1e-3)).prop_map(|(n, theta)| {
        rodrigues_from_axis_angle(&AxisAngle::new(n, theta).unwrap()).unwrap()
    })
}

fn skew_m(v: Vec3) -> Matrix3 {
    skew(v).to_matrix()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn produced_matrices_are_rotations(q in rodrigues_vec()) {
        let (orth, det) = matrix_from_rodrigues(q).defects();
        prop_assert!(orth <= 1e-9 && det <= 1e-9);
        let (orth, det) = cayley_rotation(q).defects();
        prop_assert!(orth <= 1e-9 && det <= 1e-9);
    }

    #[test]
    fn skew_cube_identity(v in vec3(10.0)) {
        let k = skew_m(v);
        let lhs = k * k * k;
        let rhs = k.scale(-v.norm_squared());
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + v.norm().powi(3)));
    }

    #[test]
    fn skew_product_identity(a in vec3(3.0), b in vec3(3.0)) {
        let lhs = skew_m(a) * skew_m(b);
        let rhs = skew_m(a.cross(b)) + b.outer(a).transpose() - Matrix3::IDENTITY.scale(a.dot(b));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn axis_angle_round_trip(n in unit(), theta in -(PI - 1e-3)..(PI - 1e-3)) {
        let q = rodrigues_from_axis_angle(&AxisAngle::new(n, theta).unwrap()).unwrap();
        let back = axis_angle_from_rodrigues(q);
        let expected = AxisAngle::new(n, theta).unwrap().canonical();
        if expected.angle > 1e-9 {
            prop_assert!((back.axis.vec() - expected.axis.vec()).max_abs() <= 1e-9);
        }
        prop_assert!((back.angle - expected.angle).abs() <= 1e-9);
        prop_assert!(((0.5 * back.angle).tan() - q.norm()).abs() <= 1e-9 * q.norm().max(1e-300));
    }

    #[test]
    fn inverse_rotation_undoes(q in rodrigues_vec()) {
        let prod = matrix_from_rodrigues(invert_rotation(q)).then_after(&matrix_from_rodrigues(q));
        prop_assert!(prod.matrix().max_abs_diff(&Matrix3::IDENTITY) <= 1e-12);
    }

    #[test]
    fn rotation_preserves_length(q in rodrigues_vec(), x in vec3(5.0)) {
        let y = apply_rotation(&matrix_from_rodrigues(q), x);
        prop_assert!((y.norm() - x.norm()).abs() <= 1e-12 * (1.0 + x.norm()));
    }

    #[test]
    fn cayley_round_trip(q in rodrigues_vec()) {
        let back = rodrigues_from_matrix(&cayley_rotation(q)).rodrigues().unwrap();
        prop_assert!((back.vec() - q.vec()).max_abs() <= 1e-9);
    }

    #[test]
    fn half_turn_matrices_classify_as_half_turns(n in unit()) {
        let h = HalfTurn::new(n);
        let r = matrix_from_half_turn(h);
        prop_assert_eq!(rodrigues_from_matrix(&r).rodrigues(), Err(RotationError::HalfTurnUndefined));
        match rodrigues_from_matrix(&r) {
            RotationResult::Half(back) => prop_assert!((back.axis().vec() - h.axis().vec()).max_abs() <= 1e-9),
            RotationResult::Regular(_) => prop_assert!(false),
        }
    }

    #[test]
    fn half_turn_axis_sign_is_canonical(n in unit()) {
        prop_assert_eq!(HalfTurn::new(n), HalfTurn::new(-n));
    }

    #[test]
    fn composition_with_identity(q in rodrigues_vec()) {
        prop_assert_eq!(compose(RodriguesVector::ZERO, q), RotationResult::Regular(q));
        prop_assert_eq!(compose(q, RodriguesVector::ZERO), RotationResult::Regular(q));
    }

    #[test]
    fn inverse_law(q in rodrigues_vec()) {
        let r = compose(invert_rotation(q), q).rodrigues().unwrap();
        prop_assert!(r.vec().max_abs() <= 1e-12);
    }

    #[test]
    fn compose_general_matches_matrices_with_half_turns(n in unit(), q in rodrigues_vec()) {
        let h = RotationResult::Half(HalfTurn::new(n));
        let g = RotationResult::Regular(q);
        for (b, a) in [(h, g), (g, h), (h, h)] {
            let expected = b.to_matrix().then_after(&a.to_matrix());
            let got = compose_general(b, a).to_matrix();
            // Products within ~1e-3 rad of a half-turn are classified as one.
            let near_half = 1.0 + expected.matrix().trace() <= cayley::HALF_TURN_TRACE_TOL;
            let tol = if near_half { 2e-3 } else { 1e-9 };
            prop_assert!(got.matrix().max_abs_diff(expected.matrix()) <= tol);
        }
    }

    #[test]
    fn degenerate_numerator_never_vanishes(q1 in vec3(3.0).prop_filter("nonzero", |v| v.norm() > 1e-2), t in vec3(3.0)) {
        // Put q2 on the plane q2·q1 = 1.
        let q2 = q1.scale(1.0 / q1.norm_squared()) + t - q1.scale(t.dot(q1) / q1.norm_squared());
        prop_assert!((1.0 - q2.dot(q1)).abs() <= 1e-12);
        let num = q1 + q2 + q2.cross(q1);
        prop_assert!(num.norm() > 0.0);
        let r = compose(RodriguesVector::new(q2).unwrap(), RodriguesVector::new(q1).unwrap());
        prop_assert!(matches!(r, RotationResult::Half(_)));
        let expected = matrix_from_rodrigues(RodriguesVector::new(q2).unwrap())
            .then_after(&matrix_from_rodrigues(RodriguesVector::new(q1).unwrap()));
        prop_assert!(r.to_matrix().matrix().max_abs_diff(expected.matrix()) <= 1e-9);
    }

    #[test]
    fn tangent_vector_is_perpendicular(q in rodrigues_vec(), x in vec3(5.0)) {
        let t = tangent_to_bisector(q, x);
        let scale = (1.0 + q.norm()) * (1.0 + x.norm());
        prop_assert!(t.dot(x).abs() <= 1e-12 * scale * x.norm());
        prop_assert!(t.dot(q.vec()).abs() <= 1e-12 * scale * q.norm());
    }

    #[test]
    fn halfway_identity(q in vec3(100.0), x in vec3(100.0)) {
        let lhs = bisector_intersection(RodriguesVector::new(q).unwrap(), x) - x;
        let rhs = infinitesimal_displacement(RodriguesVector::new(q).unwrap(), x).scale(0.5);
        // Only the rounding of x + Q×x and the subtraction remain.
        let ulp = f64::EPSILON * (x.max_abs() + rhs.max_abs());
        prop_assert!((lhs - rhs).max_abs() <= 2.0 * ulp);
    }

    #[test]
    fn half_angle_point_is_half_rotation(q in rodrigues_vec(), seed in any::<u64>()) {
        let mut rng = sample::seeded_rng(seed);
        let a = sample::random_perpendicular(&mut rng, q.vec());
        let p = half_angle_point(q, a).unwrap();
        let aa = axis_angle_from_rodrigues(q);
        let expected = euler_rodrigues_matrix(aa.axis, 0.5 * aa.angle).apply(a.vec());
        prop_assert!((p.vec() - expected).max_abs() <= 1e-12);
    }

    #[test]
    fn donkin_arcs_are_half_angles(q1 in rodrigues_vec(), q2 in rodrigues_vec()) {
        let Ok(tri) = donkin_triangle(q1, q2) else { return Ok(()) };
        let (ab, bc, _) = tri.arcs();
        prop_assert!((ab - 0.5 * q1.angle().abs()).abs() <= 1e-9);
        prop_assert!((bc - 0.5 * q2.angle().abs()).abs() <= 1e-9);
        prop_assert!(donkin_verify(&tri) <= 1e-10);
    }

    #[test]
    fn reflected_triangles_obey_the_law(q1 in rodrigues_vec(), q2 in rodrigues_vec()) {
        let Ok(tri) = donkin_triangle(q1, q2) else { return Ok(()) };
        for w in tri.vertices() {
            let r = tri.reflected_in(w);
            prop_assert!(donkin_residual(r.a, r.b, r.c) <= 1e-10);
        }
    }

    #[test]
    fn infinitesimal_sum_commutes(q1 in vec3(1e-3), q2 in vec3(1e-3)) {
        let (a, b) = (RodriguesVector::new(q1).unwrap(), RodriguesVector::new(q2).unwrap());
        prop_assert_eq!(compose_infinitesimal(a, b), compose_infinitesimal(b, a));
    }

    #[test]
    fn velocity_is_perpendicular(w in vec3(5.0), x in vec3(5.0)) {
        let v = velocity_field(AngularVelocity::new(w).unwrap(), x);
        prop_assert!(v.dot(x).abs() <= 1e-12 * (1.0 + w.norm() * x.norm() * x.norm()));
        prop_assert!(v.dot(w).abs() <= 1e-12 * (1.0 + w.norm() * w.norm() * x.norm()));
    }
}

#[test]
fn axis_angle_at_pi_is_rejected() {
    for theta in [PI, -PI, PI - 0.5 * HALF_TURN_ANGLE_TOL] {
        let aa = AxisAngle::new(UnitVector::X, theta).unwrap();
        assert_eq!(
            rodrigues_from_axis_angle(&aa),
            Err(RotationError::HalfTurnUndefined)
        );
    }
}
