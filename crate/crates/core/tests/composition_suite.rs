//! Seeded checks of composition and the spherical-triangle construction.

use rand::Rng;
use rodrigues::sample::{random_perpendicular, random_rodrigues, seeded_rng, MAX_SAMPLE_ANGLE};
use rodrigues::*;

const SAMPLES: usize = 2000;

fn pair<R: Rng>(rng: &mut R) -> (RodriguesVector, RodriguesVector) {
    loop {
        let q1 = random_rodrigues(rng, MAX_SAMPLE_ANGLE);
        let q2 = random_rodrigues(rng, MAX_SAMPLE_ANGLE);
        if (1.0 - q2.vec().dot(q1.vec())).abs() >= 1e-3 {
            return (q1, q2);
        }
    }
}

#[test]
fn homomorphism() {
    let mut rng = seeded_rng(21);
    for _ in 0..SAMPLES {
        let (q1, q2) = pair(&mut rng);
        let product = matrix_from_rodrigues(q2).then_after(&matrix_from_rodrigues(q1));
        let composed = compose(q2, q1).to_matrix();
        assert!(composed.matrix().max_abs_diff(product.matrix()) <= 1e-12);
    }
}

#[test]
fn swapping_order_keeps_the_angle() {
    let mut rng = seeded_rng(22);
    let mut checked = 0;
    while checked < SAMPLES {
        let (q1, q2) = pair(&mut rng);
        let (RotationResult::Regular(a), RotationResult::Regular(b)) =
            (compose(q2, q1), compose(q1, q2))
        else {
            continue;
        };
        if a.angle().abs() > MAX_SAMPLE_ANGLE {
            continue;
        }
        checked += 1;
        assert!((a.norm() - b.norm()).abs() <= 1e-12);
        let cross = q2
            .vec()
            .cross(q1.vec())
            .scale(2.0 / (1.0 - q2.vec().dot(q1.vec())));
        assert!((a.vec() - b.vec() - cross).max_abs() <= 1e-12);
    }
}

#[test]
fn lambda_forms_agree() {
    let mut rng = seeded_rng(23);
    for _ in 0..SAMPLES {
        let (q1, q2) = pair(&mut rng);
        let Ok(tri) = donkin_triangle(q1, q2) else {
            continue;
        };
        let q3 = compose(q2, q1).rodrigues().unwrap();
        let a = tri.a.vec();
        let lambda = 1.0 - q2.vec().dot(q1.vec());
        assert!(lambda_residual(q2, q1, q3, a) <= 1e-10);
        // λ (Q3 × A) = Q1 × A + Q2 × A + (Q2 × Q1) × A
        let lhs = q3.vec().cross(a).scale(lambda);
        let rhs = q1.vec().cross(a) + q2.vec().cross(a) + q2.vec().cross(q1.vec()).cross(a);
        assert!((lhs - rhs).norm() <= 1e-10);
        let d = composition_diagnostics(q2, q1, tri.a).unwrap();
        assert_eq!(d.lambda, lambda);
    }
}

#[test]
fn triangle_edges_follow_the_rotations() {
    let mut rng = seeded_rng(24);
    let mut negative = 0;
    for _ in 0..SAMPLES {
        let (q1, q2) = pair(&mut rng);
        let Ok(tri) = donkin_triangle(q1, q2) else {
            continue;
        };
        let (a, b, c) = (tri.a.vec(), tri.b.vec(), tri.c.vec());
        let dir = |v: Vec3| v.normalized().unwrap();
        assert!((dir(a + q1.vec().cross(a)) - b).norm() <= 1e-10);
        assert!((dir(b + q2.vec().cross(b)) - c).norm() <= 1e-10);
        let q3 = compose(q2, q1).rodrigues().unwrap();
        let lambda = 1.0 - q2.vec().dot(q1.vec());
        let expected = if lambda > 0.0 { c } else { -c };
        negative += usize::from(lambda < 0.0);
        assert!((dir(a + q3.vec().cross(a)) - expected).norm() <= 1e-10);
        assert!(donkin_verify(&tri) <= 1e-10);
    }
    // Both signs of λ occur in the sample.
    assert!(negative > 0);
}

#[test]
fn half_angle_propositions() {
    let mut rng = seeded_rng(25);
    for _ in 0..SAMPLES {
        let q = random_rodrigues(&mut rng, MAX_SAMPLE_ANGLE);
        let aa = axis_angle_from_rodrigues(q);
        let a = random_perpendicular(&mut rng, q.vec());
        // Tangent length law.
        let t = tangent_to_bisector(q, a.vec());
        assert!((t.norm() - q.norm()).abs() <= 1e-12 * (1.0 + q.norm()));
        // The planar angle between a and (1 + Q×)a is θ/2.
        let p = bisector_intersection(q, a.vec());
        assert!((arc_angle(a.vec(), p) - 0.5 * aa.angle).abs() <= 1e-12);
        let h = half_angle_point(q, a).unwrap();
        let expected = euler_rodrigues_matrix(aa.axis, 0.5 * aa.angle).apply(a.vec());
        assert!((h.vec() - expected).max_abs() <= 1e-12);
    }
}

#[test]
fn axial_component_is_preserved() {
    let mut rng = seeded_rng(26);
    for _ in 0..SAMPLES {
        let q = random_rodrigues(&mut rng, MAX_SAMPLE_ANGLE);
        let x = sample::random_vec3(&mut rng, 3.0);
        let p = bisector_intersection(q, x);
        if let Some(n) = q.vec().normalized() {
            assert!((p.dot(n) - x.dot(n)).abs() <= 1e-12 * (1.0 + x.norm()));
        }
    }
}
