//! Geometric reading of the Rodrigues vector and the spherical-triangle
//! construction of rotation composition.
//!
//! For a rotation of angle θ about `n` with `Q = tan(θ/2) n`:
//!
//! * `Q × x` is the tangent to the rotation arc of `x`, running from `x`
//!   to the bisector of the rotation angle;
//! * `(1 + Q×) x` is the point where that tangent meets the bisector;
//! * for a unit `a ⊥ n`, the normalized `(1 + Q×) a` is `a` rotated by θ/2.
//!
//! Composition follows a spherical triangle law: twice the arc AB followed
//! by twice the arc BC equals twice the arc AC.

use crate::composition::PERPENDICULAR_TOL;
use crate::error::{Result, RotationError};
use crate::linalg::{UnitVector, Vec3};
use crate::rotation::{euler_rodrigues_matrix, RodriguesVector, RotationMatrix};

/// Minimum `‖(B − A) × (C − A)‖` for a valid triangle.
pub const TRIANGLE_DEGENERACY_TOL: f64 = 1e-9;

/// Relative threshold on `‖Q1 × Q2‖` below which two axes are parallel.
pub const PARALLEL_AXES_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalTriangle {
    pub a: UnitVector,
    pub b: UnitVector,
    pub c: UnitVector,
}

impl SphericalTriangle {
    pub fn new(a: UnitVector, b: UnitVector, c: UnitVector) -> Result<Self> {
        let (av, bv, cv) = (a.vec(), b.vec(), c.vec());
        if (bv - av).cross(cv - av).norm() <= TRIANGLE_DEGENERACY_TOL {
            return Err(RotationError::DegenerateTriangle);
        }
        Ok(Self { a, b, c })
    }

    pub fn vertices(&self) -> [UnitVector; 3] {
        [self.a, self.b, self.c]
    }

    /// Arc lengths `(AB, BC, AC)` in radians.
    pub fn arcs(&self) -> (f64, f64, f64) {
        (
            arc_angle(self.a.vec(), self.b.vec()),
            arc_angle(self.b.vec(), self.c.vec()),
            arc_angle(self.a.vec(), self.c.vec()),
        )
    }

    /// The half-turn image of the triangle about vertex `w`.
    pub fn reflected_in(&self, w: UnitVector) -> SphericalTriangle {
        let r = |v: UnitVector| UnitVector::new_unchecked(reflect_in_vertex(v.vec(), w.vec()));
        SphericalTriangle {
            a: r(self.a),
            b: r(self.b),
            c: r(self.c),
        }
    }
}

/// Angle between two vectors, `atan2(‖u × v‖, u·v)`.
pub fn arc_angle(u: Vec3, v: Vec3) -> f64 {
    u.cross(v).norm().atan2(u.dot(v))
}

/// `2 (v·w) w − v`: the point symmetric to `v` through the unit vector `w`.
pub fn reflect_in_vertex(v: Vec3, w: Vec3) -> Vec3 {
    w.scale(2.0 * v.dot(w)) - v
}

/// `Q × x`, tangent to the arc of `x` and ending on the angle bisector.
pub fn tangent_to_bisector(q: RodriguesVector, x: Vec3) -> Vec3 {
    q.vec().cross(x)
}

/// `(1 + Q×) x`, the intersection of the tangent at `x` with the bisector.
pub fn bisector_intersection(q: RodriguesVector, x: Vec3) -> Vec3 {
    x + q.vec().cross(x)
}

/// Rotates a unit vector perpendicular to `Q` by half the rotation angle:
/// `(1 + Q×) a / ‖(1 + Q×) a‖`.
pub fn half_angle_point(q: RodriguesVector, a: UnitVector) -> Result<UnitVector> {
    let dot = a.vec().dot(q.vec());
    if dot.abs() > PERPENDICULAR_TOL * q.norm() {
        return Err(RotationError::NotPerpendicular { dot });
    }
    // ‖(1 + Q×)a‖ = sqrt(1 + ‖Q‖²) > 0 for a ⊥ Q.
    Ok(UnitVector::new_unchecked(
        bisector_intersection(q, a.vec())
            .normalized()
            .expect("(1 + Q×)a is never zero"),
    ))
}

/// Builds the spherical triangle whose sides are half the rotations `q1`
/// (first) and `q2` (second): A→B turns by θ₁/2 about `q1`, B→C by θ₂/2
/// about `q2`. B is the intersection `normalize(Q2 × Q1)` of the two great
/// circles.
pub fn donkin_triangle(q1: RodriguesVector, q2: RodriguesVector) -> Result<SphericalTriangle> {
    let (v1, v2) = (q1.vec(), q2.vec());
    let cross = v2.cross(v1);
    let scale = v1.norm() * v2.norm();
    if scale == 0.0 || cross.norm() <= PARALLEL_AXES_TOL * scale {
        return Err(RotationError::ParallelAxes);
    }
    let b = UnitVector::normalize(cross)?;
    let n1 = UnitVector::normalize(v1)?;
    let a = euler_rodrigues_matrix(n1, -0.5 * q1.angle()).apply(b.vec());
    let a = UnitVector::normalize(a)?;
    let c = half_angle_point(q2, b)?;
    SphericalTriangle::new(a, b, c)
}

/// Rotation by twice the arc from `u` to `v`, about `u × v`. Coincident or
/// antipodal endpoints give the identity.
pub fn twice_arc_rotation(u: Vec3, v: Vec3) -> RotationMatrix {
    match UnitVector::normalize(u.cross(v)) {
        Ok(axis) => euler_rodrigues_matrix(axis, 2.0 * arc_angle(u, v)),
        Err(_) => RotationMatrix::IDENTITY,
    }
}

/// `‖R(2BC) R(2AB) − R(2AC)‖∞` for arbitrary unit vertices, including
/// collapsed triangles.
pub fn donkin_residual(a: UnitVector, b: UnitVector, c: UnitVector) -> f64 {
    let (a, b, c) = (a.vec(), b.vec(), c.vec());
    let ab = twice_arc_rotation(a, b);
    let bc = twice_arc_rotation(b, c);
    let ac = twice_arc_rotation(a, c);
    bc.then_after(&ab).matrix().max_abs_diff(ac.matrix())
}

pub fn donkin_verify(tri: &SphericalTriangle) -> f64 {
    donkin_residual(tri.a, tri.b, tri.c)
}
