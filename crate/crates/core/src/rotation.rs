//! Rotation representations and the conversions among them.
//!
//! The Rodrigues vector `Q = tan(θ/2) n` is the primary representation. It
//! covers every rotation except the half-turns, which carry their own type.
//! All rotations are active and right-handed.

use std::f64::consts::{PI, TAU};

use crate::error::{Result, RotationError};
use crate::linalg::{skew, Matrix3, UnitVector, Vec3};

/// Orthogonality and determinant tolerance for [`RotationMatrix::new`].
pub const ROTATION_TOL: f64 = 1e-9;

/// Angles within this distance of π have no Rodrigues vector.
pub const HALF_TURN_ANGLE_TOL: f64 = 1e-12;

/// Axis reported for the null rotation.
pub const NULL_ROTATION_AXIS: UnitVector = UnitVector::Z;

/// Folds an angle into `(-π, π]`.
pub fn normalize_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    if a > PI {
        a - TAU
    } else {
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub axis: UnitVector,
    /// Radians, in `(-π, π]`.
    pub angle: f64,
}

impl AxisAngle {
    pub fn new(axis: UnitVector, angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(RotationError::NonFinite("angle"));
        }
        Ok(Self {
            axis,
            angle: normalize_angle(angle),
        })
    }

    /// Same rotation with the angle in `[0, π]`; a negative angle flips the axis.
    pub fn canonical(self) -> Self {
        if self.angle < 0.0 {
            Self {
                axis: -self.axis,
                angle: -self.angle,
            }
        } else {
            self
        }
    }

    pub fn to_matrix(&self) -> RotationMatrix {
        euler_rodrigues_matrix(self.axis, self.angle)
    }
}

/// Rodrigues' vector `Q = tan(θ/2) n`. Any finite vector is a valid rotation
/// of angle `2 atan‖Q‖ < π`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RodriguesVector(Vec3);

impl RodriguesVector {
    pub const ZERO: RodriguesVector = RodriguesVector(Vec3::ZERO);

    pub fn new(v: Vec3) -> Result<Self> {
        if v.is_finite() {
            Ok(Self(v))
        } else {
            Err(RotationError::NonFinite("Rodrigues vector"))
        }
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vec3::new(x, y, z))
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    /// Rotation angle `2 atan‖Q‖` in `[0, π)`.
    pub fn angle(self) -> f64 {
        2.0 * self.norm().atan()
    }
}

impl std::ops::Neg for RodriguesVector {
    type Output = RodriguesVector;
    fn neg(self) -> RodriguesVector {
        RodriguesVector(-self.0)
    }
}

/// A proper orthogonal 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix(Matrix3);

impl RotationMatrix {
    pub const IDENTITY: RotationMatrix = RotationMatrix(Matrix3::IDENTITY);

    /// Validates `RᵀR = 1` and `det R = 1` within [`ROTATION_TOL`].
    pub fn new(m: Matrix3) -> Result<Self> {
        if !m.is_finite() {
            return Err(RotationError::NonFinite("rotation matrix"));
        }
        let orthogonality = (m.transpose() * m).max_abs_diff(&Matrix3::IDENTITY);
        let det = m.det();
        if orthogonality > ROTATION_TOL || (det - 1.0).abs() > ROTATION_TOL {
            return Err(RotationError::NotARotation { orthogonality, det });
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(m: Matrix3) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.0
    }

    pub fn transpose(&self) -> RotationMatrix {
        Self(self.0.transpose())
    }

    /// `self * other`: `other` acts first.
    pub fn then_after(&self, other: &RotationMatrix) -> RotationMatrix {
        Self(self.0 * other.0)
    }

    pub fn apply(&self, x: Vec3) -> Vec3 {
        self.0 * x
    }

    /// `‖RᵀR − 1‖∞` and `|det R − 1|`.
    pub fn defects(&self) -> (f64, f64) {
        (
            (self.0.transpose() * self.0).max_abs_diff(&Matrix3::IDENTITY),
            (self.0.det() - 1.0).abs(),
        )
    }
}

/// A rotation by exactly π. The axis is canonical: its first nonzero
/// component is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfTurn {
    axis: UnitVector,
}

impl HalfTurn {
    pub fn new(axis: UnitVector) -> Self {
        let v = axis.vec();
        let lead = v
            .to_array()
            .into_iter()
            .find(|c| c.abs() > 1e-12)
            .unwrap_or(1.0);
        let axis = if lead < 0.0 { -axis } else { axis };
        Self { axis }
    }

    pub fn axis(&self) -> UnitVector {
        self.axis
    }
}

/// Either a Rodrigues vector or a half-turn, the one rotation class the
/// Rodrigues vector cannot represent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RotationResult {
    Regular(RodriguesVector),
    Half(HalfTurn),
}

impl RotationResult {
    pub const IDENTITY: RotationResult = RotationResult::Regular(RodriguesVector::ZERO);

    pub fn to_matrix(&self) -> RotationMatrix {
        match self {
            RotationResult::Regular(q) => matrix_from_rodrigues(*q),
            RotationResult::Half(h) => matrix_from_half_turn(*h),
        }
    }

    /// Canonical axis-angle: angle in `[0, π]`.
    pub fn axis_angle(&self) -> AxisAngle {
        match self {
            RotationResult::Regular(q) => axis_angle_from_rodrigues(*q),
            RotationResult::Half(h) => AxisAngle {
                axis: h.axis(),
                angle: PI,
            },
        }
    }

    pub fn rodrigues(&self) -> Result<RodriguesVector> {
        match self {
            RotationResult::Regular(q) => Ok(*q),
            RotationResult::Half(_) => Err(RotationError::HalfTurnUndefined),
        }
    }
}

/// `R = cosθ 1 + sinθ (n×) + (1 − cosθ) n nᵀ`.
pub fn euler_rodrigues_matrix(n: UnitVector, theta: f64) -> RotationMatrix {
    let n = n.vec();
    let (s, c) = theta.sin_cos();
    let m = Matrix3::IDENTITY.scale(c) + skew(n).to_matrix().scale(s) + n.outer(n).scale(1.0 - c);
    RotationMatrix::new_unchecked(m)
}

pub fn rodrigues_from_axis_angle(aa: &AxisAngle) -> Result<RodriguesVector> {
    let angle = normalize_angle(aa.angle);
    if (angle.abs() - PI).abs() <= HALF_TURN_ANGLE_TOL {
        return Err(RotationError::HalfTurnUndefined);
    }
    Ok(RodriguesVector(aa.axis.vec().scale((0.5 * angle).tan())))
}

/// Angle `2 atan‖Q‖` in `[0, π)`; the null rotation reports axis `(0,0,1)`.
pub fn axis_angle_from_rodrigues(q: RodriguesVector) -> AxisAngle {
    match q.0.normalized() {
        Some(axis) => AxisAngle {
            axis: UnitVector::new_unchecked(axis),
            angle: q.angle(),
        },
        None => AxisAngle {
            axis: NULL_ROTATION_AXIS,
            angle: 0.0,
        },
    }
}

/// `R = 1 + 2/(1 + Q·Q) [(Q×) + (Q×)²]`.
pub fn matrix_from_rodrigues(q: RodriguesVector) -> RotationMatrix {
    let k = skew(q.0);
    let factor = 2.0 / (1.0 + q.0.norm_squared());
    let m = Matrix3::IDENTITY + (k.to_matrix() + k.squared()).scale(factor);
    RotationMatrix::new_unchecked(m)
}

/// `R = 2 n nᵀ − 1`.
pub fn matrix_from_half_turn(h: HalfTurn) -> RotationMatrix {
    let n = h.axis.vec();
    RotationMatrix::new_unchecked(n.outer(n).scale(2.0) - Matrix3::IDENTITY)
}

pub fn apply_rotation(r: &RotationMatrix, x: Vec3) -> Vec3 {
    r.apply(x)
}

pub fn invert_rotation(q: RodriguesVector) -> RodriguesVector {
    -q
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn rod(x: f64, y: f64, z: f64) -> RodriguesVector {
        RodriguesVector::from_components(x, y, z).unwrap()
    }

    fn assert_vec_close(a: Vec3, b: Vec3, tol: f64) {
        assert!((a - b).max_abs() <= tol, "{a:?} vs {b:?}");
    }

    #[test]
    fn euler_rodrigues_examples() {
        let n = UnitVector::normalize(Vec3::new(0.2, -0.4, 0.9)).unwrap();
        assert_eq!(
            euler_rodrigues_matrix(n, 0.0)
                .matrix()
                .max_abs_diff(&Matrix3::IDENTITY),
            0.0
        );
        let r = euler_rodrigues_matrix(UnitVector::Z, FRAC_PI_2);
        assert_vec_close(r.apply(Vec3::X), Vec3::Y, 1e-15);
        let half = euler_rodrigues_matrix(UnitVector::X, PI);
        assert!(
            half.matrix()
                .max_abs_diff(&Matrix3::diagonal([1.0, -1.0, -1.0]))
                < 1e-15
        );
    }

    #[test]
    fn axis_angle_to_rodrigues() {
        let q =
            rodrigues_from_axis_angle(&AxisAngle::new(UnitVector::Z, FRAC_PI_2).unwrap()).unwrap();
        assert_vec_close(q.vec(), Vec3::Z, 1e-15);
        let q = rodrigues_from_axis_angle(&AxisAngle::new(UnitVector::Y, 0.0).unwrap()).unwrap();
        assert_eq!(q.vec(), Vec3::ZERO);
        let q = rodrigues_from_axis_angle(&AxisAngle::new(UnitVector::X, 2.0 * PI / 3.0).unwrap())
            .unwrap();
        assert_vec_close(q.vec(), Vec3::new(3f64.sqrt(), 0.0, 0.0), 1e-14);
    }

    #[test]
    fn half_turn_has_no_rodrigues_vector() {
        for angle in [PI, -PI, PI - 5e-13, 3.0 * PI] {
            let aa = AxisAngle::new(UnitVector::Z, angle).unwrap();
            assert_eq!(
                rodrigues_from_axis_angle(&aa),
                Err(RotationError::HalfTurnUndefined),
                "angle {angle}"
            );
        }
        let aa = AxisAngle::new(UnitVector::Z, PI - 1e-9).unwrap();
        assert!(rodrigues_from_axis_angle(&aa).is_ok());
    }

    #[test]
    fn rodrigues_to_axis_angle() {
        let aa = axis_angle_from_rodrigues(rod(0.0, 0.0, 1.0));
        assert_eq!(aa.axis, UnitVector::Z);
        assert!((aa.angle - FRAC_PI_2).abs() < 1e-15);

        let aa = axis_angle_from_rodrigues(RodriguesVector::ZERO);
        assert_eq!((aa.axis, aa.angle), (UnitVector::Z, 0.0));

        let aa = axis_angle_from_rodrigues(rod(1.0, 1.0, -1.0));
        let s = 1.0 / 3f64.sqrt();
        assert_vec_close(aa.axis.vec(), Vec3::new(s, s, -s), 1e-15);
        assert!((aa.angle - 2.0 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_from_rodrigues_examples() {
        assert_eq!(
            *matrix_from_rodrigues(RodriguesVector::ZERO).matrix(),
            Matrix3::IDENTITY
        );
        let r = matrix_from_rodrigues(rod(0.0, 0.0, 1.0));
        assert_vec_close(r.apply(Vec3::X), Vec3::Y, 1e-15);
        // Large |Q| approaches the half-turn about the same axis.
        let r = matrix_from_rodrigues(rod(0.0, 0.0, 1e8));
        let h = matrix_from_half_turn(HalfTurn::new(UnitVector::Z));
        assert!(r.matrix().max_abs_diff(h.matrix()) <= 1e-7);
        assert!(
            r.matrix()
                .max_abs_diff(&Matrix3::diagonal([-1.0, -1.0, 1.0]))
                <= 1e-7
        );
    }

    #[test]
    fn half_turn_matrices() {
        assert_eq!(
            *matrix_from_half_turn(HalfTurn::new(UnitVector::Z)).matrix(),
            Matrix3::diagonal([-1.0, -1.0, 1.0])
        );
        assert_eq!(
            *matrix_from_half_turn(HalfTurn::new(UnitVector::X)).matrix(),
            Matrix3::diagonal([1.0, -1.0, -1.0])
        );
        let d = UnitVector::normalize(Vec3::new(1.0, 1.0, 1.0)).unwrap();
        let r = matrix_from_half_turn(HalfTurn::new(d));
        for i in 0..3 {
            assert!((r.matrix().m[i][i] + 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(r.matrix().transpose(), *r.matrix());
        // Eigenvalue +1 along the axis, -1 across it.
        assert_vec_close(r.apply(d.vec()), d.vec(), 1e-15);
        let across = Vec3::new(1.0, -1.0, 0.0);
        assert_vec_close(r.apply(across), -across, 1e-15);
    }

    #[test]
    fn half_turn_axis_is_canonical() {
        let h = HalfTurn::new(-UnitVector::Z);
        assert_eq!(h.axis(), UnitVector::Z);
        let v = UnitVector::normalize(Vec3::new(0.0, -1.0, 2.0)).unwrap();
        assert_eq!(HalfTurn::new(v), HalfTurn::new(-v));
        assert!(HalfTurn::new(v).axis().vec().y > 0.0);
    }

    #[test]
    fn apply_rotation_examples() {
        let x = Vec3::new(3.0, 4.0, 5.0);
        assert_eq!(apply_rotation(&RotationMatrix::IDENTITY, x), x);
        let r = matrix_from_rodrigues(rod(0.0, 0.0, 1.0));
        assert_vec_close(apply_rotation(&r, Vec3::X), Vec3::Y, 1e-15);
        assert_vec_close(
            apply_rotation(&r, Vec3::new(0.0, 0.0, 7.0)),
            Vec3::new(0.0, 0.0, 7.0),
            0.0,
        );
    }

    #[test]
    fn inversion_is_negation() {
        assert_eq!(invert_rotation(rod(0.0, 0.0, 1.0)), rod(0.0, 0.0, -1.0));
        assert_eq!(invert_rotation(RodriguesVector::ZERO).vec(), Vec3::ZERO);
        assert_eq!(invert_rotation(rod(1.0, 1.0, -1.0)), rod(-1.0, -1.0, 1.0));
        let q = rod(0.4, -2.0, 0.7);
        let r = matrix_from_rodrigues(q);
        let r_inv = matrix_from_rodrigues(invert_rotation(q));
        assert!(r_inv.matrix().max_abs_diff(&r.matrix().transpose()) <= 1e-12);
    }

    #[test]
    fn angle_normalization() {
        assert_eq!(normalize_angle(PI), PI);
        assert_eq!(normalize_angle(-PI), PI);
        assert!((normalize_angle(1.5 * PI) + 0.5 * PI).abs() < 1e-15);
        let aa = AxisAngle::new(UnitVector::X, -1.0).unwrap().canonical();
        assert_eq!(aa.axis, -UnitVector::X);
        assert_eq!(aa.angle, 1.0);
    }

    #[test]
    fn rotation_matrix_validation() {
        assert!(RotationMatrix::new(Matrix3::IDENTITY).is_ok());
        assert!(matches!(
            RotationMatrix::new(Matrix3::diagonal([1.0, 1.0, -1.0])),
            Err(RotationError::NotARotation { .. })
        ));
        assert!(RotationMatrix::new(Matrix3::IDENTITY.scale(1.01)).is_err());
    }
}
