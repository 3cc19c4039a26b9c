//! The three-dimensional Cayley transform between skew-symmetric matrices
//! `(Q×)` and rotations without eigenvalue −1.

use crate::linalg::{skew, Matrix3, UnitVector, Vec3};
use crate::rotation::{
    matrix_from_rodrigues, HalfTurn, RodriguesVector, RotationMatrix, RotationResult,
};

/// `1 + tr R` at or below this value is treated as a half-turn.
pub const HALF_TURN_TRACE_TOL: f64 = 1e-6;

/// Closed-form `(1 − Q×)⁻¹ = 1 + [(Q×) + (Q×)²] / (1 + Q·Q)`.
pub fn cayley_inverse_explicit(q: RodriguesVector) -> Matrix3 {
    let k = skew(q.vec());
    Matrix3::IDENTITY + (k.to_matrix() + k.squared()).scale(1.0 / (1.0 + q.vec().norm_squared()))
}

/// `R = (1 − Q×)⁻¹ (1 + Q×)` with the inverse taken from
/// [`cayley_inverse_explicit`].
///
/// Writing `1 + Q× = 2·1 − (1 − Q×)` gives `R = 2 (1 − Q×)⁻¹ − 1`, which
/// avoids multiplying an O(1) matrix by an O(‖Q‖) one near θ = π.
pub fn cayley_rotation(q: RodriguesVector) -> RotationMatrix {
    let inv = cayley_inverse_explicit(q);
    RotationMatrix::new_unchecked(inv.scale(2.0) - Matrix3::IDENTITY)
}

/// Inverse Cayley transform: the `Q` with `(Q×) = (R − 1)(R + 1)⁻¹`, or a
/// [`HalfTurn`] when `R` has eigenvalue −1.
///
/// In three dimensions `(R − 1)(R + 1)⁻¹ = (R − Rᵀ) / (1 + tr R)`, so `Q` is
/// read off the antisymmetric part of `R`. Near π the factor `1/(1 + cosθ)`
/// is rewritten as `(1 − cosθ)/sin²θ` to avoid cancellation.
pub fn rodrigues_from_matrix(r: &RotationMatrix) -> RotationResult {
    let m = r.matrix();
    let trace = m.trace();
    if 1.0 + trace <= HALF_TURN_TRACE_TOL {
        return RotationResult::Half(half_turn_from_matrix(m));
    }
    // sinθ n
    let w = crate::linalg::SkewMatrix::from_antisymmetric_part(m).generator();
    let cos = 0.5 * (trace - 1.0);
    let q = if cos >= 0.0 {
        w.scale(1.0 / (1.0 + cos))
    } else {
        w.scale((1.0 - cos) / w.norm_squared())
    };
    RotationResult::Regular(
        RodriguesVector::new(q).expect("finite matrix yields finite Rodrigues vector"),
    )
}

/// Axis of a (near) half-turn from the largest column of `(R + 1)/2 = n nᵀ`.
fn half_turn_from_matrix(m: &Matrix3) -> HalfTurn {
    let sym = (*m + m.transpose() + Matrix3::IDENTITY.scale(2.0)).scale(0.25);
    let col = (0..3)
        .map(|j| sym.column(j))
        .max_by(|a, b| a.norm_squared().total_cmp(&b.norm_squared()))
        .unwrap_or(Vec3::Z);
    let axis = UnitVector::normalize(col).unwrap_or(UnitVector::Z);
    HalfTurn::new(axis)
}

/// Residuals of `(1 + Q×)x = (1 − Q×)Rx` and `(Q×)(R + 1)x = (R − 1)x`,
/// with `R` from [`matrix_from_rodrigues`].
pub fn cayley_residuals(q: RodriguesVector, x: Vec3) -> (f64, f64) {
    let r = matrix_from_rodrigues(q);
    let k = skew(q.vec());
    let rx = r.apply(x);
    let lhs = x + k.apply(x);
    let rhs = rx - k.apply(rx);
    let r1 = (lhs - rhs).norm();
    let r2 = (k.apply(rx + x) - (rx - x)).norm();
    (r1, r2)
}
