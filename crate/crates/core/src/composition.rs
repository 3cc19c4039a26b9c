//! Composition of finite rotations in Rodrigues form.
//!
//! Argument order follows the matrix product: `compose(q2, q1)` is the
//! rotation `R(q2) R(q1)`, so `q1` acts first.

use crate::cayley::rodrigues_from_matrix;
use crate::error::{Result, RotationError};
use crate::linalg::{skew, Matrix3, UnitVector, Vec3};
use crate::rotation::{HalfTurn, RodriguesVector, RotationResult};

/// Relative threshold on `1 − Q2·Q1` below which the result is a half-turn.
pub const DEGENERACY_EPS: f64 = 1e-9;

/// Tolerance on `|A·Q1| / ‖Q1‖` for the perpendicularity precondition.
pub const PERPENDICULAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionDiagnostics {
    /// Proportionality constant, equal to `1 − Q2·Q1`. May be negative.
    pub lambda: f64,
    /// `Q1 + Q2 + Q2 × Q1`.
    pub numerator: Vec3,
    /// `1 − Q2·Q1`.
    pub denominator: f64,
    /// `‖λ(1 + Q3×)A − [1 + Q1× + Q2× + (Q2×)(Q1×)]A‖`.
    pub residual: f64,
}

fn numerator_and_denominator(q2: Vec3, q1: Vec3) -> (Vec3, f64) {
    (q1 + q2 + q2.cross(q1), 1.0 - q2.dot(q1))
}

fn is_degenerate(q2: Vec3, q1: Vec3, denominator: f64) -> bool {
    denominator.abs() <= DEGENERACY_EPS * (1.0 + q1.norm() * q2.norm())
}

/// `Q3 = (Q1 + Q2 + Q2 × Q1) / (1 − Q2·Q1)`; a vanishing denominator yields
/// the half-turn about the numerator.
pub fn compose(q2: RodriguesVector, q1: RodriguesVector) -> RotationResult {
    let (a, b) = (q2.vec(), q1.vec());
    let (num, den) = numerator_and_denominator(a, b);
    if is_degenerate(a, b, den) {
        // The numerator cannot vanish together with the denominator.
        let axis = UnitVector::normalize(num).unwrap_or(UnitVector::Z);
        return RotationResult::Half(HalfTurn::new(axis));
    }
    let q3 = num.scale(1.0 / den);
    match RodriguesVector::new(q3) {
        Ok(q) => RotationResult::Regular(q),
        // Overflow: the denominator is tiny but above the threshold.
        Err(_) => RotationResult::Half(HalfTurn::new(
            UnitVector::normalize(num).unwrap_or(UnitVector::Z),
        )),
    }
}

/// [`compose`] extended to half-turn operands by multiplying matrices.
pub fn compose_general(b: RotationResult, a: RotationResult) -> RotationResult {
    match (b, a) {
        (RotationResult::Regular(q2), RotationResult::Regular(q1)) => compose(q2, q1),
        _ => rodrigues_from_matrix(&b.to_matrix().then_after(&a.to_matrix())),
    }
}

/// Residual of `λ(1 + Q3×)A = [1 + (Q1×) + (Q2×) + (Q2×)(Q1×)]A` with
/// `λ = 1 − Q2·Q1`, for an externally supplied `Q3`.
pub fn lambda_residual(
    q2: RodriguesVector,
    q1: RodriguesVector,
    q3: RodriguesVector,
    a: Vec3,
) -> f64 {
    let lambda = 1.0 - q2.vec().dot(q1.vec());
    let k1 = skew(q1.vec()).to_matrix();
    let k2 = skew(q2.vec()).to_matrix();
    let chained = (Matrix3::IDENTITY + k1 + k2 + k2 * k1) * a;
    let single = (a + q3.vec().cross(a)).scale(lambda);
    (single - chained).norm()
}

pub fn composition_diagnostics(
    q2: RodriguesVector,
    q1: RodriguesVector,
    a: UnitVector,
) -> Result<CompositionDiagnostics> {
    let dot = a.vec().dot(q1.vec());
    if dot.abs() > PERPENDICULAR_TOL * q1.norm() {
        return Err(RotationError::NotPerpendicular { dot });
    }
    let RotationResult::Regular(q3) = compose(q2, q1) else {
        return Err(RotationError::DegenerateComposition);
    };
    let (numerator, denominator) = numerator_and_denominator(q2.vec(), q1.vec());
    Ok(CompositionDiagnostics {
        lambda: denominator,
        numerator,
        denominator,
        residual: lambda_residual(q2, q1, q3, a.vec()),
    })
}
