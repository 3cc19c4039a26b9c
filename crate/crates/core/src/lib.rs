//! Three-dimensional rotations in Rodrigues-vector form.
//!
//! A rotation of angle θ about the unit axis `n` is represented by
//! `Q = tan(θ/2) n`. The crate provides:
//!
//! * conversions between axis-angle, Rodrigues vector and rotation matrix
//!   ([`rotation`]);
//! * the Cayley transform `R = (1 − Q×)⁻¹(1 + Q×)` and its inverse
//!   ([`cayley`]);
//! * composition `Q3 = (Q1 + Q2 + Q2 × Q1) / (1 − Q2·Q1)` with its half-turn
//!   branch ([`composition`]);
//! * the tangent/bisector reading of `Q×` and the spherical-triangle
//!   construction of composition ([`geometry`], [`scene`]);
//! * infinitesimal rotations and attitude integration ([`kinematics`]).
//!
//! All values are immutable and all functions are pure.

pub mod cayley;
pub mod composition;
pub mod error;
pub mod geometry;
pub mod kinematics;
pub mod linalg;
pub mod rotation;
pub mod sample;
pub mod scene;

pub use cayley::{
    cayley_inverse_explicit, cayley_residuals, cayley_rotation, rodrigues_from_matrix,
};
pub use composition::{
    compose, compose_general, composition_diagnostics, lambda_residual, CompositionDiagnostics,
};
pub use error::{Result, RotationError};
pub use geometry::{
    arc_angle, bisector_intersection, donkin_residual, donkin_triangle, donkin_verify,
    half_angle_point, tangent_to_bisector, SphericalTriangle,
};
pub use kinematics::{
    compose_infinitesimal, infinitesimal_displacement, integrate_attitude, rodrigues_increment,
    small_rotation_matrix, velocity_field, AngularVelocity, AngularVelocitySample,
    AttitudeTrajectory, IncrementScheme, IntegratorConfig,
};
pub use linalg::{skew, unskew, Matrix3, SkewMatrix, UnitVector, Vec3};
pub use rotation::{
    apply_rotation, axis_angle_from_rodrigues, euler_rodrigues_matrix, invert_rotation,
    matrix_from_half_turn, matrix_from_rodrigues, rodrigues_from_axis_angle, AxisAngle, HalfTurn,
    RodriguesVector, RotationMatrix, RotationResult,
};
pub use scene::{figure_scene, FigureInputs, FigureKind, FigureScene, Primitive};
