//! Infinitesimal rotations and attitude propagation from angular velocity.
//!
//! To first order `R ≈ 1 + 2(Q×)`, Rodrigues vectors compose by addition,
//! and a body spinning at `ω` for `dt` turns by `Q = ω dt / 2`.

use crate::composition::compose_general;
use crate::error::{Result, RotationError};
use crate::linalg::{skew, Matrix3, Vec3};
use crate::rotation::{RodriguesVector, RotationResult};

/// Exact-step increments are refused once `‖ω‖ dt` gets this close to π.
pub const STEP_POLE_MARGIN: f64 = 1e-3;

/// Angular velocity in rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AngularVelocity(Vec3);

impl AngularVelocity {
    pub fn new(v: Vec3) -> Result<Self> {
        if v.is_finite() {
            Ok(Self(v))
        } else {
            Err(RotationError::NonFinite("angular velocity"))
        }
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularVelocitySample {
    /// Seconds.
    pub t: f64,
    pub omega: AngularVelocity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IncrementScheme {
    /// `Q = ω dt / 2`.
    FirstOrder,
    /// `Q = tan(‖ω‖ dt / 2) ω/‖ω‖`, exact for constant `ω`.
    #[default]
    ExactStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegratorConfig {
    pub scheme: IncrementScheme,
    /// Equal sub-intervals per sample interval, at least 1.
    pub substeps: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            scheme: IncrementScheme::ExactStep,
            substeps: 1,
        }
    }
}

/// Orientation at each sample time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AttitudeTrajectory {
    pub entries: Vec<(f64, RotationResult)>,
}

impl AttitudeTrajectory {
    pub fn last(&self) -> Option<&(f64, RotationResult)> {
        self.entries.last()
    }
}

/// First-order rotation matrix `1 + 2(Q×)`. Not orthogonal.
pub fn small_rotation_matrix(q: RodriguesVector) -> Matrix3 {
    Matrix3::IDENTITY + skew(q.vec()).to_matrix().scale(2.0)
}

/// `dx = 2 (Q × x)`.
pub fn infinitesimal_displacement(q: RodriguesVector, x: Vec3) -> Vec3 {
    q.vec().cross(x).scale(2.0)
}

/// First-order composition: `Q1 + Q2`.
pub fn compose_infinitesimal(q1: RodriguesVector, q2: RodriguesVector) -> RodriguesVector {
    RodriguesVector::new(q1.vec() + q2.vec()).expect("sum of finite vectors overflowed")
}

/// `dx/dt = ω × x`, with the fixed point at the origin.
pub fn velocity_field(omega: AngularVelocity, x: Vec3) -> Vec3 {
    omega.0.cross(x)
}

pub fn rodrigues_increment(
    omega: AngularVelocity,
    dt: f64,
    scheme: IncrementScheme,
) -> Result<RodriguesVector> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(RotationError::NonPositiveStep(dt));
    }
    let w = omega.0;
    let rate = w.norm();
    if rate == 0.0 {
        return Ok(RodriguesVector::ZERO);
    }
    let q = match scheme {
        IncrementScheme::FirstOrder => w.scale(0.5 * dt),
        IncrementScheme::ExactStep => {
            let angle = rate * dt;
            if angle >= std::f64::consts::PI - STEP_POLE_MARGIN {
                return Err(RotationError::StepTooLarge { angle });
            }
            w.scale((0.5 * angle).tan() / rate)
        }
    };
    RodriguesVector::new(q)
}

fn lerp(a: &AngularVelocitySample, b: &AngularVelocitySample, t: f64) -> AngularVelocity {
    let s = (t - a.t) / (b.t - a.t);
    AngularVelocity(a.omega.0.scale(1.0 - s) + b.omega.0.scale(s))
}

/// Propagates orientation through the samples. Each (sub)interval uses
/// the linearly interpolated `ω` at its midpoint; increments are
/// accumulated by exact composition, the new increment acting after the
/// current orientation.
pub fn integrate_attitude(
    samples: &[AngularVelocitySample],
    config: &IntegratorConfig,
    initial: Option<RotationResult>,
) -> Result<AttitudeTrajectory> {
    if samples.len() < 2 {
        return Err(RotationError::TooFewSamples(samples.len()));
    }
    for (i, pair) in samples.windows(2).enumerate() {
        if !pair[0].t.is_finite() {
            return Err(RotationError::NonFinite("sample time"));
        }
        if pair[1].t.partial_cmp(&pair[0].t) != Some(std::cmp::Ordering::Greater) {
            return Err(RotationError::NonMonotonicTime {
                index: i + 1,
                t: pair[1].t,
                previous: pair[0].t,
            });
        }
    }
    let substeps = config.substeps.max(1);

    let mut orientation = initial.unwrap_or(RotationResult::IDENTITY);
    let mut entries = Vec::with_capacity(samples.len());
    entries.push((samples[0].t, orientation));
    for pair in samples.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let dt = (b.t - a.t) / substeps as f64;
        for k in 0..substeps {
            let mid = a.t + (k as f64 + 0.5) * dt;
            let step = rodrigues_increment(lerp(a, b, mid), dt, config.scheme)?;
            orientation = compose_general(RotationResult::Regular(step), orientation);
        }
        entries.push((b.t, orientation));
    }
    Ok(AttitudeTrajectory { entries })
}
