use thiserror::Error;

/// Errors raised by rotation constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RotationError {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("vector norm {norm} is not unit (tolerance 1e-6)")]
    NotUnit { norm: f64 },

    #[error("cannot normalize a zero-length vector")]
    ZeroVector,

    #[error("matrix is not a proper rotation: orthogonality error {orthogonality:e}, det {det}")]
    NotARotation { orthogonality: f64, det: f64 },

    #[error("the Rodrigues vector is undefined for a rotation angle of pi")]
    HalfTurnUndefined,

    #[error("vector is not perpendicular to the rotation axis (|a.Q| = {dot:e})")]
    NotPerpendicular { dot: f64 },

    #[error("rotation axes are parallel; no spherical triangle exists")]
    ParallelAxes,

    #[error("spherical triangle is degenerate")]
    DegenerateTriangle,

    #[error("composition is a half-turn; the proportionality constant has no Rodrigues form")]
    DegenerateComposition,

    #[error("step angle {angle} reaches the half-angle tangent pole")]
    StepTooLarge { angle: f64 },

    #[error("time step must be positive, got {0}")]
    NonPositiveStep(f64),

    #[error("sample times must strictly increase (t[{index}] = {t} after {previous})")]
    NonMonotonicTime { index: usize, t: f64, previous: f64 },

    #[error("need at least 2 angular velocity samples, got {0}")]
    TooFewSamples(usize),

    #[error("figure {kind} requires {missing}")]
    MissingInput {
        kind: &'static str,
        missing: &'static str,
    },

    #[error("figure input is degenerate: {0}")]
    DegenerateInput(&'static str),
}

pub type Result<T> = std::result::Result<T, RotationError>;
