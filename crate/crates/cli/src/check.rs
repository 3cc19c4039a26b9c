//! Seeded self-check: maximum residual of each identity over random inputs.

use rodrigues::sample::{
    random_rodrigues, random_rodrigues_log_norm, random_vec3, seeded_rng, MAX_SAMPLE_ANGLE,
};
use rodrigues::{
    axis_angle_from_rodrigues, cayley_inverse_explicit, cayley_residuals, cayley_rotation, compose,
    donkin_triangle, donkin_verify, euler_rodrigues_matrix, lambda_residual, matrix_from_rodrigues,
    skew, Matrix3, RodriguesVector, RotationResult,
};

/// The functions under test, replaceable so a corrupted build can be
/// simulated.
#[derive(Clone, Copy)]
pub struct Subject {
    pub compose: fn(RodriguesVector, RodriguesVector) -> RotationResult,
    pub cayley_inverse: fn(RodriguesVector) -> Matrix3,
}

impl Default for Subject {
    fn default() -> Self {
        Self {
            compose,
            cayley_inverse: cayley_inverse_explicit,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub name: &'static str,
    pub max: f64,
    pub tolerance: f64,
}

impl Diagnostic {
    pub fn passed(&self) -> bool {
        self.max <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub diagnostics: Vec<Diagnostic>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.diagnostics.iter().all(Diagnostic::passed)
    }
}

/// Draws a pair whose composition denominator stays away from zero.
fn regular_pair<R: rand::Rng>(rng: &mut R) -> (RodriguesVector, RodriguesVector) {
    loop {
        let q1 = random_rodrigues(rng, MAX_SAMPLE_ANGLE);
        let q2 = random_rodrigues(rng, MAX_SAMPLE_ANGLE);
        if (1.0 - q2.vec().dot(q1.vec())).abs() >= 1e-3 {
            return (q1, q2);
        }
    }
}

fn regular(r: RotationResult) -> Option<RodriguesVector> {
    match r {
        RotationResult::Regular(q) => Some(q),
        RotationResult::Half(_) => None,
    }
}

pub fn run_checks(n: usize, seed: u64, subject: &Subject) -> CheckReport {
    let mut rng = seeded_rng(seed);
    let mut formulas: f64 = 0.0;
    let mut inverse: f64 = 0.0;
    let mut tangent: f64 = 0.0;
    let mut homomorphism: f64 = 0.0;
    let mut lambda: f64 = 0.0;
    let mut donkin: f64 = 0.0;

    for _ in 0..n {
        // Axis-angle, Rodrigues and Cayley forms of one rotation.
        let q = random_rodrigues(&mut rng, MAX_SAMPLE_ANGLE);
        let aa = axis_angle_from_rodrigues(q);
        let r1 = euler_rodrigues_matrix(aa.axis, aa.angle);
        let r2 = matrix_from_rodrigues(q);
        let r5 = cayley_rotation(q);
        formulas = formulas
            .max(r1.matrix().max_abs_diff(r2.matrix()))
            .max(r2.matrix().max_abs_diff(r5.matrix()))
            .max(r1.matrix().max_abs_diff(r5.matrix()));

        let q = random_rodrigues_log_norm(&mut rng, 1e-3, 1e3);
        let one_minus = Matrix3::IDENTITY - skew(q.vec()).to_matrix();
        let inv = (subject.cayley_inverse)(q);
        inverse = inverse
            .max((one_minus * inv).max_abs_diff(&Matrix3::IDENTITY))
            .max((inv * one_minus).max_abs_diff(&Matrix3::IDENTITY));

        let q = random_rodrigues(&mut rng, MAX_SAMPLE_ANGLE);
        let x = random_vec3(&mut rng, 10.0);
        let (e1, e2) = cayley_residuals(q, x);
        let scale = (1.0 + q.norm()) * x.norm();
        if scale > 0.0 {
            tangent = tangent.max(e1.max(e2) / scale);
        }

        let (q1, q2) = regular_pair(&mut rng);
        let composed = (subject.compose)(q2, q1);
        let product = matrix_from_rodrigues(q2).then_after(&matrix_from_rodrigues(q1));
        homomorphism =
            homomorphism.max(composed.to_matrix().matrix().max_abs_diff(product.matrix()));

        if let Ok(tri) = donkin_triangle(q1, q2) {
            donkin = donkin.max(donkin_verify(&tri));
            match regular(composed) {
                Some(q3) => lambda = lambda.max(lambda_residual(q2, q1, q3, tri.a.vec())),
                None => lambda = f64::INFINITY,
            }
        }
    }

    CheckReport {
        diagnostics: vec![
            Diagnostic {
                name: "axis-angle/Rodrigues/Cayley matrices",
                max: formulas,
                tolerance: 1e-12,
            },
            Diagnostic {
                name: "explicit inverse of (1 - Qx)",
                max: inverse,
                tolerance: 1e-12,
            },
            Diagnostic {
                name: "tangent identities (relative)",
                max: tangent,
                tolerance: 1e-12,
            },
            Diagnostic {
                name: "composition vs matrix product",
                max: homomorphism,
                tolerance: 1e-12,
            },
            Diagnostic {
                name: "lambda relation",
                max: lambda,
                tolerance: 1e-10,
            },
            Diagnostic {
                name: "spherical triangle law",
                max: donkin,
                tolerance: 1e-10,
            },
        ],
    }
}
