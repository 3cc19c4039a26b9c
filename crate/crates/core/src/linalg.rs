//! Small fixed-size vector and matrix types.
//!
//! Everything here is `Copy` and allocation free. Matrices are row-major:
//! `m[row][col]`.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use crate::error::{Result, RotationError};

const UNIT_EXACT_TOL: f64 = 1e-12;
const UNIT_RENORM_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Returns `None` for zero or non-finite vectors.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self.scale(1.0 / n))
        } else {
            None
        }
    }

    /// Outer product `self * other^T`.
    pub fn outer(self, other: Vec3) -> Matrix3 {
        let a = self.to_array();
        let b = other.to_array();
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = a[i] * b[j];
            }
        }
        Matrix3 { m }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        self.scale(s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v.scale(self)
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::from_array(a)
    }
}

/// A vector of unit Euclidean norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector(Vec3);

impl UnitVector {
    pub const X: UnitVector = UnitVector(Vec3::X);
    pub const Y: UnitVector = UnitVector(Vec3::Y);
    pub const Z: UnitVector = UnitVector(Vec3::Z);

    /// Accepts `v` if its norm is 1 within 1e-12, renormalizes it when the
    /// norm is within 1e-6, and rejects it otherwise.
    pub fn new(v: Vec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(RotationError::NonFinite("unit vector"));
        }
        let norm = v.norm();
        let dev = (norm - 1.0).abs();
        if dev <= UNIT_EXACT_TOL {
            Ok(Self(v))
        } else if dev <= UNIT_RENORM_TOL {
            Ok(Self(v.scale(1.0 / norm)))
        } else {
            Err(RotationError::NotUnit { norm })
        }
    }

    /// Normalizes an arbitrary nonzero finite vector.
    pub fn normalize(v: Vec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(RotationError::NonFinite("unit vector"));
        }
        v.normalized().map(Self).ok_or(RotationError::ZeroVector)
    }

    pub(crate) fn new_unchecked(v: Vec3) -> Self {
        Self(v)
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }
}

impl Neg for UnitVector {
    type Output = UnitVector;
    fn neg(self) -> UnitVector {
        UnitVector(-self.0)
    }
}

impl From<UnitVector> for Vec3 {
    fn from(u: UnitVector) -> Vec3 {
        u.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix3 {
    pub m: [[f64; 3]; 3],
}

impl Matrix3 {
    pub const IDENTITY: Matrix3 = Matrix3 {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };
    pub const ZERO: Matrix3 = Matrix3 { m: [[0.0; 3]; 3] };

    pub const fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    /// Builds a matrix from nine row-major entries.
    pub fn from_row_major(e: [f64; 9]) -> Self {
        Self {
            m: [[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]],
        }
    }

    pub fn to_row_major(&self) -> [f64; 9] {
        let m = &self.m;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn diagonal(d: [f64; 3]) -> Self {
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            m[i][i] = d[i];
        }
        Self { m }
    }

    pub fn column(&self, j: usize) -> Vec3 {
        Vec3::new(self.m[0][j], self.m[1][j], self.m[2][j])
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3::from_array(self.m[i])
    }

    pub fn transpose(&self) -> Matrix3 {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                t[j][i] = *e;
            }
        }
        Matrix3 { m: t }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> f64 {
        self.row(0).dot(self.row(1).cross(self.row(2)))
    }

    /// Inverse by the adjugate; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Matrix3> {
        let (r0, r1, r2) = (self.row(0), self.row(1), self.row(2));
        let c0 = r1.cross(r2);
        let c1 = r2.cross(r0);
        let c2 = r0.cross(r1);
        let det = r0.dot(c0);
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let inv = 1.0 / det;
        // Columns of the inverse are the cofactor rows.
        Some(Matrix3::from_rows([
            [c0.x * inv, c1.x * inv, c2.x * inv],
            [c0.y * inv, c1.y * inv, c2.y * inv],
            [c0.z * inv, c1.z * inv, c2.z * inv],
        ]))
    }

    pub fn scale(&self, s: f64) -> Matrix3 {
        self.map(|e| e * s)
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Matrix3 {
        let mut m = self.m;
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = f(*e);
            }
        }
        Matrix3 { m }
    }

    fn zip(&self, o: &Matrix3, f: impl Fn(f64, f64) -> f64) -> Matrix3 {
        let mut m = self.m;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = f(*e, o.m[i][j]);
            }
        }
        Matrix3 { m }
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, e| acc.max(e.abs()))
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix3) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|e| e.is_finite())
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        Vec3::new(self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v))
    }
}

impl Add for Matrix3 {
    type Output = Matrix3;
    fn add(self, o: Matrix3) -> Matrix3 {
        self.zip(&o, |a, b| a + b)
    }
}

impl Sub for Matrix3 {
    type Output = Matrix3;
    fn sub(self, o: Matrix3) -> Matrix3 {
        self.zip(&o, |a, b| a - b)
    }
}

impl Neg for Matrix3 {
    type Output = Matrix3;
    fn neg(self) -> Matrix3 {
        self.map(|e| -e)
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, o: Matrix3) -> Matrix3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.m[i][0] * o.m[0][j] + self.m[i][1] * o.m[1][j] + self.m[i][2] * o.m[2][j];
            }
        }
        Matrix3 { m }
    }
}

impl Mul<Vec3> for Matrix3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        self.mul_vec(v)
    }
}

impl Mul<f64> for Matrix3 {
    type Output = Matrix3;
    fn mul(self, s: f64) -> Matrix3 {
        self.scale(s)
    }
}

/// The cross-product operator `(v×)`, stored as its generating vector so
/// that antisymmetry holds exactly.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SkewMatrix(Vec3);

impl SkewMatrix {
    pub fn new(v: Vec3) -> Self {
        Self(v)
    }

    /// Antisymmetric part `(M - M^T) / 2` of an arbitrary matrix.
    pub fn from_antisymmetric_part(m: &Matrix3) -> Self {
        let m = &m.m;
        Self(Vec3::new(
            0.5 * (m[2][1] - m[1][2]),
            0.5 * (m[0][2] - m[2][0]),
            0.5 * (m[1][0] - m[0][1]),
        ))
    }

    pub fn generator(&self) -> Vec3 {
        self.0
    }

    pub fn to_matrix(&self) -> Matrix3 {
        let Vec3 { x, y, z } = self.0;
        Matrix3::from_rows([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    }

    /// `(v×)^2`, equal to `v v^T - (v.v) 1`.
    pub fn squared(&self) -> Matrix3 {
        let Vec3 { x, y, z } = self.0;
        Matrix3::from_rows([
            [-(y * y + z * z), x * y, x * z],
            [x * y, -(x * x + z * z), y * z],
            [x * z, y * z, -(x * x + y * y)],
        ])
    }

    pub fn apply(&self, x: Vec3) -> Vec3 {
        self.0.cross(x)
    }
}

/// The skew-symmetric operator of `v`: `skew(v) * x = v × x`.
pub fn skew(v: Vec3) -> SkewMatrix {
    SkewMatrix::new(v)
}

/// Inverse of [`skew`].
pub fn unskew(m: &SkewMatrix) -> Vec3 {
    m.generator()
}
