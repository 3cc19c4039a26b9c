//! Textual rotation specifications: `aa:nx,ny,nz,theta`, `rod:qx,qy,qz`,
//! `mat:r11,...,r33` (row-major) and `half:nx,ny,nz`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rodrigues::rotation::HALF_TURN_ANGLE_TOL;
use rodrigues::{
    rodrigues_from_axis_angle, rodrigues_from_matrix, AxisAngle, HalfTurn, Matrix3,
    RodriguesVector, RotationMatrix, RotationResult, UnitVector, Vec3,
};

use crate::error::CliError;
use crate::format::{fmt_list, fmt_num};

#[derive(Debug, Clone, PartialEq)]
pub enum RotationSpec {
    /// Axis (any nonzero length) and angle in the user's angle unit.
    AxisAngle {
        axis: Vec3,
        angle: f64,
    },
    Rodrigues(Vec3),
    Matrix([f64; 9]),
    Half(Vec3),
}

fn parse_numbers(body: &str) -> Result<Vec<f64>, String> {
    body.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("invalid number {t:?}"))
        })
        .collect()
}

fn exactly<const N: usize>(tag: &str, values: Vec<f64>) -> Result<[f64; N], String> {
    let n = values.len();
    values
        .try_into()
        .map_err(|_| format!("{tag}: expected {N} numbers, got {n}"))
}

impl FromStr for RotationSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (tag, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| format!("rotation {s:?} lacks a aa:/rod:/mat:/half: prefix"))?;
        let values = parse_numbers(body)?;
        match tag {
            "aa" => {
                let [x, y, z, angle] = exactly::<4>(tag, values)?;
                Ok(RotationSpec::AxisAngle {
                    axis: Vec3::new(x, y, z),
                    angle,
                })
            }
            "rod" => Ok(RotationSpec::Rodrigues(Vec3::from_array(exactly::<3>(
                tag, values,
            )?))),
            "mat" => Ok(RotationSpec::Matrix(exactly::<9>(tag, values)?)),
            "half" => Ok(RotationSpec::Half(Vec3::from_array(exactly::<3>(
                tag, values,
            )?))),
            other => Err(format!("unknown rotation tag {other:?}")),
        }
    }
}

/// Parses a bare `x,y,z` triple.
pub fn parse_vec3(s: &str) -> Result<Vec3, String> {
    let v = exactly::<3>("vector", parse_numbers(s)?)?;
    Ok(Vec3::from_array(v))
}

/// Accepts a full rotation spec or a bare Rodrigues triple.
pub fn parse_rotation_or_triple(s: &str) -> Result<RotationSpec, String> {
    if s.contains(':') {
        s.parse()
    } else {
        parse_vec3(s).map(RotationSpec::Rodrigues)
    }
}

fn unit_axis(v: Vec3) -> Result<UnitVector, CliError> {
    UnitVector::normalize(v).map_err(|_| CliError::parse("rotation axis must be nonzero"))
}

impl RotationSpec {
    /// Resolves the spec. `degrees` applies to axis-angle input only.
    pub fn to_rotation(&self, degrees: bool) -> Result<RotationResult, CliError> {
        match self {
            RotationSpec::AxisAngle { axis, angle } => {
                let angle = if degrees { angle.to_radians() } else { *angle };
                let aa = AxisAngle::new(unit_axis(*axis)?, angle).map_err(CliError::from)?;
                if (aa.angle.abs() - PI).abs() <= HALF_TURN_ANGLE_TOL {
                    Ok(RotationResult::Half(HalfTurn::new(aa.axis)))
                } else {
                    Ok(RotationResult::Regular(rodrigues_from_axis_angle(&aa)?))
                }
            }
            RotationSpec::Rodrigues(v) => Ok(RotationResult::Regular(RodriguesVector::new(*v)?)),
            RotationSpec::Matrix(e) => {
                let r = RotationMatrix::new(Matrix3::from_row_major(*e))
                    .map_err(|e| CliError::parse(e.to_string()))?;
                Ok(rodrigues_from_matrix(&r))
            }
            RotationSpec::Half(axis) => Ok(RotationResult::Half(HalfTurn::new(unit_axis(*axis)?))),
        }
    }

    /// Resolves to a Rodrigues vector; half-turns are an error (exit 3).
    pub fn to_rodrigues(&self, degrees: bool) -> Result<RodriguesVector, CliError> {
        Ok(self.to_rotation(degrees)?.rodrigues()?)
    }
}

impl fmt::Display for RotationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationSpec::AxisAngle { axis, angle } => {
                write!(f, "aa:{},{},{},{}", axis.x, axis.y, axis.z, angle)
            }
            RotationSpec::Rodrigues(v) => write!(f, "rod:{},{},{}", v.x, v.y, v.z),
            RotationSpec::Matrix(e) => {
                let parts: Vec<String> = e.iter().map(f64::to_string).collect();
                write!(f, "mat:{}", parts.join(","))
            }
            RotationSpec::Half(v) => write!(f, "half:{},{},{}", v.x, v.y, v.z),
        }
    }
}

/// Output representation for `convert`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Aa,
    Rod,
    Mat,
    /// `rod:` for regular rotations, `half:` for half-turns.
    Half,
}

pub struct Formatter {
    pub digits: usize,
    pub degrees: bool,
}

impl Formatter {
    pub fn num(&self, x: f64) -> String {
        fmt_num(x, self.digits)
    }

    pub fn angle(&self, radians: f64) -> String {
        self.num(if self.degrees {
            radians.to_degrees()
        } else {
            radians
        })
    }

    pub fn vec(&self, v: Vec3) -> String {
        fmt_list(&v.to_array(), self.digits)
    }

    pub fn aa(&self, r: &RotationResult) -> String {
        let aa = r.axis_angle();
        format!("aa:{},{}", self.vec(aa.axis.vec()), self.angle(aa.angle))
    }

    pub fn mat(&self, r: &RotationResult) -> String {
        format!(
            "mat:{}",
            fmt_list(&r.to_matrix().matrix().to_row_major(), self.digits)
        )
    }

    pub fn rod(&self, r: &RotationResult) -> Result<String, CliError> {
        Ok(format!("rod:{}", self.vec(r.rodrigues()?.vec())))
    }

    /// `rod:` or `half:` depending on the variant.
    pub fn tagged(&self, r: &RotationResult) -> String {
        match r {
            RotationResult::Regular(q) => format!("rod:{}", self.vec(q.vec())),
            RotationResult::Half(h) => format!("half:{}", self.vec(h.axis().vec())),
        }
    }

    pub fn target(&self, r: &RotationResult, to: Target) -> Result<String, CliError> {
        match to {
            Target::Aa => Ok(self.aa(r)),
            Target::Rod => self.rod(r),
            Target::Mat => Ok(self.mat(r)),
            Target::Half => Ok(self.tagged(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_tag() {
        assert_eq!(
            "rod:1,1,-1".parse::<RotationSpec>(),
            Ok(RotationSpec::Rodrigues(Vec3::new(1.0, 1.0, -1.0)))
        );
        assert_eq!(
            "aa:0,0,1,1.5e0".parse::<RotationSpec>(),
            Ok(RotationSpec::AxisAngle {
                axis: Vec3::Z,
                angle: 1.5
            })
        );
        assert!(matches!(
            "mat:1,0,0,0,1,0,0,0,1".parse::<RotationSpec>(),
            Ok(RotationSpec::Matrix(_))
        ));
        assert_eq!(
            " half: 0, 0, 1 ".parse::<RotationSpec>(),
            Ok(RotationSpec::Half(Vec3::Z))
        );
    }

    #[test]
    fn rejects_malformed_specs() {
        for bad in [
            "rod:1,2",
            "rod:1,2,3,4",
            "rod:1,x,3",
            "rod:nan,0,0",
            "rod:inf,0,0",
            "quat:1,0,0,0",
            "1,2,3",
            "mat:1,0,0",
        ] {
            assert!(bad.parse::<RotationSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "aa:0,0,1,0.5",
            "rod:1,1,-1",
            "half:0,1,0",
            "mat:1,0,0,0,1,0,0,0,1",
        ] {
            let spec: RotationSpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<RotationSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn axis_angle_at_pi_becomes_half_turn() {
        let spec: RotationSpec = "aa:0,0,2,3.14159265358979".parse().unwrap();
        assert!(matches!(
            spec.to_rotation(false),
            Ok(RotationResult::Half(_))
        ));
        assert_eq!(spec.to_rodrigues(false).unwrap_err().code, 3);
        let deg: RotationSpec = "aa:0,0,1,90".parse().unwrap();
        let q = deg.to_rodrigues(true).unwrap();
        assert!((q.vec() - Vec3::Z).max_abs() < 1e-15);
    }

    #[test]
    fn invalid_matrix_is_a_parse_error() {
        let spec: RotationSpec = "mat:1,0,0,0,1,0,0,0,-1".parse().unwrap();
        assert_eq!(spec.to_rotation(false).unwrap_err().code, 2);
        let zero_axis: RotationSpec = "half:0,0,0".parse().unwrap();
        assert_eq!(zero_axis.to_rotation(false).unwrap_err().code, 2);
    }

    #[test]
    fn bare_triples() {
        assert_eq!(
            parse_rotation_or_triple("0,0,1"),
            Ok(RotationSpec::Rodrigues(Vec3::Z))
        );
        assert!(parse_vec3("1,2").is_err());
    }
}
