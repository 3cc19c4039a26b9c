//! Angular-velocity sample files: one `t wx wy wz` line per sample,
//! whitespace separated; `#` starts a comment.

use rodrigues::{AngularVelocity, AngularVelocitySample, Vec3};

use crate::error::CliError;

pub fn parse_omega(text: &str) -> Result<Vec<AngularVelocitySample>, CliError> {
    let mut samples = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split_whitespace()
            .map(|f| f.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect::<Option<_>>()
            .ok_or_else(|| CliError::parse(format!("line {}: invalid number", lineno + 1)))?;
        let [t, wx, wy, wz] = fields[..] else {
            return Err(CliError::parse(format!(
                "line {}: expected 4 fields (t wx wy wz), got {}",
                lineno + 1,
                fields.len()
            )));
        };
        samples.push(AngularVelocitySample {
            t,
            omega: AngularVelocity::new(Vec3::new(wx, wy, wz))?,
        });
    }
    if samples.len() < 2 {
        return Err(CliError::parse(format!(
            "need at least 2 samples, found {}",
            samples.len()
        )));
    }
    Ok(samples)
}
