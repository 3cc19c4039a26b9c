//! Command-line frontend for the `rodrigues` crate.

pub mod check;
pub mod error;
pub mod format;
pub mod omega;
pub mod spec;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rodrigues::{
    compose_general, donkin_triangle, donkin_verify, figure_scene, integrate_attitude,
    lambda_residual, FigureInputs, FigureKind, IncrementScheme, IntegratorConfig, RotationResult,
    UnitVector,
};

use crate::check::{run_checks, Subject};
use crate::error::{CliError, EXIT_CHECK_FAILED};
use crate::spec::{parse_rotation_or_triple, parse_vec3, Formatter, RotationSpec, Target};

#[derive(Debug, Parser)]
#[command(
    name = "rodrigues",
    version,
    about = "Rotations in Rodrigues-vector form"
)]
pub struct Cli {
    /// Read and print axis-angle angles in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,

    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = 12,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    ExactStep,
    FirstOrder,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a rotation (aa:nx,ny,nz,theta | rod:qx,qy,qz | mat:r11,...,r33 | half:nx,ny,nz).
    Convert {
        #[arg(allow_hyphen_values = true)]
        rotation: RotationSpec,
        /// `half` prints rod: for regular rotations and half: for half-turns.
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Compose rotations in the order listed: the first is applied first.
    Compose {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        rotations: Vec<RotationSpec>,
    },
    /// Spherical triangle of two rotations: Q1 applied first, then Q2.
    Donkin {
        #[arg(allow_hyphen_values = true)]
        q1: RotationSpec,
        #[arg(allow_hyphen_values = true)]
        q2: RotationSpec,
    },
    /// Integrate orientation from an angular-velocity file (lines `t wx wy wz`).
    Integrate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "exact-step")]
        scheme: SchemeArg,
        /// Equal sub-steps per sample interval.
        #[arg(long, default_value_t = 1,
              value_parser = clap::value_parser!(u32).range(1..))]
        substeps: u32,
        /// Print the orientation at every sample time.
        #[arg(long)]
        trajectory: bool,
        /// Write the trajectory to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        trajectory_out: Option<PathBuf>,
        /// Append the first two matrix columns to each trajectory row.
        #[arg(long)]
        with_matrix: bool,
    },
    /// Write a figure as SVG.
    Figure {
        #[arg(long)]
        kind: FigureKind,
        /// Rotation (Rodrigues triple or tagged rotation); the first rotation for fig4/fig5.
        #[arg(long, alias = "q1", allow_hyphen_values = true,
              value_parser = parse_rotation_or_triple)]
        q: Option<RotationSpec>,
        /// Second rotation for fig4/fig5.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rotation_or_triple)]
        q2: Option<RotationSpec>,
        /// Point to rotate, x,y,z.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3)]
        x: Option<rodrigues::Vec3>,
        /// Projection direction, x,y,z.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3)]
        view: Option<rodrigues::Vec3>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the seeded residual diagnostics.
    Check {
        #[arg(long, default_value_t = 1000,
              value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io(format!("writing output: {e}")))
}

/// Runs a parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    run_with(cli, out, &Subject::default())
}

/// [`run`] with the functions exercised by `check` replaced.
pub fn run_with(cli: &Cli, out: &mut dyn Write, subject: &Subject) -> Result<(), CliError> {
    let f = Formatter {
        digits: cli.precision as usize,
        degrees: cli.degrees,
    };
    let text = match &cli.command {
        Command::Convert { rotation, to } => {
            let r = rotation.to_rotation(cli.degrees)?;
            format!("{}\n", f.target(&r, *to)?)
        }
        Command::Compose { rotations } => compose_report(&f, rotations, cli.degrees)?,
        Command::Donkin { q1, q2 } => donkin_report(&f, q1, q2, cli.degrees)?,
        Command::Integrate {
            file,
            scheme,
            substeps,
            trajectory,
            trajectory_out,
            with_matrix,
        } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::io(format!("{}: {e}", file.display())))?;
            let samples = omega::parse_omega(&text)?;
            let config = IntegratorConfig {
                scheme: match scheme {
                    SchemeArg::ExactStep => IncrementScheme::ExactStep,
                    SchemeArg::FirstOrder => IncrementScheme::FirstOrder,
                },
                substeps: *substeps as usize,
            };
            let traj = integrate_attitude(&samples, &config, None)?;
            let rows = trajectory_rows(&f, &traj.entries, *with_matrix);
            let mut report = String::new();
            if let Some(path) = trajectory_out {
                std::fs::write(path, &rows)
                    .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
            } else if *trajectory {
                report.push_str(&rows);
            }
            let (_, last) = traj.last().expect("at least two samples");
            report.push_str(&orientation_report(&f, last));
            report
        }
        Command::Figure {
            kind,
            q,
            q2,
            x,
            view,
            out: path,
        } => {
            let resolve = |s: &Option<RotationSpec>| -> Result<_, CliError> {
                s.as_ref().map(|s| s.to_rodrigues(cli.degrees)).transpose()
            };
            let view = view
                .map(UnitVector::normalize)
                .transpose()
                .map_err(|_| CliError::parse("--view must be nonzero"))?;
            let inputs = FigureInputs {
                q: resolve(q)?,
                q2: resolve(q2)?,
                x: *x,
                view,
            };
            let scene = figure_scene(*kind, &inputs)?;
            let svg = svg::render(&scene);
            std::fs::write(path, svg)
                .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
            let c = scene.census();
            format!(
                "wrote {} ({}: {} segments, {} rays, {} arcs, {} triangles, {} points, {} labels)\n",
                path.display(),
                kind,
                c.segments,
                c.rays,
                c.arcs,
                c.triangles,
                c.points,
                c.labels
            )
        }
        Command::Check { n, seed } => {
            let report = run_checks(*n as usize, *seed, subject);
            let mut text = String::new();
            for d in &report.diagnostics {
                text.push_str(&format!(
                    "{:<40} max {:<20} tol {:<8} {}\n",
                    d.name,
                    f.num(d.max),
                    f.num(d.tolerance),
                    if d.passed() { "ok" } else { "FAIL" }
                ));
            }
            let failed = report.diagnostics.iter().filter(|d| !d.passed()).count();
            if failed == 0 {
                text.push_str("all diagnostics within tolerance\n");
            } else {
                text.push_str(&format!("{failed} diagnostics out of tolerance\n"));
            }
            write_out(out, &text)?;
            if failed > 0 {
                return Err(CliError::new(EXIT_CHECK_FAILED, "check failed"));
            }
            return Ok(());
        }
    };
    write_out(out, &text)
}

fn orientation_report(f: &Formatter, r: &RotationResult) -> String {
    format!("{}\n{}\n{}\n", f.tagged(r), f.aa(r), f.mat(r))
}

fn compose_report(
    f: &Formatter,
    rotations: &[RotationSpec],
    degrees: bool,
) -> Result<String, CliError> {
    let resolved = rotations
        .iter()
        .map(|s| s.to_rotation(degrees))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let mut acc = resolved[0];
    for (i, next) in resolved.iter().enumerate().skip(1) {
        let lambda = match (next, acc) {
            (RotationResult::Regular(q2), RotationResult::Regular(q1)) => {
                f.num(1.0 - q2.vec().dot(q1.vec()))
            }
            _ => "n/a".to_string(),
        };
        text.push_str(&format!("lambda[{i}]: {lambda}\n"));
        acc = compose_general(*next, acc);
    }
    text.push_str(&orientation_report(f, &acc));
    Ok(text)
}

fn donkin_report(
    f: &Formatter,
    q1: &RotationSpec,
    q2: &RotationSpec,
    degrees: bool,
) -> Result<String, CliError> {
    let (q1, q2) = (q1.to_rodrigues(degrees)?, q2.to_rodrigues(degrees)?);
    let tri = donkin_triangle(q1, q2)?;
    let (ab, bc, ac) = tri.arcs();
    let q3 = rodrigues::compose(q2, q1);
    let half3 = 0.5 * q3.axis_angle().angle;
    let lambda = 1.0 - q2.vec().dot(q1.vec());
    let mut text = String::new();
    for (name, v) in [("A", tri.a), ("B", tri.b), ("C", tri.c)] {
        text.push_str(&format!("{name}: {}\n", f.vec(v.vec())));
    }
    text.push_str(&format!(
        "arc AB: {} (theta1/2: {})\n",
        f.angle(ab),
        f.angle(0.5 * q1.angle().abs())
    ));
    text.push_str(&format!(
        "arc BC: {} (theta2/2: {})\n",
        f.angle(bc),
        f.angle(0.5 * q2.angle().abs())
    ));
    text.push_str(&format!(
        "arc AC: {} (theta3/2: {})\n",
        f.angle(ac),
        f.angle(half3)
    ));
    text.push_str(&format!("lambda: {}\n", f.num(lambda)));
    if let RotationResult::Regular(q3) = q3 {
        text.push_str(&format!(
            "lambda residual: {}\n",
            f.num(lambda_residual(q2, q1, q3, tri.a.vec()))
        ));
    }
    text.push_str(&format!("residual: {}\n", f.num(donkin_verify(&tri))));
    Ok(text)
}

fn trajectory_rows(f: &Formatter, entries: &[(f64, RotationResult)], with_matrix: bool) -> String {
    let mut text = String::from(if with_matrix {
        "# t qx qy qz r11 r21 r31 r12 r22 r32\n"
    } else {
        "# t qx qy qz\n"
    });
    for (t, r) in entries {
        let q = match r {
            RotationResult::Regular(q) => q.vec().to_array().map(|c| f.num(c)),
            // Rodrigues vector is infinite along the half-turn axis.
            RotationResult::Half(h) => h.axis().vec().to_array().map(|c| {
                if c == 0.0 {
                    "0".to_string()
                } else if c > 0.0 {
                    "inf".to_string()
                } else {
                    "-inf".to_string()
                }
            }),
        };
        let mut row = vec![f.num(*t)];
        row.extend(q);
        if with_matrix {
            let m = r.to_matrix();
            for j in 0..2 {
                row.extend(m.matrix().column(j).to_array().map(|c| f.num(c)));
            }
        }
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    text
}
