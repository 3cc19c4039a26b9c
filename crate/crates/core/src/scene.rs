//! Scene descriptions for the figures illustrating the geometric
//! constructions. Scenes are plain 3D data; projecting and rendering them is
//! left to the caller.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, RotationError};
use crate::geometry::{
    bisector_intersection, donkin_triangle, half_angle_point, tangent_to_bisector,
    SphericalTriangle,
};
use crate::linalg::{UnitVector, Vec3};
use crate::rotation::{
    axis_angle_from_rodrigues, euler_rodrigues_matrix, matrix_from_rodrigues, RodriguesVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureKind {
    /// Tangent `Q × x` from `x` to the bisector.
    Fig1a,
    /// Intersection point `(1 + Q×) x`.
    Fig1b,
    /// Half-angle point of a unit vector perpendicular to the axis.
    Fig1c,
    /// `(1 + Q×) x = (1 − Q×) R x`: both tangents meet on the bisector.
    Fig2,
    /// Spherical triangle and its three vertex reflections.
    Fig4,
    /// Translation triangle law next to the spherical triangle law.
    Fig5,
}

impl FigureKind {
    pub const ALL: [FigureKind; 6] = [
        FigureKind::Fig1a,
        FigureKind::Fig1b,
        FigureKind::Fig1c,
        FigureKind::Fig2,
        FigureKind::Fig4,
        FigureKind::Fig5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::Fig1a => "fig1a",
            FigureKind::Fig1b => "fig1b",
            FigureKind::Fig1c => "fig1c",
            FigureKind::Fig2 => "fig2",
            FigureKind::Fig4 => "fig4",
            FigureKind::Fig5 => "fig5",
        }
    }
}

impl fmt::Display for FigureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FigureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown figure kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    Segment {
        from: Vec3,
        to: Vec3,
        role: &'static str,
    },
    /// Half-line from `origin` along the unit `direction`.
    Ray {
        origin: Vec3,
        direction: Vec3,
        role: &'static str,
    },
    /// Circular arc starting at `start`, turning right-handedly by `sweep`
    /// radians about the unit `axis` through `center`.
    Arc {
        center: Vec3,
        axis: Vec3,
        start: Vec3,
        sweep: f64,
        role: &'static str,
    },
    /// Spherical triangle outline on the unit sphere; sides are great arcs.
    Triangle {
        vertices: [Vec3; 3],
        role: &'static str,
    },
    Point {
        at: Vec3,
        role: &'static str,
    },
    Label {
        at: Vec3,
        text: String,
    },
}

impl Primitive {
    fn coordinates(&self) -> Vec<Vec3> {
        match self {
            Primitive::Segment { from, to, .. } => vec![*from, *to],
            Primitive::Ray {
                origin, direction, ..
            } => vec![*origin, *direction],
            Primitive::Arc {
                center,
                axis,
                start,
                ..
            } => vec![*center, *axis, *start],
            Primitive::Triangle { vertices, .. } => vertices.to_vec(),
            Primitive::Point { at, .. } | Primitive::Label { at, .. } => vec![*at],
        }
    }

    pub fn is_finite(&self) -> bool {
        let sweep_ok = match self {
            Primitive::Arc { sweep, .. } => sweep.is_finite(),
            _ => true,
        };
        sweep_ok && self.coordinates().iter().all(|v| v.is_finite())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenePrimitive {
    /// Side-by-side panel index, 0 for single-panel figures.
    pub panel: usize,
    pub primitive: Primitive,
}

/// Number of primitives of each variant.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Census {
    pub segments: usize,
    pub rays: usize,
    pub arcs: usize,
    pub triangles: usize,
    pub points: usize,
    pub labels: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureScene {
    pub kind: FigureKind,
    pub primitives: Vec<ScenePrimitive>,
    /// Orthographic projection direction.
    pub view: UnitVector,
    /// Set when the construction collapses (null rotation, point on the axis).
    pub degenerate: bool,
}

impl FigureScene {
    pub fn census(&self) -> Census {
        let mut c = Census::default();
        for p in &self.primitives {
            match p.primitive {
                Primitive::Segment { .. } => c.segments += 1,
                Primitive::Ray { .. } => c.rays += 1,
                Primitive::Arc { .. } => c.arcs += 1,
                Primitive::Triangle { .. } => c.triangles += 1,
                Primitive::Point { .. } => c.points += 1,
                Primitive::Label { .. } => c.labels += 1,
            }
        }
        c
    }

    pub fn panels(&self) -> usize {
        self.primitives
            .iter()
            .map(|p| p.panel + 1)
            .max()
            .unwrap_or(1)
    }

    pub fn is_finite(&self) -> bool {
        self.primitives.iter().all(|p| p.primitive.is_finite())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FigureInputs {
    /// Rotation (the first rotation for fig4 and fig5).
    pub q: Option<RodriguesVector>,
    /// Point being rotated (fig1a, fig1b, fig1c, fig2).
    pub x: Option<Vec3>,
    /// Second rotation (fig4, fig5).
    pub q2: Option<RodriguesVector>,
    /// Overrides the default projection direction.
    pub view: Option<UnitVector>,
}

struct Builder {
    panel: usize,
    primitives: Vec<ScenePrimitive>,
}

impl Builder {
    fn new() -> Self {
        Self {
            panel: 0,
            primitives: Vec::new(),
        }
    }

    fn push(&mut self, primitive: Primitive) {
        self.primitives.push(ScenePrimitive {
            panel: self.panel,
            primitive,
        });
    }

    fn segment(&mut self, from: Vec3, to: Vec3, role: &'static str) {
        self.push(Primitive::Segment { from, to, role });
    }

    fn point(&mut self, at: Vec3, role: &'static str) {
        self.push(Primitive::Point { at, role });
    }

    fn label(&mut self, at: Vec3, text: &str) {
        self.push(Primitive::Label {
            at,
            text: text.to_string(),
        });
    }
}

/// Builds the primitives of a figure. Returns `MissingInput` when the kind
/// needs an input that is absent.
pub fn figure_scene(kind: FigureKind, inputs: &FigureInputs) -> Result<FigureScene> {
    let q = inputs.q.ok_or(RotationError::MissingInput {
        kind: kind.name(),
        missing: "a rotation",
    })?;
    match kind {
        FigureKind::Fig1a | FigureKind::Fig1b | FigureKind::Fig1c | FigureKind::Fig2 => {
            let x = inputs.x.ok_or(RotationError::MissingInput {
                kind: kind.name(),
                missing: "a point x",
            })?;
            if !x.is_finite() {
                return Err(RotationError::NonFinite("figure point"));
            }
            tangent_figure(kind, q, x, inputs.view)
        }
        FigureKind::Fig4 | FigureKind::Fig5 => {
            let q2 = inputs.q2.ok_or(RotationError::MissingInput {
                kind: kind.name(),
                missing: "a second rotation",
            })?;
            let tri = donkin_triangle(q, q2)?;
            Ok(if kind == FigureKind::Fig4 {
                reflection_figure(&tri, inputs.view)
            } else {
                triangle_law_figure(&tri, inputs.view)
            })
        }
    }
}

/// Unit vector perpendicular to `n`, deterministic.
pub fn any_perpendicular(n: Vec3) -> Vec3 {
    let a = n.to_array().map(f64::abs);
    let helper = if a[0] <= a[1] && a[0] <= a[2] {
        Vec3::X
    } else if a[1] <= a[2] {
        Vec3::Y
    } else {
        Vec3::Z
    };
    n.cross(helper).normalized().unwrap_or(Vec3::X)
}

fn tangent_figure(
    kind: FigureKind,
    q: RodriguesVector,
    x: Vec3,
    view: Option<UnitVector>,
) -> Result<FigureScene> {
    let aa = axis_angle_from_rodrigues(q);
    let n = aa.axis.vec();
    let theta = aa.angle;

    // Fig. 1c works on the unit circle with a point perpendicular to the axis.
    let x = if kind == FigureKind::Fig1c {
        (x - n.scale(x.dot(n)))
            .normalized()
            .ok_or(RotationError::DegenerateInput(
                "x is parallel to the rotation axis",
            ))?
    } else {
        x
    };
    let center = n.scale(x.dot(n));
    let radial = x - center;
    let tangent = tangent_to_bisector(q, x);
    let p = bisector_intersection(q, x);
    let rx = matrix_from_rodrigues(q).apply(x);

    let radial_dir = radial.normalized();
    let bisector_dir = euler_rodrigues_matrix(aa.axis, 0.5 * theta)
        .apply(radial_dir.unwrap_or_else(|| any_perpendicular(n)));
    let degenerate = radial_dir.is_none() || tangent.norm() == 0.0;

    let mut b = Builder::new();
    b.push(Primitive::Arc {
        center,
        axis: n,
        start: x,
        sweep: theta,
        role: "rotation-arc",
    });
    b.segment(center, x, "radius");
    b.segment(x, x + tangent, "tangent");
    b.push(Primitive::Ray {
        origin: center,
        direction: bisector_dir,
        role: "bisector",
    });
    b.point(x, "x");
    b.label(x, if kind == FigureKind::Fig1c { "a" } else { "x" });
    b.point(rx, "rotated");
    b.label(
        rx,
        if kind == FigureKind::Fig1c {
            "Ra"
        } else {
            "Rx"
        },
    );

    match kind {
        FigureKind::Fig1a => {
            b.label(x + tangent.scale(0.5), "Q×x");
        }
        FigureKind::Fig1b => {
            b.segment(Vec3::ZERO, p, "position");
            b.point(p, "intersection");
            b.label(p, "(1+Q×)x");
        }
        FigureKind::Fig1c => {
            b.segment(Vec3::ZERO, p, "position");
            b.point(p, "intersection");
            b.label(p, "(1+Q×)a");
            let a = UnitVector::new_unchecked(x);
            let h = half_angle_point(q, a)?.vec();
            b.point(h, "half-angle");
            b.label(h, "θ/2");
        }
        FigureKind::Fig2 => {
            b.segment(center, rx, "radius");
            b.segment(rx, p, "tangent");
            b.point(p, "intersection");
            b.label(p, "(1+Q×)x = (1−Q×)Rx");
        }
        FigureKind::Fig4 | FigureKind::Fig5 => unreachable!(),
    }

    let view = view.unwrap_or(aa.axis);
    Ok(FigureScene {
        kind,
        primitives: b.primitives,
        view,
        degenerate,
    })
}

fn triangle_view(tri: &SphericalTriangle, view: Option<UnitVector>) -> UnitVector {
    view.unwrap_or_else(|| {
        UnitVector::normalize(tri.a.vec() + tri.b.vec() + tri.c.vec()).unwrap_or(UnitVector::Z)
    })
}

fn sphere_outline(b: &mut Builder, view: UnitVector) {
    b.push(Primitive::Arc {
        center: Vec3::ZERO,
        axis: view.vec(),
        start: any_perpendicular(view.vec()),
        sweep: TAU,
        role: "sphere",
    });
}

fn centroid_on_sphere(t: &SphericalTriangle) -> Vec3 {
    (t.a.vec() + t.b.vec() + t.c.vec())
        .normalized()
        .unwrap_or(t.a.vec())
}

fn vertex_labels(b: &mut Builder, tri: &SphericalTriangle) {
    for (v, name) in tri.vertices().into_iter().zip(["A", "B", "C"]) {
        b.point(v.vec(), "vertex");
        b.label(v.vec(), name);
    }
}

fn reflection_figure(tri: &SphericalTriangle, view: Option<UnitVector>) -> FigureScene {
    let view = triangle_view(tri, view);
    let mut b = Builder::new();
    sphere_outline(&mut b, view);
    b.push(Primitive::Triangle {
        vertices: tri.vertices().map(UnitVector::vec),
        role: "original",
    });
    // Triangle k is the image of ABC under the half-turn about its k-th
    // vertex; twice AB carries 1 to 2, twice BC carries 2 to 3.
    for (w, name) in tri.vertices().into_iter().zip(["1", "2", "3"]) {
        let image = tri.reflected_in(w);
        b.push(Primitive::Triangle {
            vertices: image.vertices().map(UnitVector::vec),
            role: "reflected",
        });
        b.label(centroid_on_sphere(&image), name);
    }
    vertex_labels(&mut b, tri);
    FigureScene {
        kind: FigureKind::Fig4,
        primitives: b.primitives,
        view,
        degenerate: false,
    }
}

fn triangle_law_figure(tri: &SphericalTriangle, view: Option<UnitVector>) -> FigureScene {
    let view = triangle_view(tri, view);
    let (a, bv, c) = (tri.a.vec(), tri.b.vec(), tri.c.vec());
    let mut b = Builder::new();

    // Translation panel: chord vectors add head to tail.
    let t1 = bv - a;
    let t2 = c - bv;
    b.segment(Vec3::ZERO, t1, "translation-1");
    b.segment(t1, t1 + t2, "translation-2");
    b.segment(Vec3::ZERO, t1 + t2, "translation-resultant");
    b.label(t1.scale(0.5), "t1");
    b.label(t1 + t2.scale(0.5), "t2");
    b.label((t1 + t2).scale(0.5), "t1+t2");

    // Spherical panel: rotation angles are twice the sides.
    b.panel = 1;
    sphere_outline(&mut b, view);
    b.push(Primitive::Triangle {
        vertices: [a, bv, c],
        role: "original",
    });
    vertex_labels(&mut b, tri);
    let mid = |u: Vec3, v: Vec3| (u + v).normalized().unwrap_or(u);
    b.label(mid(a, bv), "θ1/2");
    b.label(mid(bv, c), "θ2/2");
    b.label(mid(a, c), "θ3/2");

    FigureScene {
        kind: FigureKind::Fig5,
        primitives: b.primitives,
        view,
        degenerate: false,
    }
}
