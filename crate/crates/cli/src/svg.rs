//! Orthographic SVG rendering of figure scenes.
//!
//! One SVG element per scene primitive, tagged with a class naming the
//! primitive variant (`segment`, `ray`, `arc`, `triangle`, `point`,
//! `label`). Output depends only on the scene, so identical inputs give
//! identical bytes.

use std::fmt::Write as _;

use rodrigues::linalg::Vec3;
use rodrigues::scene::{FigureScene, Primitive};
use rodrigues::{arc_angle, euler_rodrigues_matrix, UnitVector};

const PANEL: f64 = 400.0;
const MARGIN: f64 = 30.0;
const ARC_SAMPLES: usize = 96;
const SIDE_SAMPLES: usize = 24;

const STYLE: &str = "\
.segment{stroke:#222;stroke-width:1.5;fill:none}\
.ray{stroke:#a33;stroke-width:1.2;stroke-dasharray:6 4;fill:none}\
.arc{stroke:#235;stroke-width:1.5;fill:none}\
.triangle{stroke:#262;stroke-width:1.5;fill:#262;fill-opacity:0.08}\
.point{fill:#000}\
.label{font-family:sans-serif;font-size:14px;fill:#000}";

/// Screen basis perpendicular to the view direction, right-handed with it.
struct Projection {
    u: Vec3,
    w: Vec3,
}

impl Projection {
    fn new(view: UnitVector) -> Self {
        let v = view.vec();
        let helper = if v.x.abs() > 0.9 { Vec3::Y } else { Vec3::X };
        let u = (helper - v.scale(helper.dot(v)))
            .normalized()
            .expect("helper not parallel to view");
        Self { u, w: v.cross(u) }
    }

    fn project(&self, p: Vec3) -> (f64, f64) {
        (p.dot(self.u), p.dot(self.w))
    }
}

/// Maps projected coordinates of one panel into its screen box.
struct Viewport {
    offset_x: f64,
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Viewport {
    fn fit(points: &[(f64, f64)], panel: usize) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for &(x, y) in points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
        {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let extent = (x1 - x0).max(y1 - y0);
        let scale = if extent > 1e-12 {
            (PANEL - 2.0 * MARGIN) / extent
        } else {
            1.0
        };
        Self {
            offset_x: panel as f64 * PANEL,
            cx: 0.5 * (x0 + x1),
            cy: 0.5 * (y0 + y1),
            scale,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            self.offset_x + 0.5 * PANEL + self.scale * (x - self.cx),
            0.5 * PANEL - self.scale * (y - self.cy),
        )
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn arc_points(center: Vec3, axis: Vec3, start: Vec3, sweep: f64) -> Vec<Vec3> {
    let Some(axis) = UnitVector::normalize(axis).ok() else {
        return vec![start];
    };
    let radius = start - center;
    (0..=ARC_SAMPLES)
        .map(|i| {
            let t = sweep * i as f64 / ARC_SAMPLES as f64;
            center + euler_rodrigues_matrix(axis, t).apply(radius)
        })
        .collect()
}

/// Points along the great arc from `a` to `b` (unit vectors).
fn great_arc(a: Vec3, b: Vec3) -> Vec<Vec3> {
    let alpha = arc_angle(a, b);
    let s = alpha.sin();
    (0..=SIDE_SAMPLES)
        .map(|i| {
            let t = i as f64 / SIDE_SAMPLES as f64;
            if s.abs() < 1e-9 {
                a.scale(1.0 - t) + b.scale(t)
            } else {
                a.scale(((1.0 - t) * alpha).sin() / s) + b.scale((t * alpha).sin() / s)
            }
        })
        .collect()
}

fn triangle_points(vertices: &[Vec3; 3]) -> Vec<Vec3> {
    let mut pts = Vec::new();
    for i in 0..3 {
        let mut side = great_arc(vertices[i], vertices[(i + 1) % 3]);
        side.pop();
        pts.extend(side);
    }
    pts
}

/// Length drawn for rays: a little beyond the rest of the panel.
fn ray_length(prims: &[&Primitive]) -> f64 {
    let mut extent: f64 = 0.0;
    for p in prims {
        let pts: Vec<Vec3> = match p {
            Primitive::Segment { from, to, .. } => vec![*from, *to],
            Primitive::Arc { center, start, .. } => vec![*center, *start],
            Primitive::Triangle { vertices, .. } => vertices.to_vec(),
            Primitive::Point { at, .. } => vec![*at],
            Primitive::Ray { origin, .. } => vec![*origin],
            Primitive::Label { .. } => vec![],
        };
        for v in pts {
            extent = extent.max(v.norm());
        }
    }
    if extent > 0.0 {
        1.25 * extent
    } else {
        1.0
    }
}

fn geometry_of(p: &Primitive, ray_len: f64) -> Vec<Vec3> {
    match p {
        Primitive::Segment { from, to, .. } => vec![*from, *to],
        Primitive::Ray {
            origin, direction, ..
        } => vec![*origin, *origin + direction.scale(ray_len)],
        Primitive::Arc {
            center,
            axis,
            start,
            sweep,
            ..
        } => arc_points(*center, *axis, *start, *sweep),
        Primitive::Triangle { vertices, .. } => triangle_points(vertices),
        Primitive::Point { at, .. } | Primitive::Label { at, .. } => vec![*at],
    }
}

fn path_data(points: &[(f64, f64)], closed: bool) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        if i > 0 {
            d.push(' ');
        }
        let _ = write!(d, "{cmd}{},{}", num(*x), num(*y));
    }
    if closed {
        d.push_str(" Z");
    }
    d
}

pub fn render(scene: &FigureScene) -> String {
    let proj = Projection::new(scene.view);
    let panels = scene.panels();
    let width = PANEL * panels as f64;

    let mut body = String::new();
    for panel in 0..panels {
        let prims: Vec<&Primitive> = scene
            .primitives
            .iter()
            .filter(|p| p.panel == panel)
            .map(|p| &p.primitive)
            .collect();
        let ray_len = ray_length(&prims);
        let geometry: Vec<Vec<(f64, f64)>> = prims
            .iter()
            .map(|p| {
                geometry_of(p, ray_len)
                    .into_iter()
                    .map(|v| proj.project(v))
                    .collect()
            })
            .collect();
        let all: Vec<(f64, f64)> = geometry.iter().flatten().copied().collect();
        let vp = Viewport::fit(&all, panel);

        let _ = writeln!(body, "<g class=\"panel\" data-panel=\"{panel}\">");
        for (p, pts) in prims.iter().zip(&geometry) {
            let screen: Vec<(f64, f64)> = pts.iter().map(|&q| vp.map(q)).collect();
            body.push_str(&element(p, &screen));
            body.push('\n');
        }
        body.push_str("</g>\n");
    }

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" data-figure=\"{kind}\" data-degenerate=\"{deg}\">",
        w = num(width),
        h = num(PANEL),
        kind = scene.kind.name(),
        deg = scene.degenerate,
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    out.push_str(&body);
    out.push_str("</svg>\n");
    out
}

fn element(p: &Primitive, pts: &[(f64, f64)]) -> String {
    match p {
        Primitive::Segment { role, .. } | Primitive::Ray { role, .. } => {
            let class = if matches!(p, Primitive::Segment { .. }) {
                "segment"
            } else {
                "ray"
            };
            format!(
                "<line class=\"{class}\" data-role=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                escape(role),
                num(pts[0].0),
                num(pts[0].1),
                num(pts[1].0),
                num(pts[1].1)
            )
        }
        Primitive::Arc { role, .. } => format!(
            "<path class=\"arc\" data-role=\"{}\" d=\"{}\"/>",
            escape(role),
            path_data(pts, false)
        ),
        Primitive::Triangle { role, .. } => format!(
            "<path class=\"triangle\" data-role=\"{}\" d=\"{}\"/>",
            escape(role),
            path_data(pts, true)
        ),
        Primitive::Point { role, .. } => format!(
            "<circle class=\"point\" data-role=\"{}\" cx=\"{}\" cy=\"{}\" r=\"3\"/>",
            escape(role),
            num(pts[0].0),
            num(pts[0].1)
        ),
        Primitive::Label { text, .. } => format!(
            "<text class=\"label\" x=\"{}\" y=\"{}\" dx=\"5\" dy=\"-5\">{}</text>",
            num(pts[0].0),
            num(pts[0].1),
            escape(text)
        ),
    }
}
