//! SVG rendering of bodies and minimal lunes.

use std::fmt::Write;

use clap::ValueEnum;
use sphereduce::curve::ArcCurve;
use sphereduce::width::thickness;
use sphereduce::{Body, Lune, SpherePoint, Vec3};

use crate::CliError;

/// Largest parameter step of a sampled polyline, in radians (0.5 degree).
pub const MAX_STEP: f64 = std::f64::consts::PI / 360.0;
/// The body must clear the boundary of the view hemisphere by this much.
const VIEW_MARGIN: f64 = 1e-9;
/// Stereographic views omit points with inner product at most this with the pole.
const STEREO_LIMIT: f64 = -0.9;
const MARGIN_PX: f64 = 24.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Projection {
    Orthographic,
    Stereographic,
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub projection: Projection,
    /// Defaults to the normalized centroid of the boundary.
    pub view: Option<SpherePoint>,
    pub witness: bool,
    pub size: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            projection: Projection::Orthographic,
            view: None,
            witness: false,
            size: 512,
        }
    }
}

struct Frame {
    view: Vec3,
    e1: Vec3,
    e2: Vec3,
    projection: Projection,
}

impl Frame {
    fn new(view: SpherePoint, projection: Projection) -> Self {
        let (e1, e2) = view.tangent_frame();
        Frame {
            view: view.vec(),
            e1,
            e2,
            projection,
        }
    }

    /// Plane coordinates, or `None` on the hidden side.
    fn project(&self, p: &Vec3) -> Option<(f64, f64)> {
        let h = p.dot(&self.view);
        let (x, y) = (p.dot(&self.e1), p.dot(&self.e2));
        match self.projection {
            Projection::Orthographic if h >= 0.0 => Some((x, y)),
            Projection::Stereographic if h > STEREO_LIMIT => Some((x / (1.0 + h), y / (1.0 + h))),
            _ => None,
        }
    }
}

/// Parameters of `curve` at steps of at most `MAX_STEP`.
fn steps(curve: &ArcCurve) -> Vec<f64> {
    let n = ((curve.sweep() / MAX_STEP).ceil() as usize).max(1);
    (0..=n).map(|i| curve.sweep() * i as f64 / n as f64).collect()
}

/// Projected polylines, split where the curve leaves the visible side.
fn polylines(frame: &Frame, pts: impl Iterator<Item = Vec3>) -> Vec<Vec<(f64, f64)>> {
    let mut out = vec![Vec::new()];
    for p in pts {
        match frame.project(&p) {
            Some(q) => out.last_mut().expect("nonempty").push(q),
            None => {
                if !out.last().expect("nonempty").is_empty() {
                    out.push(Vec::new());
                }
            }
        }
    }
    out.retain(|l| l.len() >= 2);
    out
}

struct Canvas {
    scale: f64,
    cx: f64,
    cy: f64,
    size: f64,
}

impl Canvas {
    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            self.size / 2.0 + (x - self.cx) * self.scale,
            self.size / 2.0 - (y - self.cy) * self.scale,
        )
    }

    fn path(&self, line: &[(f64, f64)], close: bool) -> String {
        let mut d = String::new();
        for (i, p) in line.iter().enumerate() {
            let (x, y) = self.px(*p);
            let _ = write!(d, "{}{x:.4} {y:.4}", if i == 0 { "M" } else { " L" });
        }
        if close {
            d.push_str(" Z");
        }
        d
    }
}

fn default_view(body: &Body) -> SpherePoint {
    let sum: Vec3 = body
        .boundary_sample(360)
        .unwrap_or_default()
        .iter()
        .map(|p| p.vec())
        .sum();
    SpherePoint::from_vec(sum).unwrap_or_else(|| body.junction(0))
}

fn bounding_semicircle(lune: &Lune, g_side: bool) -> Vec<Vec3> {
    let l = if g_side {
        *lune
    } else {
        Lune::new(lune.h(), lune.g()).expect("non-degenerate lune")
    };
    let n = (std::f64::consts::PI / MAX_STEP).ceil() as usize;
    (0..=n)
        .map(|i| l.point_on_g_side(std::f64::consts::PI * i as f64 / n as f64).vec())
        .collect()
}

fn coords(p: &SpherePoint) -> String {
    let [x, y, z] = p.coords();
    format!("{x:.17e},{y:.17e},{z:.17e}")
}

/// The SVG document for `body`. Output depends only on the inputs.
pub fn render_svg(body: &Body, spec: &RenderSpec) -> Result<String, CliError> {
    let view = spec.view.unwrap_or_else(|| default_view(body));
    let clearance = body.min_dot(&view.vec());
    match spec.projection {
        Projection::Orthographic if clearance <= VIEW_MARGIN => {
            return Err(CliError::Render(format!(
                "body leaves the open hemisphere about the view pole (min inner product {clearance:e})"
            )))
        }
        Projection::Stereographic if clearance <= STEREO_LIMIT => {
            return Err(CliError::Render(format!(
                "body reaches too close to the projection center (min inner product {clearance:e})"
            )))
        }
        _ => {}
    }
    let frame = Frame::new(view, spec.projection);

    let arc_lines: Vec<(bool, Vec<(f64, f64)>)> = body
        .curves()
        .iter()
        .zip(body.arcs())
        .map(|(c, a)| {
            let pts: Vec<(f64, f64)> = steps(c).iter().filter_map(|t| frame.project(&c.at_vec(*t))).collect();
            (a.is_great(), pts)
        })
        .collect();
    if arc_lines.iter().any(|(_, l)| l.len() < 2) {
        return Err(CliError::Render("body is not visible from the view pole".into()));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (_, l) in &arc_lines {
        for (x, y) in l {
            x0 = x0.min(*x);
            x1 = x1.max(*x);
            y0 = y0.min(*y);
            y1 = y1.max(*y);
        }
    }
    let size = spec.size as f64;
    let extent = (x1 - x0).max(y1 - y0).max(1e-12);
    let canvas = Canvas {
        scale: (size - 2.0 * MARGIN_PX) / extent,
        cx: 0.5 * (x0 + x1),
        cy: 0.5 * (y0 + y1),
        size,
    };

    let mut svg = String::new();
    let s = spec.size;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{s}" height="{s}" fill="white"/>"#);
    let outline: Vec<(f64, f64)> = arc_lines
        .iter()
        .flat_map(|(_, l)| l[..l.len() - 1].iter().copied())
        .collect();
    let _ = writeln!(
        svg,
        r##"<path class="outline" d="{}" fill="#dde6f2" stroke="none"/>"##,
        canvas.path(&outline, true)
    );
    let _ = writeln!(
        svg,
        r#"<g id="boundary" fill="none" stroke="black" stroke-width="1.5">"#
    );
    for (i, (great, line)) in arc_lines.iter().enumerate() {
        let kind = if *great { "great" } else { "circle" };
        let _ = writeln!(
            svg,
            r#"<path class="arc {kind}" data-index="{i}" d="{}"/>"#,
            canvas.path(line, false)
        );
    }
    let _ = writeln!(svg, "</g>");

    if spec.witness {
        let w = thickness(body).witness;
        let _ = writeln!(
            svg,
            r##"<g id="witness" data-thickness="{:.17e}" fill="none" stroke="#c0392b" stroke-width="1">"##,
            w.width
        );
        for g_side in [true, false] {
            for line in polylines(&frame, bounding_semicircle(&w.lune, g_side).into_iter()) {
                let _ = writeln!(svg, r#"<path class="semicircle" d="{}"/>"#, canvas.path(&line, false));
            }
        }
        for (label, p) in [("a", w.a), ("b", w.b)] {
            if let Some(q) = frame.project(&p.vec()) {
                let (x, y) = canvas.px(q);
                let _ = writeln!(
                    svg,
                    r##"<circle class="center" data-label="{label}" data-point="{}" cx="{x:.4}" cy="{y:.4}" r="3" fill="#c0392b"/>"##,
                    coords(&p)
                );
                let _ = writeln!(
                    svg,
                    r##"<text x="{:.4}" y="{:.4}" font-family="serif" font-size="14" fill="#c0392b">{label}</text>"##,
                    x + 5.0,
                    y - 5.0
                );
            }
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sphereduce::gallery::{make_example_body, make_quarter_disk};

    fn octant() -> Body {
        Body::polygon(&[
            SpherePoint::new(1.0, 0.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 1.0, 0.0).unwrap(),
            SpherePoint::new(0.0, 0.0, 1.0).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn octant_renders_three_great_arcs() {
        let spec = RenderSpec {
            view: SpherePoint::from_vec(Vec3::new(1.0, 1.0, 1.0)),
            ..RenderSpec::default()
        };
        let svg = render_svg(&octant(), &spec).unwrap();
        assert_eq!(svg.matches(r#"class="arc great""#).count(), 3);
        assert_eq!(svg.matches(" Z\"").count(), 1);
    }

    #[test]
    fn example_body_has_six_arcs() {
        let e = make_example_body(0.6, 0.3).unwrap();
        let svg = render_svg(&e.body, &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches(r#"class="arc "#).count(), 6);
    }

    #[test]
    fn output_is_stable() {
        let q = make_quarter_disk(SpherePoint::north(), 0.5, 0.2).unwrap();
        let spec = RenderSpec {
            witness: true,
            projection: Projection::Stereographic,
            ..RenderSpec::default()
        };
        assert_eq!(render_svg(&q.body, &spec).unwrap(), render_svg(&q.body, &spec).unwrap());
    }

    #[test]
    fn hidden_body_is_rejected() {
        let spec = RenderSpec {
            view: SpherePoint::from_vec(Vec3::new(-1.0, -1.0, -1.0)),
            ..RenderSpec::default()
        };
        assert!(matches!(render_svg(&octant(), &spec), Err(CliError::Render(_))));
    }

    #[test]
    fn steps_are_at_most_half_a_degree() {
        let e = make_example_body(0.6, 0.3).unwrap();
        for c in e.body.curves() {
            let t = steps(c);
            assert!(t.windows(2).all(|w| w[1] - w[0] <= MAX_STEP + 1e-15));
        }
    }
}
