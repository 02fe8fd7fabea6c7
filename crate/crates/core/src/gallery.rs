//! Exact constructors for the standard body families, each paired with its
//! closed-form metrics.
//!
//! Every constructor measures its output with the width engine and refuses
//! to return a body whose thickness or diameter disagrees with the
//! prediction by more than [`GALLERY_CHECK_TOL`].

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::body::{Body, BodyError, BoundaryArc, CircleArc};
use crate::optimize::bisect;
use crate::sphere::{distance, SpherePoint};
use crate::width::thickness;

pub const GALLERY_CHECK_TOL: f64 = 1e-6;
/// Parameter tolerance of the odd-gon circumradius inversion.
const RADIUS_TOL: f64 = 1e-12;
/// Distance from `pi/2` at which the large Example arcs become great arcs.
const GREAT_SNAP: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GalleryKind {
    Disk,
    QuarterDisk,
    RegularOddGon,
    ReuleauxTriangle,
    ExampleKappaSigma,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Predicted {
    pub thickness: f64,
    pub constant_width: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diameter: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GalleryMeta {
    pub kind: GalleryKind,
    pub params: BTreeMap<String, f64>,
    pub predicted: Predicted,
}

#[derive(Clone, Debug)]
pub struct GalleryBody {
    pub body: Body,
    pub meta: GalleryMeta,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GalleryError {
    #[error("parameter {name} = {value} is outside {range}")]
    Param {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("no regular {n}-gon has thickness {thickness}")]
    Infeasible { n: usize, thickness: f64 },
    #[error(transparent)]
    Body(#[from] BodyError),
    #[error("measured {quantity} {measured} disagrees with predicted {predicted}")]
    Mismatch {
        quantity: &'static str,
        predicted: f64,
        measured: f64,
    },
}

fn check_range(
    name: &'static str,
    value: f64,
    lo: f64,
    hi: f64,
    range: &'static str,
    closed_hi: bool,
) -> Result<(), GalleryError> {
    let ok = value.is_finite() && value > lo && (value < hi || (closed_hi && value <= hi));
    if ok {
        Ok(())
    } else {
        Err(GalleryError::Param { name, value, range })
    }
}

fn finish(
    body: Body,
    kind: GalleryKind,
    params: &[(&str, f64)],
    predicted: Predicted,
) -> Result<GalleryBody, GalleryError> {
    let measured = thickness(&body).value;
    if (measured - predicted.thickness).abs() > GALLERY_CHECK_TOL {
        return Err(GalleryError::Mismatch {
            quantity: "thickness",
            predicted: predicted.thickness,
            measured,
        });
    }
    if let Some(d) = predicted.diameter {
        let measured = body.diameter();
        if (measured - d).abs() > GALLERY_CHECK_TOL {
            return Err(GalleryError::Mismatch {
                quantity: "diameter",
                predicted: d,
                measured,
            });
        }
    }
    Ok(GalleryBody {
        body,
        meta: GalleryMeta {
            kind,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            predicted,
        },
    })
}

fn circle(center: SpherePoint, from: SpherePoint, sweep: f64) -> Result<BoundaryArc, BodyError> {
    CircleArc::from_sweep(center, from, sweep)
        .map(BoundaryArc::Circle)
        .map_err(|source| BodyError::BadArc { index: 0, source })
}

/// Point at distance `rho` from `center` in the tangent direction at angle
/// `phi` of the center's fixed frame.
fn offset(center: &SpherePoint, rho: f64, phi: f64) -> SpherePoint {
    let (u, w) = center.tangent_frame();
    let dir = u * phi.cos() + w * phi.sin();
    SpherePoint::from_vec(center.vec() * rho.cos() + dir * rho.sin()).expect("unit combination")
}

/// Disk of radius `rho` about `center`, as four quarter arcs.
pub fn make_disk(center: SpherePoint, rho: f64) -> Result<GalleryBody, GalleryError> {
    check_range("rho", rho, 0.0, FRAC_PI_2, "(0, pi/2)", false)?;
    let start = offset(&center, rho, 0.0);
    let arcs = (0..4)
        .map(|k| circle(center, start.rotated_about(&center, k as f64 * FRAC_PI_2), FRAC_PI_2))
        .collect::<Result<Vec<_>, _>>()?;
    finish(
        Body::new(arcs)?,
        GalleryKind::Disk,
        &[("rho", rho)],
        Predicted {
            thickness: 2.0 * rho,
            constant_width: true,
            diameter: Some(2.0 * rho),
        },
    )
}

/// Quarter of the disk of radius `rho` about `center`; the first radius
/// leaves `center` at angle `orientation` in the center's tangent frame.
pub fn make_quarter_disk(center: SpherePoint, rho: f64, orientation: f64) -> Result<GalleryBody, GalleryError> {
    check_range("rho", rho, 0.0, FRAC_PI_2, "(0, pi/2)", false)?;
    if !orientation.is_finite() {
        return Err(GalleryError::Param {
            name: "orientation",
            value: orientation,
            range: "finite angles",
        });
    }
    let p1 = offset(&center, rho, orientation);
    let p2 = offset(&center, rho, orientation + FRAC_PI_2);
    let bad = |index| move |source| BodyError::BadArc { index, source };
    let arcs = vec![
        BoundaryArc::great(center, p1).map_err(bad(0))?,
        circle(center, p1, FRAC_PI_2)?,
        BoundaryArc::great(p2, center).map_err(bad(2))?,
    ];
    finish(
        Body::new(arcs)?,
        GalleryKind::QuarterDisk,
        &[("rho", rho), ("orientation", orientation)],
        Predicted {
            thickness: rho,
            constant_width: false,
            diameter: Some((rho.cos().powi(2)).acos()),
        },
    )
}

/// Vertices of the regular `n`-gon of circumradius `radius` about the north
/// pole, positively oriented, the first at azimuth 0.
pub fn regular_polygon_vertices(n: usize, radius: f64) -> Vec<SpherePoint> {
    (0..n)
        .map(|k| SpherePoint::from_spherical(radius, 2.0 * PI * k as f64 / n as f64))
        .collect()
}

/// Distance from a vertex of the regular odd-gon to the great circle of the
/// opposite edge. Increasing in `radius` up to [`odd_gon_peak_radius`].
pub fn odd_gon_thickness(n: usize, radius: f64) -> f64 {
    let v = regular_polygon_vertices(n, radius);
    let m = (n - 1) / 2;
    let pole = (v[m].cross(&v[m + 1])).normalize();
    (v[0].vec().dot(&pole)).clamp(-1.0, 1.0).asin()
}

/// Circumradius at which the regular odd-gon reaches thickness `pi/2`.
pub fn odd_gon_peak_radius(n: usize) -> f64 {
    (1.0 / (PI / n as f64).cos().sqrt()).atan()
}

/// Regular odd-gon about the north pole with the given thickness.
pub fn make_regular_odd_gon(n: usize, target: f64) -> Result<GalleryBody, GalleryError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(GalleryError::Param {
            name: "n",
            value: n as f64,
            range: "odd counts >= 3",
        });
    }
    check_range("thickness", target, 0.0, FRAC_PI_2, "(0, pi/2]", true)?;
    let peak = odd_gon_peak_radius(n);
    let radius = if (target - FRAC_PI_2).abs() <= 1e-12 {
        peak
    } else {
        bisect(|r| odd_gon_thickness(n, r) - target, 1e-9, peak, RADIUS_TOL)
            .map_err(|_| GalleryError::Infeasible { n, thickness: target })?
    };
    let v = regular_polygon_vertices(n, radius);
    let diameter = distance(&v[0], &v[(n - 1) / 2]);
    finish(
        Body::polygon(&v)?,
        GalleryKind::RegularOddGon,
        &[("n", n as f64), ("thickness", target), ("circumradius", radius)],
        Predicted {
            thickness: target,
            constant_width: (target - FRAC_PI_2).abs() <= 1e-12,
            diameter: Some(diameter),
        },
    )
}

/// Vertices `a, b, c` of the regular triangle of side `kappa` about the
/// north pole.
pub fn regular_triangle(kappa: f64) -> [SpherePoint; 3] {
    let r = ((1.0 - kappa.cos()) / 1.5).sqrt().asin();
    [0, 1, 2].map(|k| SpherePoint::from_spherical(r, FRAC_PI_2 + 2.0 * PI * k as f64 / 3.0))
}

/// Constant-width body built on the regular triangle `abc` of side `kappa`
/// with every side prolonged by `sigma` at both ends; `sigma = 0` gives the
/// Reuleaux triangle.
pub fn make_example_body(kappa: f64, sigma: f64) -> Result<GalleryBody, GalleryError> {
    build_example(kappa, sigma, GalleryKind::ExampleKappaSigma)
}

/// Reuleaux triangle of width `kappa`.
pub fn make_reuleaux_triangle(kappa: f64) -> Result<GalleryBody, GalleryError> {
    build_example(kappa, 0.0, GalleryKind::ReuleauxTriangle)
}

fn build_example(kappa: f64, sigma: f64, kind: GalleryKind) -> Result<GalleryBody, GalleryError> {
    check_range("kappa", kappa, 0.0, FRAC_PI_2, "(0, pi/2)", false)?;
    if !(sigma >= 0.0 && sigma <= FRAC_PI_2 - kappa + GREAT_SNAP) {
        return Err(GalleryError::Param {
            name: "sigma",
            value: sigma,
            range: "[0, pi/2 - kappa]",
        });
    }
    let [a, b, c] = regular_triangle(kappa);
    let alpha = (kappa.cos() / (1.0 + kappa.cos())).acos();
    let body = if sigma == 0.0 {
        Body::new(vec![circle(a, b, alpha)?, circle(b, c, alpha)?, circle(c, a, alpha)?])?
    } else {
        let big = kappa + sigma;
        let ext = |from: &SpherePoint, via: &SpherePoint| from.towards(via, big).expect("distinct vertices");
        let f = ext(&a, &b);
        let i = ext(&b, &a);
        let h = ext(&b, &c);
        let e = ext(&c, &b);
        let g = ext(&a, &c);
        let d = ext(&c, &a);
        let large = |center: SpherePoint, from: SpherePoint, to: SpherePoint| -> Result<BoundaryArc, BodyError> {
            if (big - FRAC_PI_2).abs() <= GREAT_SNAP {
                BoundaryArc::great(from, to).map_err(|source| BodyError::BadArc { index: 0, source })
            } else {
                circle(center, from, alpha)
            }
        };
        let mut arcs = vec![
            large(a, f, g)?,
            circle(c, g, alpha)?,
            large(b, h, i)?,
            circle(a, i, alpha)?,
            large(c, d, e)?,
            circle(b, e, alpha)?,
        ];
        // Pin each arc's end to the exact start of its successor.
        for idx in 0..arcs.len() {
            let next_start = arcs[(idx + 1) % arcs.len()].from();
            arcs[idx] = match arcs[idx] {
                BoundaryArc::Great(gr) => BoundaryArc::great(gr.from(), next_start),
                BoundaryArc::Circle(ci) => {
                    CircleArc::new(ci.center(), ci.radius(), ci.from(), next_start).map(BoundaryArc::Circle)
                }
            }
            .map_err(|source| BodyError::BadArc { index: idx, source })?;
        }
        Body::new(arcs)?
    };
    let width = kappa + 2.0 * sigma;
    let params: Vec<(&str, f64)> = if kind == GalleryKind::ReuleauxTriangle {
        vec![("kappa", kappa)]
    } else {
        vec![("kappa", kappa), ("sigma", sigma)]
    };
    finish(
        body,
        kind,
        &params,
        Predicted {
            thickness: width,
            constant_width: true,
            diameter: Some(width),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::{great_arc_count, is_constant_width, is_smooth, is_strictly_convex};

    #[test]
    fn disk_and_quarter_disk_metrics() {
        let d = make_disk(SpherePoint::north(), 0.5).unwrap();
        assert!((thickness(&d.body).value - 1.0).abs() < 1e-9);
        assert!(make_disk(SpherePoint::north(), 2.0).is_err());
        let near = make_disk(SpherePoint::north(), FRAC_PI_2 - 1e-3).unwrap();
        assert_eq!(near.body.arcs().len(), 4);

        let q = make_quarter_disk(SpherePoint::from_spherical(0.2, 0.1), 0.5, 0.3).unwrap();
        assert!((thickness(&q.body).value - 0.5).abs() < 1e-9);
        let q = make_quarter_disk(SpherePoint::north(), PI / 4.0, 0.0).unwrap();
        assert!((q.body.diameter() - PI / 3.0).abs() < 1e-9);
    }

    #[test]
    fn odd_gon_thickness_peaks_at_a_quarter_turn() {
        for n in [3, 5, 7, 9] {
            let peak = odd_gon_peak_radius(n);
            assert!((odd_gon_thickness(n, peak) - FRAC_PI_2).abs() < 1e-7);
            assert!(odd_gon_thickness(n, 0.5 * peak) < odd_gon_thickness(n, 0.9 * peak));
        }
    }

    #[test]
    fn odd_gon_inverts_thickness() {
        let t = make_regular_odd_gon(3, FRAC_PI_2).unwrap();
        assert!((thickness(&t.body).value - FRAC_PI_2).abs() < 1e-9);
        let t = make_regular_odd_gon(5, 0.8).unwrap();
        assert!((thickness(&t.body).value - 0.8).abs() < 1e-9);
        let t = make_regular_odd_gon(3, 0.6).unwrap();
        assert!(!is_constant_width(&t.body, 1e-6).constant);
        assert!(make_regular_odd_gon(4, 0.6).is_err());
        assert!(make_regular_odd_gon(5, 1.7).is_err());
    }

    #[test]
    fn example_body_has_constant_width() {
        let e = make_example_body(0.6, 0.3).unwrap();
        assert_eq!(e.body.arcs().len(), 6);
        let r = is_constant_width(&e.body, 1e-6);
        assert!(r.constant, "{r:?}");
        assert!((r.min_width - 1.2).abs() < 1e-6);
        assert!(is_smooth(&e.body));

        let reuleaux = make_example_body(0.7, 0.0).unwrap();
        assert_eq!(reuleaux.body.arcs().len(), 3);
        assert!(is_constant_width(&reuleaux.body, 1e-6).constant);

        let flat = make_example_body(0.9, FRAC_PI_2 - 0.9).unwrap();
        assert!(!is_strictly_convex(&flat.body));
        assert_eq!(great_arc_count(&flat.body), 3);
    }
}
