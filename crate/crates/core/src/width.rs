//! Supporting hemispheres, width and thickness.
//!
//! Every supporting hemisphere of a body is identified by its pole, and the
//! poles form a closed curve, the dual boundary. For a boundary point `p`
//! with unit tangent `t` the supporting pole is `p x t`; a great arc
//! contributes a single pole, a circle arc of radius `rho` contributes an
//! arc of the circle of radius `pi/2 - rho` about the same center, and a
//! junction contributes the fan of poles swept by the turn there.
//!
//! The width determined by `K = H(k)` is `pi` minus the largest distance from
//! `k` to the dual boundary, so the thickness is `pi` minus the diameter of
//! the dual boundary.

use std::f64::consts::PI;

use rayon::prelude::*;
use thiserror::Error;

use crate::body::{Body, BoundaryArc, TOL_LOCATE};
use crate::curve::{rotation_angle, ArcCurve};
use crate::optimize::{farthest_on, farthest_pair, golden_section_min};
use crate::sphere::{distance, GeomError, GreatArc, Hemisphere, Lune, SpherePoint, Vec3, TOL_GEOM};

/// Coarse directions in the thickness and width-constancy sweeps.
pub const N_DIR: usize = 720;
/// Tolerance of the reducedness certificate.
pub const TOL_CERT: f64 = 1e-6;
/// Circle-arc samples per arc examined by the reducedness certificate.
pub const CERT_ARC_SAMPLES: usize = 24;
const PARAM_TOL: f64 = 1e-12;
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WidthError {
    #[error("point is {distance:e} away from the boundary")]
    NotOnBoundary { distance: f64 },
    #[error("hemisphere does not support the body (min inner product {min_dot:e})")]
    NotSupporting { min_dot: f64 },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Which dual piece a pole belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualPieceKind {
    /// Poles of boundary arc `i`.
    Arc(usize),
    /// Fan of poles at junction `j`.
    Fan(usize),
}

/// Position on the dual boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DualPos {
    pub piece: usize,
    pub t: f64,
}

/// The cyclic curve of all supporting poles. Piece `2i` belongs to boundary
/// arc `i`, piece `2i + 1` is the fan at the junction ending arc `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBoundary {
    pieces: Vec<ArcCurve>,
}

impl DualBoundary {
    pub(crate) fn build(arcs: &[BoundaryArc], curves: &[ArcCurve], turns: &[f64]) -> Self {
        let k = arcs.len();
        let mut pieces = Vec::with_capacity(2 * k);
        for i in 0..k {
            let arc_piece = match &arcs[i] {
                BoundaryArc::Great(g) => ArcCurve::point(g.pole()),
                BoundaryArc::Circle(c) => {
                    let (s, co) = c.radius().sin_cos();
                    let curve = &curves[i];
                    let scale = co / s;
                    ArcCurve::from_parts(
                        c.center().vec() * s,
                        -curve.u() * scale,
                        -curve.w() * scale,
                        curve.sweep(),
                    )
                }
            };
            let m_in = arc_piece.end();
            let j = (i + 1) % k;
            let v = curves[j].start().vec();
            let turn = turns[j].max(0.0);
            let fan = if turn > 0.0 {
                ArcCurve::great(m_in, v.cross(&m_in.vec()).normalize(), turn)
            } else {
                ArcCurve::point(m_in)
            };
            pieces.push(arc_piece);
            pieces.push(fan);
        }
        DualBoundary { pieces }
    }

    pub fn pieces(&self) -> &[ArcCurve] {
        &self.pieces
    }

    pub fn kind(&self, piece: usize) -> DualPieceKind {
        let k = self.pieces.len() / 2;
        if piece.is_multiple_of(2) {
            DualPieceKind::Arc(piece / 2)
        } else {
            DualPieceKind::Fan((piece / 2 + 1) % k)
        }
    }

    pub fn fan_piece(&self, junction: usize) -> usize {
        let k = self.pieces.len() / 2;
        2 * ((junction + k - 1) % k) + 1
    }

    pub fn pole(&self, pos: DualPos) -> SpherePoint {
        self.pieces[pos.piece].at(pos.t)
    }

    /// Farthest dual position from `q`: `(piece, t, q . m)`.
    pub fn min_dot(&self, q: &Vec3) -> (usize, f64, f64) {
        farthest_on(&self.pieces, q)
    }

    /// Roughly `n` positions in cyclic order, allocated by length, with every
    /// piece start included.
    pub fn sample_positions(&self, n: usize) -> Vec<DualPos> {
        let total: f64 = self.pieces.iter().map(|p| p.length()).sum();
        let mut out = Vec::with_capacity(n + self.pieces.len());
        for (piece, curve) in self.pieces.iter().enumerate() {
            if curve.is_point() {
                out.push(DualPos { piece, t: 0.0 });
                continue;
            }
            let m = ((n as f64 * curve.length() / total).ceil() as usize).max(2);
            for s in 0..m {
                out.push(DualPos {
                    piece,
                    t: curve.sweep() * s as f64 / m as f64,
                });
            }
        }
        out
    }
}

/// What a supporting hemisphere touches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Contact {
    Point(SpherePoint),
    Arc(GreatArc),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportContact {
    pub hemisphere: Hemisphere,
    pub contact: Contact,
}

impl SupportContact {
    /// Contact set of the hemisphere about `pole`, which must support `body`.
    pub fn of(body: &Body, pole: &SpherePoint) -> Result<Self, WidthError> {
        check_support(body, pole)?;
        for arc in body.arcs() {
            if let BoundaryArc::Great(g) = arc {
                if distance(&g.pole(), pole) <= TOL_GEOM {
                    return Ok(SupportContact {
                        hemisphere: Hemisphere::new(*pole),
                        contact: Contact::Arc(*g),
                    });
                }
            }
        }
        let (i, t, _) = farthest_on(body.curves(), &pole.vec());
        Ok(SupportContact {
            hemisphere: Hemisphere::new(*pole),
            contact: Contact::Point(body.curves()[i].at(t)),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn check_support(body: &Body, pole: &SpherePoint) -> Result<(), WidthError> {
    let min_dot = body.min_dot(&pole.vec());
    if min_dot.abs() > TOL_GEOM {
        return Err(WidthError::NotSupporting { min_dot });
    }
    Ok(())
}

/// All supporting poles at the boundary point `p`, as a curve running from
/// the right pole to the left pole. A single point when `p` is smooth.
pub fn supporting_fan(body: &Body, p: &SpherePoint) -> Result<ArcCurve, WidthError> {
    let loc = body.locate(p);
    if loc.distance > TOL_LOCATE {
        return Err(WidthError::NotOnBoundary { distance: loc.distance });
    }
    let dual = body.dual();
    if let Some(j) = body.junction_near(p, TOL_LOCATE) {
        return Ok(dual.pieces()[dual.fan_piece(j)]);
    }
    Ok(ArcCurve::point(dual.pieces()[2 * loc.arc].at(loc.t)))
}

/// The right (incoming) or left (outgoing) supporting hemisphere at `p`.
pub fn supporting_hemisphere_at(body: &Body, p: &SpherePoint, side: Side) -> Result<Hemisphere, WidthError> {
    let fan = supporting_fan(body, p)?;
    Ok(Hemisphere::new(match side {
        Side::Right => fan.start(),
        Side::Left => fan.end(),
    }))
}

/// A supporting hemisphere `K`, a partner `K*` at maximal pole distance and
/// the lune `K ∩ K*`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WidthWitness {
    pub k: Hemisphere,
    pub k_star: Hemisphere,
    pub lune: Lune,
    /// Center of the semicircle bounding `K`.
    pub a: SpherePoint,
    /// Center of the semicircle bounding `K*`.
    pub b: SpherePoint,
    pub width: f64,
    /// Number of distinct maximizing partner poles found.
    pub multiplicity: usize,
    pub k_star_pos: DualPos,
}

fn rounded_key(p: &SpherePoint, scale: f64) -> [i64; 3] {
    let c = p.coords();
    [
        (c[0] * scale).round() as i64,
        (c[1] * scale).round() as i64,
        (c[2] * scale).round() as i64,
    ]
}

/// Width of `body` determined by `k`.
pub fn width_at(body: &Body, k: &Hemisphere) -> Result<WidthWitness, WidthError> {
    check_support(body, &k.pole())?;
    Ok(width_unchecked(body, k))
}

fn width_unchecked(body: &Body, k: &Hemisphere) -> WidthWitness {
    let q = k.pole().vec();
    let dual = body.dual();
    let (_, _, best) = dual.min_dot(&q);
    let mut candidates: Vec<(DualPos, SpherePoint)> = Vec::new();
    for (piece, curve) in dual.pieces().iter().enumerate() {
        let e = curve.min_dot(&q);
        let mut ts = vec![];
        if e.value <= best + TIE_TOL {
            ts.push(e.t);
        }
        for t in [0.0, curve.sweep()] {
            if curve.dot_at(&q, t) <= best + TIE_TOL {
                ts.push(t);
            }
        }
        for t in ts {
            candidates.push((DualPos { piece, t }, curve.at(t)));
        }
    }
    let mut distinct: Vec<[i64; 3]> = candidates.iter().map(|(_, m)| rounded_key(m, 1e9)).collect();
    distinct.sort();
    distinct.dedup();
    let (pos, m) = *candidates
        .iter()
        .min_by_key(|(_, m)| rounded_key(m, 1e12))
        .expect("the farthest piece is a candidate");
    let k_star = Hemisphere::new(m);
    let lune = Lune::new(*k, k_star).expect("partner pole is neither equal nor antipodal");
    let (a, b) = lune.semicircle_centers();
    WidthWitness {
        k: *k,
        k_star,
        lune,
        a,
        b,
        width: lune.thickness(),
        multiplicity: distinct.len(),
        k_star_pos: pos,
    }
}

/// Width at the dual position, without constructing a witness.
fn width_value(dual: &DualBoundary, k: &SpherePoint) -> f64 {
    let (piece, t, _) = dual.min_dot(&k.vec());
    PI - distance(k, &dual.pieces()[piece].at(t))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thickness {
    pub value: f64,
    pub witness: WidthWitness,
}

/// Thickness `pi - diam(dual boundary)` and a minimizing witness.
pub fn thickness(body: &Body) -> Thickness {
    let dual = body.dual();
    let pair = farthest_pair(dual.pieces(), N_DIR);
    let first = dual.pieces()[pair.first.0].at(pair.first.1);
    let witness = width_unchecked(body, &Hemisphere::new(first));
    Thickness {
        value: witness.width,
        witness,
    }
}

/// Outcome of the relation on three supporting hemispheres.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Ordered,
    NotOrdered,
    Degenerate,
}

fn poles_degenerate(x: &SpherePoint, y: &SpherePoint, z: &SpherePoint) -> bool {
    [(x, y), (y, z), (z, x)]
        .iter()
        .any(|(p, q)| p.cross(q).norm() <= TOL_GEOM)
}

/// Whether `x, y, z` appear in this order on the boundary of the triangle
/// they span. When the three bounding circles pass through one point of
/// `body`, the order is read off the boundary of the hemisphere about that
/// point.
pub fn order_triple(x: &Hemisphere, y: &Hemisphere, z: &Hemisphere, body: &Body) -> Order {
    let (px, py, pz) = (x.pole(), y.pole(), z.pole());
    if poles_degenerate(&px, &py, &pz) {
        return Order::Degenerate;
    }
    let det = px.vec().dot(&py.cross(&pz));
    if det.abs() > TOL_GEOM {
        return if det > 0.0 { Order::Ordered } else { Order::NotOrdered };
    }
    let c = match SpherePoint::from_vec(px.cross(&py)) {
        Some(c) => c,
        None => return Order::Degenerate,
    };
    let common = if body.contains(&c) {
        c
    } else if body.contains(&c.antipode()) {
        c.antipode()
    } else {
        return Order::Degenerate;
    };
    order_triple_about(x, y, z, &common)
}

/// Cyclic order of three hemispheres whose bounding circles pass through
/// `c`, taken positively about `c`.
pub fn order_triple_about(x: &Hemisphere, y: &Hemisphere, z: &Hemisphere, c: &SpherePoint) -> Order {
    let (px, py, pz) = (x.pole(), y.pole(), z.pole());
    if poles_degenerate(&px, &py, &pz) {
        return Order::Degenerate;
    }
    let axis = c.vec();
    let flat = |p: &SpherePoint| p.vec() - axis * axis.dot(&p.vec());
    let ty = rotation_angle(&axis, &flat(&px), &flat(&py));
    let tz = rotation_angle(&axis, &flat(&px), &flat(&pz));
    if ty < tz {
        Order::Ordered
    } else {
        Order::NotOrdered
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantWidthReport {
    pub constant: bool,
    pub min_width: f64,
    pub max_width: f64,
    pub spread: f64,
}

fn sampled_widths(body: &Body, n: usize) -> Vec<(DualPos, f64)> {
    let dual = body.dual();
    dual.sample_positions(n)
        .into_par_iter()
        .map(|pos| (pos, width_value(dual, &dual.pole(pos))))
        .collect()
}

/// Width spread over the dual vertices and `N_DIR` dual samples.
pub fn is_constant_width(body: &Body, tol: f64) -> ConstantWidthReport {
    let widths = sampled_widths(body, N_DIR);
    let min_width = widths.iter().map(|w| w.1).fold(f64::INFINITY, f64::min);
    let max_width = widths.iter().map(|w| w.1).fold(f64::NEG_INFINITY, f64::max);
    let spread = max_width - min_width;
    ConstantWidthReport {
        constant: spread <= tol,
        min_width,
        max_width,
        spread,
    }
}

/// Number of great-arc boundary elements longer than `TOL_GEOM`.
pub fn great_arc_count(body: &Body) -> usize {
    body.arcs()
        .iter()
        .filter(|a| a.is_great() && a.length() > TOL_GEOM)
        .count()
}

pub fn is_strictly_convex(body: &Body) -> bool {
    great_arc_count(body) == 0
}

/// Left and right poles agree at every junction.
pub fn is_smooth(body: &Body) -> bool {
    (0..body.arcs().len()).all(|j| body.turn(j) <= TOL_GEOM)
}

/// Supporting hemispheres whose width is within `tol` of `delta`, in dual
/// order, with isolated minima refined.
/// At a minimum `t` of the width along `piece` with partner `m`, `t` also
/// maximizes the distance to `m`; alternate the two exact updates.
fn polish_minimum(dual: &DualBoundary, piece: &ArcCurve, mut t: f64) -> f64 {
    let mut w = width_value(dual, &piece.at(t));
    for _ in 0..8 {
        let (j, tm, _) = dual.min_dot(&piece.at_vec(t));
        let m = dual.pieces()[j].at_vec(tm);
        let next = piece.min_dot(&m).t;
        let wn = width_value(dual, &piece.at(next));
        if wn > w + 1e-14 || next == t {
            break;
        }
        t = next;
        w = wn;
    }
    t
}

pub fn minimizing_hemispheres(body: &Body, delta: f64, tol: f64) -> Vec<WidthWitness> {
    let dual = body.dual();
    let widths = sampled_widths(body, N_DIR);
    let n = widths.len();
    let mut picks: Vec<DualPos> = Vec::new();
    for i in 0..n {
        let (pos, w) = widths[i];
        let (prev, wp) = widths[(i + n - 1) % n];
        let (next, wn) = widths[(i + 1) % n];
        if w <= wp && w <= wn {
            let lo = if prev.piece == pos.piece && prev.t < pos.t {
                prev.t
            } else {
                pos.t
            };
            let hi = if next.piece == pos.piece && next.t > pos.t {
                next.t
            } else {
                pos.t
            };
            let piece = dual.pieces()[pos.piece];
            let t = if hi > lo {
                let (t, fw) = golden_section_min(|t| width_value(dual, &piece.at(t)), lo, hi, PARAM_TOL);
                let t = if fw <= w { t } else { pos.t };
                polish_minimum(dual, &piece, t)
            } else {
                pos.t
            };
            picks.push(DualPos { piece: pos.piece, t });
        } else if w <= delta + tol && wp <= delta + tol && wn <= delta + tol {
            picks.push(pos);
        }
    }
    let mut out: Vec<WidthWitness> = Vec::new();
    for pos in picks {
        let k = Hemisphere::new(dual.pole(pos));
        let wit = width_unchecked(body, &k);
        if wit.width > delta + tol {
            continue;
        }
        if out.iter().any(|o| distance(&o.k.pole(), &k.pole()) <= 1e-9) {
            continue;
        }
        out.push(wit);
    }
    out
}

/// Best lune of thickness `width` through the boundary point `p`, with `p`
/// the center of the semicircle on a supporting hemisphere at `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LuneSearch {
    pub lune: Lune,
    /// Smallest inner product of the body with the second pole; the lune
    /// contains the body when this is non-negative.
    pub margin: f64,
}

pub fn lune_through_point(body: &Body, p: &SpherePoint, width: f64) -> Result<LuneSearch, WidthError> {
    let fan = supporting_fan(body, p)?;
    let (s, c) = width.sin_cos();
    let partner = |g: &Vec3| -> Vec3 { -*g * c + p.vec() * s };
    let margin = |t: f64| body.min_dot(&partner(&fan.at_vec(t)));
    let t = if fan.is_point() {
        0.0
    } else {
        let params = fan.even_params(33);
        let vals: Vec<f64> = params.iter().map(|t| margin(*t)).collect();
        let best = (0..params.len())
            .max_by(|&a, &b| vals[a].total_cmp(&vals[b]))
            .expect("samples");
        let lo = params[best.saturating_sub(1)];
        let hi = params[(best + 1).min(params.len() - 1)];
        let (t, neg) = golden_section_min(|t| -margin(t), lo, hi, PARAM_TOL);
        if -neg >= vals[best] {
            t
        } else {
            params[best]
        }
    };
    let g = fan.at(t);
    let h = SpherePoint::from_vec(partner(&g.vec())).ok_or(GeomError::DegenerateLune)?;
    let lune = Lune::new(Hemisphere::new(g), Hemisphere::new(h))?;
    Ok(LuneSearch {
        lune,
        margin: body.min_dot(&h.vec()),
    })
}

/// Outcome of the reducedness test.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Every examined extreme point is the center of a minimal lune.
    CertifiedReduced {
        resolution: usize,
        thickness: f64,
    },
    /// A proper sub-body `cut` of the same thickness.
    Falsified {
        point: SpherePoint,
        cut_pole: SpherePoint,
        thickness: f64,
        cut_thickness: f64,
        cut: Box<Body>,
    },
    Inconclusive {
        point: SpherePoint,
        margin: f64,
    },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::CertifiedReduced { .. })
    }

    pub fn is_falsified(&self) -> bool {
        matches!(self, Certificate::Falsified { .. })
    }

    pub fn grade(&self) -> &'static str {
        match self {
            Certificate::CertifiedReduced { .. } => "certified-reduced",
            Certificate::Falsified { .. } => "falsified",
            Certificate::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Extreme points examined by the certificate: extreme junctions and
/// `CERT_ARC_SAMPLES` points on each circle arc.
pub fn certificate_points(body: &Body) -> Vec<SpherePoint> {
    let ext = body.extreme_points();
    let mut pts: Vec<SpherePoint> = ext.vertices.iter().map(|(_, p)| *p).collect();
    for &i in &ext.arcs {
        let curve = body.curves()[i];
        for t in curve.even_params(CERT_ARC_SAMPLES + 2) {
            pts.push(curve.at(t));
        }
    }
    pts
}

/// Checks that every sampled extreme point is the center of a lune of
/// thickness `Δ` containing the body. An uncovered point is cut off by a
/// small cap; if the remainder keeps the thickness the body is not reduced.
pub fn reducedness_certificate(body: &Body) -> Certificate {
    let delta = thickness(body).value;
    let pts = certificate_points(body);
    for p in &pts {
        let search = match lune_through_point(body, p, delta) {
            Ok(s) => s,
            Err(_) => {
                return Certificate::Inconclusive {
                    point: *p,
                    margin: f64::NEG_INFINITY,
                }
            }
        };
        if search.margin >= -TOL_CERT {
            continue;
        }
        if let Some(cert) = try_cut(body, p, delta) {
            return cert;
        }
        return Certificate::Inconclusive {
            point: *p,
            margin: search.margin,
        };
    }
    Certificate::CertifiedReduced {
        resolution: pts.len(),
        thickness: delta,
    }
}

fn try_cut(body: &Body, p: &SpherePoint, delta: f64) -> Option<Certificate> {
    let fan = supporting_fan(body, p).ok()?;
    let inward = fan.at(0.5 * fan.sweep()).vec();
    let shortest = body.arcs().iter().map(|a| a.length()).fold(f64::INFINITY, f64::min);
    let mut depth = 0.1 * shortest.min(delta);
    for _ in 0..8 {
        let n = inward * depth.cos() - p.vec() * depth.sin();
        let pole = SpherePoint::from_vec(n)?;
        if let Ok(cut) = body.clip(&pole) {
            let cut_thickness = thickness(&cut).value;
            if cut_thickness >= delta - TOL_CERT {
                return Some(Certificate::Falsified {
                    point: *p,
                    cut_pole: pole,
                    thickness: delta,
                    cut_thickness,
                    cut: Box::new(cut),
                });
            }
        }
        depth *= 0.5;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::CircleArc;
    use std::f64::consts::FRAC_PI_2;

    fn p(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::from_vec(Vec3::new(x, y, z)).unwrap()
    }

    fn octant() -> Body {
        Body::polygon(&[p(1., 0., 0.), p(0., 1., 0.), p(0., 0., 1.)]).unwrap()
    }

    fn disk(center: SpherePoint, rho: f64) -> Body {
        let (u, _) = center.tangent_frame();
        let start = SpherePoint::from_vec(center.vec() * rho.cos() + u * rho.sin()).unwrap();
        let arcs = (0..4)
            .map(|k| {
                let s = start.rotated_about(&center, k as f64 * FRAC_PI_2);
                BoundaryArc::Circle(CircleArc::from_sweep(center, s, FRAC_PI_2).unwrap())
            })
            .collect();
        Body::new(arcs).unwrap()
    }

    #[test]
    fn dual_poles_all_support() {
        for body in [octant(), disk(SpherePoint::from_spherical(0.4, 1.0), 0.7)] {
            for piece in body.dual().pieces() {
                for t in piece.even_params(50) {
                    let m = piece.at_vec(t);
                    assert!(body.min_dot(&m).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn octant_dual_is_the_octant() {
        let b = octant();
        let poles: Vec<SpherePoint> = (0..3).map(|i| b.dual().pieces()[2 * i].start()).collect();
        assert!(distance(&poles[0], &p(0., 0., 1.)) < 1e-15);
        assert!(distance(&poles[1], &p(1., 0., 0.)) < 1e-15);
        assert!(distance(&poles[2], &p(0., 1., 0.)) < 1e-15);
        for i in 0..3 {
            assert!((b.dual().pieces()[2 * i + 1].sweep() - FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn edge_midpoint_support_is_the_edge_pole() {
        let b = octant();
        let mid = p(1., 1., 0.);
        for side in [Side::Left, Side::Right] {
            let h = supporting_hemisphere_at(&b, &mid, side).unwrap();
            assert!(distance(&h.pole(), &p(0., 0., 1.)) < 1e-12);
        }
        let l = supporting_hemisphere_at(&b, &p(1., 0., 0.), Side::Left).unwrap();
        let r = supporting_hemisphere_at(&b, &p(1., 0., 0.), Side::Right).unwrap();
        assert!(distance(&l.pole(), &r.pole()) > 1.0);
        assert!(b.inside_hemisphere(&l.pole(), 1e-12) && b.inside_hemisphere(&r.pole(), 1e-12));
        assert!(supporting_hemisphere_at(&b, &p(1., 1., 1.), Side::Left).is_err());
    }

    #[test]
    fn disk_support_lies_opposite_the_center() {
        let c = SpherePoint::from_spherical(0.3, 0.5);
        let rho = 0.6;
        let b = disk(c, rho);
        let q = b.curves()[1].at(0.4);
        let h = supporting_hemisphere_at(&b, &q, Side::Left).unwrap();
        assert!((distance(&h.pole(), &c) - (FRAC_PI_2 - rho)).abs() < 1e-12);
        assert!((distance(&h.pole(), &q) - FRAC_PI_2).abs() < 1e-12);
        // The pole sits on the great circle through c and q, on c's side.
        assert!(h.pole().vec().dot(&c.cross(&q)).abs() < 1e-12);
        for x in b.boundary_sample(1000).unwrap() {
            assert!(h.pole().dot(&x) >= -1e-12);
        }
    }

    #[test]
    fn disk_width_is_twice_the_radius() {
        let c = SpherePoint::from_spherical(0.8, -0.4);
        let b = disk(c, 0.5);
        let q = b.curves()[2].at(0.9);
        let k = supporting_hemisphere_at(&b, &q, Side::Left).unwrap();
        let w = width_at(&b, &k).unwrap();
        assert!((w.width - 1.0).abs() < 1e-12);
        assert!((distance(&w.a, &w.b) - 1.0).abs() < 1e-12);
        assert!((distance(&w.a, &c) - 0.5).abs() < 1e-12);
        assert!((thickness(&b).value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn octant_width_from_an_edge_pole() {
        let b = octant();
        let w = width_at(&b, &Hemisphere::new(p(0., 0., 1.))).unwrap();
        assert!((w.width - FRAC_PI_2).abs() < 1e-12);
        assert!(w.multiplicity > 1);
        // Oracle: brute-force max over dense dual samples.
        let mut far: f64 = 0.0;
        for piece in b.dual().pieces() {
            for t in piece.even_params(4000) {
                far = far.max(distance(&p(0., 0., 1.), &piece.at(t)));
            }
        }
        assert!((PI - far - w.width).abs() < 1e-9);
        assert!(width_at(&b, &Hemisphere::new(p(1., 1., 1.))).is_err());
    }

    #[test]
    fn order_triple_cases() {
        let b = octant();
        let h = |x, y, z| Hemisphere::new(p(x, y, z));
        let (x, y, z) = (h(1., 0., 0.), h(0., 1., 0.), h(0., 0., 1.));
        assert_eq!(order_triple(&x, &y, &z, &b), Order::Ordered);
        assert_eq!(order_triple(&y, &z, &x, &b), Order::Ordered);
        assert_eq!(order_triple(&y, &x, &z, &b), Order::NotOrdered);
        assert_eq!(order_triple(&x, &x, &z, &b), Order::Degenerate);

        // Three great circles through the north pole: poles on the equator.
        let c = SpherePoint::north();
        let eq = |phi: f64| Hemisphere::new(SpherePoint::from_spherical(FRAC_PI_2, phi));
        assert_eq!(order_triple_about(&eq(0.1), &eq(1.0), &eq(2.5), &c), Order::Ordered);
        assert_eq!(order_triple_about(&eq(1.0), &eq(2.5), &eq(0.1), &c), Order::Ordered);
        assert_eq!(order_triple_about(&eq(2.5), &eq(1.0), &eq(0.1), &c), Order::NotOrdered);
        assert_eq!(
            order_triple_about(&eq(2.5), &eq(1.0), &eq(0.1), &c.antipode()),
            Order::Ordered
        );
    }

    #[test]
    fn constant_width_and_convexity_flags() {
        let d = disk(SpherePoint::north(), 0.4);
        let r = is_constant_width(&d, 1e-9);
        assert!(r.constant && r.spread < 1e-12);
        assert!(is_strictly_convex(&d) && is_smooth(&d));
        let o = octant();
        assert!(!is_strictly_convex(&o) && !is_smooth(&o));
        assert_eq!(great_arc_count(&o), 3);
    }

    #[test]
    fn octant_and_disk_are_certified() {
        assert!(reducedness_certificate(&octant()).is_certified());
        assert!(reducedness_certificate(&disk(SpherePoint::north(), 0.5)).is_certified());
    }

    #[test]
    fn square_is_falsified_by_a_corner_cut() {
        let v: Vec<SpherePoint> = (0..4)
            .map(|k| SpherePoint::from_spherical(0.4, FRAC_PI_2 * k as f64))
            .collect();
        let b = Body::polygon(&v).unwrap();
        match reducedness_certificate(&b) {
            Certificate::Falsified {
                thickness,
                cut_thickness,
                cut,
                ..
            } => {
                assert!((thickness - cut_thickness).abs() < 1e-9);
                assert!(cut.area() < b.area());
            }
            c => panic!("expected falsified, got {c:?}"),
        }
    }
}
