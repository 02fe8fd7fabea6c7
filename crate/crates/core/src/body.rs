//! Convex bodies bounded by a closed, positively oriented chain of great-arc
//! and small-circle-arc elements.
//!
//! A [`Body`] is validated once at construction and is immutable afterwards.
//! Validation computes the turning angle at each junction, the enclosed area
//! (Gauss-Bonnet) and the dual boundary, which also drives containment.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Rotation3;
use thiserror::Error;

use crate::curve::{rotation_angle, ArcCurve};
use crate::optimize::{farthest_on, farthest_pair};
use crate::sphere::{distance, GeomError, GreatArc, SpherePoint, Vec3, TOL_GEOM};
use crate::width::DualBoundary;

/// Smallest accepted enclosed area.
pub const TOL_AREA: f64 = 1e-12;
/// Distance within which a point counts as lying on the boundary when the
/// caller hands in a numerically computed point.
pub const TOL_LOCATE: f64 = 1e-7;
/// Coarse samples used by the diameter sweeps.
pub const DIAMETER_SAMPLES: usize = 720;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArcError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("circle radius {0} is outside (0, pi/2)")]
    RadiusOutOfRange(f64),
    #[error("{which} endpoint is {deviation:e} off the circle")]
    OffCircle { which: &'static str, deviation: f64 },
    #[error("circle arc sweep {0} exceeds pi")]
    SweepTooLarge(f64),
    #[error("circle arc has zero sweep")]
    ZeroSweep,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BodyError {
    #[error("a body needs at least 2 boundary arcs, got {0}")]
    TooFewArcs(usize),
    #[error("arc {index}: {source}")]
    BadArc { index: usize, source: ArcError },
    #[error("arc {index} ends {gap:e} away from the start of the next arc")]
    NotClosed { index: usize, gap: f64 },
    #[error("boundary is not positively oriented (total turning {total_turning})")]
    Orientation { total_turning: f64 },
    #[error("reflex junction at the start of arc {index} (turn {turn})")]
    Reflex { index: usize, turn: f64 },
    #[error("cusp at the start of arc {index}")]
    Cusp { index: usize },
    #[error("arc {index} does not lie on a supporting circle of the body")]
    NotSupporting { index: usize },
    #[error("body is not contained in an open hemisphere")]
    NotInOpenHemisphere,
    #[error("enclosed area {area:e} is not positive")]
    EmptyInterior { area: f64 },
    #[error("sample size {requested} is below the arc count {minimum}")]
    SampleTooSmall { requested: usize, minimum: usize },
    #[error("clipping removes the whole body")]
    EmptyClip,
}

/// Arc of the circle of angular radius `radius` about `center`, traversed by
/// positive rotation about `center` from `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleArc {
    center: SpherePoint,
    radius: f64,
    from: SpherePoint,
    to: SpherePoint,
    sweep: f64,
}

impl CircleArc {
    pub fn new(center: SpherePoint, radius: f64, from: SpherePoint, to: SpherePoint) -> Result<Self, ArcError> {
        if !(radius > 0.0 && radius < FRAC_PI_2) {
            return Err(ArcError::RadiusOutOfRange(radius));
        }
        for (which, p) in [("start", &from), ("end", &to)] {
            let deviation = (distance(&center, p) - radius).abs();
            if deviation > TOL_GEOM {
                return Err(ArcError::OffCircle { which, deviation });
            }
        }
        let c = center.vec();
        let sweep = rotation_angle(
            &c,
            &(from.vec() - c * c.dot(&from.vec())),
            &(to.vec() - c * c.dot(&to.vec())),
        );
        if sweep * radius.sin() <= TOL_GEOM {
            return Err(ArcError::ZeroSweep);
        }
        if sweep > PI + TOL_GEOM {
            return Err(ArcError::SweepTooLarge(sweep));
        }
        Ok(CircleArc {
            center,
            radius,
            from,
            to,
            sweep,
        })
    }

    /// Arc leaving `from` and rotating by `sweep` about `center`.
    pub fn from_sweep(center: SpherePoint, from: SpherePoint, sweep: f64) -> Result<Self, ArcError> {
        let radius = distance(&center, &from);
        let to = ArcCurve::circle(center, from, sweep).end();
        CircleArc::new(center, radius, from, to)
    }

    pub fn center(&self) -> SpherePoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn from(&self) -> SpherePoint {
        self.from
    }

    pub fn to(&self) -> SpherePoint {
        self.to
    }

    /// Rotation angle about the center, in `(0, pi]`.
    pub fn sweep(&self) -> f64 {
        self.sweep
    }

    pub fn length(&self) -> f64 {
        self.sweep * self.radius.sin()
    }
}

/// One element of a body boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryArc {
    Great(GreatArc),
    Circle(CircleArc),
}

impl BoundaryArc {
    pub fn great(from: SpherePoint, to: SpherePoint) -> Result<Self, ArcError> {
        Ok(BoundaryArc::Great(GreatArc::new(from, to)?))
    }

    pub fn from(&self) -> SpherePoint {
        match self {
            BoundaryArc::Great(a) => a.from(),
            BoundaryArc::Circle(a) => a.from(),
        }
    }

    pub fn to(&self) -> SpherePoint {
        match self {
            BoundaryArc::Great(a) => a.to(),
            BoundaryArc::Circle(a) => a.to(),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            BoundaryArc::Great(a) => a.length(),
            BoundaryArc::Circle(a) => a.length(),
        }
    }

    pub fn is_great(&self) -> bool {
        matches!(self, BoundaryArc::Great(_))
    }

    /// The arc as a parameterized curve, starting at `from`.
    pub fn curve(&self) -> ArcCurve {
        match self {
            BoundaryArc::Great(a) => {
                let p = a.from().vec();
                let d = a.to().vec() - p * p.dot(&a.to().vec());
                ArcCurve::great(a.from(), d.normalize(), a.length())
            }
            BoundaryArc::Circle(a) => ArcCurve::circle(a.center, a.from, a.sweep),
        }
    }

    /// Arc covering the parameter range `[t0, t1]` of [`Self::curve`].
    pub fn sub_arc(&self, t0: f64, t1: f64) -> Result<BoundaryArc, ArcError> {
        let sub = self.curve().sub(t0, t1);
        match self {
            BoundaryArc::Great(_) => BoundaryArc::great(sub.start(), sub.end()),
            BoundaryArc::Circle(a) => Ok(BoundaryArc::Circle(CircleArc::new(
                a.center,
                a.radius,
                sub.start(),
                sub.end(),
            )?)),
        }
    }

    fn rotated(&self, rot: &Rotation3<f64>) -> Result<BoundaryArc, ArcError> {
        match self {
            BoundaryArc::Great(a) => BoundaryArc::great(a.from().rotated(rot), a.to().rotated(rot)),
            BoundaryArc::Circle(a) => Ok(BoundaryArc::Circle(CircleArc::new(
                a.center.rotated(rot),
                a.radius,
                a.from.rotated(rot),
                a.to.rotated(rot),
            )?)),
        }
    }
}

/// Quantities established while validating a boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub arcs: usize,
    /// Turn at the start of each arc, positive to the left.
    pub turns: Vec<f64>,
    pub total_turning: f64,
    pub area: f64,
}

/// The extreme set of a body: isolated extreme junctions and boundary arcs
/// all of whose points are extreme.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremeSet {
    /// `(junction index, point)`; junction `j` is the start of arc `j`.
    pub vertices: Vec<(usize, SpherePoint)>,
    /// Indices of circle arcs.
    pub arcs: Vec<usize>,
}

/// A boundary position: arc index and curve parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryLocation {
    pub arc: usize,
    pub t: f64,
    pub point: SpherePoint,
    pub distance: f64,
}

#[derive(Clone, Debug)]
pub struct Body {
    arcs: Vec<BoundaryArc>,
    curves: Vec<ArcCurve>,
    report: ValidationReport,
    dual: DualBoundary,
}

impl PartialEq for Body {
    fn eq(&self, other: &Self) -> bool {
        self.arcs == other.arcs
    }
}

fn turn_angle(v: &Vec3, t_in: &Vec3, t_out: &Vec3) -> f64 {
    v.dot(&t_in.cross(t_out)).atan2(t_in.dot(t_out))
}

/// Checks every body invariant in a fixed order and reports the first
/// violation.
pub fn validate(arcs: &[BoundaryArc]) -> Result<ValidationReport, BodyError> {
    validate_with_dual(arcs).map(|(report, _)| report)
}

fn validate_with_dual(arcs: &[BoundaryArc]) -> Result<(ValidationReport, DualBoundary), BodyError> {
    let k = arcs.len();
    if k < 2 {
        return Err(BodyError::TooFewArcs(k));
    }
    for (index, arc) in arcs.iter().enumerate() {
        if let BoundaryArc::Circle(c) = arc {
            // Re-run the constructor checks; arcs may come from deserialization.
            CircleArc::new(c.center, c.radius, c.from, c.to).map_err(|source| BodyError::BadArc { index, source })?;
        }
        if arc.length() <= TOL_GEOM {
            return Err(BodyError::BadArc {
                index,
                source: ArcError::Geom(GeomError::DegenerateArc),
            });
        }
    }
    for index in 0..k {
        let gap = distance(&arcs[index].to(), &arcs[(index + 1) % k].from());
        if gap > TOL_GEOM {
            return Err(BodyError::NotClosed { index, gap });
        }
    }

    let curves: Vec<ArcCurve> = arcs.iter().map(|a| a.curve()).collect();
    let turns: Vec<f64> = (0..k)
        .map(|j| {
            let prev = &curves[(j + k - 1) % k];
            let next = &curves[j];
            turn_angle(&next.start().vec(), &prev.tangent(prev.sweep()), &next.tangent(0.0))
        })
        .collect();
    let curvature: f64 = arcs
        .iter()
        .map(|a| match a {
            BoundaryArc::Great(_) => 0.0,
            BoundaryArc::Circle(c) => c.sweep * c.radius.cos(),
        })
        .sum();
    let total_turning = turns.iter().sum::<f64>() + curvature;
    if total_turning <= 0.0 {
        return Err(BodyError::Orientation { total_turning });
    }
    for (index, &turn) in turns.iter().enumerate() {
        if turn.abs() >= PI - TOL_GEOM {
            return Err(BodyError::Cusp { index });
        }
        if turn < -TOL_GEOM {
            return Err(BodyError::Reflex { index, turn });
        }
    }

    let dual = DualBoundary::build(arcs, &curves, &turns);
    for (piece_index, piece) in dual.pieces().iter().enumerate() {
        for t in piece.even_params(9) {
            let m = piece.at_vec(t);
            if farthest_on(&curves, &m).2 < -TOL_GEOM {
                return Err(BodyError::NotSupporting { index: piece_index / 2 });
            }
        }
    }

    let mut centroid = Vec3::zeros();
    for piece in dual.pieces() {
        for t in piece.even_params(9) {
            centroid += piece.at_vec(t);
        }
    }
    let inside = SpherePoint::from_vec(centroid)
        .map(|m| farthest_on(&curves, &m.vec()).2 > TOL_GEOM)
        .unwrap_or(false);
    if !inside {
        return Err(BodyError::NotInOpenHemisphere);
    }

    let area = 2.0 * PI - total_turning;
    if area <= TOL_AREA {
        return Err(BodyError::EmptyInterior { area });
    }
    Ok((
        ValidationReport {
            arcs: k,
            turns,
            total_turning,
            area,
        },
        dual,
    ))
}

impl Body {
    pub fn new(arcs: Vec<BoundaryArc>) -> Result<Body, BodyError> {
        let (report, dual) = validate_with_dual(&arcs)?;
        let curves = arcs.iter().map(|a| a.curve()).collect();
        Ok(Body {
            arcs,
            curves,
            report,
            dual,
        })
    }

    /// Polygon with the given positively oriented vertices.
    pub fn polygon(vertices: &[SpherePoint]) -> Result<Body, BodyError> {
        let n = vertices.len();
        if n < 3 {
            return Err(BodyError::TooFewArcs(n));
        }
        let arcs = (0..n)
            .map(|i| {
                BoundaryArc::great(vertices[i], vertices[(i + 1) % n])
                    .map_err(|source| BodyError::BadArc { index: i, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Body::new(arcs)
    }

    pub fn arcs(&self) -> &[BoundaryArc] {
        &self.arcs
    }

    pub fn curves(&self) -> &[ArcCurve] {
        &self.curves
    }

    pub fn dual(&self) -> &DualBoundary {
        &self.dual
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.report
    }

    pub fn area(&self) -> f64 {
        self.report.area
    }

    pub fn perimeter(&self) -> f64 {
        self.arcs.iter().map(|a| a.length()).sum()
    }

    pub fn is_polygon(&self) -> bool {
        self.arcs.iter().all(|a| a.is_great())
    }

    /// Junction `j`, the start of arc `j`.
    pub fn junction(&self, j: usize) -> SpherePoint {
        self.arcs[j].from()
    }

    pub fn junctions(&self) -> Vec<SpherePoint> {
        self.arcs.iter().map(|a| a.from()).collect()
    }

    /// Turning angle at junction `j`, in `[0, pi)`.
    pub fn turn(&self, j: usize) -> f64 {
        self.report.turns[j]
    }

    /// Closed membership test: `p` lies in every supporting hemisphere.
    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.dual.min_dot(&p.vec()).2 >= -TOL_GEOM
    }

    /// Smallest value of `q . x` over the body.
    pub fn min_dot(&self, q: &Vec3) -> f64 {
        farthest_on(&self.curves, q).2
    }

    /// Whether the body lies in the closed hemisphere about `pole`, up to
    /// `tol`.
    pub fn inside_hemisphere(&self, pole: &SpherePoint, tol: f64) -> bool {
        self.min_dot(&pole.vec()) >= -tol
    }

    /// Nearest boundary position to `p`.
    pub fn locate(&self, p: &SpherePoint) -> BoundaryLocation {
        let mut best: Option<BoundaryLocation> = None;
        for (arc, curve) in self.curves.iter().enumerate() {
            let t = curve.max_dot(&p.vec()).t;
            let point = curve.at(t);
            let d = distance(p, &point);
            if best.is_none_or(|b| d < b.distance) {
                best = Some(BoundaryLocation {
                    arc,
                    t,
                    point,
                    distance: d,
                });
            }
        }
        best.expect("body has arcs")
    }

    pub fn on_boundary(&self, p: &SpherePoint, tol: f64) -> bool {
        self.locate(p).distance <= tol
    }

    /// Junction index within `tol` of `p`, if any.
    pub fn junction_near(&self, p: &SpherePoint, tol: f64) -> Option<usize> {
        (0..self.arcs.len()).find(|&j| distance(&self.junction(j), p) <= tol)
    }

    /// Whether junction `j` is an extreme point. Only a straight continuation
    /// between two great arcs is not.
    pub fn is_extreme_junction(&self, j: usize) -> bool {
        let k = self.arcs.len();
        let both_great = self.arcs[j].is_great() && self.arcs[(j + k - 1) % k].is_great();
        !(both_great && self.turn(j) <= TOL_GEOM)
    }

    pub fn extreme_points(&self) -> ExtremeSet {
        let vertices = (0..self.arcs.len())
            .filter(|&j| self.is_extreme_junction(j))
            .map(|j| (j, self.junction(j)))
            .collect();
        let arcs = (0..self.arcs.len()).filter(|&i| !self.arcs[i].is_great()).collect();
        ExtremeSet { vertices, arcs }
    }

    /// Boundary positions for [`Self::boundary_sample`].
    pub fn boundary_params(&self, n: usize) -> Result<Vec<(usize, f64)>, BodyError> {
        let k = self.arcs.len();
        if n < k {
            return Err(BodyError::SampleTooSmall {
                requested: n,
                minimum: k,
            });
        }
        let lengths: Vec<f64> = self.arcs.iter().map(|a| a.length()).collect();
        let mut interior = vec![0usize; k];
        for _ in 0..(n - k) {
            let widest = (0..k)
                .max_by(|&a, &b| {
                    let sa = lengths[a] / (interior[a] + 1) as f64;
                    let sb = lengths[b] / (interior[b] + 1) as f64;
                    sa.total_cmp(&sb).then(b.cmp(&a))
                })
                .expect("k >= 2");
            interior[widest] += 1;
        }
        let mut out = Vec::with_capacity(n);
        for (i, curve) in self.curves.iter().enumerate() {
            let slots = interior[i] + 1;
            for s in 0..slots {
                out.push((i, curve.sweep() * s as f64 / slots as f64));
            }
        }
        Ok(out)
    }

    /// `n` boundary points: every junction plus points spread along each
    /// arc so that the largest gap is as small as possible.
    pub fn boundary_sample(&self, n: usize) -> Result<Vec<SpherePoint>, BodyError> {
        Ok(self
            .boundary_params(n)?
            .into_iter()
            .map(|(i, t)| self.curves[i].at(t))
            .collect())
    }

    /// Maximal distance between two boundary points.
    pub fn diameter(&self) -> f64 {
        diameter_of(&self.curves)
    }

    /// Maximal distance between two extreme points, computed from the extreme
    /// junctions and circle arcs alone.
    pub fn extreme_diameter(&self) -> f64 {
        let ext = self.extreme_points();
        let mut curves: Vec<ArcCurve> = ext.vertices.iter().map(|(_, p)| ArcCurve::point(*p)).collect();
        curves.extend(ext.arcs.iter().map(|&i| self.curves[i]));
        diameter_of(&curves)
    }

    /// The body rotated rigidly.
    pub fn rotated(&self, rot: &Rotation3<f64>) -> Result<Body, BodyError> {
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .map(|(index, a)| a.rotated(rot).map_err(|source| BodyError::BadArc { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Body::new(arcs)
    }

    /// Intersection with the closed hemisphere about `pole`.
    pub fn clip(&self, pole: &SpherePoint) -> Result<Body, BodyError> {
        let q = pole.vec();
        let mut pieces: Vec<(usize, f64, f64)> = Vec::new();
        for (i, curve) in self.curves.iter().enumerate() {
            let mut cuts = vec![0.0];
            cuts.extend(curve.zeros_of_dot(&q));
            cuts.push(curve.sweep());
            for w in cuts.windows(2) {
                let (t0, t1) = (w[0], w[1]);
                if curve.dot_at(&q, 0.5 * (t0 + t1)) >= 0.0 && (t1 - t0) * curve.scale() > 1e-12 {
                    pieces.push((i, t0, t1));
                }
            }
        }
        if pieces.is_empty() {
            return Err(BodyError::EmptyClip);
        }
        if pieces.len() == self.arcs.len()
            && pieces
                .iter()
                .all(|&(i, t0, t1)| t0 == 0.0 && t1 == self.curves[i].sweep())
        {
            return Ok(self.clone());
        }
        let mut arcs = Vec::new();
        let m = pieces.len();
        for idx in 0..m {
            let (i, t0, t1) = pieces[idx];
            let arc = self.arcs[i]
                .sub_arc(t0, t1)
                .map_err(|source| BodyError::BadArc { index: i, source })?;
            arcs.push(arc);
            let (j, s0, _) = pieces[(idx + 1) % m];
            let end = self.curves[i].at(t1);
            let next = self.curves[j].at(s0);
            if distance(&end, &next) > TOL_GEOM {
                arcs.push(BoundaryArc::great(end, next).map_err(|source| BodyError::BadArc { index: i, source })?);
            } else if let Some(last) = arcs.last_mut() {
                // Snap the endpoint so consecutive arcs share it exactly.
                *last = snap_end(last, next).map_err(|source| BodyError::BadArc { index: i, source })?;
            }
        }
        Body::new(arcs)
    }
}

fn snap_end(arc: &BoundaryArc, to: SpherePoint) -> Result<BoundaryArc, ArcError> {
    match arc {
        BoundaryArc::Great(a) => BoundaryArc::great(a.from(), to),
        BoundaryArc::Circle(c) => Ok(BoundaryArc::Circle(CircleArc::new(c.center, c.radius, c.from, to)?)),
    }
}

fn diameter_of(curves: &[ArcCurve]) -> f64 {
    let pair = farthest_pair(curves, DIAMETER_SAMPLES);
    let p = curves[pair.first.0].at(pair.first.1);
    let q = curves[pair.second.0].at(pair.second.1);
    distance(&p, &q)
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn octant_triangle_is_valid_with_right_angles() {
        let b = octant();
        for j in 0..3 {
            assert!((b.turn(j) - FRAC_PI_2).abs() < 1e-12);
        }
        assert!((b.area() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn swapped_triangle_is_an_orientation_error() {
        let err = Body::polygon(&[p(0., 1., 0.), p(1., 0., 0.), p(0., 0., 1.)]).unwrap_err();
        assert!(matches!(err, BodyError::Orientation { .. }));
    }

    #[test]
    fn pushed_in_vertex_is_a_reflex_error_at_that_index() {
        let c = SpherePoint::north();
        let sq: Vec<SpherePoint> = (0..4)
            .map(|k| SpherePoint::from_spherical(0.5, FRAC_PI_2 * k as f64))
            .collect();
        // Vertex 2 moved past the chord from 1 to 3, which runs through c.
        let mut v = sq.clone();
        v[2] = c.towards(&sq[0], 0.1).unwrap();
        match Body::polygon(&v).unwrap_err() {
            BodyError::Reflex { index, .. } => assert_eq!(index, 2),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn single_arc_is_rejected() {
        let a = BoundaryArc::great(p(1., 0., 0.), p(0., 1., 0.)).unwrap();
        assert_eq!(Body::new(vec![a]).unwrap_err(), BodyError::TooFewArcs(1));
    }

    #[test]
    fn open_chain_is_not_closed() {
        let a = BoundaryArc::great(p(1., 0., 0.), p(0., 1., 0.)).unwrap();
        let b = BoundaryArc::great(p(0., 1., 0.), p(0., 0., 1.)).unwrap();
        let c = BoundaryArc::great(p(0., 0., 1.), p(1., 0.1, 0.)).unwrap();
        assert!(matches!(
            Body::new(vec![a, b, c]).unwrap_err(),
            BodyError::NotClosed { index: 2, .. }
        ));
    }

    #[test]
    fn containment_examples() {
        let b = octant();
        assert!(b.contains(&p(1., 1., 1.)));
        assert!(!b.contains(&p(-1., 0., 0.)));
        let d = disk(SpherePoint::north(), 0.5);
        assert!(d.contains(&SpherePoint::from_spherical(0.5, 1.0)));
        assert!(!d.contains(&SpherePoint::from_spherical(0.5 + 1e-6, 1.0)));
    }

    #[test]
    fn polygon_extreme_set_is_its_vertices() {
        let ext = octant().extreme_points();
        assert_eq!(ext.vertices.len(), 3);
        assert!(ext.arcs.is_empty());
        let ext = disk(SpherePoint::north(), 0.4).extreme_points();
        assert_eq!(ext.arcs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn boundary_sample_forces_junctions_and_bounds_gaps() {
        let b = octant();
        let s = b.boundary_sample(3).unwrap();
        assert_eq!(s, b.junctions());
        assert!(b.boundary_sample(2).is_err());

        let d = disk(SpherePoint::north(), 0.5);
        let s = d.boundary_sample(360).unwrap();
        assert_eq!(s.len(), 360);
        for q in &s {
            assert!((distance(q, &SpherePoint::north()) - 0.5).abs() < 1e-12);
        }
        let bound = 2.0 * d.perimeter() / 360.0;
        for w in 0..360 {
            assert!(distance(&s[w], &s[(w + 1) % 360]) <= bound);
        }
    }

    #[test]
    fn diameter_examples() {
        assert!((octant().diameter() - FRAC_PI_2).abs() < 1e-12);
        let d = disk(SpherePoint::from_spherical(0.3, 0.2), 0.6);
        assert!((d.diameter() - 1.2).abs() < 1e-12);
        assert!((d.extreme_diameter() - 1.2).abs() < 1e-12);
    }

    #[test]
    fn clip_cuts_a_corner() {
        let b = octant();
        let n = SpherePoint::from_vec(Vec3::new(-0.1, 1.0, 1.0)).unwrap();
        let z = b.clip(&n).unwrap();
        assert_eq!(z.arcs().len(), 4);
        assert!(!z.contains(&p(1., 0., 0.)));
        assert!(z.area() < b.area());
        assert_eq!(b.clip(&p(1., 1., 1.)).unwrap(), b);
    }

    #[test]
    fn rotation_preserves_metrics() {
        let b = octant();
        let rot = Rotation3::from_euler_angles(0.3, -0.2, 1.1);
        let r = b.rotated(&rot).unwrap();
        assert!((r.area() - b.area()).abs() < 1e-12);
        assert!((r.diameter() - b.diameter()).abs() < 1e-12);
    }
}
