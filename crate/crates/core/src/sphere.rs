//! Points, great arcs, hemispheres and lunes on the unit 2-sphere.
//!
//! Every point is a unit vector of `R^3`. Distances are angles in `[0, pi]`
//! and are evaluated as `atan2(|p x q|, p . q)`, which keeps full relative
//! precision near `0` and near `pi` where `acos` of the inner product does not.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use nalgebra::{Rotation3, Unit, Vector3};
use thiserror::Error;

/// Plain 3-vector, not necessarily of unit length.
pub type Vec3 = Vector3<f64>;

/// Accepted deviation of a stored point from unit norm.
pub const TOL_UNIT: f64 = 1e-9;
/// Tolerance for incidence tests (hemisphere membership, support, closure).
pub const TOL_GEOM: f64 = 1e-9;
/// Inputs whose norm is within this distance of 1 are renormalized silently.
pub const RENORMALIZE_LIMIT: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("vector norm {norm} is not within {RENORMALIZE_LIMIT} of 1")]
    NotUnit { norm: f64 },
    #[error("vector has a non-finite coordinate")]
    NonFinite,
    #[error("arc endpoints coincide or are antipodal")]
    DegenerateArc,
    #[error("lune poles coincide or are antipodal")]
    DegenerateLune,
    #[error("right-triangle leg {0} is outside (0, pi/2]")]
    LegOutOfRange(f64),
}

/// A point of the unit sphere.
#[derive(Clone, Copy, PartialEq)]
pub struct SpherePoint(Vec3);

impl SpherePoint {
    /// Builds a point from coordinates whose norm is within
    /// [`RENORMALIZE_LIMIT`] of 1. Such inputs are renormalized; points
    /// already at unit norm (to a few ulps) are stored bit-for-bit.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, GeomError> {
        Self::from_unitish(Vec3::new(x, y, z))
    }

    pub fn from_unitish(v: Vec3) -> Result<Self, GeomError> {
        if !v.iter().all(|c| c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let norm = v.norm();
        if (norm - 1.0).abs() > RENORMALIZE_LIMIT {
            return Err(GeomError::NotUnit { norm });
        }
        if (norm - 1.0).abs() <= 4.0 * f64::EPSILON {
            Ok(SpherePoint(v))
        } else {
            Ok(SpherePoint(v / norm))
        }
    }

    /// Projects any non-zero finite vector onto the sphere.
    pub fn from_vec(v: Vec3) -> Option<Self> {
        let norm = v.norm();
        if norm.is_finite() && norm > 1e-300 {
            Some(SpherePoint(v / norm))
        } else {
            None
        }
    }

    /// Point with colatitude `theta` (from `+z`) and azimuth `phi`.
    pub fn from_spherical(theta: f64, phi: f64) -> Self {
        SpherePoint(Vec3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()))
    }

    pub fn north() -> Self {
        SpherePoint(Vec3::z())
    }

    #[inline]
    pub fn vec(&self) -> Vec3 {
        self.0
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    #[inline]
    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.0.dot(&other.0)
    }

    #[inline]
    pub fn cross(&self, other: &SpherePoint) -> Vec3 {
        self.0.cross(&other.0)
    }

    pub fn antipode(&self) -> Self {
        SpherePoint(-self.0)
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        distance(self, other)
    }

    /// The point reached from `self` after travelling `dist` along the great
    /// circle towards `toward`. Fails when the direction is undefined.
    pub fn towards(&self, toward: &SpherePoint, dist: f64) -> Result<SpherePoint, GeomError> {
        let tangent = toward.0 - self.0 * self.dot(toward);
        let n = tangent.norm();
        if n <= 1e-15 {
            return Err(GeomError::DegenerateArc);
        }
        Ok(SpherePoint::from_vec(self.0 * dist.cos() + tangent * (dist.sin() / n)).expect("unit combination"))
    }

    /// Right-handed rotation by `angle` about the axis through `axis`.
    pub fn rotated_about(&self, axis: &SpherePoint, angle: f64) -> SpherePoint {
        let rot = Rotation3::from_axis_angle(&Unit::new_unchecked(axis.0), angle);
        SpherePoint(rot * self.0)
    }

    pub fn rotated(&self, rot: &Rotation3<f64>) -> SpherePoint {
        SpherePoint(rot * self.0)
    }

    /// A fixed orthonormal tangent frame `(u, w)` at this point with
    /// `w = self x u`, so rotating from `u` to `w` is positive about `self`.
    pub fn tangent_frame(&self) -> (Vec3, Vec3) {
        let p = self.0;
        let helper = if p.x.abs() < 0.6 {
            Vec3::x()
        } else if p.y.abs() < 0.6 {
            Vec3::y()
        } else {
            Vec3::z()
        };
        let u = (helper - p * p.dot(&helper)).normalize();
        let w = p.cross(&u);
        (u, w)
    }
}

impl fmt::Debug for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.12}, {:.12}, {:.12})", self.0.x, self.0.y, self.0.z)
    }
}

/// Spherical distance, an angle in `[0, pi]`.
#[inline]
pub fn distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    p.cross(q).norm().atan2(p.dot(q))
}

/// Orientation determinant `det(a, b, c) = a . (b x c)`.
#[inline]
pub fn orientation(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> f64 {
    a.vec().dot(&b.cross(c))
}

/// Shorter great-circle segment between two points that are neither equal
/// nor antipodal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreatArc {
    from: SpherePoint,
    to: SpherePoint,
}

impl GreatArc {
    pub fn new(from: SpherePoint, to: SpherePoint) -> Result<Self, GeomError> {
        let sin = from.cross(&to).norm();
        if sin <= TOL_GEOM {
            return Err(GeomError::DegenerateArc);
        }
        Ok(GreatArc { from, to })
    }

    pub fn from(&self) -> SpherePoint {
        self.from
    }

    pub fn to(&self) -> SpherePoint {
        self.to
    }

    pub fn length(&self) -> f64 {
        distance(&self.from, &self.to)
    }

    /// Pole of the great circle carrying the arc, on its left side.
    pub fn pole(&self) -> SpherePoint {
        SpherePoint::from_vec(self.from.cross(&self.to)).expect("non-degenerate arc")
    }

    /// Point at fraction `s` in `[0, 1]` of the arc length.
    pub fn point_at(&self, s: f64) -> SpherePoint {
        self.from
            .towards(&self.to, s * self.length())
            .expect("non-degenerate arc")
    }

    pub fn midpoint(&self) -> SpherePoint {
        SpherePoint::from_vec(self.from.vec() + self.to.vec()).expect("non-antipodal arc")
    }
}

/// Closed hemisphere `H(m)` of all points within `pi/2` of its pole `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hemisphere {
    pole: SpherePoint,
}

impl Hemisphere {
    pub fn new(pole: SpherePoint) -> Self {
        Hemisphere { pole }
    }

    pub fn pole(&self) -> SpherePoint {
        self.pole
    }

    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.pole.dot(p) >= -TOL_GEOM
    }

    /// `true` when `p` lies on the bounding great circle.
    pub fn on_boundary(&self, p: &SpherePoint) -> bool {
        self.pole.dot(p).abs() <= TOL_GEOM
    }

    pub fn opposite(&self) -> Hemisphere {
        Hemisphere::new(self.pole.antipode())
    }

    /// Whether two hemispheres have poles within `tol` of each other.
    pub fn approx_eq(&self, other: &Hemisphere, tol: f64) -> bool {
        distance(&self.pole, &other.pole) <= tol
    }
}

/// Intersection `G ∩ H` of two hemispheres that are neither equal nor
/// opposite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lune {
    g: Hemisphere,
    h: Hemisphere,
}

impl Lune {
    pub fn new(g: Hemisphere, h: Hemisphere) -> Result<Self, GeomError> {
        if g.pole().dot(&h.pole()).abs() >= 1.0 - TOL_GEOM {
            return Err(GeomError::DegenerateLune);
        }
        Ok(Lune { g, h })
    }

    pub fn g(&self) -> Hemisphere {
        self.g
    }

    pub fn h(&self) -> Hemisphere {
        self.h
    }

    /// The two corners, where the bounding semicircles meet.
    pub fn corners(&self) -> (SpherePoint, SpherePoint) {
        let c = SpherePoint::from_vec(self.g.pole().cross(&self.h.pole())).expect("non-degenerate lune");
        (c, c.antipode())
    }

    /// Centers of the semicircles `G/H` and `H/G`.
    pub fn semicircle_centers(&self) -> (SpherePoint, SpherePoint) {
        let g = self.g.pole();
        let h = self.h.pole();
        let gh = g.dot(&h);
        let on_g = SpherePoint::from_vec(h.vec() - g.vec() * gh).expect("non-degenerate lune");
        let on_h = SpherePoint::from_vec(g.vec() - h.vec() * gh).expect("non-degenerate lune");
        (on_g, on_h)
    }

    /// Distance between the two semicircle centers.
    pub fn thickness(&self) -> f64 {
        let (a, b) = self.semicircle_centers();
        distance(&a, &b)
    }

    pub fn contains(&self, p: &SpherePoint) -> bool {
        self.g.contains(p) && self.h.contains(p)
    }

    /// Point of the semicircle `G/H` at angle `t` in `[0, pi]` from the
    /// first corner.
    pub fn point_on_g_side(&self, t: f64) -> SpherePoint {
        let (corner, _) = self.corners();
        let (center, _) = self.semicircle_centers();
        SpherePoint::from_vec(corner.vec() * t.cos() + center.vec() * t.sin()).expect("unit combination")
    }
}

/// Thickness of a lune from its two-center definition.
pub fn lune_thickness(lune: &Lune) -> f64 {
    lune.thickness()
}

pub fn lune_semicircle_centers(lune: &Lune) -> (SpherePoint, SpherePoint) {
    lune.semicircle_centers()
}

/// Hypotenuse of a right spherical triangle with legs `l1`, `l2` in
/// `(0, pi/2]`: `cos k = cos l1 cos l2`.
pub fn right_triangle_hypotenuse(l1: f64, l2: f64) -> Result<f64, GeomError> {
    for leg in [l1, l2] {
        if !(leg > 0.0 && leg <= FRAC_PI_2 + 1e-15) {
            return Err(GeomError::LegOutOfRange(leg));
        }
    }
    Ok((l1.cos() * l2.cos()).clamp(-1.0, 1.0).acos())
}

/// Upper bound `acos(cos^2 x)` on the diameter of reduced bodies of
/// thickness `x < pi/2`.
pub fn diameter_bound(thickness: f64) -> f64 {
    (thickness.cos().powi(2)).clamp(-1.0, 1.0).acos()
}

/// Reduces an angle to `[0, 2 pi)`.
#[inline]
pub(crate) fn wrap_angle(t: f64) -> f64 {
    let r = t.rem_euclid(2.0 * PI);
    if r >= 2.0 * PI {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn p(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::from_vec(Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert!((distance(&p(1., 0., 0.), &p(0., 1., 0.)) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(distance(&p(1., 0., 0.), &p(1., 0., 0.)), 0.0);
        assert!((distance(&p(1., 0., 0.), &p(-1., 0., 0.)) - PI).abs() < 1e-15);
    }

    #[test]
    fn constructor_renormalizes_within_limit() {
        let q = SpherePoint::new(1.0 + 5e-7, 0.0, 0.0).unwrap();
        assert_eq!(q.coords(), [1.0, 0.0, 0.0]);
        assert!(matches!(
            SpherePoint::new(0.5, 0.0, 0.0),
            Err(GeomError::NotUnit { .. })
        ));
        assert_eq!(SpherePoint::new(f64::NAN, 0., 1.), Err(GeomError::NonFinite));
        let exact = SpherePoint::new(0.6, 0.8, 0.0).unwrap();
        assert_eq!(exact.coords(), [0.6, 0.8, 0.0]);
    }

    #[test]
    fn lune_thickness_from_two_centers_matches_pole_distance() {
        // Poles a quarter turn apart.
        let l = Lune::new(Hemisphere::new(p(0., 0., 1.)), Hemisphere::new(p(1., 0., 0.))).unwrap();
        assert!((l.thickness() - FRAC_PI_2).abs() < 1e-12);
        assert!((PI - distance(&l.g().pole(), &l.h().pole()) - FRAC_PI_2).abs() < 1e-12);

        // Poles at distance pi - eps.
        let eps = 1e-3;
        let l = Lune::new(
            Hemisphere::new(SpherePoint::north()),
            Hemisphere::new(SpherePoint::from_spherical(PI - eps, 0.3)),
        )
        .unwrap();
        assert!((l.thickness() - eps).abs() < 1e-12);

        // H(north) and H((sin pi/3, 0, cos pi/3)).
        let l = Lune::new(
            Hemisphere::new(SpherePoint::north()),
            Hemisphere::new(p((PI / 3.0).sin(), 0.0, (PI / 3.0).cos())),
        )
        .unwrap();
        assert!((l.thickness() - 2.0 * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn semicircle_centers_for_orthogonal_poles() {
        let l = Lune::new(Hemisphere::new(p(0., 0., 1.)), Hemisphere::new(p(1., 0., 0.))).unwrap();
        let (a, b) = l.semicircle_centers();
        assert!(distance(&a, &p(1., 0., 0.)) < 1e-15);
        assert!(distance(&b, &p(0., 0., 1.)) < 1e-15);
    }

    #[test]
    fn semicircle_centers_quarter_turn_apart_poles() {
        // Poles at distance pi/4: centers at 3 pi / 4, checked against both routes.
        let l = Lune::new(
            Hemisphere::new(SpherePoint::north()),
            Hemisphere::new(SpherePoint::from_spherical(FRAC_PI_4, 1.0)),
        )
        .unwrap();
        let (a, b) = l.semicircle_centers();
        assert!((distance(&a, &b) - 3.0 * FRAC_PI_4).abs() < 1e-12);
        assert!((PI - FRAC_PI_4 - l.thickness()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_lunes_are_rejected() {
        let n = Hemisphere::new(SpherePoint::north());
        assert_eq!(Lune::new(n, n), Err(GeomError::DegenerateLune));
        assert_eq!(Lune::new(n, n.opposite()), Err(GeomError::DegenerateLune));
    }

    #[test]
    fn right_triangle_examples() {
        // Oracle: an explicit right triangle measured with `distance`.
        let l = FRAC_PI_4;
        let corner = SpherePoint::north();
        let a = corner.towards(&p(1., 0., 0.), l).unwrap();
        let b = corner.towards(&p(0., 1., 0.), l).unwrap();
        let measured = distance(&a, &b);
        let k = right_triangle_hypotenuse(l, l).unwrap();
        assert!((k - measured).abs() < 1e-12);
        assert!((k - PI / 3.0).abs() < 1e-12);

        assert!((right_triangle_hypotenuse(FRAC_PI_2, 0.3).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((right_triangle_hypotenuse(1e-9, 0.7).unwrap() - 0.7).abs() < 1e-12);
        assert!(right_triangle_hypotenuse(0.0, 0.7).is_err());
        assert!(right_triangle_hypotenuse(0.3, 1.7).is_err());
    }

    #[test]
    fn great_arc_pole_and_degeneracy() {
        let arc = GreatArc::new(p(1., 0., 0.), p(0., 1., 0.)).unwrap();
        assert!(distance(&arc.pole(), &p(0., 0., 1.)) < 1e-15);
        assert!((arc.length() - FRAC_PI_2).abs() < 1e-15);
        assert!(distance(&arc.point_at(0.5), &p(1., 1., 0.)) < 1e-15);
        assert_eq!(
            GreatArc::new(p(1., 0., 0.), p(-1., 0., 0.)),
            Err(GeomError::DegenerateArc)
        );
    }

    #[test]
    fn tangent_frame_is_right_handed() {
        for q in [p(0., 0., 1.), p(1., 0., 0.), p(0.3, -0.5, 0.8)] {
            let (u, w) = q.tangent_frame();
            assert!(u.dot(&q.vec()).abs() < 1e-15);
            assert!((u.cross(&w) - q.vec()).norm() < 1e-15);
        }
    }
}
