//! Uniform parameterization shared by boundary arcs and pole families.
//!
//! Great arcs, small-circle arcs and single points are all curves of the form
//! `p(t) = base + cos(t) u + sin(t) w` for `t` in `[0, sweep]`, with `u`, `w`
//! orthogonal, of equal length and orthogonal to `base`. Linear functionals
//! `q . p(t)` are then `a + alpha cos t + beta sin t`, whose extrema over the
//! parameter interval have a closed form.

use std::f64::consts::PI;

use crate::sphere::{wrap_angle, SpherePoint, Vec3};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcCurve {
    base: Vec3,
    u: Vec3,
    w: Vec3,
    sweep: f64,
}

/// A parameter value together with the value of a functional there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremum {
    pub t: f64,
    pub value: f64,
}

impl ArcCurve {
    pub fn point(p: SpherePoint) -> Self {
        ArcCurve {
            base: Vec3::zeros(),
            u: p.vec(),
            w: Vec3::zeros(),
            sweep: 0.0,
        }
    }

    /// Great-circle arc leaving `start` in the unit tangent direction
    /// `direction` and covering `sweep` radians.
    pub fn great(start: SpherePoint, direction: Vec3, sweep: f64) -> Self {
        ArcCurve {
            base: Vec3::zeros(),
            u: start.vec(),
            w: direction,
            sweep,
        }
    }

    /// Arc of the circle about `center` through `start`, rotating positively
    /// about `center` by `sweep`.
    pub fn circle(center: SpherePoint, start: SpherePoint, sweep: f64) -> Self {
        let c = center.vec();
        let along = c.dot(&start.vec());
        let u = start.vec() - c * along;
        ArcCurve {
            base: c * along,
            u,
            w: c.cross(&u),
            sweep,
        }
    }

    pub(crate) fn from_parts(base: Vec3, u: Vec3, w: Vec3, sweep: f64) -> Self {
        ArcCurve { base, u, w, sweep }
    }

    pub fn sweep(&self) -> f64 {
        self.sweep
    }

    pub fn is_point(&self) -> bool {
        self.sweep == 0.0
    }

    /// Radius of the carrying circle measured in the ambient space
    /// (`1` for great arcs, `sin rho` for small circles).
    pub fn scale(&self) -> f64 {
        self.u.norm()
    }

    /// Spherical length of the curve.
    pub fn length(&self) -> f64 {
        self.sweep * self.scale()
    }

    pub fn base(&self) -> Vec3 {
        self.base
    }

    pub fn u(&self) -> Vec3 {
        self.u
    }

    pub fn w(&self) -> Vec3 {
        self.w
    }

    pub fn at_vec(&self, t: f64) -> Vec3 {
        self.base + self.u * t.cos() + self.w * t.sin()
    }

    pub fn at(&self, t: f64) -> SpherePoint {
        SpherePoint::from_vec(self.at_vec(t)).expect("curve points are unit vectors")
    }

    pub fn start(&self) -> SpherePoint {
        self.at(0.0)
    }

    pub fn end(&self) -> SpherePoint {
        self.at(self.sweep)
    }

    /// Unit tangent in the direction of increasing parameter. Undefined for
    /// single points.
    pub fn tangent(&self, t: f64) -> Vec3 {
        let d = self.w * t.cos() - self.u * t.sin();
        d / d.norm()
    }

    fn coefficients(&self, q: &Vec3) -> (f64, f64, f64) {
        (q.dot(&self.base), q.dot(&self.u), q.dot(&self.w))
    }

    pub fn dot_at(&self, q: &Vec3, t: f64) -> f64 {
        let (a, al, be) = self.coefficients(q);
        a + al * t.cos() + be * t.sin()
    }

    /// Minimum of `q . p(t)` over the curve; the farthest point from `q`.
    pub fn min_dot(&self, q: &Vec3) -> Extremum {
        self.extremum(q, true)
    }

    /// Maximum of `q . p(t)` over the curve; the nearest point to `q`.
    pub fn max_dot(&self, q: &Vec3) -> Extremum {
        self.extremum(q, false)
    }

    fn extremum(&self, q: &Vec3, minimize: bool) -> Extremum {
        let (a, al, be) = self.coefficients(q);
        let sign = if minimize { 1.0 } else { -1.0 };
        let at_start = a + al;
        if self.sweep == 0.0 {
            return Extremum {
                t: 0.0,
                value: at_start,
            };
        }
        let at_end = a + al * self.sweep.cos() + be * self.sweep.sin();
        let mut best = if sign * at_end < sign * at_start {
            Extremum {
                t: self.sweep,
                value: at_end,
            }
        } else {
            Extremum {
                t: 0.0,
                value: at_start,
            }
        };
        let r = al.hypot(be);
        if r > 0.0 {
            let t_star = if minimize {
                wrap_angle((-be).atan2(-al))
            } else {
                wrap_angle(be.atan2(al))
            };
            if t_star <= self.sweep {
                let value = a - sign * r;
                if sign * value < sign * best.value {
                    best = Extremum { t: t_star, value };
                }
            }
        }
        best
    }

    /// Parameters in `[0, sweep]` where `q . p(t) = 0`.
    pub fn zeros_of_dot(&self, q: &Vec3) -> Vec<f64> {
        let (a, al, be) = self.coefficients(q);
        let r = al.hypot(be);
        if self.sweep == 0.0 || r <= 1e-300 {
            return Vec::new();
        }
        let ratio = -a / r;
        if ratio.abs() > 1.0 {
            return Vec::new();
        }
        let phase = be.atan2(al);
        let spread = ratio.acos();
        let mut roots: Vec<f64> = [phase + spread, phase - spread]
            .into_iter()
            .map(wrap_angle)
            .filter(|t| *t <= self.sweep)
            .collect();
        roots.sort_by(f64::total_cmp);
        roots.dedup_by(|x, y| (*x - *y).abs() < 1e-15);
        roots
    }

    /// Sub-curve covering `[t0, t1]`.
    pub fn sub(&self, t0: f64, t1: f64) -> ArcCurve {
        let (s, c) = t0.sin_cos();
        ArcCurve {
            base: self.base,
            u: self.u * c + self.w * s,
            w: self.w * c - self.u * s,
            sweep: (t1 - t0).max(0.0),
        }
    }

    /// `n` parameters spread evenly over `[0, sweep]`, both ends included.
    pub fn even_params(&self, n: usize) -> Vec<f64> {
        if self.sweep == 0.0 || n <= 1 {
            return vec![0.0];
        }
        (0..n).map(|i| self.sweep * i as f64 / (n - 1) as f64).collect()
    }
}

/// Positive rotation angle in `[0, 2 pi)` about `axis` from `from` to `to`,
/// both taken orthogonal to `axis`.
pub(crate) fn rotation_angle(axis: &Vec3, from: &Vec3, to: &Vec3) -> f64 {
    let s = axis.dot(&from.cross(to));
    let c = from.dot(to);
    let t = wrap_angle(s.atan2(c));
    if t > 2.0 * PI - 1e-15 {
        0.0
    } else {
        t
    }
}
