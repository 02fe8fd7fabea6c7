//! One-dimensional search routines and the farthest-pair sweep over a set of
//! curves, which backs both the diameter of a body and its thickness.

use thiserror::Error;

use crate::curve::ArcCurve;

const INV_PHI: f64 = 0.618_033_988_749_894_8;
const MAX_GOLDEN_ITERS: usize = 200;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("root is not bracketed: f({a}) = {fa}, f({b}) = {fb}")]
    NotBracketed { a: f64, b: f64, fa: f64, fb: f64 },
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
///
/// Stops when the bracket is narrower than `tol`. Returns the best point
/// evaluated, endpoints included.
pub fn golden_section_min<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut best = (lo, f(lo));
    let fhi = f(hi);
    if fhi < best.1 {
        best = (hi, fhi);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..MAX_GOLDEN_ITERS {
        if hi - lo <= tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Bisection for a sign change of `f` on `[a, b]`, to bracket width `tol`.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Result<f64, RootError> {
    let (mut lo, mut hi) = (a, b);
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(RootError::NotBracketed { a, b, fa: flo, fb: fhi });
    }
    while (hi - lo).abs() > tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Two locations on a curve set and the inner product of the points there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePair {
    pub first: (usize, f64),
    pub second: (usize, f64),
    pub dot: f64,
}

/// Minimum over all curves of `q . p`; the farthest curve point from `q`.
pub fn farthest_on(curves: &[ArcCurve], q: &crate::sphere::Vec3) -> (usize, f64, f64) {
    let mut best = (0, 0.0, f64::INFINITY);
    for (j, c) in curves.iter().enumerate() {
        let e = c.min_dot(q);
        if e.value < best.2 {
            best = (j, e.t, e.value);
        }
    }
    best
}

/// Number of refinement starts taken from the coarse sweep.
const REFINE_STARTS: usize = 16;
const PARAM_TOL: f64 = 1e-12;

/// Pair of points on `curves` at maximal spherical distance.
///
/// A coarse sweep of roughly `samples` points (allocated by length, curve
/// ends always included) evaluates the exact farthest partner of each sample.
/// The most promising local optima are refined by golden-section search in
/// the sample's parameter and then polished by alternating exact partner
/// updates.
pub fn farthest_pair(curves: &[ArcCurve], samples: usize) -> CurvePair {
    assert!(!curves.is_empty(), "farthest_pair needs at least one curve");
    let total: f64 = curves.iter().map(|c| c.length()).sum();
    let eval = |i: usize, s: f64| -> (usize, f64, f64) {
        let q = curves[i].at_vec(s);
        farthest_on(curves, &q)
    };

    struct Start {
        curve: usize,
        lo: f64,
        hi: f64,
        s: f64,
        value: f64,
    }
    let mut starts: Vec<Start> = Vec::new();
    for (i, c) in curves.iter().enumerate() {
        let n = if c.is_point() {
            1
        } else if total > 0.0 {
            ((samples as f64 * c.length() / total).ceil() as usize).max(4) + 1
        } else {
            5
        };
        let params = c.even_params(n);
        let values: Vec<f64> = params.iter().map(|s| eval(i, *s).2).collect();
        for k in 0..params.len() {
            let left = if k > 0 { values[k - 1] } else { f64::INFINITY };
            let right = values.get(k + 1).copied().unwrap_or(f64::INFINITY);
            if values[k] <= left && values[k] <= right {
                starts.push(Start {
                    curve: i,
                    lo: params[k.saturating_sub(1)],
                    hi: params[(k + 1).min(params.len() - 1)],
                    s: params[k],
                    value: values[k],
                });
            }
        }
    }
    starts.sort_by(|a, b| a.value.total_cmp(&b.value));

    let mut best: Option<CurvePair> = None;
    for st in starts.iter().take(REFINE_STARTS) {
        let (s, _) = if st.hi > st.lo {
            golden_section_min(|s| eval(st.curve, s).2, st.lo, st.hi, PARAM_TOL)
        } else {
            (st.s, st.value)
        };
        let s = if eval(st.curve, s).2 <= st.value { s } else { st.s };
        let pair = polish(curves, st.curve, s);
        if best.is_none_or(|b| pair.dot < b.dot) {
            best = Some(pair);
        }
    }
    best.expect("at least one start")
}

/// Alternating exact updates: best partner for the current point, then best
/// point on the original curve for that partner, while the value improves.
fn polish(curves: &[ArcCurve], curve: usize, s: f64) -> CurvePair {
    let mut s = s;
    let (mut j, mut t, mut value) = farthest_on(curves, &curves[curve].at_vec(s));
    for _ in 0..64 {
        let partner = curves[j].at_vec(t);
        let s_new = curves[curve].min_dot(&partner).t;
        let (j_new, t_new, v_new) = farthest_on(curves, &curves[curve].at_vec(s_new));
        if v_new < value - 1e-18 {
            s = s_new;
            j = j_new;
            t = t_new;
            value = v_new;
        } else {
            break;
        }
    }
    CurvePair {
        first: (curve, s),
        second: (j, t),
        dot: value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{distance, SpherePoint};

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden_section_min(|x| (x - 0.3).powi(2) + 1.0, -1.0, 2.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 1.0).abs() < 1e-14);
    }

    #[test]
    fn golden_handles_kinks_and_endpoints() {
        let (x, _) = golden_section_min(|x| (x - 0.7).abs(), 0.0, 1.0, 1e-12);
        assert!((x - 0.7).abs() < 1e-11);
        let (x, _) = golden_section_min(|x| x, 0.0, 1.0, 1e-12);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn bisect_finds_root_or_reports_bracket() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
        assert!(matches!(
            bisect(|x| x * x + 1.0, 0.0, 2.0, 1e-14),
            Err(RootError::NotBracketed { .. })
        ));
    }

    #[test]
    fn farthest_pair_on_a_circle_is_a_diameter() {
        let c = SpherePoint::north();
        let start = SpherePoint::from_spherical(0.6, 0.0);
        let curves: Vec<ArcCurve> = (0..4)
            .map(|k| {
                let s = start.rotated_about(&c, k as f64 * std::f64::consts::FRAC_PI_2);
                ArcCurve::circle(c, s, std::f64::consts::FRAC_PI_2)
            })
            .collect();
        let pair = farthest_pair(&curves, 200);
        let p = curves[pair.first.0].at(pair.first.1);
        let q = curves[pair.second.0].at(pair.second.1);
        assert!((distance(&p, &q) - 1.2).abs() < 1e-12);
    }
}
