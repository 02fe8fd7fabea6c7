//! Random instance generators. Every generator maps a point of the unit cube
//! `[0, 1]^PARAMS` (plus a seeded stream for point clouds) to a validated
//! body, so failing instances can be shrunk by moving in parameter space.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use nalgebra::{Quaternion, Rotation3, UnitQuaternion};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::body::Body;
use crate::gallery::{
    make_disk, make_example_body, make_quarter_disk, make_regular_odd_gon, regular_polygon_vertices, GalleryBody,
};
use crate::sphere::{SpherePoint, Vec3};

/// Length of the parameter vector handed to every generator.
pub const PARAMS: usize = 10;
/// Cap radius for random polygons.
pub const POLYGON_CAP: f64 = 0.6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    RandomPolygon,
    GalleryDisk,
    /// Disks of radius below `pi/4`.
    GalleryDiskNarrow,
    /// Disks of radius at least `pi/4`.
    GalleryDiskWide,
    GalleryQuarterDisk,
    /// Regular odd-gons of thickness below `pi/2`.
    GalleryOddGon,
    /// Regular odd-gons of thickness exactly `pi/2`.
    GalleryOddGonQuarterTurn,
    /// Example bodies of width below `pi/2`.
    GalleryExampleNarrow,
    /// Example bodies of width at least `pi/2`.
    GalleryExampleWide,
    IsoscelesLongArm,
    EvenGon,
    RegularTriangle,
    RandomLune,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::RandomPolygon,
        Family::GalleryDisk,
        Family::GalleryDiskNarrow,
        Family::GalleryDiskWide,
        Family::GalleryQuarterDisk,
        Family::GalleryOddGon,
        Family::GalleryOddGonQuarterTurn,
        Family::GalleryExampleNarrow,
        Family::GalleryExampleWide,
        Family::IsoscelesLongArm,
        Family::EvenGon,
        Family::RegularTriangle,
        Family::RandomLune,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::RandomPolygon => "random_polygon",
            Family::GalleryDisk => "gallery_disk",
            Family::GalleryDiskNarrow => "gallery_disk_narrow",
            Family::GalleryDiskWide => "gallery_disk_wide",
            Family::GalleryQuarterDisk => "gallery_quarter_disk",
            Family::GalleryOddGon => "gallery_odd_gon",
            Family::GalleryOddGonQuarterTurn => "gallery_odd_gon_quarter_turn",
            Family::GalleryExampleNarrow => "gallery_example_narrow",
            Family::GalleryExampleWide => "gallery_example_wide",
            Family::IsoscelesLongArm => "isosceles_long_arm",
            Family::EvenGon => "even_gon",
            Family::RegularTriangle => "regular_triangle",
            Family::RandomLune => "random_lune",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generated body together with a human-readable descriptor.
#[derive(Clone, Debug)]
pub struct Instance {
    pub body: Body,
    pub descriptor: String,
    pub gallery: Option<GalleryBody>,
}

fn lerp(lo: f64, hi: f64, u: f64) -> f64 {
    lo + (hi - lo) * u.clamp(0.0, 1.0)
}

fn pick<T: Copy>(options: &[T], u: f64) -> T {
    let i = ((u.clamp(0.0, 1.0) * options.len() as f64) as usize).min(options.len() - 1);
    options[i]
}

/// Uniform rotation from three unit-interval parameters.
pub fn rotation_from(u: [f64; 3]) -> Rotation3<f64> {
    let (a, b) = ((1.0 - u[0]).sqrt(), u[0].sqrt());
    let (t1, t2) = (2.0 * PI * u[1], 2.0 * PI * u[2]);
    let q = Quaternion::new(b * t2.cos(), a * t1.sin(), a * t1.cos(), b * t2.sin());
    UnitQuaternion::from_quaternion(q).to_rotation_matrix()
}

/// Uniform point of the sphere from two parameters.
pub fn point_from(u: f64, v: f64) -> SpherePoint {
    let z = lerp(-1.0, 1.0, u);
    SpherePoint::from_spherical(z.clamp(-1.0, 1.0).acos(), 2.0 * PI * v)
}

fn placed(g: GalleryBody, p: &[f64], descriptor: String) -> Result<Instance, String> {
    let rot = rotation_from([p[5], p[6], p[7]]);
    let body = g.body.rotated(&rot).map_err(|e| e.to_string())?;
    Ok(Instance {
        body,
        descriptor,
        gallery: Some(g),
    })
}

/// Builds the instance of `family` at parameters `p`.
pub fn generate(family: Family, p: &[f64; PARAMS], rng: &mut ChaCha8Rng) -> Result<Instance, String> {
    match family {
        Family::RandomPolygon => random_polygon(p, rng),
        Family::GalleryDisk | Family::GalleryDiskNarrow | Family::GalleryDiskWide => {
            let (lo, hi) = match family {
                Family::GalleryDisk => (0.05, 1.5),
                Family::GalleryDiskNarrow => (0.05, PI / 4.0 - 0.01),
                _ => (PI / 4.0, 1.5),
            };
            let rho = lerp(lo, hi, p[0]);
            let g = make_disk(SpherePoint::north(), rho).map_err(|e| e.to_string())?;
            placed(g, p, format!("disk rho={rho:.17}"))
        }
        Family::GalleryQuarterDisk => {
            let rho = lerp(0.2, 1.4, p[0]);
            let orientation = lerp(0.0, 2.0 * PI, p[1]);
            let g = make_quarter_disk(SpherePoint::north(), rho, orientation).map_err(|e| e.to_string())?;
            placed(g, p, format!("quarter_disk rho={rho:.17}"))
        }
        Family::GalleryOddGon | Family::RegularTriangle => {
            let n = if family == Family::RegularTriangle {
                3
            } else {
                pick(&[3, 5, 7, 9], p[1])
            };
            let delta = lerp(0.1, FRAC_PI_2 - 0.02, p[0]);
            let g = make_regular_odd_gon(n, delta).map_err(|e| e.to_string())?;
            placed(g, p, format!("odd_gon n={n} thickness={delta:.17}"))
        }
        Family::GalleryOddGonQuarterTurn => {
            let n = pick(&[3, 5, 7, 9], p[1]);
            let g = make_regular_odd_gon(n, FRAC_PI_2).map_err(|e| e.to_string())?;
            placed(g, p, format!("odd_gon n={n} thickness=pi/2"))
        }
        Family::GalleryExampleNarrow | Family::GalleryExampleWide => {
            let kappa = lerp(0.05, FRAC_PI_2 - 0.05, p[0]);
            let half = 0.5 * (FRAC_PI_2 - kappa);
            let sigma = if family == Family::GalleryExampleNarrow {
                lerp(0.0, half - 0.01, p[1]).max(0.0)
            } else {
                lerp(half, FRAC_PI_2 - kappa, p[1])
            };
            let g = make_example_body(kappa, sigma).map_err(|e| e.to_string())?;
            placed(g, p, format!("example kappa={kappa:.17} sigma={sigma:.17}"))
        }
        Family::IsoscelesLongArm => {
            let arm = lerp(FRAC_PI_2 + 0.05, 2.6, p[0]);
            let apex = lerp(0.2, 1.2, p[1]);
            let a = SpherePoint::north();
            let b = SpherePoint::from_spherical(arm, 0.0);
            let c = SpherePoint::from_spherical(arm, apex);
            let rot = rotation_from([p[5], p[6], p[7]]);
            let mut v = vec![a.rotated(&rot), b.rotated(&rot), c.rotated(&rot)];
            if crate::sphere::orientation(&v[0], &v[1], &v[2]) < 0.0 {
                v.swap(1, 2);
            }
            let body = Body::polygon(&v).map_err(|e| e.to_string())?;
            Ok(Instance {
                body,
                descriptor: format!("isosceles arm={arm:.17} apex={apex:.17}"),
                gallery: None,
            })
        }
        Family::EvenGon => {
            let n = pick(&[4, 6, 8], p[1]);
            let radius = lerp(0.2, 1.0, p[0]);
            let rot = rotation_from([p[5], p[6], p[7]]);
            let v: Vec<SpherePoint> = regular_polygon_vertices(n, radius)
                .iter()
                .map(|q| q.rotated(&rot))
                .collect();
            let body = Body::polygon(&v).map_err(|e| e.to_string())?;
            Ok(Instance {
                body,
                descriptor: format!("even_gon n={n} circumradius={radius:.17}"),
                gallery: None,
            })
        }
        Family::RandomLune => Err("random_lune does not produce a body".into()),
    }
}

/// Convex polygon: hull of 4 to 12 random points in a cap of radius
/// [`POLYGON_CAP`]. The hull is taken in the gnomonic chart, which maps
/// great circles to lines.
fn random_polygon(p: &[f64; PARAMS], rng: &mut ChaCha8Rng) -> Result<Instance, String> {
    let center = point_from(p[0], p[1]);
    let count = pick(&[4, 5, 6, 7, 8, 9, 10, 11, 12], p[2]);
    let (u, w) = center.tangent_frame();
    let cos_cap = POLYGON_CAP.cos();
    for _ in 0..20 {
        let pts: Vec<(f64, f64)> = (0..count)
            .map(|_| {
                let z: f64 = rng.gen_range(cos_cap..1.0);
                let phi: f64 = rng.gen_range(0.0..2.0 * PI);
                let r = (1.0 - z * z).sqrt();
                (r * phi.cos() / z, r * phi.sin() / z)
            })
            .collect();
        let hull = convex_hull(pts);
        if hull.len() < 3 {
            continue;
        }
        let verts: Vec<SpherePoint> = hull
            .iter()
            .map(|(x, y)| SpherePoint::from_vec(center.vec() + u * *x + w * *y).expect("finite chart point"))
            .collect();
        if let Ok(body) = Body::polygon(&verts) {
            let coords: Vec<String> = verts
                .iter()
                .map(|v| {
                    let c = v.coords();
                    format!("[{:.17},{:.17},{:.17}]", c[0], c[1], c[2])
                })
                .collect();
            return Ok(Instance {
                body,
                descriptor: format!("polygon vertices=[{}]", coords.join(",")),
                gallery: None,
            });
        }
    }
    Err("no valid hull after 20 attempts".into())
}

/// Counter-clockwise hull, dropping points within a small margin of an edge.
fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &q in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 1e-6 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &q in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 1e-6 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Random lune of thickness in `(0.01, pi/2]` with three ordered points on
/// one bounding semicircle and one point inside.
pub struct LuneSample {
    pub g: SpherePoint,
    pub h: SpherePoint,
    pub thickness: f64,
    pub u: SpherePoint,
    pub v: SpherePoint,
    pub z: SpherePoint,
    pub q: SpherePoint,
}

pub fn lune_sample(p: &[f64; PARAMS]) -> LuneSample {
    let g = point_from(p[0], p[1]);
    let thickness = lerp(0.01, FRAC_PI_2, p[2]);
    let (e1, e2) = g.tangent_frame();
    let dir: Vec3 = e1 * (2.0 * PI * p[3]).cos() + e2 * (2.0 * PI * p[3]).sin();
    let pole_dist = PI - thickness;
    let h = SpherePoint::from_vec(g.vec() * pole_dist.cos() + dir * pole_dist.sin()).expect("unit");
    let corner = g.cross(&h).normalize();
    let center_g = (h.vec() - g.vec() * g.dot(&h)).normalize();
    let center_h = (g.vec() - h.vec() * g.dot(&h)).normalize();
    let mut ts = [PI * p[4], PI * p[5], PI * p[6]];
    ts.sort_by(f64::total_cmp);
    let on_g = |t: f64| SpherePoint::from_vec(corner * t.cos() + center_g * t.sin()).expect("unit");
    // Interior point: the G-side center rotated about the corner axis
    // towards the H-side center, then moved along the meridian.
    let normal = corner.cross(&center_g);
    let s = if normal.dot(&center_h) >= 0.0 { 1.0 } else { -1.0 };
    let phi = thickness * p[7];
    let side = center_g * phi.cos() + normal * (s * phi.sin());
    let tq = PI * p[8];
    let q = SpherePoint::from_vec(corner * tq.cos() + side * tq.sin()).expect("unit");
    LuneSample {
        g,
        h,
        thickness,
        u: on_g(ts[0]),
        v: on_g(ts[1]),
        z: on_g(ts[2]),
        q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{distance, Hemisphere, Lune};
    use rand::SeedableRng;

    #[test]
    fn every_body_family_generates_valid_bodies() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for family in Family::ALL {
            if family == Family::RandomLune {
                continue;
            }
            for _ in 0..5 {
                let p: [f64; PARAMS] = std::array::from_fn(|_| rng.gen::<f64>());
                let inst = generate(family, &p, &mut rng).unwrap();
                assert!(inst.body.area() > 0.0, "{family}");
            }
        }
    }

    #[test]
    fn random_polygons_stay_in_their_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p: [f64; PARAMS] = std::array::from_fn(|_| rng.gen::<f64>());
            let inst = generate(Family::RandomPolygon, &p, &mut rng).unwrap();
            let c = point_from(p[0], p[1]);
            for v in inst.body.junctions() {
                assert!(distance(&c, &v) <= POLYGON_CAP + 1e-12);
            }
        }
    }

    #[test]
    fn lune_samples_lie_where_claimed() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let p: [f64; PARAMS] = std::array::from_fn(|_| rng.gen::<f64>());
            let s = lune_sample(&p);
            let lune = Lune::new(Hemisphere::new(s.g), Hemisphere::new(s.h)).unwrap();
            assert!((lune.thickness() - s.thickness).abs() < 1e-12);
            for x in [s.u, s.v, s.z, s.q] {
                assert!(lune.contains(&x));
            }
            for x in [s.u, s.v, s.z] {
                assert!(s.g.dot(&x).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()), Some(f));
        }
    }
}
