//! The property registry.

use std::f64::consts::FRAC_PI_2;

use rand::seq::index::sample;

use super::families::{lune_sample, Family, Instance};
use super::{PropertyDef, Trial, TrialCtx};
use crate::body::{Body, BoundaryArc};
use crate::sphere::{diameter_bound, distance, Hemisphere, SpherePoint, Vec3};
use crate::width::{
    is_constant_width, is_smooth, is_strictly_convex, lune_through_point, minimizing_hemispheres, order_triple,
    reducedness_certificate, supporting_fan, supporting_hemisphere_at, thickness, width_at, Certificate, Order, Side,
    WidthWitness, TOL_CERT,
};

/// Slack for collecting minimizing hemispheres.
const MIN_TOL: f64 = 1e-7;
const TOL_6: f64 = 1e-6;
const TOL_9: f64 = 1e-9;
const TOL_12: f64 = 1e-12;
/// Classification tolerance around `pi/2`.
const QUARTER_TURN_TOL: f64 = 1e-7;
/// Cap on how many minimal lunes a single trial inspects.
const MAX_LUNES: usize = 24;

macro_rules! instance_or_skip {
    ($ctx:expr) => {
        match $ctx.instance() {
            Ok(i) => i,
            Err(e) => return Trial::skip(e),
        }
    };
}

/// Instance, thickness and a certified-reduced flag recorded on the trial.
fn reduced(ctx: &TrialCtx) -> Result<(Instance, f64, Trial), Trial> {
    let inst = ctx.instance().map_err(Trial::skip)?;
    let mut t = Trial::new(inst.descriptor.clone());
    let delta = thickness(&inst.body).value;
    t.measure("thickness", delta);
    let cert = reducedness_certificate(&inst.body);
    let grade = cert.grade();
    t.require(cert.is_certified(), || {
        format!("body is {grade}, not certified-reduced")
    });
    Ok((inst, delta, t))
}

fn spread_lunes(mut w: Vec<WidthWitness>) -> Vec<WidthWitness> {
    if w.len() <= MAX_LUNES {
        return w;
    }
    let step = w.len() as f64 / MAX_LUNES as f64;
    let picks: Vec<usize> = (0..MAX_LUNES).map(|i| (i as f64 * step) as usize).collect();
    let mut out = Vec::with_capacity(MAX_LUNES);
    for (i, x) in w.drain(..).enumerate() {
        if picks.contains(&i) {
            out.push(x);
        }
    }
    out
}

fn great_mid_on_boundary(body: &Body, x: &SpherePoint, y: &SpherePoint) -> bool {
    if distance(x, y) <= TOL_9 {
        return true;
    }
    let mid = match SpherePoint::from_vec(x.vec() + y.vec()) {
        Some(m) => m,
        None => return false,
    };
    let loc = body.locate(&mid);
    loc.distance <= 1e-7 && body.arcs()[loc.arc].is_great()
}

fn p_t1(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let mins = minimizing_hemispheres(&inst.body, delta, MIN_TOL);
    t.measure("minimizing_count", mins.len() as f64);
    if !t.require(mins.len() >= 2, || "fewer than two minimizing hemispheres".into()) {
        return t;
    }
    let mut worst: f64 = 0.0;
    for i in 0..mins.len() {
        let (m1, m2) = (&mins[i], &mins[(i + 1) % mins.len()]);
        let la = distance(&m1.a, &m2.a);
        let lb = distance(&m1.b, &m2.b);
        worst = worst.max((la - lb).abs());
        t.require((la - lb).abs() <= TOL_6, || format!("|a1a2| = {la} but |b1b2| = {lb}"));
        t.require(great_mid_on_boundary(&inst.body, &m1.a, &m2.a), || {
            "a1a2 is not a boundary arc".into()
        });
        t.require(great_mid_on_boundary(&inst.body, &m1.b, &m2.b), || {
            "b1b2 is not a boundary arc".into()
        });
    }
    t.measure("length_mismatch", worst);
    t
}

fn p_p1(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let body = &inst.body;
    let corner = body.junction(0);
    let BoundaryArc::Circle(arc) = body.arcs()[1] else {
        return Trial::skip("second element is not a circle arc");
    };
    let center_err = distance(&arc.center(), &corner);
    t.measure("center_error", center_err);
    t.require(center_err <= TOL_9, || {
        format!("circle center is {center_err:e} from the corner")
    });
    t.require((arc.radius() - delta).abs() <= TOL_6, || {
        format!("radius {} differs from thickness {delta}", arc.radius())
    });
    let fan = body.dual().pieces()[body.dual().fan_piece(0)];
    let mut worst: f64 = 0.0;
    for s in fan.even_params(21) {
        let k = Hemisphere::new(fan.at(s));
        let w = match width_at(body, &k) {
            Ok(w) => w,
            Err(e) => {
                t.require(false, || e.to_string());
                return t;
            }
        };
        worst = worst.max((w.width - delta).abs());
        t.require((w.width - delta).abs() <= TOL_6, || {
            format!("width {} between the edge poles", w.width)
        });
        t.require(distance(&w.a, &corner) <= TOL_6, || "a is not the corner".into());
        t.require((distance(&w.b, &corner) - delta).abs() <= TOL_6, || {
            "b is off the circle arc".into()
        });
    }
    t.measure("width_error", worst);
    t
}

fn p_t2(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let mut worst_w: f64 = 0.0;
    let mut worst_a: f64 = 0.0;
    for arc in inst.body.arcs() {
        let BoundaryArc::Great(g) = arc else { continue };
        let w = match width_at(&inst.body, &Hemisphere::new(g.pole())) {
            Ok(w) => w,
            Err(e) => {
                t.require(false, || e.to_string());
                return t;
            }
        };
        let off = (distance(&g.from(), &w.a) + distance(&w.a, &g.to()) - g.length()).max(g.pole().dot(&w.a).abs());
        worst_w = worst_w.max((w.width - delta).abs());
        worst_a = worst_a.max(off);
        t.require((w.width - delta).abs() <= TOL_6, || {
            format!("edge width {} vs thickness {delta}", w.width)
        });
        t.require(off <= TOL_9, || format!("center a is {off:e} off the edge"));
    }
    t.measure("width_error", worst_w).measure("center_offset", worst_a);
    t
}

fn p_t3(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let dual = inst.body.dual();
    let mut worst: f64 = 0.0;
    for j in 0..inst.body.arcs().len() {
        let fan = dual.pieces()[dual.fan_piece(j)];
        for pole in [fan.start(), fan.end()] {
            match width_at(&inst.body, &Hemisphere::new(pole)) {
                Ok(w) => {
                    worst = worst.max((w.width - delta).abs());
                    t.require((w.width - delta).abs() <= TOL_6, || {
                        format!("extreme hemisphere at junction {j} has width {}", w.width)
                    });
                }
                Err(e) => {
                    t.require(false, || e.to_string());
                }
            }
        }
    }
    t.measure("width_error", worst);
    t
}

fn body_points(body: &Body, ctx: &TrialCtx, n: usize) -> Vec<SpherePoint> {
    use rand::Rng;
    let boundary = body.boundary_sample(n / 2).unwrap_or_default();
    let mut rng = ctx.rng();
    let mut pts = boundary.clone();
    while pts.len() < n && boundary.len() >= 3 {
        let w: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
        let idx: [usize; 3] = std::array::from_fn(|_| rng.gen_range(0..boundary.len()));
        let v: Vec3 = (0..3).map(|i| boundary[idx[i]].vec() * w[i]).sum();
        if let Some(p) = SpherePoint::from_vec(v) {
            pts.push(p);
        }
    }
    pts
}

fn p_p2(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    if delta > FRAC_PI_2 + TOL_9 {
        return Trial::skip("thickness above pi/2");
    }
    let mut worst = f64::INFINITY;
    for p in body_points(&inst.body, ctx, 500) {
        let m = inst.body.min_dot(&p.vec());
        worst = worst.min(m);
    }
    t.measure("min_inner_product", worst);
    t.require(worst >= -TOL_9, || {
        format!("body leaves H(p): min inner product {worst:e}")
    });
    t
}

fn p_p3(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let delta = thickness(&inst.body).value;
    if delta <= FRAC_PI_2 + TOL_9 {
        return Trial::skip("width not above pi/2");
    }
    let mut t = Trial::new(inst.descriptor);
    t.measure("thickness", delta);
    let cw = is_constant_width(&inst.body, TOL_6);
    t.require(cw.constant, || {
        format!("not of constant width (spread {:e})", cw.spread)
    });
    t.require(is_smooth(&inst.body), || "body has a corner".into());
    t
}

fn p_t4(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    if delta < FRAC_PI_2 - TOL_9 {
        return Trial::skip("thickness below pi/2");
    }
    let cw = is_constant_width(&inst.body, TOL_6);
    t.measure("width_spread", cw.spread);
    t.require(cw.constant, || format!("width spread {:e}", cw.spread));
    t
}

fn p_t5(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    if !is_strictly_convex(&inst.body) {
        return Trial::skip("not strictly convex");
    }
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    if delta >= FRAC_PI_2 {
        return Trial::skip("thickness not below pi/2");
    }
    let cw = is_constant_width(&inst.body, TOL_6);
    t.measure("width_spread", cw.spread);
    t.require(cw.constant, || format!("width spread {:e}", cw.spread));
    t
}

fn p_t6(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let cw = is_constant_width(&inst.body, TOL_6);
    if !cw.constant || cw.max_width >= FRAC_PI_2 {
        return Trial::skip("not of constant width below pi/2");
    }
    let mut t = Trial::new(inst.descriptor);
    t.measure("width", cw.min_width);
    t.require(is_strictly_convex(&inst.body), || {
        "boundary contains a great arc".into()
    });
    t
}

fn p_t7(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let cw = is_constant_width(&inst.body, TOL_6);
    let mut t = Trial::new(inst.descriptor.clone());
    if !t.require(cw.constant, || {
        format!("not of constant width (spread {:e})", cw.spread)
    }) {
        return t;
    }
    let width = thickness(&inst.body).value;
    let mut worst = f64::INFINITY;
    for p in inst.body.boundary_sample(60).unwrap_or_default() {
        match lune_through_point(&inst.body, &p, width) {
            Ok(s) => worst = worst.min(s.margin),
            Err(e) => {
                t.require(false, || e.to_string());
            }
        }
    }
    t.measure("min_margin", worst);
    t.require(worst >= -TOL_6, || {
        format!("no containing lune through some boundary point (margin {worst:e})")
    });
    t
}

fn p_l4(ctx: &TrialCtx) -> Trial {
    let s = lune_sample(&ctx.params);
    let mut t = Trial::new(format!("lune thickness={:.17}", s.thickness));
    let lhs = distance(&s.q, &s.v);
    let rhs = distance(&s.q, &s.u).max(distance(&s.q, &s.z));
    t.measure("excess", lhs - rhs);
    t.require(lhs <= rhs + TOL_12, || {
        format!("|qv| = {lhs} exceeds max(|qu|, |qz|) = {rhs}")
    });
    t
}

fn p_l5(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let full = inst.body.diameter();
    if full > FRAC_PI_2 {
        return Trial::skip("diameter above pi/2");
    }
    let ext = inst.body.extreme_diameter();
    let mut t = Trial::new(inst.descriptor);
    t.measure("diameter", full).measure("difference", (full - ext).abs());
    t.require((full - ext).abs() <= TOL_9, || {
        format!("extreme diameter {ext} vs diameter {full}")
    });
    t
}

fn p_l5_counter(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let full = inst.body.diameter();
    let ext = inst.body.extreme_diameter();
    let mut t = Trial::new(inst.descriptor);
    t.measure("excess", full - ext);
    t.violation = full > ext + TOL_9;
    t.require(t.violation, || {
        format!("no violation: diameter {full}, extreme diameter {ext}")
    });
    t
}

fn p_t8(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let diam = inst.body.diameter();
    t.measure("diameter", diam);
    if delta < FRAC_PI_2 - TOL_9 {
        let bound = diameter_bound(delta);
        t.measure("excess_over_bound", diam - bound);
        t.require(diam <= bound + TOL_6, || format!("diameter {diam} above bound {bound}"));
        if ctx.family == Family::GalleryQuarterDisk {
            t.require((diam - bound).abs() <= TOL_9, || {
                format!("quarter disk misses equality by {:e}", bound - diam)
            });
        } else {
            t.require(bound - diam > TOL_6, || {
                format!("equality attained by a non-quarter-disk: {diam} vs {bound}")
            });
        }
    } else {
        t.measure("diameter_minus_thickness", (diam - delta).abs());
        t.require((diam - delta).abs() <= TOL_6, || {
            format!("diameter {diam} differs from thickness {delta}")
        });
    }
    t
}

#[derive(PartialEq, Debug)]
enum Regime {
    Below,
    At,
    Above,
}

fn regime(x: f64) -> Regime {
    if (x - FRAC_PI_2).abs() <= QUARTER_TURN_TOL {
        Regime::At
    } else if x < FRAC_PI_2 {
        Regime::Below
    } else {
        Regime::Above
    }
}

fn p_p4(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let diam = inst.body.diameter();
    t.measure("diameter", diam);
    let (rd, rk) = (regime(delta), regime(diam));
    t.require(rd == rk, || {
        format!("thickness {delta} is {rd:?} pi/2 but diameter {diam} is {rk:?}")
    });
    t
}

fn p_l2(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    if delta >= FRAC_PI_2 - TOL_9 {
        return Trial::skip("thickness not below pi/2");
    }
    let mins = minimizing_hemispheres(&inst.body, delta, MIN_TOL);
    if mins.len() < 3 {
        return Trial::skip("fewer than three minimizing hemispheres");
    }
    let mut rng = ctx.rng();
    let idx = sample(&mut rng, mins.len(), 3).into_vec();
    let (n1, n2, n3) = (&mins[idx[0]], &mins[idx[1]], &mins[idx[2]]);
    let o = order_triple(&n1.k, &n2.k, &n3.k, &inst.body);
    let o_star = order_triple(&n1.k_star, &n2.k_star, &n3.k_star, &inst.body);
    if o == Order::Degenerate || o_star == Order::Degenerate {
        return Trial::skip("degenerate triple");
    }
    t.measure("ordered", (o == Order::Ordered) as u8 as f64);
    t.require(o == o_star, || format!("order {o:?} but partners {o_star:?}"));
    t
}

fn close(a: &Hemisphere, b: &Hemisphere) -> bool {
    distance(&a.pole(), &b.pole()) <= TOL_6
}

fn p_l1(ctx: &TrialCtx) -> Trial {
    let (inst, delta, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let body = &inst.body;
    let mins = spread_lunes(minimizing_hemispheres(body, delta, MIN_TOL));
    let mut off: f64 = 0.0;
    for w in &mins {
        let da = body.locate(&w.a).distance;
        let db = body.locate(&w.b).distance;
        off = off.max(da).max(db);
        t.require(da.max(db) <= TOL_9, || {
            format!("lune center off the boundary by {:e}", da.max(db))
        });
        let side = |p: &SpherePoint, s: Side| supporting_hemisphere_at(body, p, s);
        let (ra, la, rb, lb) = match (
            side(&w.a, Side::Right),
            side(&w.a, Side::Left),
            side(&w.b, Side::Right),
            side(&w.b, Side::Left),
        ) {
            (Ok(ra), Ok(la), Ok(rb), Ok(lb)) => (ra, la, rb, lb),
            _ => {
                t.require(false, || "lune center is not a boundary point".into());
                continue;
            }
        };
        let right = close(&w.k, &ra) || close(&w.k_star, &rb);
        let left = close(&w.k, &la) || close(&w.k_star, &lb);
        t.require(right, || "neither hemisphere is a right supporting hemisphere".into());
        t.require(left, || "neither hemisphere is a left supporting hemisphere".into());
    }
    t.measure("lunes", mins.len() as f64).measure("center_offset", off);
    t
}

fn p_l3(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let delta = thickness(&inst.body).value;
    if delta <= FRAC_PI_2 + TOL_9 {
        return Trial::skip("thickness not above pi/2");
    }
    let mut t = Trial::new(inst.descriptor);
    t.measure("thickness", delta);
    let mut worst: f64 = 0.0;
    for w in spread_lunes(minimizing_hemispheres(&inst.body, delta, MIN_TOL)) {
        for p in [w.a, w.b] {
            match supporting_fan(&inst.body, &p) {
                Ok(fan) => {
                    worst = worst.max(fan.sweep());
                    t.require(fan.sweep() <= TOL_6, || {
                        format!("lune center is a corner (turn {})", fan.sweep())
                    });
                }
                Err(e) => {
                    t.require(false, || e.to_string());
                }
            }
        }
    }
    t.measure("max_corner_turn", worst);
    t
}

fn p_t6_counter(ctx: &TrialCtx) -> Trial {
    let (inst, _, mut t) = match reduced(ctx) {
        Ok(x) => x,
        Err(t) => return t,
    };
    let cw = is_constant_width(&inst.body, TOL_6);
    t.measure("width_spread", cw.spread);
    t.violation = t.outcome == super::Outcome::Pass && !is_strictly_convex(&inst.body) && !cw.constant;
    t.require(t.violation, || {
        "reduced triangle without the predicted behaviour".into()
    });
    t
}

fn p_red_counter(ctx: &TrialCtx) -> Trial {
    let inst = instance_or_skip!(ctx);
    let mut t = Trial::new(inst.descriptor.clone());
    match reducedness_certificate(&inst.body) {
        Certificate::Falsified {
            thickness,
            cut_thickness,
            ..
        } => {
            let gap = (thickness - cut_thickness).abs();
            t.measure("cut_thickness_change", gap);
            t.violation = gap < TOL_9;
            t.require(t.violation, || format!("cut changes the thickness by {gap:e}"));
        }
        other => {
            let grade = other.grade();
            t.require(false, || format!("even-gon is {grade}"));
        }
    }
    t
}

use Family::*;

static REGISTRY: [PropertyDef; 20] = [
    PropertyDef {
        id: "P-T1",
        statement: "consecutive minimizing hemispheres of a reduced polygon of thickness below pi/2 cut equal great-arc pieces a1a2 and b1b2 from the boundary",
        families: &[GalleryOddGon],
        default_trials: 40,
        expect_violation: false,
        tolerances: &[("length", TOL_6), ("minimizing", MIN_TOL), ("certificate", TOL_CERT)],
        check: p_t1,
    },
    PropertyDef {
        id: "P-P1",
        statement: "the circle piece of a quarter disk is centered at the corner with radius equal to the thickness, and every hemisphere supporting at the corner has width equal to the thickness",
        families: &[GalleryQuarterDisk],
        default_trials: 30,
        expect_violation: false,
        tolerances: &[("width", TOL_6), ("center", TOL_9)],
        check: p_p1,
    },
    PropertyDef {
        id: "P-T2",
        statement: "a hemisphere supporting a reduced body along a great arc has width equal to the thickness and its semicircle center lies on that arc",
        families: &[GalleryOddGon, GalleryOddGonQuarterTurn, GalleryQuarterDisk],
        default_trials: 45,
        expect_violation: false,
        tolerances: &[("width", TOL_6), ("center", TOL_9)],
        check: p_t2,
    },
    PropertyDef {
        id: "P-T3",
        statement: "left and right supporting hemispheres of a reduced body have width equal to the thickness",
        families: &[GalleryOddGon, GalleryOddGonQuarterTurn, GalleryQuarterDisk, GalleryExampleNarrow, GalleryExampleWide],
        default_trials: 50,
        expect_violation: false,
        tolerances: &[("width", TOL_6)],
        check: p_t3,
    },
    PropertyDef {
        id: "P-P2",
        statement: "a reduced body of thickness at most pi/2 lies in H(p) for every point p of the body",
        families: &[GalleryOddGon, GalleryOddGonQuarterTurn, GalleryQuarterDisk, GalleryExampleNarrow, GalleryDiskNarrow],
        default_trials: 50,
        expect_violation: false,
        tolerances: &[("inner_product", TOL_9)],
        check: p_p2,
    },
    PropertyDef {
        id: "P-P3",
        statement: "a body of constant width above pi/2 is smooth",
        families: &[GalleryExampleWide, GalleryDiskWide],
        default_trials: 40,
        expect_violation: false,
        tolerances: &[("spread", TOL_6), ("smooth", TOL_9)],
        check: p_p3,
    },
    PropertyDef {
        id: "P-T4",
        statement: "a reduced body of thickness at least pi/2 has constant width",
        families: &[GalleryExampleWide, GalleryOddGonQuarterTurn, GalleryDiskWide],
        default_trials: 45,
        expect_violation: false,
        tolerances: &[("spread", TOL_6), ("certificate", TOL_CERT)],
        check: p_t4,
    },
    PropertyDef {
        id: "P-T5",
        statement: "a strictly convex reduced body of thickness below pi/2 has constant width",
        families: &[GalleryExampleNarrow, GalleryDiskNarrow],
        default_trials: 40,
        expect_violation: false,
        tolerances: &[("spread", TOL_6), ("certificate", TOL_CERT)],
        check: p_t5,
    },
    PropertyDef {
        id: "P-T6",
        statement: "a body of constant width below pi/2 is strictly convex",
        families: &[GalleryExampleNarrow, GalleryDiskNarrow],
        default_trials: 50,
        expect_violation: false,
        tolerances: &[("spread", TOL_6)],
        check: p_t6,
    },
    PropertyDef {
        id: "P-T7",
        statement: "every boundary point of a body of constant width w is a semicircle center of a lune of thickness w containing the body",
        families: &[GalleryExampleNarrow, GalleryExampleWide, GalleryDisk],
        default_trials: 30,
        expect_violation: false,
        tolerances: &[("margin", TOL_6), ("spread", TOL_6)],
        check: p_t7,
    },
    PropertyDef {
        id: "P-L4",
        statement: "for v between u and z on a bounding semicircle of a lune of thickness at most pi/2 and q in the lune, |qv| <= max(|qu|, |qz|)",
        families: &[RandomLune],
        default_trials: 100_000,
        expect_violation: false,
        tolerances: &[("distance", TOL_12)],
        check: p_l4,
    },
    PropertyDef {
        id: "P-L5",
        statement: "the diameter of the extreme set equals the diameter when the diameter is at most pi/2",
        families: &[RandomPolygon, GalleryQuarterDisk, GalleryExampleNarrow],
        default_trials: 100,
        expect_violation: false,
        tolerances: &[("diameter", TOL_9)],
        check: p_l5,
    },
    PropertyDef {
        id: "P-L5-counterexample",
        statement: "isosceles triangles with arms longer than pi/2 have diameter larger than the diameter of their vertex set",
        families: &[IsoscelesLongArm],
        default_trials: 50,
        expect_violation: true,
        tolerances: &[("diameter", TOL_9)],
        check: p_l5_counter,
    },
    PropertyDef {
        id: "P-T8",
        statement: "reduced bodies of thickness below pi/2 satisfy diam <= arccos(cos^2 thickness), with equality only for quarter disks; from pi/2 on the diameter equals the thickness",
        families: &[GalleryQuarterDisk, GalleryOddGon, GalleryOddGonQuarterTurn, GalleryExampleNarrow, GalleryExampleWide, GalleryDiskNarrow],
        default_trials: 200,
        expect_violation: false,
        tolerances: &[("bound", TOL_6), ("equality", TOL_9), ("certificate", TOL_CERT)],
        check: p_t8,
    },
    PropertyDef {
        id: "P-P4",
        statement: "for reduced bodies the thickness is below (equal to) pi/2 exactly when the diameter is",
        families: &[GalleryQuarterDisk, GalleryOddGon, GalleryOddGonQuarterTurn, GalleryExampleNarrow, GalleryExampleWide, GalleryDisk],
        default_trials: 100,
        expect_violation: false,
        tolerances: &[("quarter_turn", QUARTER_TURN_TOL)],
        check: p_p4,
    },
    PropertyDef {
        id: "P-L2",
        statement: "three minimizing hemispheres of a reduced body of thickness below pi/2 support it in the same order as their partners",
        families: &[GalleryOddGon, GalleryQuarterDisk, GalleryExampleNarrow, GalleryDiskNarrow],
        default_trials: 120,
        expect_violation: false,
        tolerances: &[("minimizing", MIN_TOL), ("orientation", TOL_9)],
        check: p_l2,
    },
    PropertyDef {
        id: "P-L1",
        statement: "of the two hemispheres of a minimal lune at least one is a right and at least one is a left supporting hemisphere at its semicircle center",
        families: &[GalleryOddGon, GalleryOddGonQuarterTurn, GalleryQuarterDisk, GalleryExampleNarrow, GalleryExampleWide, GalleryDisk],
        default_trials: 48,
        expect_violation: false,
        tolerances: &[("pole", TOL_6), ("boundary", TOL_9)],
        check: p_l1,
    },
    PropertyDef {
        id: "P-L3",
        statement: "both semicircle centers of a minimal lune of a body of thickness above pi/2 are smooth boundary points",
        families: &[GalleryExampleWide, GalleryDiskWide],
        default_trials: 40,
        expect_violation: false,
        tolerances: &[("turn", TOL_6)],
        check: p_l3,
    },
    PropertyDef {
        id: "P-T6-counterexample",
        statement: "regular triangles of thickness below pi/2 are reduced but neither strictly convex nor of constant width",
        families: &[RegularTriangle],
        default_trials: 40,
        expect_violation: true,
        tolerances: &[("spread", TOL_6), ("certificate", TOL_CERT)],
        check: p_t6_counter,
    },
    PropertyDef {
        id: "P-RED-counterexample",
        statement: "regular even-gons are not reduced: cutting off a vertex keeps the thickness",
        families: &[EvenGon],
        default_trials: 40,
        expect_violation: true,
        tolerances: &[("cut", TOL_9), ("certificate", TOL_CERT)],
        check: p_red_counter,
    },
];

pub fn registry() -> &'static [PropertyDef] {
    &REGISTRY
}
