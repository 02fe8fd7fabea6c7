use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use sphereduce::gallery::{
    make_disk, make_example_body, make_quarter_disk, make_regular_odd_gon, make_reuleaux_triangle, GalleryBody,
};
use sphereduce::verifier::{brute_force_thickness, run_property, Family, RunOptions, Status};
use sphereduce::width::thickness;
use sphereduce::{distance, Body, SpherePoint};

fn gallery() -> Vec<GalleryBody> {
    let n = SpherePoint::north();
    vec![
        make_disk(n, 0.5).unwrap(),
        make_disk(n, 1.2).unwrap(),
        make_quarter_disk(n, 0.5, 0.3).unwrap(),
        make_quarter_disk(n, FRAC_PI_4, 0.0).unwrap(),
        make_regular_odd_gon(3, 0.6).unwrap(),
        make_regular_odd_gon(5, 0.8).unwrap(),
        make_regular_odd_gon(7, FRAC_PI_2).unwrap(),
        make_example_body(0.6, 0.3).unwrap(),
        make_example_body(0.7, 0.6).unwrap(),
        make_reuleaux_triangle(0.9).unwrap(),
    ]
}

fn sampled_diameter(body: &Body, n: usize) -> f64 {
    let pts = body.boundary_sample(n).unwrap();
    let mut best: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            best = best.max(distance(p, q));
        }
    }
    best
}

#[test]
fn brute_force_thickness_matches_known_values() {
    let n = SpherePoint::north();
    assert!((brute_force_thickness(&make_disk(n, 0.5).unwrap().body, 1000) - 1.0).abs() < 1e-6);
    assert!((brute_force_thickness(&make_quarter_disk(n, 0.5, 0.0).unwrap().body, 10_000) - 0.5).abs() < 1e-4);
    assert!((brute_force_thickness(&make_regular_odd_gon(5, 0.8).unwrap().body, 10_000) - 0.8).abs() < 1e-4);
}

#[test]
fn thickness_agrees_with_brute_force_on_gallery() {
    for g in gallery() {
        let exact = thickness(&g.body).value;
        let oracle = brute_force_thickness(&g.body, 10_000);
        assert!(
            oracle >= exact - 1e-12,
            "{:?}: oracle {oracle} below {exact}",
            g.meta.kind
        );
        assert!(oracle - exact <= 1e-4, "{:?}: oracle {oracle} vs {exact}", g.meta.kind);
        assert!((exact - g.meta.predicted.thickness).abs() <= 1e-6);
    }
}

#[test]
fn diameter_agrees_with_pairwise_samples() {
    for g in gallery() {
        let d = g.body.diameter();
        let oracle = sampled_diameter(&g.body, 2000);
        assert!(d >= oracle - 1e-12, "{:?}: {d} below sampled {oracle}", g.meta.kind);
        assert!(d - oracle <= 1e-4, "{:?}: {d} vs sampled {oracle}", g.meta.kind);
        if let Some(p) = g.meta.predicted.diameter {
            assert!((d - p).abs() <= 1e-6, "{:?}: {d} vs predicted {p}", g.meta.kind);
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let opts = RunOptions {
        trials: Some(30),
        ..RunOptions::default()
    };
    for id in ["P-T8", "P-L2", "P-L5"] {
        let a = serde_json::to_string(&run_property(id, 7, &opts).unwrap()).unwrap();
        let b = serde_json::to_string(&run_property(id, 7, &opts).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn quarter_disk_equality_suite() {
    let r = run_property(
        "P-T8",
        1,
        &RunOptions {
            trials: Some(100),
            family: Some(Family::GalleryQuarterDisk),
            timing: false,
        },
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.max_measured["excess_over_bound"].abs() <= 1e-9);
}

#[test]
fn lune_distance_property_at_scale() {
    let r = run_property("P-L4", 3, &RunOptions::default()).unwrap();
    assert_eq!(r.trials, 100_000);
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn narrow_examples_are_strictly_convex() {
    let r = run_property(
        "P-T6",
        5,
        &RunOptions {
            trials: Some(50),
            family: Some(Family::GalleryExampleNarrow),
            timing: false,
        },
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.passed, 50);
}

#[test]
fn counterexample_families_show_violations() {
    for id in ["P-L5-counterexample", "P-T6-counterexample", "P-RED-counterexample"] {
        let r = run_property(
            id,
            1,
            &RunOptions {
                trials: Some(20),
                ..RunOptions::default()
            },
        )
        .unwrap();
        assert_eq!(r.status, Status::Pass, "{id}");
        assert_eq!(r.violations_observed, Some(20), "{id}");
    }
}

#[test]
fn runtime_is_reported_only_on_request() {
    let opts = RunOptions {
        trials: Some(5),
        ..RunOptions::default()
    };
    assert!(run_property("P-P1", 1, &opts).unwrap().runtime_ms.is_none());
    let timed = RunOptions { timing: true, ..opts };
    assert!(run_property("P-P1", 1, &timed).unwrap().runtime_ms.is_some());
}
