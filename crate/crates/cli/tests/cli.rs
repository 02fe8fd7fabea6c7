use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sphereduce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphereduce"))
        .args(args)
        .env_remove("SPHEREDUCE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn metric(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn make(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gallery", "make"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let o = sphereduce(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn quarter_disk_metrics_show_equality() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "q.json", &["quarter-disk", "--rho", "0.7853981633974483"]);
    let o = sphereduce(&["metrics", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let thickness: f64 = metric(&text, "thickness").parse().unwrap();
    let diameter: f64 = metric(&text, "diameter").parse().unwrap();
    let bound: f64 = metric(&text, "diameter_bound").parse().unwrap();
    assert!((thickness - std::f64::consts::FRAC_PI_4).abs() < 1e-9);
    assert!((diameter - std::f64::consts::FRAC_PI_3).abs() < 1e-9);
    assert!((diameter - bound).abs() < 1e-9);
    assert_eq!(metric(&text, "reducedness"), "certified-reduced");
    assert_eq!(metric(&text, "prediction"), "agrees");
}

#[test]
fn disk_has_constant_width() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "d.json", &["disk", "--rho", "0.5"]);
    let o = sphereduce(&["metrics", "--json", &f]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["thickness"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(v["width_spread"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["constant_width"], Value::Bool(true));
}

#[test]
fn example_and_odd_gon_files() {
    let dir = tempfile::tempdir().unwrap();
    let e = make(dir.path(), "e.json", &["example", "--kappa", "0.6", "--sigma", "0.3"]);
    let text = stdout(&sphereduce(&["metrics", &e]));
    assert!(metric(&text, "width_spread").parse::<f64>().unwrap() < 1e-6);
    assert!((metric(&text, "thickness").parse::<f64>().unwrap() - 1.2).abs() < 1e-6);
    assert_eq!(metric(&text, "arcs"), "6");

    let o = make(dir.path(), "o.json", &["odd-gon", "--n", "5", "--thickness", "0.8"]);
    let text = stdout(&sphereduce(&["metrics", &o]));
    assert!((metric(&text, "thickness").parse::<f64>().unwrap() - 0.8).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        sphereduce(&["gallery", "make", "disk", "--rho", "2.0"]).status.code(),
        Some(4)
    );
    assert_eq!(
        sphereduce(&["gallery", "make", "odd-gon", "--n", "4", "--thickness", "0.5"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        sphereduce(&["gallery", "make", "example", "--kappa", "0.5"])
            .status
            .code(),
        Some(4)
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"polygon\": [\n  [0.5, 0, 0], [0, 1, 0], [0, 0, 1]]}").unwrap();
    let o = sphereduce(&["metrics", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2 column"));

    let reflex = dir.path().join("swapped.json");
    std::fs::write(&reflex, r#"{"polygon": [[1,0,0],[0,0,1],[0,1,0]]}"#).unwrap();
    assert_eq!(
        sphereduce(&["metrics", reflex.to_str().unwrap()]).status.code(),
        Some(3)
    );

    assert_eq!(sphereduce(&["verify", "P-NOPE"]).status.code(), Some(5));
    assert_eq!(
        sphereduce(&["verify", "P-T8", "--family", "even_gon"]).status.code(),
        Some(4)
    );

    let octant = dir.path().join("octant.json");
    std::fs::write(&octant, r#"{"polygon": [[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
    assert_eq!(
        sphereduce(&["render", octant.to_str().unwrap(), "--view=-1,-1,-1"])
            .status
            .code(),
        Some(6)
    );
}

#[test]
fn verify_reports_and_seed_env() {
    let o = sphereduce(&["verify", "P-T8", "--seed", "7", "--trials", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["seed"], 7);
    assert!(v.get("runtime_ms").is_none());

    let o = sphereduce(&["verify", "P-L5-counterexample", "--seed", "1", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["violations_observed"], 50);

    let o = Command::new(env!("CARGO_BIN_EXE_sphereduce"))
        .args(["verify", "P-P1", "--trials", "3", "--timing"])
        .env("SPHEREDUCE_SEED", "99")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["seed"], 99);
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn verify_is_deterministic_and_replayable() {
    let a = sphereduce(&["verify", "P-L2", "--seed", "3", "--trials", "20"]);
    let b = sphereduce(&["verify", "P-L2", "--seed", "3", "--trials", "20"]);
    assert_eq!(a.stdout, b.stdout);
    let seed = sphereduce::verifier::trial_seed("P-L2", 3, 0).to_string();
    let r = sphereduce(&["verify", "P-L2", "--replay", &seed, "--family", "gallery_odd_gon"]);
    assert_eq!(r.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&r).trim()).unwrap();
    assert_eq!(v["family"], "gallery_odd_gon");
}

#[test]
fn render_quarter_disk_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(
        dir.path(),
        "q.json",
        &["quarter-disk", "--rho", "0.6", "--orientation", "0.3"],
    );
    let svg_path = dir.path().join("q.svg");
    let o = sphereduce(&["render", &f, "--witness", "-o", svg_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    let pts: Vec<[f64; 3]> = svg
        .split("data-point=\"")
        .skip(1)
        .map(|s| {
            let c: Vec<f64> = s[..s.find('"').unwrap()]
                .split(',')
                .map(|x| x.parse().unwrap())
                .collect();
            [c[0], c[1], c[2]]
        })
        .collect();
    assert_eq!(pts.len(), 2);
    let dot: f64 = (0..3).map(|i| pts[0][i] * pts[1][i]).sum();
    assert!((dot.clamp(-1.0, 1.0).acos() - 0.6).abs() < 1e-6);

    let again = sphereduce(&["render", &f, "--witness"]);
    assert_eq!(stdout(&again), svg);
}

#[test]
fn render_octant_and_example() {
    let dir = tempfile::tempdir().unwrap();
    let octant = dir.path().join("octant.json");
    std::fs::write(&octant, r#"{"polygon": [[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
    let svg = stdout(&sphereduce(&["render", octant.to_str().unwrap(), "--view", "1,1,1"]));
    assert_eq!(svg.matches("class=\"arc great\"").count(), 3);

    let e = make(dir.path(), "e.json", &["example", "--kappa", "0.6", "--sigma", "0.3"]);
    let svg = stdout(&sphereduce(&["render", &e, "--projection", "stereographic"]));
    assert_eq!(svg.matches("class=\"arc ").count(), 6);
}

#[test]
fn gallery_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "r.json", &["reuleaux", "--kappa", "0.7"]);
    let text = std::fs::read_to_string(&f).unwrap();
    let parsed = sphereduce_cli::bodyfile::BodyFile::parse(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
    let body = parsed.body().unwrap();
    let again = sphereduce_cli::bodyfile::BodyFile::from_body(&body, parsed.meta.clone());
    assert_eq!(again.to_json(), text);
}
