//! The `sphereduce` command line: body metrics, gallery construction,
//! property suites and SVG rendering.
//!
//! Exit codes: 0 success, 1 a property failed, 2 parse error, 3 invalid
//! body, 4 bad parameters, 5 unknown property, 6 rendering impossible.

pub mod bodyfile;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sphereduce::gallery::{
    make_disk, make_example_body, make_quarter_disk, make_regular_odd_gon, make_reuleaux_triangle, GalleryBody,
    GalleryMeta,
};
use sphereduce::sphere::diameter_bound;
use sphereduce::verifier::{find_property, registry, replay, run_property, Family, RunOptions, VerifyError};
use sphereduce::width::{
    great_arc_count, is_constant_width, is_smooth, is_strictly_convex, reducedness_certificate, thickness,
};
use sphereduce::{Body, SpherePoint};
use thiserror::Error;

use bodyfile::BodyFile;
use render::{render_svg, Projection, RenderSpec};

/// Tolerance for comparing measured metrics with a file's predictions.
pub const PREDICTION_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid body: {0}")]
    Validate(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("{0}")]
    UnknownProperty(String),
    #[error("cannot render: {0}")]
    Render(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validate(_) => 3,
            CliError::Params(_) => 4,
            CliError::UnknownProperty(_) => 5,
            CliError::Render(_) => 6,
            CliError::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sphereduce",
    version,
    about = "Convex bodies on the sphere: width, thickness, reducedness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print thickness, diameter, width range and convexity flags of a body file.
    Metrics {
        input: PathBuf,
        /// Emit one JSON object instead of `key: value` lines.
        #[arg(long)]
        json: bool,
    },
    /// Build bodies with known metrics.
    Gallery {
        #[command(subcommand)]
        command: GalleryCommand,
    },
    /// Run a property suite (`all` for every property, `list` to list them).
    Verify(VerifyArgs),
    /// Draw a body as SVG.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "orthographic")]
        projection: Projection,
        /// View pole as `x,y,z`; defaults to the boundary centroid.
        #[arg(long)]
        view: Option<String>,
        /// Overlay a minimal lune with its semicircle centers.
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 512)]
        size: u32,
    },
}

#[derive(Subcommand, Debug)]
enum GalleryCommand {
    Make(MakeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MakeKind {
    Disk,
    QuarterDisk,
    OddGon,
    Example,
    Reuleaux,
}

#[derive(Args, Debug)]
struct MakeArgs {
    #[arg(value_enum)]
    kind: MakeKind,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<f64>,
    /// Direction of the first straight side of a quarter disk, in radians.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    orientation: f64,
    /// Center of a disk or quarter disk as `x,y,z`.
    #[arg(long)]
    center: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    thickness: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    property: String,
    #[arg(long, env = "SPHEREDUCE_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    /// Restrict to one generator family.
    #[arg(long)]
    family: Option<String>,
    /// Include wall-clock runtime in the reports.
    #[arg(long)]
    timing: bool,
    /// Re-run the single trial with this trial seed.
    #[arg(long)]
    replay: Option<u64>,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Metrics { input, json } => metrics(&input, json, out),
        Command::Gallery {
            command: GalleryCommand::Make(args),
        } => gallery(&args, out),
        Command::Verify(args) => verify(&args, out, err),
        Command::Render {
            input,
            output,
            projection,
            view,
            witness,
            size,
        } => render_cmd(
            &input,
            output.as_deref(),
            projection,
            view.as_deref(),
            witness,
            size,
            out,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "sphereduce: {e}");
            e.exit_code()
        }
    }
}

fn parse_point(s: &str, code: fn(String) -> CliError) -> Result<SpherePoint, CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| code(format!("bad vector {s:?}: {e}")))?;
    if parts.len() != 3 {
        return Err(code(format!("expected x,y,z but got {s:?}")));
    }
    SpherePoint::from_vec(sphereduce::Vec3::new(parts[0], parts[1], parts[2]))
        .ok_or_else(|| code(format!("vector {s:?} has no direction")))
}

#[derive(Serialize)]
struct Metrics {
    arcs: usize,
    great_arcs: usize,
    area: f64,
    perimeter: f64,
    thickness: f64,
    diameter: f64,
    diameter_bound: f64,
    min_width: f64,
    max_width: f64,
    width_spread: f64,
    constant_width: bool,
    strictly_convex: bool,
    smooth: bool,
    reducedness: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted_thickness: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted_diameter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prediction: Option<&'static str>,
}

fn measure(body: &Body, meta: Option<&GalleryMeta>) -> Metrics {
    let delta = thickness(body).value;
    let diameter = body.diameter();
    let cw = is_constant_width(body, PREDICTION_TOL);
    let prediction = meta.map(|m| {
        let p = &m.predicted;
        let ok = (p.thickness - delta).abs() <= PREDICTION_TOL
            && p.diameter.is_none_or(|d| (d - diameter).abs() <= PREDICTION_TOL)
            && p.constant_width == cw.constant;
        if ok {
            "agrees"
        } else {
            "disagrees"
        }
    });
    Metrics {
        arcs: body.arcs().len(),
        great_arcs: great_arc_count(body),
        area: body.area(),
        perimeter: body.perimeter(),
        thickness: delta,
        diameter,
        diameter_bound: diameter_bound(delta),
        min_width: cw.min_width,
        max_width: cw.max_width,
        width_spread: cw.spread,
        constant_width: cw.constant,
        strictly_convex: is_strictly_convex(body),
        smooth: is_smooth(body),
        reducedness: reducedness_certificate(body).grade(),
        predicted_thickness: meta.map(|m| m.predicted.thickness),
        predicted_diameter: meta.and_then(|m| m.predicted.diameter),
        prediction,
    }
}

fn metrics(input: &Path, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = BodyFile::load(input)?;
    let body = file.body()?;
    let m = measure(&body, file.gallery_meta().as_ref());
    let value = serde_json::to_value(&m).expect("serializable");
    if json {
        writeln!(out, "{value}")?;
    } else if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            match v {
                serde_json::Value::String(s) => writeln!(out, "{k}: {s}")?,
                v => writeln!(out, "{k}: {v}")?,
            }
        }
    }
    Ok(0)
}

fn require(name: &str, v: Option<f64>) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Params(format!("--{name} is required")))
}

fn make(args: &MakeArgs) -> Result<GalleryBody, CliError> {
    let center = match &args.center {
        Some(s) => parse_point(s, CliError::Params)?,
        None => SpherePoint::north(),
    };
    let built = match args.kind {
        MakeKind::Disk => make_disk(center, require("rho", args.rho)?),
        MakeKind::QuarterDisk => make_quarter_disk(center, require("rho", args.rho)?, args.orientation),
        MakeKind::OddGon => {
            let n = args.n.ok_or_else(|| CliError::Params("--n is required".into()))?;
            make_regular_odd_gon(n, require("thickness", args.thickness)?)
        }
        MakeKind::Example => make_example_body(require("kappa", args.kappa)?, require("sigma", args.sigma)?),
        MakeKind::Reuleaux => make_reuleaux_triangle(require("kappa", args.kappa)?),
    };
    built.map_err(|e| match e {
        sphereduce::gallery::GalleryError::Body(b) => CliError::Validate(b.to_string()),
        other => CliError::Params(other.to_string()),
    })
}

fn gallery(args: &MakeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = make(args)?;
    let meta = serde_json::to_value(&g.meta).expect("serializable");
    let text = BodyFile::from_body(&g.body, Some(meta)).to_json();
    match &args.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct ReplayRecord<'a> {
    property: &'a str,
    family: &'a str,
    trial_seed: u64,
    outcome: sphereduce::verifier::Outcome,
    descriptor: &'a str,
    reason: &'a str,
    violation: bool,
    measured: std::collections::BTreeMap<&'a str, f64>,
}

fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let family = match &args.family {
        Some(name) => Some(Family::parse(name).ok_or_else(|| CliError::Params(format!("unknown family {name}")))?),
        None => None,
    };
    let to_cli = |e: VerifyError| match e {
        VerifyError::UnknownProperty(_) => CliError::UnknownProperty(e.to_string()),
        VerifyError::FamilyNotAllowed { .. } => CliError::Params(e.to_string()),
    };
    if args.property == "list" {
        for p in registry() {
            writeln!(out, "{}\t{}", p.id, p.statement)?;
        }
        return Ok(0);
    }
    if let Some(trial_seed) = args.replay {
        let def = find_property(&args.property).map_err(to_cli)?;
        let family = family.unwrap_or(def.families[0]);
        let t = replay(def.id, family, trial_seed).map_err(to_cli)?;
        let record = ReplayRecord {
            property: def.id,
            family: family.name(),
            trial_seed,
            outcome: t.outcome,
            descriptor: &t.descriptor,
            reason: &t.reason,
            violation: t.violation,
            measured: t.measured.iter().copied().collect(),
        };
        writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?;
        return Ok(if t.outcome == sphereduce::verifier::Outcome::Fail {
            1
        } else {
            0
        });
    }
    let ids: Vec<&str> = if args.property == "all" {
        registry()
            .iter()
            .filter(|p| family.is_none_or(|f| p.families.contains(&f)))
            .map(|p| p.id)
            .collect()
    } else {
        vec![find_property(&args.property).map_err(to_cli)?.id]
    };
    let options = RunOptions {
        trials: args.trials,
        family,
        timing: args.timing,
    };
    let mut all_pass = true;
    for id in ids {
        let report = run_property(id, args.seed, &options).map_err(to_cli)?;
        writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?;
        out.flush()?;
        let verdict = if report.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            err,
            "{id:<22} {verdict} {}/{} passed, {} skipped",
            report.passed, report.trials, report.skipped
        );
        all_pass &= report.passed();
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn render_cmd(
    input: &Path,
    output: Option<&Path>,
    projection: Projection,
    view: Option<&str>,
    witness: bool,
    size: u32,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let file = BodyFile::load(input)?;
    let body = file.body()?;
    let view = view.map(|v| parse_point(v, CliError::Params)).transpose()?;
    let svg = render_svg(
        &body,
        &RenderSpec {
            projection,
            view,
            witness,
            size,
        },
    )?;
    match output {
        Some(path) => std::fs::write(path, svg)?,
        None => out.write_all(svg.as_bytes())?,
    }
    Ok(0)
}
