//! JSON body files.
//!
//! ```json
//! { "polygon": [[1, 0, 0], [0, 1, 0], [0, 0, 1]] }
//! { "arcs": [{ "kind": "great", "from": [..], "to": [..] },
//!            { "kind": "circle", "from": [..], "to": [..], "center": [..], "radius": 0.5 }],
//!   "meta": { .. } }
//! ```
//!
//! Vectors within `1e-6` of unit norm are renormalized on load. Circle arcs
//! run counterclockwise about their center, from `from` to `to`.

use std::fmt;
use std::path::Path;

use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use sphereduce::gallery::GalleryMeta;
use sphereduce::sphere::RENORMALIZE_LIMIT;
use sphereduce::{Body, BoundaryArc, CircleArc, SpherePoint};

use crate::CliError;

/// A unit vector as it appears in a file: `[x, y, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(into = "[f64; 3]")]
pub struct UnitVec(pub SpherePoint);

impl From<UnitVec> for [f64; 3] {
    fn from(v: UnitVec) -> Self {
        v.0.coords()
    }
}

struct UnitVecVisitor;

impl<'de> Visitor<'de> for UnitVecVisitor {
    type Value = UnitVec;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a unit vector [x, y, z]")
    }

    // Errors raised here carry the position of the offending vector.
    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<UnitVec, A::Error> {
        let mut v = [0.0f64; 3];
        for (i, c) in v.iter_mut().enumerate() {
            *c = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(i, &self))?;
        }
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(4, &self));
        }
        SpherePoint::new(v[0], v[1], v[2]).map(UnitVec).map_err(|_| {
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            de::Error::custom(format!(
                "vector {v:?} has norm {norm}, expected 1 within {RENORMALIZE_LIMIT:e}"
            ))
        })
    }
}

impl<'de> Deserialize<'de> for UnitVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_seq(UnitVecVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ArcSpec {
    Great {
        from: UnitVec,
        to: UnitVec,
    },
    Circle {
        from: UnitVec,
        to: UnitVec,
        center: UnitVec,
        radius: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outline {
    Polygon(Vec<UnitVec>),
    Arcs(Vec<ArcSpec>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    polygon: Option<Vec<UnitVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arcs: Option<Vec<ArcSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BodyFile {
    pub outline: Outline,
    pub meta: Option<serde_json::Value>,
}

impl BodyFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let outline = match (raw.polygon, raw.arcs) {
            (Some(p), None) => Outline::Polygon(p),
            (None, Some(a)) => Outline::Arcs(a),
            _ => {
                return Err(CliError::Parse(
                    "expected exactly one of \"polygon\" or \"arcs\"".into(),
                ))
            }
        };
        Ok(BodyFile {
            outline,
            meta: raw.meta,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Every arc of `body` in `arcs` form.
    pub fn from_body(body: &Body, meta: Option<serde_json::Value>) -> Self {
        let arcs = body
            .arcs()
            .iter()
            .map(|a| match a {
                BoundaryArc::Great(g) => ArcSpec::Great {
                    from: UnitVec(g.from()),
                    to: UnitVec(g.to()),
                },
                BoundaryArc::Circle(c) => ArcSpec::Circle {
                    from: UnitVec(c.from()),
                    to: UnitVec(c.to()),
                    center: UnitVec(c.center()),
                    radius: c.radius(),
                },
            })
            .collect();
        BodyFile {
            outline: Outline::Arcs(arcs),
            meta,
        }
    }

    pub fn body(&self) -> Result<Body, CliError> {
        let body = match &self.outline {
            Outline::Polygon(vs) => Body::polygon(&vs.iter().map(|v| v.0).collect::<Vec<_>>()),
            Outline::Arcs(specs) => {
                let mut arcs = Vec::with_capacity(specs.len());
                for (i, s) in specs.iter().enumerate() {
                    let arc = match s {
                        ArcSpec::Great { from, to } => BoundaryArc::great(from.0, to.0),
                        ArcSpec::Circle {
                            from,
                            to,
                            center,
                            radius,
                        } => CircleArc::new(center.0, *radius, from.0, to.0).map(BoundaryArc::Circle),
                    };
                    arcs.push(arc.map_err(|e| CliError::Validate(format!("arc {i}: {e}")))?);
                }
                Body::new(arcs)
            }
        };
        body.map_err(|e| CliError::Validate(e.to_string()))
    }

    /// The meta block read as gallery metadata, when it is one.
    pub fn gallery_meta(&self) -> Option<GalleryMeta> {
        self.meta.clone().and_then(|m| serde_json::from_value(m).ok())
    }

    pub fn to_json(&self) -> String {
        let (polygon, arcs) = match &self.outline {
            Outline::Polygon(p) => (Some(p.clone()), None),
            Outline::Arcs(a) => (None, Some(a.clone())),
        };
        let raw = RawFile {
            polygon,
            arcs,
            meta: self.meta.clone(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
        s.push('\n');
        s
    }
}

impl fmt::Display for BodyFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
