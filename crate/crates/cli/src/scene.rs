//! Scene files: named points, lines and triangles with exact rational
//! coordinates, plus an optional figure description.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;
use trihom::kernel::{ProjLine, ProjPoint, Rational, Triangle};

pub const SCENE_SCHEMA: &str = "trihom-scene/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SceneError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("parse error: {kind} `{name}` has the zero vector as coordinates")]
    ZeroVector { kind: &'static str, name: String },
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("unsupported schema `{0}`")]
    Schema(String),
    #[error("invalid scene: {0}")]
    Invalid(String),
}

/// Parses `-12`, `7`, `4/6` (reduced on parse). Decimals and exponents are
/// rejected so every value is exact by construction.
pub fn parse_rational(s: &str) -> Result<Rational, SceneError> {
    let bad = || SceneError::MalformedRational(s.to_string());
    let int = |t: &str| -> Option<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        None => int(s).map(Rational::from_integer).ok_or_else(bad),
        Some((n, d)) => {
            let n = int(n).ok_or_else(bad)?;
            let d = int(d).filter(|d| !d.is_zero()).ok_or_else(bad)?;
            Ok(Rational::new(n, d))
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Point,
    Line,
    Triangle,
    /// Segment between two named points.
    Segment,
    /// Full line through two named points.
    Join,
}

impl ElementKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Point => "point",
            Self::Line => "line",
            Self::Triangle => "triangle",
            Self::Segment => "segment",
            Self::Join => "join",
        }
    }

    fn arity(self) -> usize {
        match self {
            Self::Segment | Self::Join => 2,
            _ => 1,
        }
    }
}

pub const STROKE_CLASSES: [&str; 7] = ["base", "t1", "t2", "t3", "aux", "centers", "point"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub kind: ElementKind,
    pub refs: Vec<String>,
    pub class: Option<String>,
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FigureSpec {
    pub title: Option<String>,
    /// `[xmin, ymin, xmax, ymax]`; computed from the scene when absent.
    pub viewport: Option<[Rational; 4]>,
    /// Drawn in order; every named object is drawn when absent.
    pub elements: Option<Vec<Element>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scene {
    pub points: BTreeMap<String, [Rational; 3]>,
    pub lines: BTreeMap<String, [Rational; 3]>,
    pub triangles: BTreeMap<String, [String; 3]>,
    pub figure: Option<FigureSpec>,
}

/// A JSON object whose keys must be distinct.
struct UniqueMap<V>(BTreeMap<String, V>);

impl<V> Default for UniqueMap<V> {
    fn default() -> Self {
        Self(BTreeMap::new())
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V_<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for V_<V> {
            type Value = UniqueMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with unique names")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> Result<Self::Value, A::Error> {
                let mut m = BTreeMap::new();
                while let Some(k) = a.next_key::<String>()? {
                    if m.contains_key(&k) {
                        return Err(de::Error::custom(format!("duplicate name `{k}`")));
                    }
                    let v = a.next_value()?;
                    m.insert(k, v);
                }
                Ok(UniqueMap(m))
            }
        }
        d.deserialize_map(V_(PhantomData))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    kind: ElementKind,
    refs: Vec<String>,
    #[serde(default)]
    class: Option<String>,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFigure {
    #[serde(default)]
    title: Option<String>,
    #[serde(default)]
    viewport: Option<[String; 4]>,
    #[serde(default)]
    elements: Option<Vec<RawElement>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    #[serde(default)]
    schema: Option<String>,
    #[serde(default)]
    points: UniqueMap<[String; 3]>,
    #[serde(default)]
    lines: UniqueMap<[String; 3]>,
    #[serde(default)]
    triangles: UniqueMap<[String; 3]>,
    #[serde(default)]
    figure: Option<RawFigure>,
}

fn triple(kind: &'static str, name: &str, raw: &[String; 3]) -> Result<[Rational; 3], SceneError> {
    let [x, y, z] = raw;
    let v = [parse_rational(x)?, parse_rational(y)?, parse_rational(z)?];
    if v.iter().all(Zero::is_zero) {
        return Err(SceneError::ZeroVector {
            kind,
            name: name.to_string(),
        });
    }
    Ok(v)
}

fn parse_error(e: serde_json::Error) -> SceneError {
    SceneError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let raw: RawScene = serde_json::from_str(text).map_err(parse_error)?;
    if let Some(s) = &raw.schema {
        if s != SCENE_SCHEMA {
            return Err(SceneError::Schema(s.clone()));
        }
    }
    let mut scene = Scene::default();
    for (name, v) in &raw.points.0 {
        scene.points.insert(name.clone(), triple("point", name, v)?);
    }
    for (name, v) in &raw.lines.0 {
        scene.lines.insert(name.clone(), triple("line", name, v)?);
    }
    scene.triangles = raw.triangles.0;
    for refs in scene.triangles.values() {
        for r in refs {
            scene.point(r)?;
        }
    }
    if let Some(f) = raw.figure {
        scene.figure = Some(parse_figure(&scene, f)?);
    }
    Ok(scene)
}

fn parse_figure(scene: &Scene, f: RawFigure) -> Result<FigureSpec, SceneError> {
    let viewport = match f.viewport {
        None => None,
        Some([a, b, c, d]) => Some([
            parse_rational(&a)?,
            parse_rational(&b)?,
            parse_rational(&c)?,
            parse_rational(&d)?,
        ]),
    };
    let elements = match f.elements {
        None => None,
        Some(raw) => {
            let mut out = Vec::with_capacity(raw.len());
            for e in raw {
                if e.refs.len() != e.kind.arity() {
                    return Err(SceneError::Invalid(format!(
                        "{} element takes {} reference(s), got {}",
                        e.kind.name(),
                        e.kind.arity(),
                        e.refs.len()
                    )));
                }
                if let Some(c) = &e.class {
                    if !STROKE_CLASSES.contains(&c.as_str()) {
                        return Err(SceneError::Invalid(format!("unknown stroke class `{c}`")));
                    }
                }
                for r in &e.refs {
                    match e.kind {
                        ElementKind::Line => scene.line(r).map(drop)?,
                        ElementKind::Triangle => scene.triangle(r).map(drop)?,
                        _ => scene.point(r).map(drop)?,
                    }
                }
                out.push(Element {
                    kind: e.kind,
                    refs: e.refs,
                    class: e.class,
                    label: e.label,
                });
            }
            Some(out)
        }
    };
    Ok(FigureSpec {
        title: f.title,
        viewport,
        elements,
    })
}

fn triple_json(v: &[Rational; 3]) -> Value {
    Value::Array(
        v.iter()
            .map(|r| Value::String(format_rational(r)))
            .collect(),
    )
}

/// Scene as JSON with sorted keys and reduced rationals.
pub fn scene_to_json(scene: &Scene) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCENE_SCHEMA));
    let named = |it: &BTreeMap<String, [Rational; 3]>| {
        Value::Object(
            it.iter()
                .map(|(k, v)| (k.clone(), triple_json(v)))
                .collect(),
        )
    };
    m.insert("points".into(), named(&scene.points));
    m.insert("lines".into(), named(&scene.lines));
    m.insert(
        "triangles".into(),
        Value::Object(
            scene
                .triangles
                .iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect(),
        ),
    );
    if let Some(f) = &scene.figure {
        let mut fig = Map::new();
        if let Some(t) = &f.title {
            fig.insert("title".into(), json!(t));
        }
        if let Some(v) = &f.viewport {
            fig.insert(
                "viewport".into(),
                Value::Array(v.iter().map(|r| json!(format_rational(r))).collect()),
            );
        }
        if let Some(es) = &f.elements {
            let es = es
                .iter()
                .map(|e| {
                    let mut o = Map::new();
                    o.insert("kind".into(), json!(e.kind.name()));
                    o.insert("refs".into(), json!(e.refs));
                    if let Some(c) = &e.class {
                        o.insert("class".into(), json!(c));
                    }
                    if let Some(l) = &e.label {
                        o.insert("label".into(), json!(l));
                    }
                    Value::Object(o)
                })
                .collect();
            fig.insert("elements".into(), Value::Array(es));
        }
        m.insert("figure".into(), Value::Object(fig));
    }
    Value::Object(m)
}

pub fn emit_scene(scene: &Scene) -> String {
    let mut s = serde_json::to_string_pretty(&scene_to_json(scene)).expect("serializable");
    s.push('\n');
    s
}

impl Scene {
    pub fn point(&self, name: &str) -> Result<ProjPoint, SceneError> {
        let v = self
            .points
            .get(name)
            .ok_or_else(|| SceneError::UnknownName {
                kind: "point",
                name: name.to_string(),
            })?;
        ProjPoint::from_rationals(v).map_err(|_| SceneError::ZeroVector {
            kind: "point",
            name: name.to_string(),
        })
    }

    pub fn line(&self, name: &str) -> Result<ProjLine, SceneError> {
        let v = self
            .lines
            .get(name)
            .ok_or_else(|| SceneError::UnknownName {
                kind: "line",
                name: name.to_string(),
            })?;
        ProjLine::from_rationals(v).map_err(|_| SceneError::ZeroVector {
            kind: "line",
            name: name.to_string(),
        })
    }

    /// Vertices of a named triangle; degeneracy is left to the caller.
    pub fn triangle_vertices(&self, name: &str) -> Result<[ProjPoint; 3], SceneError> {
        let refs = self
            .triangles
            .get(name)
            .ok_or_else(|| SceneError::UnknownName {
                kind: "triangle",
                name: name.to_string(),
            })?;
        Ok([
            self.point(&refs[0])?,
            self.point(&refs[1])?,
            self.point(&refs[2])?,
        ])
    }

    pub fn triangle(&self, name: &str) -> Result<[String; 3], SceneError> {
        self.triangles
            .get(name)
            .cloned()
            .ok_or_else(|| SceneError::UnknownName {
                kind: "triangle",
                name: name.to_string(),
            })
    }

    pub fn insert_point(&mut self, name: &str, p: &ProjPoint) {
        self.points.insert(name.to_string(), p.to_rationals());
    }

    pub fn insert_line(&mut self, name: &str, l: &ProjLine) {
        self.lines.insert(name.to_string(), l.to_rationals());
    }

    /// Adds the vertices as `{prefix}A`-style names given in `names`, then
    /// the triangle itself.
    pub fn insert_triangle(&mut self, name: &str, names: [&str; 3], t: &Triangle) {
        for (n, v) in names.iter().zip(t.vertices()) {
            self.insert_point(n, v);
        }
        self.triangles
            .insert(name.to_string(), names.map(str::to_string));
    }
}
