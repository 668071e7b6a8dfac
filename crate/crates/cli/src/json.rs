//! JSON file formats for descriptors, strip triangulations, polygon
//! triangulations and frieze patterns.

use frieze_core::{
    Arc, Boundary, FriezePattern, M2Class, MarkedPoint, PolygonTriangulation, QuiddityDescriptor,
    StripTriangulation,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

impl FormatError {
    fn invalid(field: impl Into<String>, message: impl ToString) -> Self {
        FormatError::Invalid { field: field.into(), message: message.to_string() }
    }
}

fn from_str<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiddityFile {
    pub left_period: Vec<i64>,
    pub core: Vec<i64>,
    pub right_period: Vec<i64>,
    pub core_start: i64,
}

impl From<&QuiddityDescriptor> for QuiddityFile {
    fn from(q: &QuiddityDescriptor) -> Self {
        QuiddityFile {
            left_period: q.left_period().to_vec(),
            core: q.core().to_vec(),
            right_period: q.right_period().to_vec(),
            core_start: q.core_start(),
        }
    }
}

pub fn parse_quiddity(text: &str) -> Result<QuiddityDescriptor, FormatError> {
    let f: QuiddityFile = from_str(text)?;
    let fields = [("left_period", &f.left_period), ("core", &f.core), ("right_period", &f.right_period)];
    for (name, values) in fields {
        if let Some(k) = values.iter().position(|&v| v < 1) {
            return Err(FormatError::invalid(format!("{name}[{k}]"), format!("entries must be >= 1, got {}", values[k])));
        }
    }
    QuiddityDescriptor::new(f.left_period, f.core, f.right_period, f.core_start)
        .map_err(|e| FormatError::invalid("quiddity", e))
}

pub fn emit_quiddity(q: &QuiddityDescriptor) -> String {
    to_string(&QuiddityFile::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcFile {
    pub a: (String, i64),
    pub b: (String, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripFile {
    pub window: [i64; 2],
    pub margin: i64,
    pub m2_class: String,
    pub arcs: Vec<ArcFile>,
    /// Upper points carrying no arc; the others are implied by the arcs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub upper_points: Vec<i64>,
}

pub fn parse_m2_class(s: &str) -> Option<M2Class> {
    match s {
        "empty" => Some(M2Class::Empty),
        "nat" => Some(M2Class::NatRight),
        "neg_nat" => Some(M2Class::NatLeft),
        "int" => Some(M2Class::BiInfinite),
        _ => {
            let n: u64 = s.strip_prefix("finite:")?.parse().ok()?;
            (n >= 1).then_some(M2Class::Finite(n))
        }
    }
}

fn point(field: &str, (side, index): &(String, i64)) -> Result<MarkedPoint, FormatError> {
    match side.as_str() {
        "L" => Ok(MarkedPoint::lower(*index)),
        "U" => Ok(MarkedPoint::upper(*index)),
        other => Err(FormatError::invalid(field, format!("boundary must be \"L\" or \"U\", got {other:?}"))),
    }
}

fn point_file(p: MarkedPoint) -> (String, i64) {
    let side = match p.boundary {
        Boundary::Lower => "L",
        Boundary::Upper => "U",
    };
    (side.to_string(), p.index)
}

pub fn parse_strip(text: &str) -> Result<StripTriangulation, FormatError> {
    let f: StripFile = from_str(text)?;
    let class = parse_m2_class(&f.m2_class)
        .ok_or_else(|| FormatError::invalid("m2_class", format!("unknown class {:?}", f.m2_class)))?;
    let mut arcs = Vec::with_capacity(f.arcs.len());
    for (k, arc) in f.arcs.iter().enumerate() {
        let a = point(&format!("arcs[{k}].a"), &arc.a)?;
        let b = point(&format!("arcs[{k}].b"), &arc.b)?;
        arcs.push(Arc::new(a, b).map_err(|e| FormatError::invalid(format!("arcs[{k}]"), e))?);
    }
    let t = StripTriangulation::with_upper_points((f.window[0], f.window[1]), f.margin, class, arcs, f.upper_points)
        .map_err(|e| FormatError::invalid("strip", e))?;
    if let Some((x, y)) = t.crossing_pair() {
        return Err(FormatError::invalid("arcs", format!("{x:?} crosses {y:?}")));
    }
    Ok(t)
}

pub fn emit_strip(t: &StripTriangulation) -> String {
    let arcs = t
        .arcs()
        .iter()
        .map(|arc| {
            let (a, b) = arc.endpoints();
            ArcFile { a: point_file(a), b: point_file(b) }
        })
        .collect();
    let f = StripFile {
        window: [t.window().0, t.window().1],
        margin: t.margin(),
        m2_class: t.m2_class().to_string(),
        arcs,
        upper_points: t.special_upper_points().into_iter().map(|p| p.index).collect(),
    };
    to_string(&f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub n: u32,
    pub chords: Vec<(u32, u32)>,
}

pub fn parse_polygon(text: &str) -> Result<PolygonTriangulation, FormatError> {
    let f: PolygonFile = from_str(text)?;
    PolygonTriangulation::new(f.n, f.chords).map_err(|e| FormatError::invalid("chords", e))
}

pub fn emit_polygon(p: &PolygonTriangulation) -> String {
    to_string(&PolygonFile { n: p.n(), chords: p.chords().iter().copied().collect() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternFile {
    pub n: u32,
    pub cc: Vec<Vec<u64>>,
}

pub fn parse_pattern(text: &str) -> Result<FriezePattern, FormatError> {
    let f: PatternFile = from_str(text)?;
    let p = FriezePattern::from_table(f.n, f.cc)
        .ok_or_else(|| FormatError::invalid("cc", format!("expected an {0} x {0} table", f.n)))?;
    if !p.satisfies_rules() {
        return Err(FormatError::invalid("cc", "not a frieze pattern: border or unimodular rule fails"));
    }
    Ok(p)
}

pub fn emit_pattern(p: &FriezePattern) -> String {
    to_string(&PatternFile { n: p.n(), cc: p.table().to_vec() })
}
