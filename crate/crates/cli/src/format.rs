//! JSON interchange formats.
//!
//! A complex document names its color count and either `generators` (closed on
//! load) or `faces` (must already be a valid complex). Faces are lists of
//! `[color, index]` pairs:
//!
//! ```json
//! {"num_colors": 2, "generators": [[[1, 2], [2, 1]], [[1, 1], [2, 2]]]}
//! ```
//!
//! A flag vector document lists `{colors, count}` entries; sets left out count
//! zero. Emission is canonical: keys sorted, faces and color sets in canonical
//! order, one list item per line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use colorshift_core::construction::{ConstructionReport, PredictedCount};
use colorshift_core::flag::{CoarseFVector, FlagKind, FlagVector};
use colorshift_core::{ColorSet, ColoredComplex, Face, Vertex};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

fn invalid(e: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid(e.to_string())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDocument {
    num_colors: usize,
    #[serde(default)]
    generators: Option<Vec<Vec<[u32; 2]>>>,
    #[serde(default)]
    faces: Option<Vec<Vec<[u32; 2]>>>,
}

fn parse_face(pairs: &[[u32; 2]]) -> Result<Face, FormatError> {
    let vertices = pairs.iter().map(|&[color, index]| Vertex::new(color, index)).collect::<Result<Vec<_>, _>>();
    Face::new(vertices.map_err(invalid)?).map_err(invalid)
}

pub fn parse_complex(text: &str) -> Result<ColoredComplex, FormatError> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    match (doc.generators, doc.faces) {
        (Some(gens), None) => {
            let gens = gens.iter().map(|f| parse_face(f)).collect::<Result<Vec<_>, _>>()?;
            ColoredComplex::from_generators(doc.num_colors, gens).map_err(invalid)
        }
        (None, Some(faces)) => {
            let faces = faces.iter().map(|f| parse_face(f)).collect::<Result<BTreeSet<_>, _>>()?;
            ColoredComplex::from_faces(doc.num_colors, faces).map_err(invalid)
        }
        _ => Err(FormatError::Invalid("exactly one of \"generators\" and \"faces\" is required".into())),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagEntry {
    colors: Vec<u32>,
    count: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagVectorDocument {
    num_colors: usize,
    kind: String,
    entries: Vec<FlagEntry>,
}

pub fn parse_flag_vector(text: &str) -> Result<FlagVector, FormatError> {
    let doc: FlagVectorDocument = serde_json::from_str(text)?;
    let kind = match doc.kind.as_str() {
        "f" => FlagKind::F,
        "h" => FlagKind::H,
        other => return Err(FormatError::Invalid(format!("kind must be \"f\" or \"h\", got {other:?}"))),
    };
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(doc.entries.len());
    for e in &doc.entries {
        let distinct: BTreeSet<u32> = e.colors.iter().copied().collect();
        if distinct.len() != e.colors.len() {
            return Err(FormatError::Invalid(format!("repeated color in {:?}", e.colors)));
        }
        if let Some(&c) = e.colors.iter().find(|&&c| c == 0 || c as usize > doc.num_colors) {
            return Err(FormatError::Invalid(format!("color {c} outside 1..={}", doc.num_colors)));
        }
        let set = ColorSet::from_colors(e.colors.iter().copied()).map_err(invalid)?;
        if !seen.insert(set) {
            return Err(FormatError::Invalid(format!("duplicate entry for colors {set}")));
        }
        entries.push((set, e.count));
    }
    let v = FlagVector::from_entries(doc.num_colors, kind, entries).map_err(invalid)?;
    if kind == FlagKind::F {
        v.check_f_semantics().map_err(invalid)?;
    }
    Ok(v)
}

fn face_value(face: &Face) -> Value {
    Value::Array(face.vertices().iter().map(|v| json!([v.color, v.index])).collect())
}

fn colors_value(colors: ColorSet) -> Value {
    Value::Array(colors.iter().map(Value::from).collect())
}

enum Field {
    Scalar(Value),
    /// Printed one element per line.
    List(Vec<Value>),
}

/// Writes a JSON object with one key per line, list values spread over lines.
/// Keys must arrive sorted.
fn write_object(fields: &[(&str, Field)]) -> String {
    debug_assert!(fields.windows(2).all(|w| w[0].0 < w[1].0));
    let mut out = String::from("{\n");
    for (i, (key, field)) in fields.iter().enumerate() {
        write!(out, "  \"{key}\": ").unwrap();
        match field {
            Field::Scalar(v) => out.push_str(&v.to_string()),
            Field::List(items) if items.is_empty() => out.push_str("[]"),
            Field::List(items) => {
                out.push_str("[\n");
                for (j, item) in items.iter().enumerate() {
                    write!(out, "    {item}").unwrap();
                    out.push_str(if j + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str("  ]");
            }
        }
        out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

/// Canonical `faces` document for `c`.
pub fn emit_complex(c: &ColoredComplex) -> String {
    write_object(&[
        ("faces", Field::List(c.faces().iter().map(face_value).collect())),
        ("num_colors", Field::Scalar(c.num_colors().into())),
    ])
}

fn count_value(colors: ColorSet, count: impl Into<Value>) -> Value {
    // serde_json's default map is sorted, so "colors" precedes "count".
    json!({ "colors": colors_value(colors), "count": count.into() })
}

/// Flag vector document. Zero entries are left out, except the empty set.
pub fn emit_flag_vector(v: &FlagVector) -> String {
    let entries = v
        .iter()
        .filter(|&(s, count)| s.is_empty() || count != 0)
        .map(|(s, count)| count_value(s, count))
        .collect();
    let kind = match v.kind() {
        FlagKind::F => "f",
        FlagKind::H => "h",
    };
    write_object(&[
        ("entries", Field::List(entries)),
        ("kind", Field::Scalar(kind.into())),
        ("num_colors", Field::Scalar(v.num_colors().into())),
    ])
}

pub fn emit_coarse(v: &CoarseFVector) -> String {
    write_object(&[("coarse_f", Field::Scalar(v.0.clone().into()))])
}

pub fn emit_face_list(key: &str, faces: &[Face]) -> String {
    write_object(&[(key, Field::List(faces.iter().map(face_value).collect()))])
}

pub fn emit_report(r: &ConstructionReport) -> String {
    let predicted = |items: &[PredictedCount]| Field::List(items.iter().map(|p| count_value(p.colors, p.count)).collect());
    write_object(&[
        ("apexes", Field::List(r.apexes.iter().map(|v| json!([v.color, v.index])).collect())),
        ("k", Field::Scalar(r.k.into())),
        ("m", Field::Scalar(r.m.into())),
        ("n", Field::Scalar(r.n.into())),
        ("predicted_edges", predicted(&r.predicted_edges)),
        ("predicted_singletons", predicted(&r.predicted_singletons)),
        ("predicted_tops", predicted(&r.predicted_tops)),
        ("shift_maximal", Field::List(r.shift_maximal.iter().map(face_value).collect())),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use colorshift_core::flag::flag_f;
    use colorshift_core::shift::shift_closure;
    use proptest::prelude::*;

    #[test]
    fn parse_generators_document() {
        let c = parse_complex(r#"{"num_colors":2,"generators":[[[1,1],[2,1]]]}"#).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.num_colors(), 2);
    }

    #[test]
    fn parse_faces_document() {
        let c = parse_complex(r#"{"num_colors":2,"faces":[[]]}"#).unwrap();
        assert_eq!(c, ColoredComplex::empty_face(2).unwrap());
        let empty = parse_complex(r#"{"num_colors":2,"faces":[]}"#).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn faces_document_must_be_closed() {
        let err = parse_complex(r#"{"num_colors":2,"faces":[[[1,1],[2,1]]]}"#).unwrap_err();
        let FormatError::Invalid(msg) = err else { panic!("{err:?}") };
        assert!(msg.contains("closure violation") && msg.contains("missing"), "{msg}");
    }

    #[test]
    fn document_shape_errors() {
        assert!(matches!(parse_complex(r#"{"num_colors":2}"#), Err(FormatError::Invalid(_))));
        assert!(matches!(
            parse_complex(r#"{"num_colors":2,"faces":[[]],"generators":[[]]}"#),
            Err(FormatError::Invalid(_))
        ));
        assert!(matches!(
            parse_complex(r#"{"num_colors":2,"generators":[[[1,1],[1,2]]]}"#),
            Err(FormatError::Invalid(_))
        ));
        assert!(matches!(
            parse_complex(r#"{"num_colors":2,"generators":[[[1,0]]]}"#),
            Err(FormatError::Invalid(_))
        ));
        let err = parse_complex("{\n  \"num_colors\": 2,\n  \"faces\": [[]\n}").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 4, .. }), "{err:?}");
        assert!(matches!(parse_complex(r#"{"num_colors":2,"faces":[[]],"extra":1}"#), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn emit_empty_face_complex() {
        let c = ColoredComplex::empty_face(2).unwrap();
        assert_eq!(emit_complex(&c), "{\n  \"faces\": [\n    []\n  ],\n  \"num_colors\": 2\n}\n");
    }

    #[test]
    fn flag_document_round_trip() {
        let text = r#"{"num_colors":2,"kind":"f","entries":[{"colors":[],"count":1},{"colors":[2,1],"count":5},{"colors":[1],"count":2},{"colors":[2],"count":3}]}"#;
        let v = parse_flag_vector(text).unwrap();
        assert_eq!(v.get(ColorSet::full(2)), 5);
        assert_eq!(parse_flag_vector(&emit_flag_vector(&v)).unwrap(), v);
        assert_eq!(
            emit_flag_vector(&v),
            "{\n  \"entries\": [\n    {\"colors\":[],\"count\":1},\n    {\"colors\":[1],\"count\":2},\n    \
             {\"colors\":[2],\"count\":3},\n    {\"colors\":[1,2],\"count\":5}\n  ],\n  \"kind\": \"f\",\n  \
             \"num_colors\": 2\n}\n"
        );
    }

    #[test]
    fn flag_document_errors() {
        let dup = r#"{"num_colors":2,"kind":"f","entries":[{"colors":[1],"count":1},{"colors":[1],"count":2}]}"#;
        assert!(matches!(parse_flag_vector(dup), Err(FormatError::Invalid(_))));
        let range = r#"{"num_colors":2,"kind":"f","entries":[{"colors":[3],"count":1}]}"#;
        assert!(matches!(parse_flag_vector(range), Err(FormatError::Invalid(_))));
        let kind = r#"{"num_colors":2,"kind":"g","entries":[]}"#;
        assert!(matches!(parse_flag_vector(kind), Err(FormatError::Invalid(_))));
        let neg = r#"{"num_colors":2,"kind":"f","entries":[{"colors":[1],"count":-1}]}"#;
        assert!(matches!(parse_flag_vector(neg), Err(FormatError::Invalid(_))));
        let h = r#"{"num_colors":2,"kind":"h","entries":[{"colors":[1],"count":-1}]}"#;
        assert_eq!(parse_flag_vector(h).unwrap().get(ColorSet::singleton(1)), -1);
    }

    fn complex_strategy() -> impl Strategy<Value = ColoredComplex> {
        let face = prop::collection::btree_map(1u32..=3, 1u32..=3, 0..=3);
        (1usize..=3, prop::collection::vec(face, 0..6)).prop_map(|(n, faces)| {
            let faces = faces.into_iter().map(|m| {
                let pairs: Vec<(u32, u32)> = m.into_iter().filter(|&(c, _)| c as usize <= n).collect();
                Face::from_pairs(&pairs).unwrap()
            });
            shift_closure(n, faces).unwrap()
        })
    }

    proptest! {
        #[test]
        fn emit_then_parse_round_trips(c in complex_strategy()) {
            let text = emit_complex(&c);
            prop_assert_eq!(parse_complex(&text).unwrap(), c.clone());
            let f = flag_f(&c);
            prop_assert_eq!(parse_flag_vector(&emit_flag_vector(&f)).unwrap(), f);
        }

        #[test]
        fn emission_is_injective(a in complex_strategy(), b in complex_strategy()) {
            prop_assert_eq!(a == b, emit_complex(&a) == emit_complex(&b));
        }
    }
}
