//! Graph files and class reports as JSON.
//!
//! A graph is `{"n": 4, "edges": [[0, 1, 3], [1, 2, "inf"]]}`. Every entry is
//! `[i, j, m]` with `i < j < n` and `m` an integer `>= 2` or the string
//! `"inf"`. Pairs not listed are infinite, so encoding drops them and lists
//! the finite pairs in lexicographic order. Decoding accepts entries in any
//! order but rejects a pair given twice.

use std::fmt;

use artin_randlab_core::{ClassReport, DefiningGraph, Label};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed graph at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid graph: {0}")]
    Invalid(#[from] artin_randlab_core::Error),
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; keep only the message.
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(cut) => full[..cut].to_string(),
            None => full,
        };
        ParseError::Syntax { line: e.line(), column: e.column(), message }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize, LabelEntry)>,
}

struct LabelEntry(Label);

impl<'de> Deserialize<'de> for LabelEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct LabelVisitor;

        impl Visitor<'_> for LabelVisitor {
            type Value = LabelEntry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer label >= 2 or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<LabelEntry, E> {
                u32::try_from(v)
                    .ok()
                    .and_then(|m| Label::finite(m).ok())
                    .map(LabelEntry)
                    .ok_or_else(|| E::invalid_value(de::Unexpected::Unsigned(v), &self))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<LabelEntry, E> {
                Err(E::invalid_value(de::Unexpected::Signed(v), &self))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<LabelEntry, E> {
                if v == "inf" {
                    Ok(LabelEntry(Label::Infinite))
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        d.deserialize_any(LabelVisitor)
    }
}

pub fn decode_graph(text: &str) -> Result<DefiningGraph, ParseError> {
    let file: GraphFile = serde_json::from_str(text)?;
    if file.n == 0 {
        return Err(artin_randlab_core::Error::TooSmall { need: 1, got: 0 }.into());
    }
    let edges: Vec<_> = file.edges.into_iter().map(|(i, j, l)| (i, j, l.0)).collect();
    Ok(DefiningGraph::new(file.n, &edges)?)
}

#[derive(Serialize)]
struct GraphOut {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

/// Canonical compact encoding: finite pairs only, sorted.
pub fn encode_graph(g: &DefiningGraph) -> String {
    let out = GraphOut { n: g.n(), edges: g.edges().collect() };
    serde_json::to_string(&out).expect("plain integers always serialize")
}

/// Serializes as `{"n": .., <class key>: bool, .., "properties": [..]}` with
/// keys in report order.
pub struct ReportJson<'a>(pub &'a ClassReport);

impl Serialize for ReportJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let flags = self.0.flags();
        let mut map = s.serialize_map(Some(flags.len() + 2))?;
        map.serialize_entry("n", &self.0.n)?;
        for (key, value) in flags {
            map.serialize_entry(key, &value)?;
        }
        let props: Vec<&str> = self.0.properties.iter().map(|p| p.as_str()).collect();
        map.serialize_entry("properties", &props)?;
        map.end()
    }
}

pub fn encode_report(r: &ClassReport) -> String {
    serde_json::to_string(&ReportJson(r)).expect("booleans and strings always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_mixed_labels() {
        let g = decode_graph(r#"{"n": 4, "edges": [[1, 2, "inf"], [0, 1, 3], [2, 3, 2]]}"#)
            .unwrap();
        assert_eq!(g.label(0, 1).unwrap(), Label::Finite(3));
        assert_eq!(g.label(1, 2).unwrap(), Label::Infinite);
        assert_eq!(g.label(0, 3).unwrap(), Label::Infinite);
        assert_eq!(encode_graph(&g), r#"{"n":4,"edges":[[0,1,3],[2,3,2]]}"#);
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = decode_graph("{\"n\": 3,\n \"edges\": [[0, 1, 1]]}").unwrap_err();
        match e {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode_graph("{\"n\": 3"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            decode_graph(r#"{"n": 3, "edges": [], "extra": 1}"#),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            decode_graph(r#"{"n": 3, "edges": [[0, 1, "infinity"]]}"#),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn structural_errors() {
        for text in [
            r#"{"n": 3, "edges": [[1, 0, 3]]}"#,
            r#"{"n": 3, "edges": [[0, 3, 3]]}"#,
            r#"{"n": 3, "edges": [[0, 1, 3], [0, 1, 4]]}"#,
            r#"{"n": 0, "edges": []}"#,
        ] {
            assert!(matches!(decode_graph(text), Err(ParseError::Invalid(_))), "{text}");
        }
    }

    #[test]
    fn report_keys_in_order() {
        let g = decode_graph(r#"{"n":3,"edges":[[0,1,5],[0,2,5],[1,2,5]]}"#).unwrap();
        let r = artin_randlab_core::classify::classify_all(&g).unwrap();
        let text = encode_report(&r);
        assert!(text.starts_with(r#"{"n":3,"connected":true,"irreducible":true,"join_2":false"#));
        assert!(text.contains(r#""xxl":true"#));
        assert!(text.contains(r#""CAT(0)""#));
    }
}
