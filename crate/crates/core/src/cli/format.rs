//! Node-set files: a JSON document with an integer `degree` and a list of
//! `[x, y]` pairs whose coordinates are exact rational literals (`"p"` or
//! `"p/q"`), never JSON floats.
//!
//! ```json
//! {
//!   "degree": 1,
//!   "nodes": [
//!     ["0", "0"],
//!     ["1/2", "0"],
//!     ["0", "-3"]
//!   ]
//! }
//! ```

use std::collections::HashMap;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::Deserialize;

use crate::geometry::{parse_scalar, NodeSet, Point, Scalar};

/// Parse failure with the position serde_json reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Coordinate(Scalar);

impl<'de> Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text)
            .map(Coordinate)
            .map_err(|e| de::Error::custom(format!("coordinate {text:?}: {e}")))
    }
}

struct NodeList(Vec<Point>);

impl<'de> Deserialize<'de> for NodeList {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct ListVisitor;

        impl<'de> Visitor<'de> for ListVisitor {
            type Value = NodeList;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-empty list of [x, y] coordinate-string pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<NodeList, A::Error> {
                let mut nodes = Vec::new();
                let mut seen: HashMap<Point, usize> = HashMap::new();
                while let Some((Coordinate(x), Coordinate(y))) = seq.next_element()? {
                    let p = Point::new(x, y);
                    if let Some(first) = seen.get(&p) {
                        return Err(de::Error::custom(format!(
                            "node {} duplicates node {first} {p}",
                            nodes.len()
                        )));
                    }
                    seen.insert(p.clone(), nodes.len());
                    nodes.push(p);
                }
                if nodes.is_empty() {
                    return Err(de::Error::custom("node list is empty"));
                }
                Ok(NodeList(nodes))
            }
        }

        d.deserialize_seq(ListVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    degree: usize,
    nodes: NodeList,
}

pub fn parse_node_set(text: &str) -> Result<NodeSet, ParseError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    NodeSet::new(raw.nodes.0, raw.degree).map_err(|e| ParseError {
        line: 0,
        column: 0,
        message: e.to_string(),
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

/// Canonical serialization, one node per line.
pub fn write_node_set(nodes: &NodeSet) -> String {
    let quote = |s: &Scalar| serde_json::to_string(&s.to_string()).expect("strings serialize");
    let body: Vec<String> = nodes
        .nodes()
        .iter()
        .map(|p| format!("    [{}, {}]", quote(&p.x), quote(&p.y)))
        .collect();
    format!(
        "{{\n  \"degree\": {},\n  \"nodes\": [\n{}\n  ]\n}}\n",
        nodes.degree(),
        body.join(",\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn parses_rational_literals() {
        let set = parse_node_set(r#"{"degree": 1, "nodes": [["0","0"], ["1/2","0"], ["0","-3"]]}"#)
            .unwrap();
        assert_eq!(set.degree(), 1);
        assert_eq!(set.nodes()[1], Point::new(rat(1, 2), rat(0, 1)));
    }

    #[test]
    fn zero_denominator_has_position() {
        let text = "{\n  \"degree\": 1,\n  \"nodes\": [[\"1/0\", \"0\"]]\n}";
        let err = parse_node_set(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("division by zero"), "{err}");
    }

    #[test]
    fn rejects_duplicates_floats_and_empty_lists() {
        let dup = r#"{"degree": 1, "nodes": [["0","0"], ["0/5","0"]]}"#;
        assert!(parse_node_set(dup)
            .unwrap_err()
            .message
            .contains("duplicates node 0"));
        let float = r#"{"degree": 1, "nodes": [[0.5, "0"]]}"#;
        assert!(parse_node_set(float).is_err());
        let empty = r#"{"degree": 1, "nodes": []}"#;
        assert!(parse_node_set(empty).unwrap_err().message.contains("empty"));
        let extra = r#"{"degree": 1, "nodes": [["0","0"]], "colour": 3}"#;
        assert!(parse_node_set(extra).is_err());
    }

    #[test]
    fn writes_what_it_reads() {
        let set = NodeSet::new(
            vec![Point::new(rat(-1, 3), rat(2, 1)), Point::from_ints(0, 7)],
            0,
        )
        .unwrap();
        let text = write_node_set(&set);
        assert!(text.contains(r#"["-1/3", "2"]"#));
        assert_eq!(parse_node_set(&text).unwrap(), set);
    }
}
