//! JSON network documents.
//!
//! ```json
//! {
//!   "version": "mcflow/1",
//!   "k": 2,
//!   "nodes": ["s", "t"],
//!   "arcs": [
//!     {"id": "a", "tail": "s", "head": "t",
//!      "capacity": {"polygons": [{"halfspaces": [[[-1, 0], 0], [[0, -1], 0], [[1, 1], "3/2"]]}]}}
//!   ],
//!   "source": "s",
//!   "sink": "t",
//!   "flags": {"reducible_declared": false}
//! }
//! ```
//!
//! A halfspace `[[a, b], c]` reads `a·x + b·y <= c`; a third element `"<"`
//! makes it strict. Point capacities are written `{"points": [[x, y], ...]}`.
//! Rationals are integers or `"p/q"` strings.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::model::{Arc, EnhancedNetwork, Network};
use crate::num::{format_rational, parse_rational, Rational, Vector};
use crate::regions::{ConvexPolygon, Halfspace, Region};

pub const FORMAT_VERSION: &str = "mcflow/1";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub reducible_declared: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default = "default_version")]
    version: String,
    k: usize,
    nodes: Vec<String>,
    #[serde(default)]
    arcs: Vec<RawArc>,
    source: String,
    sink: String,
    #[serde(default)]
    flags: Flags,
}

fn default_version() -> String {
    FORMAT_VERSION.into()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    id: String,
    tail: String,
    head: String,
    capacity: Value,
}

/// A parsed network file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkDocument {
    pub version: String,
    pub network: EnhancedNetwork,
    pub flags: Flags,
}

impl NetworkDocument {
    pub fn new(network: EnhancedNetwork) -> Self {
        NetworkDocument {
            version: FORMAT_VERSION.into(),
            network,
            flags: Flags::default(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if raw.version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported version `{}`", raw.version)));
        }
        let k = raw.k;
        let mut arcs = Vec::with_capacity(raw.arcs.len());
        for a in raw.arcs {
            let capacity = parse_region(k, &a.capacity).map_err(|e| Error::ArcSemantic {
                arc: a.id.clone(),
                message: e.to_string(),
            })?;
            arcs.push(Arc::new(a.id, a.tail, a.head, capacity));
        }
        let network = EnhancedNetwork::new(Network {
            k,
            nodes: raw.nodes,
            arcs,
            source: raw.source,
            sink: raw.sink,
        })?;
        Ok(NetworkDocument {
            version: raw.version,
            network,
            flags: raw.flags,
        })
    }

    pub fn to_value(&self) -> Value {
        let net = &self.network;
        let arcs: Vec<Value> = net
            .arcs()
            .iter()
            .map(|a| {
                json!({
                    "id": a.id,
                    "tail": a.tail,
                    "head": a.head,
                    "capacity": region_to_value(&a.capacity),
                })
            })
            .collect();
        json!({
            "version": self.version,
            "k": net.k(),
            "nodes": net.nodes(),
            "arcs": arcs,
            "source": net.source(),
            "sink": net.sink(),
            "flags": self.flags,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("document values serialize")
    }
}

pub fn parse_network(text: &str) -> Result<EnhancedNetwork> {
    NetworkDocument::parse(text).map(|d| d.network)
}

pub fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(n) = i64::try_from(r.numer()) {
            return Value::from(n);
        }
    }
    Value::from(format_rational(r))
}

pub fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => parse_rational(&n.to_string()),
        },
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected rational, found {other}"))),
    }
}

pub fn vector_to_value(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(rational_to_value).collect())
}

pub fn vector_from_value(v: &Value) -> Result<Vector> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected vector, found {v}")))?;
    items.iter().map(rational_from_value).collect::<Result<Vec<_>>>().map(Vector::new)
}

pub fn region_to_value(r: &Region) -> Value {
    match r {
        Region::Points { points, .. } => json!({ "points": points.iter().map(vector_to_value).collect::<Vec<_>>() }),
        Region::Polygons(pieces) => {
            let pieces: Vec<Value> = pieces
                .iter()
                .map(|p| {
                    let hs: Vec<Value> = p
                        .halfspaces()
                        .iter()
                        .map(|h| {
                            let mut entry = vec![
                                Value::Array(h.normal.iter().map(rational_to_value).collect()),
                                rational_to_value(&h.offset),
                            ];
                            if h.strict {
                                entry.push(Value::from("<"));
                            }
                            Value::Array(entry)
                        })
                        .collect();
                    json!({ "halfspaces": hs })
                })
                .collect();
            json!({ "polygons": pieces })
        }
    }
}

pub fn parse_region(k: usize, v: &Value) -> Result<Region> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("capacity must be an object".into()))?;
    match (obj.get("points"), obj.get("polygons")) {
        (Some(pts), None) if obj.len() == 1 => {
            let items = pts
                .as_array()
                .ok_or_else(|| Error::Parse("`points` must be a list".into()))?;
            let pts = items.iter().map(vector_from_value).collect::<Result<Vec<_>>>()?;
            Region::points(k, pts)
        }
        (None, Some(polys)) if obj.len() == 1 => {
            if k != 2 {
                return Err(Error::PolygonDimension(k));
            }
            let items = polys
                .as_array()
                .ok_or_else(|| Error::Parse("`polygons` must be a list".into()))?;
            let mut pieces = Vec::with_capacity(items.len());
            for item in items {
                let hs = item
                    .get("halfspaces")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("polygon needs a `halfspaces` list".into()))?;
                let hs = hs.iter().map(parse_halfspace).collect::<Result<Vec<_>>>()?;
                match ConvexPolygon::from_halfspaces(hs)? {
                    Some(p) => pieces.push(p),
                    None => return Err(Error::EmptyRegion),
                }
            }
            Ok(Region::polygons_raw(pieces))
        }
        _ => Err(Error::Parse("capacity needs exactly one of `points` or `polygons`".into())),
    }
}

fn parse_halfspace(v: &Value) -> Result<Halfspace> {
    let bad = || Error::Parse(format!("halfspace must be [[a, b], c] or [[a, b], c, \"<\"], found {v}"));
    let items = v.as_array().ok_or_else(bad)?;
    let (normal, offset, strict) = match items.as_slice() {
        [n, c] => (n, c, false),
        [n, c, Value::String(op)] if op == "<" => (n, c, true),
        [n, c, Value::String(op)] if op == "<=" => (n, c, false),
        _ => return Err(bad()),
    };
    let normal = vector_from_value(normal)?;
    if normal.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: normal.dim(),
            context: Some("halfspace normal".into()),
        });
    }
    let offset = rational_from_value(offset)?;
    let [a, b]: [Rational; 2] = normal.into_entries().try_into().expect("checked length");
    Ok(if strict {
        Halfspace::strict(a, b, offset)
    } else {
        Halfspace::new(a, b, offset)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY: &str = r#"{"k": 2, "nodes": ["s", "t"], "arcs": [], "source": "s", "sink": "t"}"#;

    #[test]
    fn empty_arc_list_is_valid() {
        let doc = NetworkDocument::parse(TINY).unwrap();
        assert_eq!(doc.network.arcs().len(), 0);
        assert!(!doc.flags.reducible_declared);
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = NetworkDocument::parse("{\n  \"k\": 2,\n  \"nodes\": [}").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dimension_errors_name_the_arc() {
        let text = r#"{"k": 2, "nodes": ["s", "t"], "source": "s", "sink": "t",
            "arcs": [{"id": "a", "tail": "s", "head": "t", "capacity": {"points": [[1, 2, 3]]}}]}"#;
        match NetworkDocument::parse(text).unwrap_err() {
            Error::ArcSemantic { arc, message } => {
                assert_eq!(arc, "a");
                assert!(message.contains("dimension"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn strict_halfspaces_round_trip() {
        let text = r#"{"k": 2, "nodes": ["s", "t"], "source": "s", "sink": "t",
            "arcs": [{"id": "a", "tail": "s", "head": "t", "capacity": {"polygons": [
                {"halfspaces": [[[-1, 0], 0], [[1, 0], 2], [[0, -1], -1, "<"], [[0, 1], "5/2"]]}]}}]}"#;
        let doc = NetworkDocument::parse(text).unwrap();
        let again = NetworkDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.to_json(), again.to_json());
        let cap = &again.network.arcs()[0].capacity;
        assert!(!cap.contains(&Vector::from_ints(&[0, 1])).unwrap());
        assert!(cap.contains(&Vector::from_ints(&[0, 2])).unwrap());
    }

    #[test]
    fn rejects_ambiguous_capacity() {
        let bad = json!({"points": [], "polygons": []});
        assert!(parse_region(2, &bad).is_err());
        assert_eq!(parse_region(3, &json!({"polygons": []})), Err(Error::PolygonDimension(3)));
    }
}
