//! JSON encodings of polytopes, Grothendieck elements, marked polytopes,
//! group-ring elements, BNS reports and chain-complex input.
//!
//! Integers are written as JSON numbers of unbounded size. Object keys are
//! emitted in sorted order, so encodings are byte-stable.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::bns::BnsReport;
use crate::chain3m::ChainComplexData;
use crate::grothendieck::GrothElement;
use crate::lattice::{Direction, IntegralPolytope, LatticeError, LatticePoint};
use crate::marked::MarkedPolytope;
use crate::words::{parse_word, AbelianizationMap, FreeWordSum, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("bad word at {path}: {source}")]
    Word { path: String, source: WordError },
}

fn schema(path: &str, msg: impl Into<String>) -> JsonError {
    JsonError::Schema {
        path: path.to_string(),
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))
}

pub fn int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

pub fn read_int(v: &Value, path: &str) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| schema(path, "expected an integer"))
        }
        _ => Err(schema(path, "expected an integer")),
    }
}

fn field<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value, JsonError> {
    obj.get(key)
        .ok_or_else(|| schema(path, format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

pub fn point(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(int).collect())
}

pub fn read_point(v: &Value, path: &str) -> Result<LatticePoint, JsonError> {
    let coords = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, c)| read_int(c, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticePoint::new(coords))
}

pub fn direction(d: &Direction) -> Value {
    Value::Array(d.coords().iter().map(int).collect())
}

/// `{"dim": n, "points": [...]}` with the vertices exactly as stored.
pub fn polytope(p: &IntegralPolytope) -> Value {
    json!({
        "dim": p.dim(),
        "points": p.points().iter().map(point).collect::<Vec<_>>(),
    })
}

fn read_points(v: &Value, path: &str) -> Result<(usize, Vec<LatticePoint>), JsonError> {
    let dim = field(v, "dim", path)?
        .as_u64()
        .ok_or_else(|| schema(&format!("{path}.dim"), "expected a positive integer"))?
        as usize;
    let pts_path = format!("{path}.points");
    let points = array(field(v, "points", path)?, &pts_path)?
        .iter()
        .enumerate()
        .map(|(i, p)| read_point(p, &format!("{pts_path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if points.is_empty() {
        return Err(schema(&pts_path, "a polytope needs at least one point"));
    }
    if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.dim() != dim) {
        return Err(schema(
            &format!("{pts_path}[{i}]"),
            format!("point has {} coordinates, dim is {dim}", p.dim()),
        ));
    }
    Ok((dim, points))
}

/// Reads a polytope; the listed points may be any generating set.
pub fn read_polytope(v: &Value, path: &str) -> Result<IntegralPolytope, JsonError> {
    let (_, points) = read_points(v, path)?;
    Ok(IntegralPolytope::hull(points)?)
}

pub fn groth(e: &GrothElement) -> Value {
    json!({ "pos": polytope(e.pos()), "neg": polytope(e.neg_part()) })
}

pub fn read_groth(v: &Value, path: &str) -> Result<GrothElement, JsonError> {
    let pos = read_polytope(field(v, "pos", path)?, &format!("{path}.pos"))?;
    let neg = read_polytope(field(v, "neg", path)?, &format!("{path}.neg"))?;
    GrothElement::new(pos, neg).map_err(|e| schema(path, e.to_string()))
}

/// `{"dim", "points", "marked"}` with marked vertex indices.
pub fn marked(m: &MarkedPolytope) -> Value {
    let mut obj = polytope(m.polytope());
    obj["marked"] = Value::Array(
        m.marked_indices()
            .iter()
            .map(|&i| Value::from(i as u64))
            .collect(),
    );
    obj
}

/// Reads a marked polytope; `marked` indexes the listed points, each of
/// which must be a vertex of their hull.
pub fn read_marked(v: &Value, path: &str) -> Result<MarkedPolytope, JsonError> {
    let (_, points) = read_points(v, path)?;
    let hull = IntegralPolytope::hull(points.clone())?;
    let marks_path = format!("{path}.marked");
    let mut marked_points = Vec::new();
    for (k, idx) in array(field(v, "marked", path)?, &marks_path)?.iter().enumerate() {
        let i = idx
            .as_u64()
            .ok_or_else(|| schema(&format!("{marks_path}[{k}]"), "expected an index"))?
            as usize;
        let p = points
            .get(i)
            .ok_or_else(|| schema(&format!("{marks_path}[{k}]"), "index out of range"))?;
        if hull.index_of(p).is_none() {
            return Err(schema(
                &format!("{marks_path}[{k}]"),
                format!("point {p} is not a vertex"),
            ));
        }
        marked_points.push(p.clone());
    }
    MarkedPolytope::with_marked_points(hull, &marked_points)
        .map_err(|e| schema(path, e.to_string()))
}

/// `[{"coef": c, "word": "..."}]`, terms in word order.
pub fn word_sum(f: &FreeWordSum) -> Value {
    Value::Array(
        f.terms()
            .map(|(w, c)| json!({ "coef": int(c), "word": w.to_string() }))
            .collect(),
    )
}

pub fn read_word_sum(v: &Value, path: &str) -> Result<FreeWordSum, JsonError> {
    let mut out = FreeWordSum::zero();
    for (i, term) in array(v, path)?.iter().enumerate() {
        let tpath = format!("{path}[{i}]");
        let coef = read_int(field(term, "coef", &tpath)?, &format!("{tpath}.coef"))?;
        let text = field(term, "word", &tpath)?
            .as_str()
            .ok_or_else(|| schema(&format!("{tpath}.word"), "expected a string"))?;
        let word = parse_word(text).map_err(|source| JsonError::Word {
            path: format!("{tpath}.word"),
            source,
        })?;
        out.add_term(word, coef);
    }
    Ok(out)
}

/// `{"kind": ..., "arcs": [[[a,b],[c,d]], ...]}`.
pub fn bns_report(r: &BnsReport) -> Value {
    json!({
        "kind": r.kind(),
        "arcs": r
            .arcs()
            .iter()
            .map(|(from, to)| json!([direction(from), direction(to)]))
            .collect::<Vec<_>>(),
    })
}

fn read_pair(v: &Value, path: &str) -> Result<[FreeWordSum; 2], JsonError> {
    let items = array(v, path)?;
    if items.len() != 2 {
        return Err(schema(path, "expected exactly two entries"));
    }
    Ok([
        read_word_sum(&items[0], &format!("{path}[0]"))?,
        read_word_sum(&items[1], &format!("{path}[1]"))?,
    ])
}

/// `{"a": [ws,ws], "b": [[ws,ws],[ws,ws]], "c": [ws,ws], "b1": 1|2}`; with
/// `b1 = 1` the images of `x` and `y` in `H = Z` are given as
/// `"map": [p, q]`.
pub fn read_chain(v: &Value) -> Result<ChainComplexData, JsonError> {
    let a = read_pair(field(v, "a", "$")?, "$.a")?;
    let c = read_pair(field(v, "c", "$")?, "$.c")?;
    let rows = array(field(v, "b", "$")?, "$.b")?;
    if rows.len() != 2 {
        return Err(schema("$.b", "expected a 2x2 matrix"));
    }
    let b = [
        read_pair(&rows[0], "$.b[0]")?,
        read_pair(&rows[1], "$.b[1]")?,
    ];
    let b1 = field(v, "b1", "$")?.as_u64();
    let abelianization = match b1 {
        Some(2) => AbelianizationMap::identity(),
        Some(1) => {
            let map = array(
                v.get("map")
                    .ok_or_else(|| schema("$", "b1 = 1 needs \"map\": [image of x, image of y]"))?,
                "$.map",
            )?;
            if map.len() != 2 {
                return Err(schema("$.map", "expected two integers"));
            }
            AbelianizationMap::covector(read_int(&map[0], "$.map[0]")?, read_int(&map[1], "$.map[1]")?)
        }
        _ => return Err(schema("$.b1", "expected 1 or 2")),
    };
    Ok(ChainComplexData {
        a,
        b,
        c,
        abelianization,
    })
}

/// Canonical JSON text (sorted keys, compact).
pub fn to_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

pub fn to_string_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// `{"error": code, "detail": ...}`.
pub fn error(code: &str, detail: Value) -> Value {
    let mut m = Map::new();
    m.insert("error".into(), Value::from(code));
    m.insert("detail".into(), detail);
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polytope_roundtrip() {
        let p = IntegralPolytope::from_i64(&[[0, 0], [2, 1], [1, 3]]).unwrap();
        let v = polytope(&p);
        assert_eq!(to_string(&v), r#"{"dim":2,"points":[[0,0],[2,1],[1,3]]}"#);
        assert_eq!(read_polytope(&v, "$").unwrap(), p);
    }

    #[test]
    fn big_integers_survive() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let p = IntegralPolytope::point(LatticePoint::new(vec![big.clone(), -big]));
        let text = to_string(&polytope(&p));
        assert!(text.contains("-123456789012345678901234567890"));
        assert_eq!(read_polytope(&parse(&text).unwrap(), "$").unwrap(), p);
    }

    #[test]
    fn marked_roundtrip_and_errors() {
        let m = MarkedPolytope::new(IntegralPolytope::unit_cube(2), [0, 2]).unwrap();
        let v = marked(&m);
        assert_eq!(read_marked(&v, "$").unwrap(), m);
        let interior = parse(r#"{"dim":2,"points":[[0,0],[2,0],[1,0]],"marked":[2]}"#).unwrap();
        assert!(matches!(read_marked(&interior, "$"), Err(JsonError::Schema { .. })));
        let bad = parse(r#"{"dim":2,"points":[[0,0,1]],"marked":[]}"#).unwrap();
        assert!(read_marked(&bad, "$").is_err());
    }

    #[test]
    fn word_sum_roundtrip() {
        let f = FreeWordSum::generator_minus_one(crate::words::Y);
        let v = word_sum(&f);
        assert_eq!(to_string(&v), r#"[{"coef":-1,"word":"1"},{"coef":1,"word":"y"}]"#);
        assert_eq!(read_word_sum(&v, "$").unwrap(), f);
        let bad = parse(r#"[{"coef":1,"word":"xq"}]"#).unwrap();
        assert!(matches!(read_word_sum(&bad, "$"), Err(JsonError::Word { .. })));
    }

    #[test]
    fn chain_input() {
        let text = r#"{"a":[[{"coef":1,"word":"x"},{"coef":-1,"word":""}],[]],
            "b":[[[],[]],[[],[{"coef":1,"word":"xy"}]]],
            "c":[[{"coef":1,"word":"y"},{"coef":-1,"word":"1"}],[]],"b1":2}"#;
        let d = read_chain(&parse(text).unwrap()).unwrap();
        assert_eq!(d.a[0], FreeWordSum::generator_minus_one(crate::words::X));
        let no_map = parse(r#"{"a":[[],[]],"b":[[[],[]],[[],[]]],"c":[[],[]],"b1":1}"#).unwrap();
        assert!(read_chain(&no_map).is_err());
    }
}
