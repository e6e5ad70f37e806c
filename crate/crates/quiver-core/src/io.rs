//! Text formats. JSON round-trips exactly; DOT is export only.
//!
//! JSON layout: `{"n":3,"arrows":[[1,3,2],[2,1,2],[3,2,2]]}` with 1-based
//! vertices and `[source, target, multiplicity]` triples sorted by
//! `(source, target)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::QuiverError;
use crate::quiver::Quiver;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    n: usize,
    arrows: Vec<[u64; 3]>,
}

/// Serialized value form, for embedding quivers in larger JSON documents.
pub fn to_json_value(q: &Quiver) -> serde_json::Value {
    serde_json::to_value(to_repr(q)).expect("quiver JSON is always representable")
}

fn to_repr(q: &Quiver) -> QuiverJson {
    let arrows = q
        .arrows()
        .into_iter()
        .map(|(s, t, m)| [s as u64 + 1, t as u64 + 1, u64::from(m)])
        .collect();
    QuiverJson { n: q.n(), arrows }
}

/// Compact JSON text.
pub fn to_json(q: &Quiver) -> String {
    serde_json::to_string(&to_repr(q)).expect("quiver JSON is always representable")
}

/// Parses and validates the JSON form in tame mode.
pub fn from_json(text: &str) -> Result<Quiver, QuiverError> {
    let raw: QuiverJson = serde_json::from_str(text).map_err(|e| QuiverError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    from_repr(raw)
}

/// Parses an already-decoded JSON value.
pub fn from_json_value(value: &serde_json::Value) -> Result<Quiver, QuiverError> {
    let raw: QuiverJson =
        serde_json::from_value(value.clone()).map_err(|e| QuiverError::Parse {
            location: "value".into(),
            message: e.to_string(),
        })?;
    from_repr(raw)
}

fn from_repr(raw: QuiverJson) -> Result<Quiver, QuiverError> {
    let n = raw.n;
    let mut q = Quiver::empty(n)?;
    let mut last: Option<(u64, u64)> = None;
    for (k, &[s, t, m]) in raw.arrows.iter().enumerate() {
        let fail = |message: String| QuiverError::Parse {
            location: format!("arrows[{k}]"),
            message,
        };
        if s == 0 || t == 0 || s > n as u64 || t > n as u64 {
            return Err(fail(format!("vertex out of range 1..={n}")));
        }
        if m == 0 {
            return Err(fail("multiplicity must be at least 1".into()));
        }
        if last.is_some_and(|p| p >= (s, t)) {
            return Err(fail(
                "arrows must be strictly sorted by (source, target)".into(),
            ));
        }
        last = Some((s, t));
        let m = u8::try_from(m).map_err(|_| fail("multiplicity too large".into()))?;
        q.set_mult(s as usize - 1, t as usize - 1, m);
    }
    q.check_tame()?;
    Ok(q)
}

/// Graphviz export: one node per vertex, one edge per arrow copy.
pub fn to_dot(q: &Quiver) -> String {
    let mut s = String::from("digraph Q {\n");
    for v in 1..=q.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (i, j, m) in q.arrows() {
        for _ in 0..m {
            let _ = writeln!(s, "  {} -> {};", i + 1, j + 1);
        }
    }
    s.push_str("}\n");
    s
}
