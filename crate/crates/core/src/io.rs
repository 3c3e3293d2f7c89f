//! JSON file formats for quantales, t-norms, ordered sets, spaces and
//! quantale-valued functions, plus the digest used in run reports.
//!
//! Tables reference elements and points by name; unknown identifiers are
//! structural errors, reported before any axiom checking happens.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::IntervalFun;
use crate::qorder::{QFun, QOrderedSet};
use crate::qtop::{generate_topology, QTopSpace};
use crate::quantale::{self, FiniteQuantale};
use crate::tnorm::{Piece, PieceKind, TNorm};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantaleFile {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub mul: Vec<Vec<String>>,
    pub unit: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuantaleRef {
    Name(String),
    Inline(QuantaleFile),
}

#[derive(Debug, Clone, Deserialize)]
pub struct QOrderFile {
    pub quantale: QuantaleRef,
    pub carrier: Vec<String>,
    pub order: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SpaceFile {
    pub quantale: QuantaleRef,
    pub carrier: Vec<String>,
    #[serde(default)]
    pub opens: Option<Vec<BTreeMap<String, String>>>,
    #[serde(default)]
    pub subbasis: Option<Vec<BTreeMap<String, String>>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct QFunFile {
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
struct PieceFile {
    kind: String,
    lo: f64,
    hi: f64,
}

#[derive(Debug, Clone, Deserialize)]
struct TNormFile {
    pieces: Vec<PieceFile>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IntervalFunFile {
    Representable { a: f64 },
    Smallest { x: f64 },
    Sampled { values: Vec<f64> },
}

fn bad_json(what: &str, err: serde_json::Error) -> Error {
    Error::Structure(format!("malformed {what}: {err}"))
}

/// Built-in quantales: `bool`, `godel<n>`, `mv<n>` and the block chain
/// `mv3-block`.
pub fn builtin_quantale(name: &str) -> Option<FiniteQuantale> {
    if name == "bool" {
        return Some(quantale::boolean());
    }
    if name == "mv3-block" {
        return Some(quantale::mv3_block_chain());
    }
    if let Some(n) = name.strip_prefix("godel").and_then(|s| s.parse().ok()) {
        return quantale::godel_chain(n).ok();
    }
    if let Some(n) = name.strip_prefix("mv").and_then(|s| s.parse().ok()) {
        return quantale::mv_chain(n).ok();
    }
    None
}

pub fn quantale_from_file(file: &QuantaleFile) -> Result<FiniteQuantale> {
    let resolve = |name: &str| {
        file.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Structure(format!("unknown element {name:?}")))
    };
    let mul = file
        .mul
        .iter()
        .map(|row| row.iter().map(|e| resolve(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let unit = resolve(&file.unit)?;
    FiniteQuantale::from_tables(file.elements.clone(), file.leq.clone(), mul, unit)
}

pub fn quantale_from_json(s: &str) -> Result<FiniteQuantale> {
    let file: QuantaleFile = serde_json::from_str(s).map_err(|e| bad_json("quantale file", e))?;
    quantale_from_file(&file)
}

pub fn quantale_to_json(q: &FiniteQuantale) -> String {
    let file = QuantaleFile {
        elements: q.names().to_vec(),
        leq: q
            .elems()
            .map(|a| q.elems().map(|b| q.leq(a, b)).collect())
            .collect(),
        mul: q
            .elems()
            .map(|a| q.elems().map(|b| q.name(q.mul(a, b)).to_string()).collect())
            .collect(),
        unit: q.name(q.unit()).to_string(),
    };
    serde_json::to_string_pretty(&file).expect("quantale serializes")
}

pub fn resolve_quantale(r: &QuantaleRef) -> Result<FiniteQuantale> {
    match r {
        QuantaleRef::Name(name) => builtin_quantale(name)
            .ok_or_else(|| Error::Structure(format!("unknown quantale name {name:?}"))),
        QuantaleRef::Inline(file) => quantale_from_file(file),
    }
}

pub fn qorder_from_json(s: &str) -> Result<QOrderedSet> {
    let file: QOrderFile = serde_json::from_str(s).map_err(|e| bad_json("ordered-set file", e))?;
    let q = Arc::new(resolve_quantale(&file.quantale)?);
    let order = file
        .order
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    q.index_of(e)
                        .ok_or_else(|| Error::Structure(format!("unknown element {e:?}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    QOrderedSet::from_parts(q, file.carrier, order)
}

fn fun_from_map(
    q: &FiniteQuantale,
    carrier: &[String],
    values: &BTreeMap<String, String>,
) -> Result<QFun> {
    for point in values.keys() {
        if !carrier.contains(point) {
            return Err(Error::Structure(format!("unknown point {point:?}")));
        }
    }
    let resolved = carrier
        .iter()
        .map(|p| {
            let name = values
                .get(p)
                .ok_or_else(|| Error::Structure(format!("missing value at point {p:?}")))?;
            q.index_of(name)
                .ok_or_else(|| Error::Structure(format!("unknown element {name:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QFun(resolved))
}

pub fn qfun_from_json(s: &str, q: &FiniteQuantale, carrier: &[String]) -> Result<QFun> {
    let file: QFunFile = serde_json::from_str(s).map_err(|e| bad_json("function file", e))?;
    fun_from_map(q, carrier, &file.values)
}

/// Loads a space given explicitly by opens, or generated from a subbasis.
pub fn space_from_json(s: &str, cap: u64) -> Result<QTopSpace> {
    let file: SpaceFile = serde_json::from_str(s).map_err(|e| bad_json("space file", e))?;
    let q = Arc::new(resolve_quantale(&file.quantale)?);
    match (&file.opens, &file.subbasis) {
        (Some(opens), None) => {
            let opens = opens
                .iter()
                .map(|m| fun_from_map(&q, &file.carrier, m))
                .collect::<Result<Vec<_>>>()?;
            QTopSpace::from_parts(q, file.carrier, opens)
        }
        (None, Some(subbasis)) => {
            let subbasis = subbasis
                .iter()
                .map(|m| fun_from_map(&q, &file.carrier, m))
                .collect::<Result<Vec<_>>>()?;
            generate_topology(q, file.carrier, &subbasis, cap)
        }
        _ => Err(Error::Structure(
            "space file needs exactly one of \"opens\" or \"subbasis\"".into(),
        )),
    }
}

pub fn tnorm_from_json(s: &str) -> Result<TNorm> {
    let file: TNormFile = serde_json::from_str(s).map_err(|e| bad_json("t-norm file", e))?;
    let pieces = file
        .pieces
        .iter()
        .map(|p| {
            let kind = match p.kind.as_str() {
                "lukasiewicz" => PieceKind::Lukasiewicz,
                "product" => PieceKind::Product,
                other => {
                    return Err(Error::Structure(format!(
                        "unknown piece kind {other:?}, expected \"lukasiewicz\" or \"product\""
                    )))
                }
            };
            Ok(Piece {
                kind,
                lo: p.lo,
                hi: p.hi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TNorm::new(pieces)
}

pub fn interval_fun_from_json(s: &str) -> Result<IntervalFun> {
    let file: IntervalFunFile =
        serde_json::from_str(s).map_err(|e| bad_json("interval function file", e))?;
    Ok(match file {
        IntervalFunFile::Representable { a } => IntervalFun::Representable(a),
        IntervalFunFile::Smallest { x } => IntervalFun::Smallest(x),
        IntervalFunFile::Sampled { values } => IntervalFun::Sampled(values),
    })
}

/// FNV-1a digest of raw input bytes, printed as 16 hex digits.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantale_round_trip() {
        let l3 = quantale::mv_chain(3).unwrap();
        let json = quantale_to_json(&l3);
        let back = quantale_from_json(&json).unwrap();
        assert_eq!(back, l3);
        assert!(back.validate().is_valid());
    }

    #[test]
    fn unknown_identifiers_are_structural_errors() {
        let bad = r#"{"elements":["0","1"],"leq":[[true,true],[false,true]],
                      "mul":[["0","0"],["0","2"]],"unit":"1"}"#;
        assert!(matches!(quantale_from_json(bad), Err(Error::Structure(_))));
        assert!(matches!(quantale_from_json("{"), Err(Error::Structure(_))));
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(builtin_quantale("bool").unwrap().len(), 2);
        assert_eq!(builtin_quantale("godel4").unwrap().len(), 4);
        assert_eq!(builtin_quantale("mv6").unwrap().len(), 6);
        assert_eq!(builtin_quantale("mv3-block").unwrap().len(), 5);
        assert!(builtin_quantale("heyting9").is_none());
        assert!(builtin_quantale("mv1").is_none());
    }

    #[test]
    fn qorder_file_with_inline_quantale() {
        let json = r#"{
            "quantale": "mv3",
            "carrier": ["a", "b"],
            "order": [["1", "1/2"], ["0", "1"]]
        }"#;
        let x = qorder_from_json(json).unwrap();
        assert_eq!(x.order, vec![vec![2, 1], vec![0, 2]]);
        assert!(x.validate().is_valid());
    }

    #[test]
    fn qfun_files_resolve_points_and_elements() {
        let q = quantale::mv_chain(3).unwrap();
        let carrier = vec!["a".to_string(), "b".to_string()];
        let f = qfun_from_json(r#"{"values": {"a": "1", "b": "1/2"}}"#, &q, &carrier).unwrap();
        assert_eq!(f.0, vec![2, 1]);
        assert!(qfun_from_json(r#"{"values": {"a": "1"}}"#, &q, &carrier).is_err());
        assert!(qfun_from_json(r#"{"values": {"a": "1", "z": "0"}}"#, &q, &carrier).is_err());
    }

    #[test]
    fn space_files_explicit_and_generated() {
        let explicit = r#"{
            "quantale": "bool",
            "carrier": ["a", "b"],
            "opens": [{"a": "0", "b": "0"}, {"a": "0", "b": "1"}, {"a": "1", "b": "1"}]
        }"#;
        let t = space_from_json(explicit, crate::DEFAULT_CAP).unwrap();
        assert_eq!(t.opens.len(), 3);
        assert!(crate::qtop::validate_topology(&t).is_valid());

        let generated = r#"{
            "quantale": "bool",
            "carrier": ["a", "b"],
            "subbasis": [{"a": "0", "b": "1"}]
        }"#;
        let t = space_from_json(generated, crate::DEFAULT_CAP).unwrap();
        assert_eq!(t.opens.len(), 3);

        let neither = r#"{"quantale": "bool", "carrier": ["a"]}"#;
        assert!(space_from_json(neither, crate::DEFAULT_CAP).is_err());
    }

    #[test]
    fn tnorm_and_interval_fun_files() {
        let t = tnorm_from_json(
            r#"{"pieces": [{"kind": "lukasiewicz", "lo": 0.0, "hi": 0.5},
                            {"kind": "product", "lo": 0.5, "hi": 1.0}]}"#,
        )
        .unwrap();
        assert_eq!(t, TNorm::luk_then_product());
        assert!(
            tnorm_from_json(r#"{"pieces": [{"kind": "frobnitz", "lo": 0, "hi": 1}]}"#).is_err()
        );

        let f = interval_fun_from_json(r#"{"kind": "representable", "a": 0.3}"#).unwrap();
        assert_eq!(f, IntervalFun::Representable(0.3));
        let f = interval_fun_from_json(r#"{"kind": "sampled", "values": [0.0, 1.0]}"#).unwrap();
        assert_eq!(f, IntervalFun::Sampled(vec![0.0, 1.0]));
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(digest(b""), "cbf29ce484222325");
        assert_eq!(digest(b"quantale"), digest(b"quantale"));
        assert_ne!(digest(b"a"), digest(b"b"));
    }
}
