//! System description parsing and canonical JSON report serialization for
//! the batch front door.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, SupportConfig};
use crate::poly::laurent::LaurentPoly;
use crate::poly::CoeffPoly;

/// One polynomial of a system: a labelled support and either fully
/// symbolic coefficients or an explicit integer assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySpec {
    pub label: u32,
    pub support: Vec<[i64; 2]>,
    pub coefficients: CoeffSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    /// The literal string "symbolic".
    Symbolic(String),
    /// Map from "[e1,e2]" exponent keys to decimal integer strings.
    Explicit(BTreeMap<String, String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub polynomials: Vec<PolySpec>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub univariate: bool,
}

fn parse_point(key: &str) -> Result<LatticePoint> {
    let inner = key
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Input(format!("bad exponent key {key:?}")))?;
    let mut parts = inner.split(',');
    let x = parts
        .next()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(|| Error::Input(format!("bad exponent key {key:?}")))?;
    let y = parts
        .next()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(|| Error::Input(format!("bad exponent key {key:?}")))?;
    if parts.next().is_some() {
        return Err(Error::Input(format!("bad exponent key {key:?}")));
    }
    Ok(LatticePoint::new(x, y))
}

/// Parses and validates a system description.
pub fn parse_system(text: &str) -> Result<SystemSpec> {
    let spec: SystemSpec = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("json parse error: {e}")))?;
    if spec.polynomials.is_empty() {
        return Err(Error::Input("no polynomials in system".into()));
    }
    for p in &spec.polynomials {
        if p.support.is_empty() {
            return Err(Error::Input(format!("label {}: empty support", p.label)));
        }
        let support: Vec<LatticePoint> =
            p.support.iter().map(|&[x, y]| LatticePoint::new(x, y)).collect();
        // Duplicate detection via the configuration constructor.
        SupportConfig::new(p.label, support.clone())?;
        match &p.coefficients {
            CoeffSpec::Symbolic(s) => {
                if s != "symbolic" {
                    return Err(Error::Input(format!(
                        "label {}: coefficients must be \"symbolic\" or a map",
                        p.label
                    )));
                }
            }
            CoeffSpec::Explicit(map) => {
                for (k, v) in map {
                    let pt = parse_point(k)?;
                    if !support.contains(&pt) {
                        return Err(Error::Input(format!(
                            "label {}: coefficient key {k} outside declared support",
                            p.label
                        )));
                    }
                    v.parse::<BigInt>().map_err(|_| {
                        Error::Input(format!("label {}: bad integer {v:?}", p.label))
                    })?;
                }
            }
        }
    }
    Ok(spec)
}

/// Builds the Laurent polynomial described by one spec entry.
pub fn build_poly(p: &PolySpec) -> Result<LaurentPoly> {
    let support: Vec<LatticePoint> =
        p.support.iter().map(|&[x, y]| LatticePoint::new(x, y)).collect();
    let cfg = SupportConfig::new(p.label, support)?;
    match &p.coefficients {
        CoeffSpec::Symbolic(_) => Ok(LaurentPoly::symbolic(&cfg)),
        CoeffSpec::Explicit(map) => {
            let mut terms = BTreeMap::new();
            for (k, v) in map {
                let pt = parse_point(k)?;
                let c: BigInt = v
                    .parse()
                    .map_err(|_| Error::Input(format!("bad integer {v:?}")))?;
                terms.insert(pt, CoeffPoly::constant(c));
            }
            LaurentPoly::with_coeffs(&cfg, terms)
        }
    }
}

/// Canonical JSON serialization: version field first by key order, all
/// object keys sorted (serde_json maps are BTree-backed), no whitespace
/// variance across runs.
pub fn serialize_report(command: &str, seed: u64, body: Map<String, Value>) -> String {
    let mut map = Map::new();
    map.insert("version".into(), json!("toric-disc/1"));
    map.insert("command".into(), json!(command));
    map.insert("seed".into(), json!(seed));
    for (k, v) in body {
        map.insert(k, v);
    }
    serde_json::to_string_pretty(&Value::Object(map)).expect("report serialization")
}

/// JSON value for a boundary factor entry list.
pub fn boundary_json(entries: &[crate::disc::BoundaryEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "eta": [e.profile.eta.x, e.profile.eta.y],
                    "mu": e.mu,
                    "factor": e.value.to_string(),
                })
            })
            .collect(),
    )
}

/// JSON value for a degree audit table.
pub fn audit_json(audit: &BTreeMap<u32, (u32, u32)>) -> Value {
    Value::Array(
        audit
            .iter()
            .map(|(&label, &(observed, predicted))| {
                json!({
                    "label": label,
                    "observed": observed,
                    "predicted": predicted,
                })
            })
            .collect(),
    )
}
