//! JSON interchange formats.
//!
//! Algebra payloads are 1-based and sparse: unlisted `(left, right)` pairs
//! are zero brackets; coefficients are lowest-terms strings `"p"` or
//! `"p/q"`. Output is deterministic (brackets sorted by `(left, right)`,
//! result terms by basis index).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::rational::Rational;
use crate::subspace::Subspace;
use crate::tensor::StructureTensor;
use crate::transforms::{ShapePattern, TransformStep};

#[derive(Serialize, Deserialize)]
struct TermJson {
    basis: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    left: usize,
    right: usize,
    result: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    brackets: Vec<BracketJson>,
}

fn parse_coeff(s: &str) -> Result<Rational> {
    s.parse()
}

pub fn algebra_to_json(t: &StructureTensor) -> serde_json::Value {
    let brackets = t
        .entries()
        .map(|(left, right, terms)| BracketJson {
            left,
            right,
            result: terms
                .iter()
                .map(|(k, c)| TermJson {
                    basis: *k,
                    coeff: c.to_string(),
                })
                .collect(),
        })
        .collect();
    serde_json::to_value(AlgebraJson {
        dim: t.dim(),
        brackets,
    })
    .expect("serialization cannot fail")
}

pub fn algebra_to_string(t: &StructureTensor) -> String {
    serde_json::to_string_pretty(&algebra_to_json(t)).expect("serialization cannot fail")
}

pub fn algebra_from_str(s: &str) -> Result<StructureTensor> {
    let raw: AlgebraJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("algebra JSON: {e}")))?;
    let mut t = StructureTensor::abelian(raw.dim);
    for b in &raw.brackets {
        if !(1..=raw.dim).contains(&b.left) || !(1..=raw.dim).contains(&b.right) {
            return Err(Error::Parse(format!(
                "bracket indices ({},{}) out of range 1..={}",
                b.left, b.right, raw.dim
            )));
        }
        for term in &b.result {
            if !(1..=raw.dim).contains(&term.basis) {
                return Err(Error::Parse(format!(
                    "basis index {} out of range 1..={}",
                    term.basis, raw.dim
                )));
            }
            t.add_term(b.left, b.right, term.basis, parse_coeff(&term.coeff)?);
        }
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
struct LinearMapJson {
    dim: usize,
    columns: Vec<Vec<String>>,
}

pub fn map_to_json(m: &LinearMap) -> serde_json::Value {
    let columns = (1..=m.dim())
        .map(|c| {
            (1..=m.dim())
                .map(|r| m.get(r, c).to_string())
                .collect::<Vec<_>>()
        })
        .collect();
    serde_json::to_value(LinearMapJson {
        dim: m.dim(),
        columns,
    })
    .expect("serialization cannot fail")
}

pub fn map_from_str(s: &str) -> Result<LinearMap> {
    let raw: LinearMapJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("linear map JSON: {e}")))?;
    if raw.columns.len() != raw.dim || raw.columns.iter().any(|c| c.len() != raw.dim) {
        return Err(Error::Parse(format!(
            "linear map must have {0} columns of length {0}",
            raw.dim
        )));
    }
    let mut cols = Vec::with_capacity(raw.dim);
    for col in &raw.columns {
        let coords = col.iter().map(|s| parse_coeff(s)).collect::<Result<Vec<_>>>()?;
        cols.push(Vector::from_coords(coords));
    }
    Ok(LinearMap::from_columns(cols))
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    ambient: usize,
    rows: Vec<Vec<String>>,
}

pub fn subspace_to_json(s: &Subspace) -> serde_json::Value {
    let rows = s
        .rows()
        .iter()
        .map(|r| r.iter().map(Rational::to_string).collect::<Vec<_>>())
        .collect();
    serde_json::to_value(SubspaceJson {
        ambient: s.ambient_dim(),
        rows,
    })
    .expect("serialization cannot fail")
}

/// Rows need not be reduced on input; the subspace is canonicalized on load.
pub fn subspace_from_str(s: &str) -> Result<Subspace> {
    let raw: SubspaceJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("subspace JSON: {e}")))?;
    let mut gens = Vec::new();
    for row in &raw.rows {
        if row.len() != raw.ambient {
            return Err(Error::Parse(format!(
                "subspace row length {} vs ambient {}",
                row.len(),
                raw.ambient
            )));
        }
        let coords = row.iter().map(|s| parse_coeff(s)).collect::<Result<Vec<_>>>()?;
        gens.push(Vector::from_coords(coords));
    }
    Ok(Subspace::from_generators(raw.ambient, gens))
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    description: String,
    map: LinearMapJson,
}

pub fn chain_to_json(steps: &[TransformStep]) -> serde_json::Value {
    let items: Vec<serde_json::Value> = steps
        .iter()
        .map(|s| {
            serde_json::json!({
                "description": s.description,
                "map": map_to_json(&s.map),
            })
        })
        .collect();
    serde_json::Value::Array(items)
}

pub fn chain_from_str(s: &str) -> Result<Vec<TransformStep>> {
    let raw: Vec<StepJson> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("chain JSON: {e}")))?;
    raw.into_iter()
        .map(|item| {
            let map = map_from_str(
                &serde_json::to_string(&item.map).expect("serialization cannot fail"),
            )?;
            TransformStep::new(item.description, map)
        })
        .collect()
}

/// Pattern payload mirrors the algebra format: listed coefficients are
/// pinned, `"?"` marks an unconstrained slot, and unlisted slots are
/// required zeros.
pub fn pattern_to_json(p: &ShapePattern) -> serde_json::Value {
    use std::collections::BTreeMap;
    let mut per_bracket: BTreeMap<(usize, usize), Vec<(usize, String)>> = BTreeMap::new();
    for (&(i, j, k), c) in p.fixed_entries() {
        per_bracket.entry((i, j)).or_default().push((k, c.to_string()));
    }
    for &(i, j, k) in p.wildcard_slots() {
        per_bracket.entry((i, j)).or_default().push((k, "?".into()));
    }
    let brackets: Vec<serde_json::Value> = per_bracket
        .into_iter()
        .map(|((left, right), mut terms)| {
            terms.sort_by_key(|(k, _)| *k);
            serde_json::json!({
                "left": left,
                "right": right,
                "result": terms
                    .into_iter()
                    .map(|(basis, coeff)| serde_json::json!({"basis": basis, "coeff": coeff}))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({"dim": p.dim(), "brackets": brackets})
}

pub fn pattern_from_str(s: &str) -> Result<ShapePattern> {
    let raw: AlgebraJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("pattern JSON: {e}")))?;
    let mut pattern = ShapePattern::from_tensor(&StructureTensor::abelian(raw.dim));
    for b in &raw.brackets {
        for term in &b.result {
            if !(1..=raw.dim).contains(&b.left)
                || !(1..=raw.dim).contains(&b.right)
                || !(1..=raw.dim).contains(&term.basis)
            {
                return Err(Error::Parse("pattern index out of range".into()));
            }
            if term.coeff == "?" {
                pattern = pattern.with_wildcard(b.left, b.right, term.basis);
            } else {
                pattern.insert_fixed(b.left, b.right, term.basis, parse_coeff(&term.coeff)?);
            }
        }
    }
    Ok(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, l2, sample_params, Family};

    #[test]
    fn algebra_round_trip_is_identity() {
        let t = build(&sample_params(Family::RThm1Case1, 6, 5).unwrap()).unwrap();
        let s = algebra_to_string(&t);
        let back = algebra_from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn deterministic_output() {
        let t = l2(5);
        assert_eq!(algebra_to_string(&t), algebra_to_string(&l2(5)));
        let v = algebra_to_json(&t);
        let brackets = v["brackets"].as_array().unwrap();
        // Sorted lexicographically by (left, right).
        let pairs: Vec<(u64, u64)> = brackets
            .iter()
            .map(|b| (b["left"].as_u64().unwrap(), b["right"].as_u64().unwrap()))
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
    }

    #[test]
    fn rejects_bad_payloads() {
        assert!(algebra_from_str("{\"dim\": 2, \"brackets\": [{\"left\": 3, \"right\": 1, \"result\": []}]}").is_err());
        assert!(algebra_from_str("{\"dim\": 2, \"brackets\": [{\"left\": 1, \"right\": 1, \"result\": [{\"basis\": 1, \"coeff\": \"1/0\"}]}]}").is_err());
        assert!(subspace_from_str("{\"ambient\": 3, \"rows\": [[\"1\", \"0\"]]}").is_err());
    }

    #[test]
    fn subspace_reduced_on_load() {
        let s = subspace_from_str(
            "{\"ambient\": 3, \"rows\": [[\"2\", \"4\", \"0\"], [\"1\", \"2\", \"0\"], [\"0\", \"0\", \"5\"]]}",
        )
        .unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.rows()[0][0], Rational::one());
        assert_eq!(s.rows()[1][2], Rational::one());
    }

    #[test]
    fn map_round_trip() {
        let t = l2(4);
        let m = t.right_mult_basis(1);
        let s = serde_json::to_string(&map_to_json(&m)).unwrap();
        assert_eq!(map_from_str(&s).unwrap(), m);
    }

    #[test]
    fn pattern_round_trip() {
        let t = l2(4);
        let p = ShapePattern::from_tensor(&t).with_wildcard(1, 1, 2);
        let s = serde_json::to_string(&pattern_to_json(&p)).unwrap();
        let back = pattern_from_str(&s).unwrap();
        // Wildcarded slot tolerated, everything else pinned.
        assert!(back.matches(&t));
        let mut other = t.clone();
        other.add_term(1, 1, 2, Rational::from_int(5));
        assert!(back.matches(&other));
        let mut bad = t.clone();
        bad.add_term(3, 1, 4, Rational::from_int(1));
        assert!(!back.matches(&bad));
    }
}
