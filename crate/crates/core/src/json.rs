//! JSON documents for algebras, matrices and representations.
//!
//! Rationals are strings `"p/q"` (or `"p"`); plain JSON integers are accepted on input.

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::{AdoError, Result};
use crate::lie::{Grading, LieAlgebra};
use crate::linalg::rational::{format_rational, parse_rational};
use crate::linalg::{Rational, RationalMatrix, SparseVec};
use crate::rep::Representation;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RationalText {
    Text(String),
    Int(i64),
}

impl RationalText {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalText::Text(s) => parse_rational(s),
            RationalText::Int(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

/// Sparse vector as a `{"index": "p/q"}` object with keys in numeric order.
#[derive(Debug, Clone)]
pub struct SparseObject<'a>(pub &'a SparseVec);

impl Serialize for SparseObject<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.nnz()))?;
        for (k, v) in self.0.iter() {
            map.serialize_entry(&k.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

fn parse_sparse_object(object: &serde_json::Map<String, Value>) -> Result<SparseVec> {
    let mut pairs = Vec::with_capacity(object.len());
    for (k, v) in object {
        let index: usize = k
            .parse()
            .map_err(|_| AdoError::Parse(format!("coefficient key `{k}` is not an index")))?;
        let text: RationalText = serde_json::from_value(v.clone())
            .map_err(|_| AdoError::Parse(format!("coefficient of {index} is not a rational")))?;
        pairs.push((index, text.value()?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

/// `#[serde(with = ...)]` adapter storing a [`SparseVec`] as a `{"index": "p/q"}` object.
pub mod sparse_coords {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{parse_sparse_object, SparseObject};
    use crate::linalg::SparseVec;

    pub fn serialize<S: Serializer>(v: &SparseVec, serializer: S) -> Result<S::Ok, S::Error> {
        SparseObject(v).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<SparseVec, D::Error> {
        let object = serde_json::Map::deserialize(deserializer)?;
        parse_sparse_object(&object).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize)]
struct BracketOut<'a> {
    left: usize,
    right: usize,
    result: SparseObject<'a>,
}

#[derive(Serialize)]
struct AlgebraOut<'a> {
    name: &'a str,
    dim: usize,
    basis: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    grading: Option<&'a [u32]>,
    brackets: Vec<BracketOut<'a>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketIn {
    left: usize,
    right: usize,
    result: serde_json::Map<String, Value>,
}

#[derive(Deserialize)]
struct AlgebraIn {
    name: String,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    grading: Option<Vec<u32>>,
    #[serde(default)]
    brackets: Vec<BracketIn>,
}

pub fn algebra_value(l: &LieAlgebra) -> Value {
    let out = AlgebraOut {
        name: l.name(),
        dim: l.dim(),
        basis: l.labels(),
        grading: l.grading().map(Grading::degrees),
        brackets: l
            .structure_constants()
            .map(|((left, right), v)| BracketOut {
                left,
                right,
                result: SparseObject(v),
            })
            .collect(),
    };
    serde_json::to_value(out).expect("algebra serializes")
}

pub fn algebra_to_json(l: &LieAlgebra) -> String {
    to_pretty(&algebra_value(l))
}

/// An algebra document before its grading is checked.
#[derive(Debug, Clone)]
pub struct ParsedAlgebra {
    pub algebra: LieAlgebra,
    pub grading: Option<Vec<u32>>,
}

impl ParsedAlgebra {
    /// Attaches the declared grading, failing with `InvalidGrading` if it is not compatible.
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        match self.grading {
            Some(degrees) => self.algebra.with_grading(degrees),
            None => Ok(self.algebra),
        }
    }
}

fn parse_algebra_value(value: Value) -> Result<ParsedAlgebra> {
    let doc: AlgebraIn =
        serde_json::from_value(value).map_err(|e| AdoError::Parse(format!("algebra document: {e}")))?;
    let mut brackets = Vec::with_capacity(doc.brackets.len());
    for b in &doc.brackets {
        let v = parse_sparse_object(&b.result)?;
        brackets.push(((b.left, b.right), v));
    }
    let schema = |e: AdoError| AdoError::Parse(e.to_string());
    let mut algebra = LieAlgebra::new(doc.name, doc.dim, brackets).map_err(schema)?;
    if let Some(labels) = doc.basis {
        algebra = algebra.with_labels(labels).map_err(schema)?;
    }
    Ok(ParsedAlgebra {
        algebra,
        grading: doc.grading,
    })
}

pub fn parse_algebra(text: &str) -> Result<ParsedAlgebra> {
    let value: Value = serde_json::from_str(text).map_err(|e| AdoError::Parse(e.to_string()))?;
    parse_algebra_value(value)
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    parse_algebra(text)?.into_algebra()
}

#[derive(Serialize)]
struct MatrixOut {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

#[derive(Deserialize)]
struct MatrixIn {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, RationalText)>,
}

pub fn matrix_value(m: &RationalMatrix) -> Value {
    let out = MatrixOut {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().map(|(r, c, v)| (r, c, format_rational(v))).collect(),
    };
    serde_json::to_value(out).expect("matrix serializes")
}

pub fn matrix_from_value(value: Value) -> Result<RationalMatrix> {
    let doc: MatrixIn =
        serde_json::from_value(value).map_err(|e| AdoError::Parse(format!("matrix document: {e}")))?;
    let mut triplets = Vec::with_capacity(doc.entries.len());
    for (r, c, v) in &doc.entries {
        triplets.push((*r, *c, v.value()?));
    }
    RationalMatrix::from_entries(doc.rows, doc.cols, triplets).map_err(|e| AdoError::Parse(e.to_string()))
}

pub fn rep_value(rho: &Representation) -> Value {
    serde_json::json!({
        "algebra": rho.algebra().name(),
        "space_dim": rho.space_dim(),
        "matrices": rho.matrices().iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub fn rep_to_json(rho: &Representation) -> String {
    to_pretty(&rep_value(rho))
}

#[derive(Deserialize)]
struct RepIn {
    algebra: Value,
    space_dim: usize,
    matrices: Vec<Value>,
}

/// Reads a representation of `l`.
///
/// The `algebra` field is either a name, which must match `l`, or an inline
/// algebra document, whose structure constants must match `l`.
pub fn rep_from_json(text: &str, l: &LieAlgebra) -> Result<Representation> {
    let doc: RepIn = serde_json::from_str(text).map_err(|e| AdoError::Parse(format!("representation document: {e}")))?;
    match doc.algebra {
        Value::String(name) if name == l.name() => {}
        Value::String(_) => return Err(AdoError::AlgebraMismatch),
        inline @ Value::Object(_) => {
            let other = parse_algebra_value(inline)?.algebra;
            let same = other.dim() == l.dim() && other.structure_constants().eq(l.structure_constants());
            if !same {
                return Err(AdoError::AlgebraMismatch);
            }
        }
        _ => return Err(AdoError::Parse("`algebra` must be a name or an algebra object".into())),
    }
    let matrices = doc
        .matrices
        .into_iter()
        .map(matrix_from_value)
        .collect::<Result<Vec<_>>>()?;
    Representation::new(l.clone(), doc.space_dim, matrices)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rational::int;
    use crate::rep;

    #[test]
    fn algebra_round_trip() {
        for l in [
            fixtures::heisenberg3(),
            fixtures::filiform4(),
            fixtures::solvable2(),
            fixtures::by_name("free2_4").unwrap(),
        ] {
            assert_eq!(algebra_from_json(&algebra_to_json(&l)).unwrap(), l);
        }
    }

    #[test]
    fn coefficient_keys_are_numeric_order() {
        let l = LieAlgebra::new(
            "wide",
            12,
            [((0, 1), SparseVec::from_pairs([(2, int(1)), (10, int(1))]))],
        )
        .unwrap();
        let text = algebra_to_json(&l);
        assert!(text.find("\"2\"").unwrap() < text.find("\"10\"").unwrap());
    }

    #[test]
    fn algebra_input_forms() {
        let text = r#"{"name":"h","dim":3,"brackets":[{"left":0,"right":1,"result":{"2":1}}]}"#;
        let l = algebra_from_json(text).unwrap();
        assert_eq!(l.bracket_basis(0, 1), SparseVec::unit(2));
        assert_eq!(l.labels(), &["e0", "e1", "e2"]);

        assert!(matches!(algebra_from_json("{"), Err(AdoError::Parse(_))));
        let reversed = r#"{"name":"h","dim":3,"brackets":[{"left":1,"right":0,"result":{"2":"1"}}]}"#;
        assert!(matches!(algebra_from_json(reversed), Err(AdoError::Parse(_))));
        let bad_rational = r#"{"name":"h","dim":3,"brackets":[{"left":0,"right":1,"result":{"2":"1/0"}}]}"#;
        assert!(matches!(algebra_from_json(bad_rational), Err(AdoError::Parse(_))));
        let bad_grading = r#"{"name":"h","dim":3,"grading":[1,1,1],"brackets":[{"left":0,"right":1,"result":{"2":"1"}}]}"#;
        assert!(matches!(algebra_from_json(bad_grading), Err(AdoError::InvalidGrading(_))));
    }

    #[test]
    fn matrix_format() {
        let m = RationalMatrix::from_i64(&[&[0, 2], &[0, 0]]).scale(&crate::linalg::rational::frac(1, 4));
        let v = matrix_value(&m);
        assert_eq!(v, serde_json::json!({"rows": 2, "cols": 2, "entries": [[0, 1, "1/2"]]}));
        assert_eq!(matrix_from_value(v).unwrap(), m);
    }

    #[test]
    fn rep_round_trip() {
        let std = fixtures::heisenberg3_standard();
        let h3 = std.algebra().clone();
        assert_eq!(rep_from_json(&rep_to_json(&std), &h3).unwrap(), std);

        let mut inline = rep_value(&rep::adjoint(&h3));
        inline["algebra"] = algebra_value(&h3);
        assert_eq!(rep_from_json(&inline.to_string(), &h3).unwrap(), rep::adjoint(&h3));

        let other = fixtures::filiform4();
        assert_eq!(rep_from_json(&rep_to_json(&std), &other), Err(AdoError::AlgebraMismatch));
    }
}
