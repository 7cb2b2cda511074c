//! JSON encodings of the core types.
//!
//! Integer-keyed maps use decimal-string keys in increasing numeric order and
//! never contain zero entries. Arbitrary-precision integers travel as strings,
//! rationals as reduced `"num/den"` strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use sl2cp_core::charpoly::VerificationReport;
use sl2cp_core::monoid::{LawViolation, MonoidLawReport};
use sl2cp_core::sln::AdjointReport;
use sl2cp_core::{
    CanonicalCP, Decomposition, Error, MatrixTriple, MultiPoly, RationalMatrix, RepTriple,
    WeightVector,
};

type Result<T> = std::result::Result<T, Error>;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

fn int_map(m: &BTreeMap<u64, u64>) -> Value {
    let mut out = Map::new();
    for (k, v) in m {
        out.insert(k.to_string(), json!(v));
    }
    Value::Object(out)
}

fn parse_int_map(v: &Value, what: &str) -> Result<BTreeMap<u64, u64>> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("{} must be an object", what)))?;
    let mut out = BTreeMap::new();
    for (k, x) in obj {
        let key: u64 = k
            .parse()
            .map_err(|_| bad(format!("{} key {:?} is not a nonnegative integer", what, k)))?;
        let val = x.as_u64().ok_or_else(|| {
            bad(format!(
                "{} value for {} is not a nonnegative integer",
                what, k
            ))
        })?;
        out.insert(key, val);
    }
    Ok(out)
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| bad(format!("missing field {:?}", name)))
}

fn as_u64(v: &Value, name: &str) -> Result<u64> {
    field(v, name)?
        .as_u64()
        .ok_or_else(|| bad(format!("{:?} must be a nonnegative integer", name)))
}

pub fn weights_to_json(w: &WeightVector) -> Value {
    json!({ "dim": w.dim(), "d": int_map(w.multiplicities()) })
}

pub fn weights_from_json(v: &Value) -> Result<WeightVector> {
    WeightVector::new(parse_int_map(field(v, "d")?, "d")?, as_u64(v, "dim")?)
}

pub fn decomposition_to_json(d: &Decomposition) -> Value {
    json!({ "l": int_map(d.multiplicities()) })
}

pub fn decomposition_from_json(v: &Value) -> Result<Decomposition> {
    Decomposition::new(parse_int_map(field(v, "l")?, "l")?)
}

pub fn canonical_to_json(c: &CanonicalCP) -> Value {
    json!({ "d0": c.d0(), "factors": int_map(c.factors()) })
}

pub fn canonical_from_json(v: &Value) -> Result<CanonicalCP> {
    CanonicalCP::new(
        as_u64(v, "d0")?,
        parse_int_map(field(v, "factors")?, "factors")?,
    )
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!([c.to_string(), e[0], e[1], e[2], e[3]]))
        .collect();
    json!({ "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| bad("\"terms\" must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let t = t
            .as_array()
            .filter(|t| t.len() == 5)
            .ok_or_else(|| bad("each term is [coefficient, a0, a1, a2, a3]"))?;
        let c = match &t[0] {
            Value::String(s) => BigInt::from_str(s.trim()),
            Value::Number(n) => BigInt::from_str(&n.to_string()),
            _ => return Err(bad("coefficient must be a decimal string")),
        }
        .map_err(|_| bad(format!("bad coefficient {}", t[0])))?;
        let mut e = [0u32; 4];
        for (slot, x) in e.iter_mut().zip(&t[1..]) {
            *slot = x
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| bad("exponents must be small nonnegative integers"))?;
        }
        out.push((c, e));
    }
    Ok(MultiPoly::from_terms(out))
}

pub fn rational_to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad(format!("bad fraction {:?}", s)))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad(format!("bad fraction {:?}", s)))?;
            if d.is_zero() {
                return Err(bad(format!("zero denominator in {:?}", s)));
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad(format!("bad number {:?}", s)))?,
        ),
    };
    Ok(parsed)
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|x| json!(rational_to_string(x)))
                    .collect(),
            )
        })
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<RationalMatrix> {
    let rows = as_u64(v, "rows")? as usize;
    let cols = as_u64(v, "cols")? as usize;
    let entries = field(v, "entries")?
        .as_array()
        .ok_or_else(|| bad("\"entries\" must be an array of rows"))?;
    let parsed: Vec<Vec<BigRational>> = entries
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("matrix row must be an array"))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => rational_from_str(s),
                    Value::Number(n) => rational_from_str(&n.to_string()),
                    _ => Err(bad("matrix entries are \"num/den\" strings")),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let m = RationalMatrix::from_rows(parsed)?;
    if m.rows() != rows || (rows > 0 && m.cols() != cols) {
        return Err(bad(format!(
            "declared {}x{} but entries are {}x{}",
            rows,
            cols,
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

pub fn triple_to_json(t: &MatrixTriple) -> Value {
    json!({
        "dim": t.dim(),
        "H": matrix_to_json(&t.h),
        "E": matrix_to_json(&t.e),
        "F": matrix_to_json(&t.f),
    })
}

pub fn triple_from_json(v: &Value) -> Result<MatrixTriple> {
    let t = MatrixTriple::new(
        matrix_from_json(field(v, "H")?)?,
        matrix_from_json(field(v, "E")?)?,
        matrix_from_json(field(v, "F")?)?,
    )?;
    if t.dim() as u64 != as_u64(v, "dim")? {
        return Err(bad("\"dim\" does not match the matrices"));
    }
    Ok(t)
}

pub fn rep_from_json(v: &Value) -> Result<RepTriple> {
    RepTriple::new(triple_from_json(v)?)
}

pub fn point_to_json(p: &[BigInt; 4]) -> Value {
    Value::Array(p.iter().map(|x| json!(x.to_string())).collect())
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    json!({
        "mode": r.mode.as_str(),
        "trials": r.trials,
        "agreed": r.agreed,
        "witness": r.witness.as_ref().map(point_to_json),
    })
}

pub fn monoid_report_to_json(r: &MonoidLawReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| match v {
            LawViolation::Closure { a, b } => json!({ "law": "closure", "indices": [a, b] }),
            LawViolation::Commutativity { a, b } => {
                json!({ "law": "commutativity", "indices": [a, b] })
            }
            LawViolation::Associativity { a, b, c } => {
                json!({ "law": "associativity", "indices": [a, b, c] })
            }
            LawViolation::Unit { a } => json!({ "law": "unit", "indices": [a] }),
        })
        .collect();
    json!({
        "samples": r.samples,
        "pairs_checked": r.pairs_checked,
        "triples_checked": r.triples_checked,
        "exhaustive": r.exhaustive,
        "passed": r.passed(),
        "violations": violations,
    })
}

/// Comparison of the computed zero-weight multiplicity with `n² - 5n + 6`.
pub fn adjoint_report_to_json(r: &AdjointReport) -> Value {
    json!({
        "n": r.n,
        "paper_z0_exponent": r.quoted_z0_exponent,
        "computed_z0_exponent": r.computed_z0_exponent,
        "match": r.matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl2cp_core::rep::irrep_matrices;

    #[test]
    fn documented_shapes() {
        let w = WeightVector::from_multiplicities([(0, 1), (2, 1), (10, 3)]);
        assert_eq!(
            serde_json::to_string(&weights_to_json(&w)).unwrap(),
            r#"{"dim":9,"d":{"0":1,"2":1,"10":3}}"#
        );
        let d = Decomposition::from_multiplicities([(0, 1), (1, 1), (2, 2)]);
        assert_eq!(
            serde_json::to_string(&decomposition_to_json(&d)).unwrap(),
            r#"{"l":{"0":1,"1":1,"2":2}}"#
        );
        let c = CanonicalCP::from_pairs(3, [(1, 1), (2, 2)]);
        assert_eq!(
            serde_json::to_string(&canonical_to_json(&c)).unwrap(),
            r#"{"d0":3,"factors":{"1":1,"2":2}}"#
        );
        let p = irrep_matrices(1);
        assert_eq!(
            serde_json::to_string(&matrix_to_json(&p.h)).unwrap(),
            r#"{"rows":2,"cols":2,"entries":[["1/1","0/1"],["0/1","-1/1"]]}"#
        );
        let q = sl2cp_core::pencil_det_exact(&p).unwrap();
        assert_eq!(
            serde_json::to_string(&poly_to_json(&q)).unwrap(),
            r#"{"terms":[["1",2,0,0,0],["-1",0,2,0,0],["-1",0,0,1,1]]}"#
        );
    }

    #[test]
    fn malformed_inputs_are_bad_input() {
        let cases = [
            json!({"dim": 2, "d": {"0": 1}}),
            json!({"dim": 1, "d": {"x": 1}}),
            json!({"d": {"0": 1}}),
        ];
        for v in cases {
            assert_eq!(
                weights_from_json(&v).unwrap_err().kind(),
                sl2cp_core::ErrorKind::BadInput
            );
        }
        assert!(decomposition_from_json(&json!({"l": {"0": 0}})).is_err());
        assert!(canonical_from_json(&json!({"d0": 1, "factors": {"0": 1}})).is_err());
        assert!(poly_from_json(&json!({"terms": [["1", 1, 0, 0]]})).is_err());
        assert!(rational_from_str("1/0").is_err());
        assert!(matrix_from_json(&json!({"rows": 1, "cols": 2, "entries": [["1/2"]]})).is_err());
        assert_eq!(
            rational_from_str(" 6/-4 ").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
    }
}
