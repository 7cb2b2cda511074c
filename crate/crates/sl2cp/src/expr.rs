//! Representation expressions: `{"irrep": m}`, `{"sum": [..]}`, `{"tensor": [..]}`.

use serde_json::Value;
use sl2cp_core::rep::{direct_sum, irrep_matrices, tensor};
use sl2cp_core::{Error, RepTriple};

use crate::json;

type Result<T> = std::result::Result<T, Error>;

/// Largest dimension a built representation may have.
pub const MAX_BUILD_DIM: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepExpr {
    Irrep(u64),
    Sum(Vec<RepExpr>),
    Tensor(Vec<RepExpr>),
}

impl RepExpr {
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .filter(|o| o.len() == 1)
            .ok_or_else(|| Error::BadInput("expression must be an object with one key".into()))?;
        let (key, arg) = obj.iter().next().expect("one key");
        let children = |arg: &Value| -> Result<Vec<RepExpr>> {
            let items = arg
                .as_array()
                .filter(|a| !a.is_empty())
                .ok_or_else(|| Error::BadInput(format!("{:?} takes a nonempty array", key)))?;
            items.iter().map(RepExpr::from_json).collect()
        };
        match key.as_str() {
            "irrep" => arg
                .as_u64()
                .map(RepExpr::Irrep)
                .ok_or_else(|| Error::BadInput("\"irrep\" takes a nonnegative integer".into())),
            "sum" => Ok(RepExpr::Sum(children(arg)?)),
            "tensor" => Ok(RepExpr::Tensor(children(arg)?)),
            other => Err(Error::BadInput(format!("unknown expression {:?}", other))),
        }
    }

    /// Dimension of the described module, saturating on overflow.
    pub fn dim(&self) -> u64 {
        match self {
            RepExpr::Irrep(m) => m.saturating_add(1),
            RepExpr::Sum(xs) => xs.iter().fold(0u64, |a, x| a.saturating_add(x.dim())),
            RepExpr::Tensor(xs) => xs.iter().fold(1u64, |a, x| a.saturating_mul(x.dim())),
        }
    }

    pub fn build(&self) -> Result<RepTriple> {
        let dim = self.dim();
        if dim > MAX_BUILD_DIM {
            return Err(Error::SizeCapExceeded {
                dim: dim as usize,
                cap: MAX_BUILD_DIM as usize,
            });
        }
        Ok(self.build_unchecked())
    }

    fn build_unchecked(&self) -> RepTriple {
        match self {
            RepExpr::Irrep(m) => irrep_matrices(*m),
            RepExpr::Sum(xs) => fold(xs, direct_sum),
            RepExpr::Tensor(xs) => fold(xs, tensor),
        }
    }
}

fn fold(xs: &[RepExpr], op: fn(&RepTriple, &RepTriple) -> RepTriple) -> RepTriple {
    let mut it = xs.iter().map(RepExpr::build_unchecked);
    let first = it.next().expect("nonempty");
    it.fold(first, |acc, x| op(&acc, &x))
}

/// Accepts either an expression or a full triple `{"dim", "H", "E", "F"}`.
pub fn rep_from_value(v: &Value) -> Result<RepTriple> {
    if v.get("H").is_some() {
        json::rep_from_json(v)
    } else {
        RepExpr::from_json(v)?.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use sl2cp_core::rep::h_weights;
    use sl2cp_core::weights::convolve;

    #[test]
    fn builds_and_reads_back() {
        let e = RepExpr::from_json(
            &json!({"sum": [{"irrep": 1}, {"tensor": [{"irrep": 1}, {"irrep": 2}]}]}),
        )
        .unwrap();
        assert_eq!(e.dim(), 8);
        let t = e.build().unwrap();
        assert!(t.check_brackets());
        let w = h_weights(&t).unwrap();
        let w1 = h_weights(&irrep_matrices(1)).unwrap();
        let w2 = h_weights(&irrep_matrices(2)).unwrap();
        assert_eq!(w, w1.add(&convolve(&w1, &w2)));
        let full = json::triple_to_json(&t);
        assert_eq!(rep_from_value(&full).unwrap(), t);
    }

    #[test]
    fn rejects_bad_expressions() {
        for v in [
            json!({"sum": []}),
            json!({"irrep": -1}),
            json!({"foo": 1}),
            json!([1]),
            json!({"irrep": 1, "sum": []}),
        ] {
            assert!(RepExpr::from_json(&v).is_err(), "{}", v);
        }
        let big = json!({"tensor": [{"irrep": 20}, {"irrep": 20}]});
        assert_eq!(
            rep_from_value(&big).unwrap_err().kind(),
            sl2cp_core::ErrorKind::SizeCapExceeded
        );
    }
}
