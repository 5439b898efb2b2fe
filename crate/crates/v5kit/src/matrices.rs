//! Reading and writing quiver representations as JSON.
//!
//! ```json
//! {"q": 3, "d": [2, 2], "A": [[1, 0], [0, 1]], "B": [[0, 1], [1, 0]], "C": [[1, 1], [0, 2]]}
//! ```
//!
//! Each arrow is a `d2 x d1` matrix given by rows. `q` is a prime or the
//! string `"rational"`; rational entries may be integers or `"p/q"` strings.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use thiserror::Error;
use v5kit_core::quiver::field::{PrimeField, Rationals};
use v5kit_core::quiver::linalg::Matrix;
use v5kit_core::quiver::{DimVector, QuiverError, QuiverRep};

use crate::format;

#[derive(Debug, Error)]
pub enum MatricesError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{0}` is missing or malformed")]
    Field(&'static str),
    #[error("q = {0} is not a prime")]
    NotPrime(u64),
    #[error("bad matrix entry {0}")]
    Entry(String),
    #[error("arrow {0} is not a {1}x{2} matrix")]
    Ragged(&'static str, usize, usize),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyRep {
    Finite(QuiverRep<PrimeField>),
    Rational(QuiverRep<Rationals>),
}

impl AnyRep {
    pub fn dims(&self) -> DimVector {
        match self {
            Self::Finite(r) => r.dims(),
            Self::Rational(r) => r.dims(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Finite(r) => format::rep(r, Value::from(r.field().order()), |x| Value::from(*x)),
            Self::Rational(r) => format::rep(r, Value::from("rational"), format::rational),
        }
    }
}

pub fn read(path: &Path) -> Result<AnyRep, MatricesError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| MatricesError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<AnyRep, MatricesError> {
    let v: Value = serde_json::from_str(text)?;
    let d = v
        .get("d")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2)
        .and_then(|a| Some(DimVector::new(a[0].as_u64()? as usize, a[1].as_u64()? as usize)))
        .ok_or(MatricesError::Field("d"))?;
    match v.get("q") {
        Some(Value::String(s)) if s == "rational" => {
            let arrows = arrows(&v, d, rational_entry)?;
            Ok(AnyRep::Rational(QuiverRep::new(Rationals, d, arrows)?))
        }
        Some(Value::Number(n)) => {
            let q = n.as_u64().ok_or(MatricesError::Field("q"))?;
            let field = u32::try_from(q).ok().and_then(PrimeField::new).ok_or(MatricesError::NotPrime(q))?;
            let arrows = arrows(&v, d, |x| {
                let n = x.as_i64().ok_or_else(|| MatricesError::Entry(x.to_string()))?;
                Ok(n.rem_euclid(i64::from(field.order())) as u32)
            })?;
            Ok(AnyRep::Finite(QuiverRep::new(field, d, arrows)?))
        }
        _ => Err(MatricesError::Field("q")),
    }
}

fn rational_entry(x: &Value) -> Result<BigRational, MatricesError> {
    match x {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| MatricesError::Entry(x.to_string())),
        Value::String(s) => s.parse().map_err(|_| MatricesError::Entry(s.clone())),
        other => Err(MatricesError::Entry(other.to_string())),
    }
}

fn arrows<E: Clone>(
    v: &Value,
    d: DimVector,
    entry: impl Fn(&Value) -> Result<E, MatricesError>,
) -> Result<[Matrix<E>; 3], MatricesError> {
    let one = |name: &'static str| -> Result<Matrix<E>, MatricesError> {
        let rows = v.get(name).and_then(Value::as_array).ok_or(MatricesError::Field(name))?;
        let rows = rows
            .iter()
            .map(|r| r.as_array().ok_or(MatricesError::Field(name))?.iter().map(&entry).collect::<Result<Vec<E>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        // an empty row list still needs the right column count
        if rows.len() != d.target {
            return Err(MatricesError::Ragged(name, d.target, d.source));
        }
        Matrix::from_rows(rows, d.source).ok_or(MatricesError::Ragged(name, d.target, d.source))
    };
    Ok([one("A")?, one("B")?, one("C")?])
}
