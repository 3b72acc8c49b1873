//! JSON formats for algebras, modules, cochains and structure families.

mod algebra;

pub use algebra::*;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmat::{format_scalar, parse_scalar, Matrix, Scalar, Vector};

/// A rational from a JSON integer or a `"p/q"` string.
pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(crate::exactmat::int(k)),
            None => parse_scalar(&n.to_string()),
        },
        Value::String(s) => parse_scalar(s),
        other => Err(Error::Input(format!("expected a rational, got {other}"))),
    }
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

/// Row-major nested arrays of the given shape.
pub fn nest(data: &[Scalar], shape: &[usize]) -> Value {
    match shape {
        [] => scalar_to_json(&data[0]),
        [n] => Value::Array(data[..*n].iter().map(scalar_to_json).collect()),
        [n, rest @ ..] => {
            let stride: usize = rest.iter().product();
            Value::Array((0..*n).map(|k| nest(&data[k * stride..(k + 1) * stride], rest)).collect())
        }
    }
}

pub fn unnest(v: &Value, shape: &[usize]) -> Result<Vector> {
    let mut out = Vec::with_capacity(shape.iter().product());
    unnest_into(v, shape, &mut out)?;
    Ok(out)
}

fn unnest_into(v: &Value, shape: &[usize], out: &mut Vector) -> Result<()> {
    match shape {
        [] => out.push(scalar_from_json(v)?),
        [n, rest @ ..] => {
            let arr = v.as_array().ok_or_else(|| Error::Input(format!("expected an array of length {n}")))?;
            if arr.len() != *n {
                return Err(Error::Dimension(format!("expected {n} entries, found {}", arr.len())));
            }
            for x in arr {
                unnest_into(x, rest, out)?;
            }
        }
    }
    Ok(())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_to_json).collect())).collect())
}

/// A matrix given as a list of rows.
pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| Error::Input("a matrix must be a list of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Input("a matrix row must be a list".into()))?
                .iter()
                .map(scalar_from_json)
                .collect::<Result<Vector>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows)
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(v: &Value) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| Error::Input("expected a list of rationals".into()))?
        .iter()
        .map(scalar_from_json)
        .collect()
}
