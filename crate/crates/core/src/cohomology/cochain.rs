use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmat::{zero_vec, Scalar, Vector};
use crate::io::{nest, unnest};

use super::encode;

/// An element of `Hom(𝕂[C_n] ⊗ D^{⊗n}, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendCochain {
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub data: Vector,
}

impl DendCochain {
    pub fn zeros(n: usize, d: usize, m: usize) -> Self {
        DendCochain { n, d, m, data: zero_vec(n * d.pow(n as u32) * m) }
    }

    pub fn from_vec(n: usize, d: usize, m: usize, data: Vector) -> Result<Self> {
        if data.len() != n * d.pow(n as u32) * m {
            return Err(Error::Dimension(format!(
                "{} coordinates for a degree-{n} cochain with d={d}, m={m}",
                data.len()
            )));
        }
        Ok(DendCochain { n, d, m, data })
    }

    fn shape(&self) -> Vec<usize> {
        let mut s = vec![self.n];
        s.extend(std::iter::repeat_n(self.d, self.n));
        s.push(self.m);
        s
    }

    /// `f([r]; e_{args})`, with `r` 1-based.
    pub fn value(&self, r: usize, args: &[usize]) -> &[Scalar] {
        let start = ((r - 1) * self.d.pow(self.n as u32) + encode(args, self.d)) * self.m;
        &self.data[start..start + self.m]
    }

    /// Nested arrays `[r][i₁]…[i_n][out]` of rational strings.
    pub fn to_json(&self) -> Value {
        nest(&self.data, &self.shape())
    }

    pub fn from_json(n: usize, d: usize, m: usize, v: &Value) -> Result<Self> {
        let mut c = Self::zeros(n, d, m);
        c.data = unnest(v, &c.shape())?;
        Ok(c)
    }
}

/// An element of `Hom(D^{⊗n}, M)`; degree 0 is an element of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochCochain {
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub data: Vector,
}

impl HochCochain {
    pub fn zeros(n: usize, d: usize, m: usize) -> Self {
        HochCochain { n, d, m, data: zero_vec(d.pow(n as u32) * m) }
    }

    pub fn from_vec(n: usize, d: usize, m: usize, data: Vector) -> Result<Self> {
        if data.len() != d.pow(n as u32) * m {
            return Err(Error::Dimension(format!(
                "{} coordinates for a degree-{n} Hochschild cochain with d={d}, m={m}",
                data.len()
            )));
        }
        Ok(HochCochain { n, d, m, data })
    }

    fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = std::iter::repeat_n(self.d, self.n).collect();
        s.push(self.m);
        s
    }

    pub fn value(&self, args: &[usize]) -> &[Scalar] {
        let start = encode(args, self.d) * self.m;
        &self.data[start..start + self.m]
    }

    /// Nested arrays `[i₁]…[i_n][out]`.
    pub fn to_json(&self) -> Value {
        nest(&self.data, &self.shape())
    }

    pub fn from_json(n: usize, d: usize, m: usize, v: &Value) -> Result<Self> {
        let mut c = Self::zeros(n, d, m);
        c.data = unnest(v, &c.shape())?;
        Ok(c)
    }
}
