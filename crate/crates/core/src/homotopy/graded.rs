use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{axpy, zero_vec, Matrix, Scalar, Vector};

/// A finite graded vector space `⊕_{lo ≤ i ≤ hi} Aᵢ` with a homogeneous basis listed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    lo: i32,
    dims: Vec<usize>,
    names: Vec<String>,
    degrees: Vec<i32>,
}

impl GradedSpace {
    /// `dims[k]` is the dimension in degree `lo + k`.
    pub fn new(lo: i32, dims: Vec<usize>) -> Self {
        let degrees: Vec<i32> =
            dims.iter().enumerate().flat_map(|(k, &d)| std::iter::repeat_n(lo + k as i32, d)).collect();
        let names = (0..degrees.len()).map(|i| format!("e{i}")).collect();
        GradedSpace { lo, dims, names, degrees }
    }

    /// Everything in degree 0.
    pub fn concentrated(names: Vec<String>) -> Self {
        let mut s = Self::new(0, vec![names.len()]);
        s.names = names;
        s
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Dimension(format!("{} names for dimension {}", names.len(), self.dim())));
        }
        self.names = names;
        Ok(self)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Basis indices of degree `deg`.
    pub fn indices_in_degree(&self, deg: i32) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| self.degrees[i] == deg)
    }

    /// A linear map preserves degree when every nonzero entry connects equal degrees.
    pub fn is_degree_zero(&self, m: &Matrix) -> bool {
        m.rows() == self.dim()
            && m.cols() == self.dim()
            && (0..self.dim())
                .all(|r| (0..self.dim()).all(|c| m.get(r, c).is_zero() || self.degrees[r] == self.degrees[c]))
    }
}

/// `(−1)^θ` with `θ = Σ_{i<j} |aᵢ||aⱼ|`, the Koszul sign of reversing graded symbols.
pub fn koszul_reversal_sign(degrees: &[i32]) -> i32 {
    let mut odd = 0usize;
    let mut parity = 0i64;
    for &d in degrees.iter().rev() {
        if d.rem_euclid(2) == 1 {
            parity += odd as i64;
            odd += 1;
        }
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A multilinear map `A^{⊗k} → A` by structure constants on basis tuples (first argument most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    arity: usize,
    dim: usize,
    data: Vec<Scalar>,
}

impl GradedMap {
    pub fn zeros(arity: usize, dim: usize) -> Self {
        GradedMap { arity, dim, data: zero_vec(dim.pow(arity as u32) * dim) }
    }

    pub fn from_vec(arity: usize, dim: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != dim.pow(arity as u32) * dim {
            return Err(Error::Dimension(format!(
                "{} constants for an arity-{arity} map on dimension {dim}",
                data.len()
            )));
        }
        Ok(GradedMap { arity, dim, data })
    }

    pub fn from_fn(arity: usize, dim: usize, f: impl Fn(&[usize]) -> Vector) -> Self {
        let mut m = Self::zeros(arity, dim);
        let mut tuple = vec![0; arity];
        for t in 0..dim.pow(arity as u32) {
            decode_into(t, dim, &mut tuple);
            let v = f(&tuple);
            m.data[t * dim..(t + 1) * dim].clone_from_slice(&v);
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn set(&mut self, tuple: &[usize], out: usize, x: Scalar) {
        let t = self.encode(tuple);
        self.data[t * self.dim + out] = x;
    }

    fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &a| acc * self.dim + a)
    }

    /// Value on basis vectors.
    pub fn basis(&self, tuple: &[usize]) -> &[Scalar] {
        let t = self.encode(tuple);
        &self.data[t * self.dim..(t + 1) * self.dim]
    }

    /// Value on arbitrary vectors, expanded multilinearly.
    pub fn apply(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.arity);
        let mut acc = zero_vec(self.dim);
        let mut tuple = vec![0; self.arity];
        self.expand(args, 0, &Scalar::from_integer(1.into()), &mut tuple, &mut acc);
        acc
    }

    fn expand(&self, args: &[&[Scalar]], pos: usize, coeff: &Scalar, tuple: &mut Vec<usize>, acc: &mut Vector) {
        if pos == args.len() {
            axpy(acc, coeff, self.basis(tuple));
            return;
        }
        for (x, c) in args[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            tuple[pos] = x;
            self.expand(args, pos + 1, &(coeff * c), tuple, acc);
        }
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        GradedMap {
            arity: self.arity,
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Every nonzero constant sits in degree `Σ|aᵢ| + shift`.
    pub fn check_degree(&self, space: &GradedSpace, shift: i32) -> Result<()> {
        let mut tuple = vec![0; self.arity];
        for t in 0..self.dim.pow(self.arity as u32) {
            decode_into(t, self.dim, &mut tuple);
            let want: i32 = tuple.iter().map(|&a| space.degree(a)).sum::<i32>() + shift;
            for (out, c) in self.data[t * self.dim..(t + 1) * self.dim].iter().enumerate() {
                if !c.is_zero() && space.degree(out) != want {
                    let args: Vec<&str> = tuple.iter().map(|&a| space.names()[a].as_str()).collect();
                    return Err(Error::Input(format!(
                        "arity-{} map sends ({}) to {} in degree {}, expected degree {want}",
                        self.arity,
                        args.join(", "),
                        space.names()[out],
                        space.degree(out)
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn decode_into(mut t: usize, dim: usize, tuple: &mut [usize]) {
    for slot in tuple.iter_mut().rev() {
        *slot = t % dim;
        t /= dim;
    }
}
