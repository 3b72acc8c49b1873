use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{axpy, zero_vec, Matrix, Scalar, Vector};

/// A bilinear map `U ⊗ V → W` given by structure constants:
/// `e_i · f_j = Σ_k c[i][j][k] g_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bilinear {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<Scalar>,
}

impl Bilinear {
    pub fn zeros(left: usize, right: usize, out: usize) -> Self {
        Bilinear { left, right, out, data: zero_vec(left * right * out) }
    }

    /// Square product `D ⊗ D → D`.
    pub fn square(dim: usize) -> Self {
        Self::zeros(dim, dim, dim)
    }

    pub fn from_fn(left: usize, right: usize, out: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut b = Self::zeros(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                debug_assert_eq!(v.len(), out);
                b.data[(i * right + j) * out..(i * right + j + 1) * out].clone_from_slice(&v);
            }
        }
        b
    }

    pub fn from_vec(left: usize, right: usize, out: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != left * right * out {
            return Err(Error::Dimension(format!(
                "{} structure constants for a {left}x{right}->{out} product",
                data.len()
            )));
        }
        Ok(Bilinear { left, right, out, data })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn is_square(&self, d: usize) -> bool {
        self.shape() == (d, d, d)
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.right + j) * self.out + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        self.data[(i * self.right + j) * self.out + k] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, x: &Scalar) {
        self.data[(i * self.right + j) * self.out + k] += x;
    }

    /// `e_i · f_j` as a coordinate slice.
    pub fn basis(&self, i: usize, j: usize) -> &[Scalar] {
        let s = (i * self.right + j) * self.out;
        &self.data[s..s + self.out]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut acc, &(xi * yj), self.basis(i, j));
            }
        }
        acc
    }

    /// `x · f_j`.
    pub fn apply_left(&self, x: &[Scalar], j: usize) -> Vector {
        let mut acc = zero_vec(self.out);
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut acc, xi, self.basis(i, j));
        }
        acc
    }

    /// `e_i · y`.
    pub fn apply_right(&self, i: usize, y: &[Scalar]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut acc, yj, self.basis(i, j));
        }
        acc
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Bilinear { left: self.left, right: self.right, out: self.out, data }
    }

    pub fn sub(&self, other: &Bilinear) -> Bilinear {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Bilinear { left: self.left, right: self.right, out: self.out, data }
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        let data = self.data.iter().map(|a| a * c).collect();
        Bilinear { left: self.left, right: self.right, out: self.out, data }
    }

    /// `(x, y) ↦ self(y, x)`.
    pub fn opposite(&self) -> Bilinear {
        Bilinear::from_fn(self.right, self.left, self.out, |i, j| self.basis(j, i).to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `(x, y) ↦ post · self(pre_l · x, pre_r · y)`.
    pub fn compose(&self, post: &Matrix, pre_l: &Matrix, pre_r: &Matrix) -> Bilinear {
        assert_eq!(pre_l.rows(), self.left);
        assert_eq!(pre_r.rows(), self.right);
        assert_eq!(post.cols(), self.out);
        Bilinear::from_fn(pre_l.cols(), pre_r.cols(), post.rows(), |i, j| {
            post.apply(&self.apply(&pre_l.column(i), &pre_r.column(j)))
        })
    }

    /// The same constants expressed in a new basis: columns of `p` are the new
    /// basis vectors, so `x ·' y = p⁻¹ (p x · p y)`.
    pub fn transport(&self, p: &Matrix, p_inv: &Matrix) -> Bilinear {
        self.compose(p_inv, p, p)
    }
}
