//! Cochain complexes, their differentials as exact matrices, and cohomology dimensions.

mod bicomplex;
mod cochain;
mod complexes;
mod twist;
mod two_cocycle;

pub use bicomplex::Bicomplex;
pub use cochain::{DendCochain, HochCochain};
pub use complexes::{s_map, DendComplex, GroupComplex, HochComplex};
pub use twist::{reversal_sign, twisted_dend_action, twisted_hoch_action, Involutive, Oriented, TwistableComplex};
pub use two_cocycle::{is_two_cocycle, two_coboundary_from, TwoCochain};

pub(crate) use complexes::{decode, encode};

use serde::Serialize;

use crate::error::Result;
use crate::exactmat::{int, Matrix, Scalar, Vector};

/// A cochain complex with exact differentials `Cⁿ → Cⁿ⁺¹`.
pub trait CochainComplex: Sync {
    fn name(&self) -> String;

    fn min_degree(&self) -> usize;

    fn dim(&self, n: usize) -> usize;

    /// Matrix of `δ: Cⁿ → Cⁿ⁺¹`; subcomplexes return the differential into the ambient `Cⁿ⁺¹`.
    fn differential(&self, n: usize) -> Result<Matrix>;

    /// Coordinates of a cochain of this complex in the ambient space.
    fn embed(&self, _n: usize, v: &[Scalar]) -> Vector {
        v.to_vec()
    }
}

/// A complex with a linear action of an oriented group commuting with the differential.
pub trait EquivariantComplex: CochainComplex {
    fn group(&self) -> &crate::algebra::OrientedGroup;

    /// Matrix of `f ↦ g·f` on `Cⁿ`.
    fn action(&self, g: usize, n: usize) -> Matrix;
}

/// A complex with the degree-wise involution `T_n`.
pub trait InvolutiveComplex: CochainComplex {
    fn t_map(&self, n: usize) -> Matrix;
}

/// The subcomplex of an involutive complex where `T_n` acts by `±1`.
pub struct Eigencomplex<'a, C: ?Sized> {
    inner: &'a C,
    eigenvalue: i8,
}

impl<'a, C: InvolutiveComplex + ?Sized> Eigencomplex<'a, C> {
    /// `+1` gives `iCⁿ`, `−1` gives `i₋Cⁿ`.
    pub fn new(inner: &'a C, eigenvalue: i8) -> Self {
        assert!(eigenvalue == 1 || eigenvalue == -1);
        Eigencomplex { inner, eigenvalue }
    }

    /// Columns span the eigenspace inside `Cⁿ`.
    pub fn basis(&self, n: usize) -> Matrix {
        eigenspace(&self.inner.t_map(n), self.eigenvalue)
    }
}

/// Basis (as columns) of `{x : Tx = λx}`.
pub fn eigenspace(t: &Matrix, eigenvalue: i8) -> Matrix {
    let shifted = t.sub(&Matrix::scalar_identity(t.rows(), &int(eigenvalue as i64))).expect("square");
    let basis = shifted.kernel_basis();
    Matrix::from_columns(t.rows(), &basis).expect("kernel vectors")
}

impl<C: InvolutiveComplex + ?Sized> CochainComplex for Eigencomplex<'_, C> {
    fn name(&self) -> String {
        let which = if self.eigenvalue == 1 { "+1" } else { "-1" };
        format!("{} ({which} part)", self.inner.name())
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn dim(&self, n: usize) -> usize {
        self.basis(n).cols()
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        self.inner.differential(n)?.mul(&self.basis(n))
    }

    fn embed(&self, n: usize, v: &[Scalar]) -> Vector {
        self.basis(n).mul_vec(v).expect("eigenspace coordinates")
    }
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub degree: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// One degree of cohomology, with representative cocycles when requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDegree {
    pub dims: CohomologyDims,
    /// Cocycles (ambient coordinates) whose classes form a basis of `Hⁿ`.
    pub witnesses: Option<Vec<Vector>>,
}

pub fn cohomology<C: CochainComplex + ?Sized>(c: &C, n: usize) -> Result<CohomologyDims> {
    Ok(cohomology_range(c, n, n, false)?.remove(0).dims)
}

/// Degrees `lo..=hi`, computing each differential once.
pub fn cohomology_range<C: CochainComplex + ?Sized>(
    c: &C,
    lo: usize,
    hi: usize,
    witnesses: bool,
) -> Result<Vec<CohomologyDegree>> {
    if lo < c.min_degree() {
        return Err(crate::Error::Input(format!(
            "{} cohomology starts in degree {}, got {lo}",
            c.name(),
            c.min_degree()
        )));
    }
    let mut prev: Option<Matrix> = if lo > c.min_degree() { Some(c.differential(lo - 1)?) } else { None };
    let mut out = Vec::new();
    for n in lo..=hi {
        let next = c.differential(n)?;
        let dim_c = next.cols();
        let rank_next = next.rank();
        let dim_b = prev.as_ref().map_or(0, Matrix::rank);
        let dims =
            CohomologyDims { degree: n, dim_c, dim_z: dim_c - rank_next, dim_b, dim_h: dim_c - rank_next - dim_b };
        let reps = if witnesses { Some(representatives(c, n, &next, prev.as_ref(), dims.dim_h)) } else { None };
        out.push(CohomologyDegree { dims, witnesses: reps });
        prev = Some(next);
    }
    Ok(out)
}

/// Cocycles completing a basis of the coboundaries to one of the cocycles.
fn representatives<C: CochainComplex + ?Sized>(
    c: &C,
    n: usize,
    next: &Matrix,
    prev: Option<&Matrix>,
    want: usize,
) -> Vec<Vector> {
    let mut span: Vec<Vector> = prev.map(Matrix::columns).unwrap_or_default();
    let mut rank =
        if span.is_empty() { 0 } else { Matrix::from_columns(span[0].len(), &span).expect("columns").rank() };
    let mut reps = Vec::new();
    for z in next.kernel_basis() {
        if reps.len() == want {
            break;
        }
        let z = c.embed(n, &z);
        span.push(z.clone());
        let r = Matrix::from_columns(z.len(), &span).expect("columns").rank();
        if r > rank {
            rank = r;
            reps.push(z);
        } else {
            span.pop();
        }
    }
    reps
}

/// Basis of the cocycles `Zⁿ` in the complex's own coordinates.
pub fn cocycle_basis<C: CochainComplex + ?Sized>(c: &C, n: usize) -> Result<Vec<Vector>> {
    Ok(c.differential(n)?.kernel_basis())
}

/// A primitive `x` with `δx = v` (ambient coordinates), or `None` when `v` is not a coboundary.
pub fn coboundary_primitive<C: CochainComplex + ?Sized>(c: &C, n: usize, v: &[Scalar]) -> Result<Option<Vector>> {
    if n <= c.min_degree() {
        return Ok(if v.iter().all(num_traits::Zero::is_zero) { Some(vec![]) } else { None });
    }
    c.differential(n - 1)?.solve(v)
}

#[cfg(test)]
mod tests;
