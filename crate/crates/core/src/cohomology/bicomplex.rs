use super::complexes::group_differential;
use super::{CochainComplex, EquivariantComplex};
use crate::error::{Error, Result};
use crate::exactmat::{int, sign, Matrix};

/// The bicomplex `C^{i,j} = Maps(G^{×i}, C^j)` of an equivariant complex, columns `j ≥ first`.
///
/// Its [`CochainComplex`] structure is the total complex
/// `Cⁿ = ⊕_{i+j=n} C^{i,j}` with `∂ν = ∂_v ν + (−1)^i ∂_h ν`; components are
/// laid out by increasing `i`.
pub struct Bicomplex<'a, E: ?Sized> {
    column: &'a E,
    first: usize,
}

impl<'a, E: EquivariantComplex + ?Sized> Bicomplex<'a, E> {
    pub fn new(column: &'a E, first: usize) -> Result<Self> {
        if first < column.min_degree() {
            return Err(Error::Input(format!(
                "column {first} lies below the first degree {} of the column complex",
                column.min_degree()
            )));
        }
        Ok(Bicomplex { column, first })
    }

    pub fn column(&self) -> &E {
        self.column
    }

    pub fn first_column(&self) -> usize {
        self.first
    }

    pub fn bidim(&self, i: usize, j: usize) -> usize {
        self.column.group().order().pow(i as u32) * self.column.dim(j)
    }

    /// `(i, j)` components of total degree `n` with their starting offsets.
    pub fn components(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        if n < self.first {
            return out;
        }
        for i in 0..=n - self.first {
            let j = n - i;
            out.push((i, j, offset));
            offset += self.bidim(i, j);
        }
        out
    }

    /// `∂_h: C^{i,j} → C^{i,j+1}`, the column differential pointwise in the group arguments.
    pub fn horizontal(&self, i: usize, j: usize) -> Result<Matrix> {
        let copies = self.column.group().order().pow(i as u32);
        Ok(Matrix::identity(copies).kron(&self.column.differential(j)?))
    }

    /// `∂_v: C^{i,j} → C^{i+1,j}`, the group differential with the cochain action.
    pub fn vertical(&self, i: usize, j: usize) -> Matrix {
        let acts = self.actions(j);
        group_differential(self.column.group(), i, &acts)
    }

    fn actions(&self, j: usize) -> Vec<Matrix> {
        (0..self.column.group().order()).map(|g| self.column.action(g, j)).collect()
    }
}

impl<E: EquivariantComplex + ?Sized> CochainComplex for Bicomplex<'_, E> {
    fn name(&self) -> String {
        format!("total {}", self.column.name())
    }

    fn min_degree(&self) -> usize {
        self.first
    }

    fn dim(&self, n: usize) -> usize {
        self.components(n).iter().map(|&(i, j, _)| self.bidim(i, j)).sum()
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        let src = self.components(n);
        let dst = self.components(n + 1);
        let mut out = Matrix::zeros(self.dim(n + 1), self.dim(n));
        let offset = |i: usize| dst.iter().find(|c| c.0 == i).map(|c| c.2).expect("component");
        let one = int(1);
        for &(i, j, col) in &src {
            out.add_block(offset(i + 1), col, &self.vertical(i, j), &one);
            out.add_block(offset(i), col, &self.horizontal(i, j)?, &sign(i));
        }
        Ok(out)
    }
}
