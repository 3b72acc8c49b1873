use std::collections::HashMap;

use crate::algebra::{
    check_associative_where, check_equivariant, check_oriented_product, check_oriented_product_where,
    AssociativeAlgebra, Bilinear, OrientedAction,
};
use crate::error::{Error, Result};
use crate::exactmat::{unit_vec, zero_vec, Matrix};
use crate::report::{Checker, Report};

use super::{expand_word, word_basis};

/// The tensor algebra `⊕_{1 ≤ n ≤ N} V^{⊗n}` with concatenation, without the unit component.
#[derive(Clone, Debug)]
pub struct TruncatedTensorAlgebra {
    generators: usize,
    max_degree: usize,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TruncatedTensorAlgebra {
    pub fn new(generators: usize, max_degree: usize) -> Result<Self> {
        if generators == 0 || max_degree == 0 {
            return Err(Error::Input("need at least one generator and degree bound ≥ 1".into()));
        }
        let basis = word_basis(generators, max_degree);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(TruncatedTensorAlgebra { generators, max_degree, basis, index })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    fn degree(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    fn in_window(&self, i: usize, j: usize) -> bool {
        self.degree(i) + self.degree(j) <= self.max_degree
    }

    pub fn algebra(&self) -> AssociativeAlgebra {
        let n = self.dim();
        AssociativeAlgebra::new(Bilinear::from_fn(n, n, n, |i, j| {
            if !self.in_window(i, j) {
                return zero_vec(n);
            }
            let w: Vec<usize> = self.basis[i].iter().chain(&self.basis[j]).copied().collect();
            unit_vec(n, self.index[&w])
        }))
    }

    /// `g(v₁⊗⋯⊗vₙ) = gv₁⊗⋯⊗gvₙ`, or `gvₙ⊗⋯⊗gv₁` when `ε(g) = −1`.
    pub fn action(&self, on_generators: &OrientedAction) -> Result<OrientedAction> {
        if on_generators.dim() != self.generators {
            return Err(Error::Dimension(format!(
                "action on {} generators for a tensor algebra on {}",
                on_generators.dim(),
                self.generators
            )));
        }
        let grp = on_generators.group();
        let n = self.dim();
        let mats = (0..grp.order())
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for (i, w) in self.basis.iter().enumerate() {
                    let letters: Vec<usize> =
                        if grp.eps(g) == -1 { w.iter().rev().copied().collect() } else { w.clone() };
                    for (image, c) in expand_word(on_generators.matrix(g), &letters, &crate::exactmat::int(1)) {
                        m.add_to(self.index[&image], i, &c);
                    }
                }
                m
            })
            .collect();
        OrientedAction::new(grp.clone(), mats)
    }

    /// Associativity on triples of total degree at most `N`.
    pub fn check(&self, alg: &AssociativeAlgebra) -> Report {
        check_associative_where(alg, |i, j, k| self.degree(i) + self.degree(j) + self.degree(k) <= self.max_degree)
    }

    pub fn check_oriented(&self, alg: &AssociativeAlgebra, act: &OrientedAction) -> Result<Report> {
        check_oriented_product_where("oriented associative", alg.mult(), act, |i, j| self.in_window(i, j))
    }

    /// The multiplicative extension `v_{x₁}⊗⋯⊗v_{xₙ} ↦ f(v_{x₁})⋯f(v_{xₙ})` of an equivariant `f: V → A`,
    /// with a report on multiplicativity over the window and equivariance.
    pub fn extend_map(
        &self,
        f: &Matrix,
        on_generators: &OrientedAction,
        target: &AssociativeAlgebra,
        target_action: &OrientedAction,
    ) -> Result<(Matrix, Report)> {
        let equiv = check_equivariant(f, on_generators, target_action)?;
        if !equiv.passed() {
            return Err(Error::Input(format!("f is not G-equivariant: {equiv}")));
        }
        let oriented = check_oriented_product("oriented associative", target.mult(), target_action)?;
        if !oriented.passed() {
            return Err(Error::Input(format!("target is not an oriented associative algebra: {oriented}")));
        }
        let fcols = f.columns();
        let cols: Vec<_> = self
            .basis
            .iter()
            .map(|w| w[1..].iter().fold(fcols[w[0]].clone(), |acc, &x| target.mul(&acc, &fcols[x])))
            .collect();
        let ext = Matrix::from_columns(target.dim(), &cols)?;
        let alg = self.algebra();
        let mut c = Checker::new("multiplicative extension");
        'outer: for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.in_window(i, j) {
                    continue;
                }
                let lhs = ext.apply(alg.mult().basis(i, j));
                let rhs = target.mul(&cols[i], &cols[j]);
                if !c.eq("F(xy) = F(x)F(y)", || format!("(t{i}, t{j})"), lhs, rhs) {
                    break 'outer;
                }
            }
        }
        let act = self.action(on_generators)?;
        let equiv = check_equivariant(&ext, &act, target_action)?;
        Ok((ext, Report::combine("extension of f", [c.finish(), equiv])))
    }
}
