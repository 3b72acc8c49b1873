use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{
    check_dendriform_where, check_oriented_dendriform_where, Bilinear, DendriformAlgebra, OrientedAction,
};
use crate::combinatorics::{enumerate_trees, Tree};
use crate::error::{Error, Result};
use crate::exactmat::{zero_vec, Matrix, Scalar};
use crate::report::Report;

use super::{expand_word, words};

/// Which of the two products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Prec,
    Succ,
}

/// A formal sum of trees with rational coefficients.
pub type TreeSum = BTreeMap<Tree, Scalar>;

fn add_term(sum: &mut TreeSum, t: Tree, c: Scalar) {
    let entry = sum.entry(t.clone()).or_insert_with(Scalar::zero);
    *entry += c;
    if entry.is_zero() {
        sum.remove(&t);
    }
}

fn single(t: Tree) -> TreeSum {
    TreeSum::from([(t, Scalar::one())])
}

/// `t ≺ w` or `t ≻ w` by the grafting recursion, with `t ≺ | = t`, `| ≺ t = 0`, `t ≻ | = 0`, `| ≻ t = t`.
pub fn tree_product(t: &Tree, w: &Tree, side: Side) -> TreeSum {
    match (t, w, side) {
        (Tree::Leaf, Tree::Leaf, _) => TreeSum::new(),
        (_, Tree::Leaf, Side::Prec) => single(t.clone()),
        (_, Tree::Leaf, Side::Succ) => TreeSum::new(),
        (Tree::Leaf, _, Side::Prec) => TreeSum::new(),
        (Tree::Leaf, _, Side::Succ) => single(w.clone()),
        (Tree::Node(t1, t2), _, Side::Prec) => {
            // t₁ ∨ (t₂ ≺ w + t₂ ≻ w)
            let mut out = TreeSum::new();
            for s in [Side::Prec, Side::Succ] {
                for (u, c) in tree_product(t2, w, s) {
                    add_term(&mut out, Tree::graft((**t1).clone(), u), c);
                }
            }
            out
        }
        (_, Tree::Node(w1, w2), Side::Succ) => {
            // (t ≺ w₁ + t ≻ w₁) ∨ w₂
            let mut out = TreeSum::new();
            for s in [Side::Prec, Side::Succ] {
                for (u, c) in tree_product(t, w1, s) {
                    add_term(&mut out, Tree::graft(u, (**w2).clone()), c);
                }
            }
            out
        }
    }
}

/// Both products `(t ≺ w, t ≻ w)`.
pub fn tree_products(t: &Tree, w: &Tree) -> (TreeSum, TreeSum) {
    (tree_product(t, w, Side::Prec), tree_product(t, w, Side::Succ))
}

/// A basis monomial `(t; v_{i₁} ⊗ ⋯ ⊗ v_{iₙ})` of the free dendriform algebra.
pub type Monomial = (Tree, Vec<usize>);

/// An element of the free dendriform algebra on generators `v₀, …, v_{k−1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeDendElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl FreeDendElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `(t; word)`; the word length must equal the number of internal vertices of `t`.
    pub fn monomial(t: Tree, word: Vec<usize>) -> Result<Self> {
        if t.degree() != word.len() || word.is_empty() {
            return Err(Error::Input(format!(
                "tree {t} of degree {} with a word of length {}",
                t.degree(),
                word.len()
            )));
        }
        Ok(FreeDendElement { terms: BTreeMap::from([((t, word), Scalar::one())]) })
    }

    /// The generator `(|∨|; v_i)`.
    pub fn generator(i: usize) -> Self {
        Self::monomial(Tree::y1(), vec![i]).expect("degree one")
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term, 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(t, _)| t.degree()).max().unwrap_or(0)
    }

    pub fn add_scaled(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_scaled(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_scaled(m.clone(), &(x * c));
        }
        out
    }

    /// `(t; u) ∘ (w; v) = (t ∘ w; uv)` extended bilinearly.
    pub fn product(&self, other: &Self, side: Side) -> Self {
        let mut out = Self::zero();
        for ((t, u), a) in &self.terms {
            for ((w, v), b) in &other.terms {
                let ab = a * b;
                let word: Vec<usize> = u.iter().chain(v).copied().collect();
                for (s, c) in tree_product(t, w, side) {
                    out.add_scaled((s, word.clone()), &(&ab * c));
                }
            }
        }
        out
    }

    /// `g(t; v₁⊗⋯⊗vₘ)` is `(t; gv₁⊗⋯⊗gvₘ)` when `ε(g) = 1` and `(tᵀ; gvₘ⊗⋯⊗gv₁)` otherwise.
    pub fn act(&self, act: &OrientedAction, g: usize) -> Self {
        let m = act.matrix(g);
        let reversing = act.group().eps(g) == -1;
        let mut out = Self::zero();
        for ((t, word), c) in &self.terms {
            let (shape, letters): (Tree, Vec<usize>) =
                if reversing { (t.mirror(), word.iter().rev().copied().collect()) } else { (t.clone(), word.clone()) };
            let partial = expand_word(m, &letters, c);
            for (w, coeff) in partial {
                out.add_scaled((shape.clone(), w), &coeff);
            }
        }
        out
    }
}

/// The free dendriform algebra on `k` generators, kept up to degree `N` as a finite-dimensional window.
///
/// Products leaving the window are stored as zero and every check skips them.
#[derive(Clone, Debug)]
pub struct FreeDendriform {
    generators: usize,
    max_degree: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl FreeDendriform {
    pub fn new(generators: usize, max_degree: usize) -> Result<Self> {
        if generators == 0 || max_degree == 0 {
            return Err(Error::Input("need at least one generator and degree bound ≥ 1".into()));
        }
        let basis: Vec<Monomial> = (1..=max_degree)
            .flat_map(|n| {
                let ws = words(generators, n);
                enumerate_trees(n).into_iter().flat_map(move |t| ws.clone().into_iter().map(move |w| (t.clone(), w)))
            })
            .collect();
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(FreeDendriform { generators, max_degree, basis, index })
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

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].1.len()
    }

    /// Dimension of the degree-`n` component.
    pub fn component_dim(&self, n: usize) -> usize {
        self.basis.iter().filter(|(_, w)| w.len() == n).count()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of an element of degree at most `N`.
    pub fn coordinates(&self, x: &FreeDendElement) -> Result<Vec<Scalar>> {
        let mut v = zero_vec(self.dim());
        for (m, c) in x.terms() {
            let i = self.index_of(m).ok_or_else(|| Error::Input(format!("{} lies outside the window", name(m))))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, i: usize) -> FreeDendElement {
        let (t, w) = self.basis[i].clone();
        FreeDendElement::monomial(t, w).expect("basis monomial")
    }

    pub fn names(&self) -> Vec<String> {
        self.basis.iter().map(name).collect()
    }

    /// Structure constants on the window; entries for pairs with total degree above `N` are zero.
    pub fn algebra(&self) -> DendriformAlgebra {
        let n = self.dim();
        let table = |side: Side| {
            let rows: Vec<Vec<Vec<Scalar>>> = (0..n)
                .into_par_iter()
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if self.degree(i) + self.degree(j) > self.max_degree {
                                return zero_vec(n);
                            }
                            let p = self.element(i).product(&self.element(j), side);
                            self.coordinates(&p).expect("in window")
                        })
                        .collect()
                })
                .collect();
            Bilinear::from_fn(n, n, n, |i, j| rows[i][j].clone())
        };
        DendriformAlgebra::new(self.names(), table(Side::Prec), table(Side::Succ)).expect("square products")
    }

    /// The oriented action on the window induced by an action on the generators.
    pub fn action(&self, on_generators: &OrientedAction) -> Result<OrientedAction> {
        if on_generators.dim() != self.generators {
            return Err(Error::Dimension(format!(
                "action on {} generators for an algebra on {}",
                on_generators.dim(),
                self.generators
            )));
        }
        let mats = (0..on_generators.group().order())
            .map(|g| {
                let cols = (0..self.dim())
                    .map(|i| self.coordinates(&self.element(i).act(on_generators, g)))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_columns(self.dim(), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        OrientedAction::new(on_generators.group().clone(), mats)
    }

    /// Dendriform axioms on all basis triples of total degree at most `N`.
    pub fn check(&self, alg: &DendriformAlgebra) -> Report {
        check_dendriform_where(alg, |i, j, k| self.degree(i) + self.degree(j) + self.degree(k) <= self.max_degree)
    }

    /// Oriented compatibility on all basis pairs of total degree at most `N`.
    pub fn check_oriented(&self, alg: &DendriformAlgebra, act: &OrientedAction) -> Result<Report> {
        check_oriented_dendriform_where(alg, act, |i, j| self.degree(i) + self.degree(j) <= self.max_degree)
    }
}

fn name((t, w): &Monomial) -> String {
    let word: Vec<String> = w.iter().map(|x| format!("v{x}")).collect();
    format!("{t};{}", word.join(""))
}
