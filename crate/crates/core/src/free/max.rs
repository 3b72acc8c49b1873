use std::collections::HashMap;

use crate::algebra::{
    check_dendriform_where, check_oriented_dendriform_where, Bilinear, DendriformAlgebra, OrientedAction, OrientedGroup,
};
use crate::error::{Error, Result};
use crate::exactmat::{int, unit_vec, zero_vec, Matrix};
use crate::report::Report;

use super::word_basis;

/// `(a ≺ b, a ≻ b)`: the concatenation goes to `≺` when `max(a) ≥ max(b)` and to `≻` otherwise.
///
/// Letters are compared by index. Both words must be nonempty.
pub fn max_products(a: &[usize], b: &[usize]) -> (Option<Vec<usize>>, Option<Vec<usize>>) {
    let ab: Vec<usize> = a.iter().chain(b).copied().collect();
    let (ma, mb) = (a.iter().max(), b.iter().max());
    if ma >= mb {
        (Some(ab), None)
    } else {
        (None, Some(ab))
    }
}

/// `g(x₁⋯xₘ) = g(x₁)⋯g(xₘ)`, reversed when `ε(g) = −1`.
pub fn act_on_word(perm: &[usize], eps: i8, word: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = word.iter().map(|&x| perm[x]).collect();
    if eps == -1 {
        w.reverse();
    }
    w
}

/// The MAX dendriform algebra on the nonempty words of length at most `L` over an ordered alphabet.
#[derive(Clone, Debug)]
pub struct MaxWordAlgebra {
    letters: Vec<String>,
    max_len: usize,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl MaxWordAlgebra {
    /// `letters` are listed in increasing order.
    pub fn new(letters: Vec<String>, max_len: usize) -> Result<Self> {
        if letters.is_empty() || max_len == 0 {
            return Err(Error::Input("need a nonempty alphabet and length bound ≥ 1".into()));
        }
        let basis = word_basis(letters.len(), max_len);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(MaxWordAlgebra { letters, max_len, basis, index })
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn max_len(&self) -> usize {
        self.max_len
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

    pub fn word_name(&self, w: &[usize]) -> String {
        w.iter().map(|&x| self.letters[x].as_str()).collect()
    }

    /// Parses a word letter by letter; letters must be single characters for this to be unambiguous.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        s.chars()
            .map(|ch| {
                self.letters
                    .iter()
                    .position(|l| l.chars().eq(std::iter::once(ch)))
                    .ok_or_else(|| Error::Input(format!("unknown letter {ch:?}")))
            })
            .collect()
    }

    fn len_of(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    /// Structure constants on the window; products longer than `L` are stored as zero.
    pub fn algebra(&self) -> DendriformAlgebra {
        let n = self.dim();
        let table = |left: bool| {
            Bilinear::from_fn(n, n, n, |i, j| {
                let (p, s) = max_products(&self.basis[i], &self.basis[j]);
                match if left { p } else { s } {
                    Some(w) if w.len() <= self.max_len => unit_vec(n, self.index[&w]),
                    _ => zero_vec(n),
                }
            })
        };
        let names = self.basis.iter().map(|w| self.word_name(w)).collect();
        DendriformAlgebra::new(names, table(true), table(false)).expect("square products")
    }

    /// The action on words induced by permutations of the alphabet, one per group element.
    ///
    /// Each permutation must be strictly increasing for `ε(g) = 1` and strictly decreasing for `ε(g) = −1`.
    pub fn action(&self, group: &OrientedGroup, perms: &[Vec<usize>]) -> Result<OrientedAction> {
        let k = self.letters.len();
        if perms.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} permutations for a group of order {}",
                perms.len(),
                group.order()
            )));
        }
        for (g, p) in perms.iter().enumerate() {
            let mut seen = vec![false; k];
            if p.len() != k || p.iter().any(|&x| x >= k || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Input(format!(
                    "image of {} is not a permutation of the alphabet",
                    group.names()[g]
                )));
            }
            let monotone = (0..k.saturating_sub(1)).all(|x| match group.eps(g) {
                1 => p[x] < p[x + 1],
                _ => p[x] > p[x + 1],
            });
            if !monotone {
                return Err(Error::Input(format!(
                    "{} must {} the order of the alphabet",
                    group.names()[g],
                    if group.eps(g) == 1 { "preserve" } else { "reverse" }
                )));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if (0..k).any(|x| perms[g][perms[h][x]] != perms[gh][x]) {
                    return Err(Error::Input(format!(
                        "permutations do not compose like {} · {}",
                        group.names()[g],
                        group.names()[h]
                    )));
                }
            }
        }
        let n = self.dim();
        let mats = (0..group.order())
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for (i, w) in self.basis.iter().enumerate() {
                    m.set(self.index[&act_on_word(&perms[g], group.eps(g), w)], i, int(1));
                }
                m
            })
            .collect();
        OrientedAction::new(group.clone(), mats)
    }

    /// Dendriform axioms on triples of total length at most `L`.
    pub fn check(&self, alg: &DendriformAlgebra) -> Report {
        check_dendriform_where(alg, |i, j, k| self.len_of(i) + self.len_of(j) + self.len_of(k) <= self.max_len)
    }

    pub fn check_oriented(&self, alg: &DendriformAlgebra, act: &OrientedAction) -> Result<Report> {
        check_oriented_dendriform_where(alg, act, |i, j| self.len_of(i) + self.len_of(j) <= self.max_len)
    }
}
