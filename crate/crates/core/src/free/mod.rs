//! Free and word-based examples: planar-tree dendriform algebras, MAX algebras on words and tensor algebras,
//! each kept up to a degree bound.

mod max;
mod tensor;
mod trees;

pub use max::*;
pub use tensor::*;
pub use trees::*;

use num_traits::Zero;

use crate::exactmat::{Matrix, Scalar};

/// All words of length `n` over `k` letters, lexicographic.
pub(crate) fn words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |x| {
                    let mut w2 = w.clone();
                    w2.push(x);
                    w2
                })
            })
            .collect();
    }
    out
}

/// `c · m v_{x₁} ⊗ ⋯ ⊗ m v_{xₙ}` expanded into basis words.
pub(crate) fn expand_word(m: &Matrix, letters: &[usize], c: &Scalar) -> Vec<(Vec<usize>, Scalar)> {
    let mut partial = vec![(Vec::new(), c.clone())];
    for &x in letters {
        let mut next = Vec::new();
        for (w, coeff) in &partial {
            for y in 0..m.rows() {
                let e = m.get(y, x);
                if !e.is_zero() {
                    let mut w2: Vec<usize> = w.clone();
                    w2.push(y);
                    next.push((w2, coeff * e));
                }
            }
        }
        partial = next;
    }
    partial
}

/// Words of length `1..=max_len` ordered by length, then lexicographically.
pub(crate) fn word_basis(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    (1..=max_len).flat_map(|n| words(k, n)).collect()
}

#[cfg(test)]
mod tests;
