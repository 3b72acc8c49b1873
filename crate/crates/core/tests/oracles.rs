//! Values known in closed form, computed here without the library's own enumeration or reduction code.

use std::collections::BTreeSet;

use dendro::algebra::*;
use dendro::cohomology::*;
use dendro::combinatorics::{enumerate_trees, Tree};
use dendro::exactmat::Matrix;
use dendro::fixtures::*;
use dendro::free::FreeDendriform;

fn h_dims<C: CochainComplex>(c: &C, lo: usize, hi: usize) -> Vec<usize> {
    cohomology_range(c, lo, hi, false).unwrap().iter().map(|r| r.dims.dim_h).collect()
}

/// Hochschild cohomology of `𝕂[x]/(xᵐ)` with coefficients in itself, from the 2-periodic resolution:
/// `HH⁰ = A`, `HHⁿ` has dimension `m − 1` for `n ≥ 1` in characteristic zero.
#[test]
fn hochschild_of_truncated_polynomials() {
    for m in 2..=3 {
        let a = truncated_polynomials(m);
        let hc = HochComplex::new(a.mult().clone(), a.mult().clone(), a.mult().clone()).unwrap();
        let mut expected = vec![m];
        expected.extend([m - 1; 3]);
        assert_eq!(h_dims(&hc, 0, 3), expected, "m = {m}");
    }
}

/// `𝕂` is separable, so only `HH⁰` survives; `e≺e = e` has `⋆ = ≺ + ≻` equal to the product of `𝕂`.
#[test]
fn hochschild_of_the_ground_field() {
    let d = one_dim_left();
    let hc = HochComplex::from_dendriform(&d, &Representation::adjoint(&d)).unwrap();
    assert_eq!(h_dims(&hc, 0, 3), [1, 0, 0, 0]);
}

/// Over `ℚ` finite groups have no higher cohomology; `H⁰` is the fixed subspace.
#[test]
fn rational_group_cohomology_is_the_invariants() {
    let sign = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let inv = Involution::new(sign).unwrap();
    let cases: Vec<(OrientedAction, usize)> = vec![
        (z3_trivial(2), 2),
        (z2_by_involution(&inv), 1),
        (z4_by_involution(&inv), 1),
        (klein_by_involution(&inv), 1),
        (OrientedAction::trivial(OrientedGroup::z2_reversing(), 3), 3),
    ];
    for (act, fixed) in cases {
        let q = act.group().order();
        assert_eq!(h_dims(&GroupComplex::new(act), 0, 3), [fixed, 0, 0, 0], "|G| = {q}");
    }
}

/// With all products zero every differential vanishes: `Hⁿ = Cⁿ`, of dimension `n·dⁿ·m`.
#[test]
fn zero_product_cohomology_is_all_cochains() {
    for d in 1..=2usize {
        for m in 1..=2usize {
            let cx = DendComplex::new(zero_algebra(d), Representation::trivial(d, m)).unwrap();
            let expected: Vec<usize> = (1..=3).map(|n| n * d.pow(n as u32) * m).collect();
            assert_eq!(h_dims(&cx, 1, 3), expected);
        }
    }
}

/// Catalan numbers by the binomial formula.
fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Dyck words of semilength `n`, an independent model of planar binary trees.
fn dyck_words(n: usize) -> BTreeSet<String> {
    fn go(open: usize, close: usize, n: usize, cur: &mut String, out: &mut BTreeSet<String>) {
        if cur.len() == 2 * n {
            out.insert(cur.clone());
            return;
        }
        if open < n {
            cur.push('(');
            go(open + 1, close, n, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(')');
            go(open, close + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

/// The standard bijection `t₁ ∨ t₂ ↦ (w(t₁)) w(t₂)`.
fn dyck_of(t: &Tree) -> String {
    match t {
        Tree::Leaf => String::new(),
        Tree::Node(l, r) => format!("({}){}", dyck_of(l), dyck_of(r)),
    }
}

#[test]
fn trees_biject_with_dyck_words() {
    for n in 0..=6 {
        let trees = enumerate_trees(n);
        assert_eq!(trees.len() as u64, catalan(n as u64));
        let words: BTreeSet<String> = trees.iter().map(dyck_of).collect();
        assert_eq!(words, dyck_words(n), "n = {n}");
        let mirrored: BTreeSet<Tree> = trees.iter().map(Tree::mirror).collect();
        assert_eq!(mirrored, trees.iter().cloned().collect());
    }
}

#[test]
fn free_window_dimensions() {
    for k in 1..=3usize {
        let f = FreeDendriform::new(k, 4).unwrap();
        for n in 1..=4usize {
            assert_eq!(f.component_dim(n) as u64, catalan(n as u64) * (k as u64).pow(n as u32));
        }
        let total: usize = (1..=4).map(|n| f.component_dim(n)).sum();
        assert_eq!(f.dim(), total);
    }
}
