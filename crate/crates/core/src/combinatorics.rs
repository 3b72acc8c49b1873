//! Index sets `C_n`, the reindexing maps `R_0`/`R_i` used by the dendriform
//! partial compositions, the involutions on `C_n` and `P_n`, and planar binary
//! trees.
//!
//! All indices in this module are 1-based: `[r] ∈ C_n` means `1 <= r <= n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmat::Scalar;

/// The element `[r]` of `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index {
    n: usize,
    r: usize,
}

impl Index {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::Index(format!("[{r}] is not in C_{n}")));
        }
        Ok(Index { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.r)
    }
}

/// An element of `𝕂[C_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    n: usize,
    coefficients: BTreeMap<usize, Scalar>,
}

impl FormalSum {
    pub fn zero(n: usize) -> Self {
        FormalSum { n, coefficients: BTreeMap::new() }
    }

    pub fn single(x: Index) -> Self {
        let mut s = Self::zero(x.n);
        s.coefficients.insert(x.r, Scalar::one());
        s
    }

    /// `[1] + [2] + ... + [n]`.
    pub fn all(n: usize) -> Self {
        FormalSum { n, coefficients: (1..=n).map(|r| (r, Scalar::one())).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, r: usize) -> Scalar {
        self.coefficients.get(&r).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms `(r, coefficient)` in increasing `r`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coefficients.iter().filter(|(_, c)| !c.is_zero()).map(|(r, c)| (*r, c))
    }
}

fn check_composition(m: usize, n: usize, i: usize, r: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::Index(format!("arities must be positive (m={m}, n={n})")));
    }
    if i == 0 || i > m {
        return Err(Error::Index(format!("insertion slot {i} outside 1..={m}")));
    }
    if r == 0 || r > m + n - 1 {
        return Err(Error::Index(format!("[{r}] is not in C_{}", m + n - 1)));
    }
    Ok(())
}

/// `R_0(m; 1,…,n,…,1)` with `n` in slot `i`, as a map `C_{m+n-1} → C_m`.
pub fn r0(m: usize, n: usize, i: usize, r: Index) -> Result<Index> {
    if r.n != m + n - 1 {
        return Err(Error::Index(format!("{r} taken from C_{}, expected C_{}", r.n, m + n - 1)));
    }
    check_composition(m, n, i, r.r)?;
    Ok(Index { n: m, r: r0_raw(n, i, r.r) })
}

/// `R_i(m; 1,…,n,…,1)` with `n` in slot `i`, as a map `C_{m+n-1} → 𝕂[C_n]`.
pub fn ri(m: usize, n: usize, i: usize, r: Index) -> Result<FormalSum> {
    if r.n != m + n - 1 {
        return Err(Error::Index(format!("{r} taken from C_{}, expected C_{}", r.n, m + n - 1)));
    }
    check_composition(m, n, i, r.r)?;
    Ok(match ri_raw(n, i, r.r) {
        Some(k) => FormalSum::single(Index { n, r: k }),
        None => FormalSum::all(n),
    })
}

/// Unchecked `R_0` on bare integers.
#[inline]
pub(crate) fn r0_raw(n: usize, i: usize, r: usize) -> usize {
    if r < i {
        r
    } else if r < i + n {
        i
    } else {
        r + 1 - n
    }
}

/// Unchecked `R_i`: `Some(k)` for the single index `[k]`, `None` for `[1]+…+[n]`.
#[inline]
pub(crate) fn ri_raw(n: usize, i: usize, r: usize) -> Option<usize> {
    if r >= i && r < i + n {
        Some(r + 1 - i)
    } else {
        None
    }
}

/// `*([r]) = [n - r + 1]`.
pub fn star_index(x: Index) -> Index {
    Index { n: x.n, r: x.n + 1 - x.r }
}

/// A nonempty subset of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex {
    n: usize,
    set: BTreeSet<usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = set.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Input("subset index must be nonempty".into()));
        }
        if let Some(&bad) = set.iter().find(|&&k| k == 0 || k > n) {
            return Err(Error::Index(format!("{bad} is not in 1..={n}")));
        }
        Ok(SubsetIndex { n, set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter().copied()
    }

    /// Every element of `P_n`, ordered by bitmask.
    pub fn enumerate(n: usize) -> Vec<SubsetIndex> {
        (1u64..(1u64 << n))
            .map(|mask| SubsetIndex { n, set: (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect() })
            .collect()
    }
}

/// Complement, except that the full set is fixed.
pub fn star_subset(x: &SubsetIndex) -> SubsetIndex {
    if x.set.len() == x.n {
        return x.clone();
    }
    SubsetIndex { n: x.n, set: (1..=x.n).filter(|k| !x.set.contains(k)).collect() }
}

/// Planar binary tree: a leaf `|` or the grafting `t₁ ∨ t₂`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn graft(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// The unique tree with one internal vertex.
    pub fn y1() -> Tree {
        Tree::graft(Tree::Leaf, Tree::Leaf)
    }

    /// Number of internal vertices.
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(l, r) => l.degree() + r.degree() + 1,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// Mirror reflection: `(t₁ ∨ t₂)ᵀ = t₂ᵀ ∨ t₁ᵀ`.
    pub fn mirror(&self) -> Tree {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(l, r) => Tree::graft(r.mirror(), l.mirror()),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => write!(f, "|"),
            Tree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (t, used) = parse_tree(&chars, 0)?;
        if used != chars.len() {
            return Err(Error::Input(format!("trailing characters in tree {s:?}")));
        }
        Ok(t)
    }
}

fn parse_tree(c: &[char], pos: usize) -> Result<(Tree, usize)> {
    let bad = || Error::Input(format!("malformed tree at position {pos}"));
    match c.get(pos) {
        Some('|') => Ok((Tree::Leaf, pos + 1)),
        Some('(') => {
            let (l, p) = parse_tree(c, pos + 1)?;
            if c.get(p) != Some(&',') {
                return Err(bad());
            }
            let (r, p) = parse_tree(c, p + 1)?;
            if c.get(p) != Some(&')') {
                return Err(bad());
            }
            Ok((Tree::graft(l, r), p + 1))
        }
        _ => Err(bad()),
    }
}

/// All planar binary trees with `n` internal vertices.
///
/// Order: by the degree of the left subtree, then recursively.
pub fn enumerate_trees(n: usize) -> Vec<Tree> {
    let mut table: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for k in 1..=n {
        let mut level = Vec::new();
        for left in 0..k {
            for l in &table[left] {
                for r in &table[k - 1 - left] {
                    level.push(Tree::graft(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(n)
}
