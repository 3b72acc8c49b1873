use super::bilinear::Bilinear;
use super::dendriform::{semidirect, DendriformAlgebra, Involution, Representation, TridendriformAlgebra};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::report::{Checker, Report};

/// A finite group with a homomorphism `ε: G → {±1}`, given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    eps: Vec<i8>,
    identity: usize,
    inverses: Vec<usize>,
}

impl OrientedGroup {
    /// Validates the group axioms and that `ε` is a homomorphism.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, eps: Vec<i8>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Input("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!("multiplication table must be {n}x{n}")));
        }
        if let Some(bad) = table.iter().flatten().find(|&&k| k >= n) {
            return Err(Error::Index(format!("table entry {bad} out of range for {n} elements")));
        }
        if eps.len() != n || eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::Input("ε must assign +1 or -1 to every element".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Rejected("multiplication table has no identity".into()))?;
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(Error::Rejected(format!(
                            "multiplication is not associative at ({}, {}, {})",
                            names[g], names[h], names[k]
                        )));
                    }
                }
                if eps[table[g][h]] != eps[g] * eps[h] {
                    return Err(Error::Rejected(format!("ε is not a homomorphism at ({}, {})", names[g], names[h])));
                }
            }
        }
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity)
                    .ok_or_else(|| Error::Rejected(format!("element {} has no inverse", names[g])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrientedGroup { names, table, eps, identity, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1, 1).expect("trivial group")
    }

    /// `Z/n` generated by `g` with `ε(g) = eps`.
    pub fn cyclic(n: usize, eps: i8) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("cyclic group of order 0".into()));
        }
        let names = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let eps = (0..n).map(|k| if k % 2 == 1 { eps } else { 1 }).collect();
        Self::new(names, table, eps)
    }

    /// `Z/2` whose generator reverses orientation.
    pub fn z2_reversing() -> Self {
        Self::cyclic(2, -1).expect("Z/2")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn eps(&self, g: usize) -> i8 {
        self.eps[g]
    }

    pub fn epsilons(&self) -> &[i8] {
        &self.eps
    }

    /// All `i`-tuples of elements in lexicographic order.
    pub fn tuples(&self, i: usize) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = vec![vec![]];
        for _ in 0..i {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |g| {
                        let mut t = t.clone();
                        t.push(g);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

/// Linear action of an oriented group: one matrix per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedAction {
    group: OrientedGroup,
    mats: Vec<Matrix>,
}

impl OrientedAction {
    pub fn new(group: OrientedGroup, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} action matrices for a group of order {}",
                mats.len(),
                group.order()
            )));
        }
        let d = mats.first().map(Matrix::rows).unwrap_or(0);
        if mats.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Dimension(format!("action matrices must all be {d}x{d}")));
        }
        Ok(OrientedAction { group, mats })
    }

    /// Every element acts as the identity.
    pub fn trivial(group: OrientedGroup, dim: usize) -> Self {
        let mats = vec![Matrix::identity(dim); group.order()];
        OrientedAction { group, mats }
    }

    /// `Z/2` with the generator acting by the involution and reversing orientation.
    pub fn from_involution(inv: &Involution) -> Self {
        let mats = vec![Matrix::identity(inv.dim()), inv.matrix().clone()];
        OrientedAction { group: OrientedGroup::z2_reversing(), mats }
    }

    /// The same group acting on `V ⊕ W` block-diagonally.
    pub fn direct_sum(&self, other: &OrientedAction) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Input("direct sum of actions of different groups".into()));
        }
        let (a, b) = (self.dim(), other.dim());
        let one = crate::exactmat::int(1);
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a + b, a + b);
                m.add_block(0, 0, x, &one);
                m.add_block(a, a, y, &one);
                m
            })
            .collect();
        Ok(OrientedAction { group: self.group.clone(), mats })
    }

    /// Conjugates every matrix by the basis change `p`.
    pub fn transport(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        let mats = self.mats.iter().map(|m| p_inv.mul(&m.mul(p).expect("shape")).expect("shape")).collect();
        OrientedAction { group: self.group.clone(), mats }
    }

    pub fn group(&self) -> &OrientedGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }
}

/// `ρ(e) = id` and `ρ(g)ρ(h) = ρ(gh)`.
pub fn check_action_laws(act: &OrientedAction) -> Report {
    let g = &act.group;
    let mut c = Checker::new("group action");
    let e = g.identity();
    let n = act.dim();
    for k in 0..n {
        let lhs = act.mats[e].column(k);
        if !c.eq("e·v = v", || format!("basis vector {k}"), lhs, crate::exactmat::unit_vec(n, k)) {
            return c.finish();
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let prod = act.mats[a].mul(&act.mats[b]).expect("square");
            let ab = &act.mats[g.mul(a, b)];
            for k in 0..n {
                let loc = || format!("({}, {}) on basis vector {k}", g.names[a], g.names[b]);
                if !c.eq("g·(h·v) = (gh)·v", loc, prod.column(k), ab.column(k)) {
                    return c.finish();
                }
            }
        }
    }
    c.finish()
}

fn check_dim(act: &OrientedAction, d: usize, what: &str) -> Result<()> {
    if act.dim() != d {
        return Err(Error::Dimension(format!(
            "action is on a {}-dimensional space, {what} has dimension {d}",
            act.dim()
        )));
    }
    Ok(())
}

/// Compatibility of a single product: `g(ab) = (ga)(gb)` for `ε(g) = 1`, `g(ab) = (gb)(ga)` otherwise.
pub fn check_oriented_product(name: &str, prod: &Bilinear, act: &OrientedAction) -> Result<Report> {
    check_oriented_product_where(name, prod, act, |_, _| true)
}

/// [`check_oriented_product`] on the basis pairs accepted by `keep`.
pub fn check_oriented_product_where(
    name: &str,
    prod: &Bilinear,
    act: &OrientedAction,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Report> {
    check_dim(act, prod.out_dim(), name)?;
    let laws = check_action_laws(act);
    if !laws.passed() {
        return Ok(laws);
    }
    let mut c = Checker::new(name);
    check_pair(&mut c, "g(ab) = (ga)(gb) or (gb)(ga)", prod, prod, act, None, &keep);
    Ok(Report::combine(name, [laws, c.finish()]))
}

/// `g(x ∘ y)` against `gx ∘ gy` (ε = 1) or `gy ∘' gx` (ε = −1).
fn check_pair(
    c: &mut Checker,
    identity: &str,
    prod: &Bilinear,
    mirrored: &Bilinear,
    act: &OrientedAction,
    names: Option<&[String]>,
    keep: &dyn Fn(usize, usize) -> bool,
) {
    let n = prod.out_dim();
    let grp = &act.group;
    for g in 0..grp.order() {
        let m = &act.mats[g];
        let cols = m.columns();
        for i in 0..n {
            for j in 0..n {
                if !keep(i, j) {
                    continue;
                }
                let lhs = m.apply(prod.basis(i, j));
                let rhs =
                    if grp.eps(g) == 1 { prod.apply(&cols[i], &cols[j]) } else { mirrored.apply(&cols[j], &cols[i]) };
                let name = |k: usize| names.map_or_else(|| format!("e{k}"), |ns| ns[k].clone());
                if !c.eq(identity, || format!("g = {}, ({}, {})", grp.names[g], name(i), name(j)), lhs, rhs) {
                    return;
                }
            }
        }
    }
}

/// Action laws plus compatibility of `≺`, `≻` with `ε`.
pub fn check_oriented_dendriform(d: &DendriformAlgebra, act: &OrientedAction) -> Result<Report> {
    check_oriented_dendriform_where(d, act, |_, _| true)
}

pub fn check_oriented_dendriform_where(
    d: &DendriformAlgebra,
    act: &OrientedAction,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Report> {
    check_dim(act, d.dim(), "the algebra")?;
    let laws = check_action_laws(act);
    if !laws.passed() {
        return Ok(laws);
    }
    let mut c = Checker::new("oriented dendriform");
    check_pair(&mut c, "g(a≺b) = ga≺gb or gb≻ga", d.left(), d.right(), act, Some(d.names()), &keep);
    if !c.failed() {
        check_pair(&mut c, "g(a≻b) = ga≻gb or gb≺ga", d.right(), d.left(), act, Some(d.names()), &keep);
    }
    Ok(Report::combine("oriented dendriform", [laws, c.finish()]))
}

/// As for dendriform algebras, with `g(a•b) = ga•gb` or `gb•ga`.
pub fn check_oriented_tridendriform(t: &TridendriformAlgebra, act: &OrientedAction) -> Result<Report> {
    check_dim(act, t.dim(), "the algebra")?;
    let laws = check_action_laws(act);
    if !laws.passed() {
        return Ok(laws);
    }
    let all = |_: usize, _: usize| true;
    let mut c = Checker::new("oriented tridendriform");
    check_pair(&mut c, "g(a≺b) = ga≺gb or gb≻ga", t.left(), t.right(), act, Some(t.names()), &all);
    if !c.failed() {
        check_pair(&mut c, "g(a≻b) = ga≻gb or gb≺ga", t.right(), t.left(), act, Some(t.names()), &all);
    }
    if !c.failed() {
        check_pair(&mut c, "g(a•b) = ga•gb or gb•ga", t.dot(), t.dot(), act, Some(t.names()), &all);
    }
    Ok(Report::combine("oriented tridendriform", [laws, c.finish()]))
}

/// Oriented representation: action laws on `M` and compatibility of the four actions.
pub fn check_oriented_representation(
    d: &DendriformAlgebra,
    act_d: &OrientedAction,
    m: &Representation,
    act_m: &OrientedAction,
) -> Result<Report> {
    check_dim(act_d, d.dim(), "the algebra")?;
    check_dim(act_m, m.dim(), "the module")?;
    if m.base_dim() != d.dim() {
        return Err(Error::Dimension("representation is over an algebra of another dimension".into()));
    }
    let laws = check_action_laws(act_m);
    if !laws.passed() {
        return Ok(Report::combine("oriented representation", [laws]));
    }
    let sd = semidirect(d, m);
    let sum = act_d.direct_sum(act_m)?;
    let dd = d.dim();
    let mut rep = check_oriented_dendriform_where(&sd, &sum, |i, j| (i >= dd) != (j >= dd))?;
    rep.name = "oriented representation".into();
    Ok(rep)
}

/// `f(x≺y) = f(x)≺f(y)` and `f(x≻y) = f(x)≻f(y)` for a linear map `f: A → B` (`dim B × dim A`).
pub fn check_dendriform_morphism(src: &DendriformAlgebra, dst: &DendriformAlgebra, f: &Matrix) -> Result<Report> {
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Err(Error::Dimension(format!("morphism must be {}x{}", dst.dim(), src.dim())));
    }
    let cols = f.columns();
    let mut c = Checker::new("dendriform morphism");
    let pairs = [("f(x≺y) = f(x)≺f(y)", src.left(), dst.left()), ("f(x≻y) = f(x)≻f(y)", src.right(), dst.right())];
    for (name, ps, pd) in pairs {
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = f.apply(ps.basis(i, j));
                let rhs = pd.apply(&cols[i], &cols[j]);
                if !c.eq(name, || format!("({}, {})", src.names()[i], src.names()[j]), lhs, rhs) {
                    return Ok(c.finish());
                }
            }
        }
    }
    Ok(c.finish())
}

/// `f(gx) = g f(x)` for every group element.
pub fn check_equivariant(f: &Matrix, src: &OrientedAction, dst: &OrientedAction) -> Result<Report> {
    if src.group() != dst.group() {
        return Err(Error::Input("actions of different groups".into()));
    }
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Err(Error::Dimension("map does not fit the two actions".into()));
    }
    let mut c = Checker::new("equivariance");
    for g in 0..src.group().order() {
        let lhs = f.mul(src.matrix(g))?;
        let rhs = dst.matrix(g).mul(f)?;
        for k in 0..f.cols() {
            let loc = || format!("g = {}, basis vector {k}", src.group().names()[g]);
            if !c.eq("f(gx) = g f(x)", loc, lhs.column(k), rhs.column(k)) {
                return Ok(c.finish());
            }
        }
    }
    Ok(c.finish())
}
