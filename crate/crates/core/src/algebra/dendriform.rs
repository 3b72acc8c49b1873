use super::bilinear::Bilinear;
use crate::error::{Error, Result};
use crate::exactmat::{vec_add, vec_sub, zero_vec, Matrix, Scalar, Vector};
use crate::report::{Checker, Report};

pub(crate) fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Finite-dimensional dendriform algebra `(D, ≺, ≻)` by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformAlgebra {
    names: Vec<String>,
    left: Bilinear,
    right: Bilinear,
}

impl DendriformAlgebra {
    /// Shape-checked constructor; the axioms are checked separately by [`check_dendriform`].
    pub fn new(names: Vec<String>, left: Bilinear, right: Bilinear) -> Result<Self> {
        let d = names.len();
        if !left.is_square(d) || !right.is_square(d) {
            return Err(Error::Dimension(format!(
                "products must be {d}x{d}->{d}, got {:?} and {:?}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(DendriformAlgebra { names, left, right })
    }

    pub fn from_products(left: Bilinear, right: Bilinear) -> Result<Self> {
        let d = left.shape().0;
        Self::new(default_names("e", d), left, right)
    }

    pub fn zero(d: usize) -> Self {
        DendriformAlgebra { names: default_names("e", d), left: Bilinear::square(d), right: Bilinear::square(d) }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn left(&self) -> &Bilinear {
        &self.left
    }

    pub fn right(&self) -> &Bilinear {
        &self.right
    }

    pub fn prec(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.left.apply(x, y)
    }

    pub fn succ(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.right.apply(x, y)
    }

    /// `a ⋆ b = a ≺ b + a ≻ b`.
    pub fn star_product(&self) -> Bilinear {
        self.left.add(&self.right)
    }

    /// Structure transported along the basis change whose columns are the new basis.
    pub fn transport(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse().ok_or_else(|| Error::Input("basis change matrix is singular".into()))?;
        Ok(DendriformAlgebra {
            names: self.names.clone(),
            left: self.left.transport(p, &p_inv),
            right: self.right.transport(p, &p_inv),
        })
    }
}

const DEND_AXIOMS: [&str; 3] = ["(a≺b)≺c = a≺(b≺c + b≻c)", "(a≻b)≺c = a≻(b≺c)", "(a≺b + a≻b)≻c = a≻(b≻c)"];

pub fn check_dendriform(d: &DendriformAlgebra) -> Report {
    check_dendriform_where(d, |_, _, _| true)
}

/// Dendriform axioms on the basis triples accepted by `keep`.
///
/// Axioms are the outer loop, triples in lexicographic order the inner one.
pub fn check_dendriform_where(d: &DendriformAlgebra, keep: impl Fn(usize, usize, usize) -> bool) -> Report {
    let n = d.dim();
    let star = d.star_product();
    let (l, r) = (&d.left, &d.right);
    let mut c = Checker::new("dendriform");
    for (axiom, name) in DEND_AXIOMS.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !keep(i, j, k) {
                        continue;
                    }
                    let (lhs, rhs) = match axiom {
                        0 => (l.apply_left(l.basis(i, j), k), l.apply_right(i, star.basis(j, k))),
                        1 => (l.apply_left(r.basis(i, j), k), r.apply_right(i, l.basis(j, k))),
                        _ => (r.apply_left(star.basis(i, j), k), r.apply_right(i, r.basis(j, k))),
                    };
                    let loc = || format!("({}, {}, {})", d.names[i], d.names[j], d.names[k]);
                    if !c.eq(name, loc, lhs, rhs) {
                        return c.finish();
                    }
                }
            }
        }
    }
    c.finish()
}

/// Tridendriform algebra `(D, ≺, ≻, •)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridendriformAlgebra {
    names: Vec<String>,
    left: Bilinear,
    right: Bilinear,
    dot: Bilinear,
}

impl TridendriformAlgebra {
    pub fn new(names: Vec<String>, left: Bilinear, right: Bilinear, dot: Bilinear) -> Result<Self> {
        let d = names.len();
        if !left.is_square(d) || !right.is_square(d) || !dot.is_square(d) {
            return Err(Error::Dimension(format!("tridendriform products must be {d}x{d}->{d}")));
        }
        Ok(TridendriformAlgebra { names, left, right, dot })
    }

    pub fn zero(d: usize) -> Self {
        let z = Bilinear::square(d);
        TridendriformAlgebra { names: default_names("e", d), left: z.clone(), right: z.clone(), dot: z }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn left(&self) -> &Bilinear {
        &self.left
    }

    pub fn right(&self) -> &Bilinear {
        &self.right
    }

    pub fn dot(&self) -> &Bilinear {
        &self.dot
    }

    /// `≺ + ≻ + •`.
    pub fn associated_associative(&self) -> AssociativeAlgebra {
        AssociativeAlgebra::new(self.left.add(&self.right).add(&self.dot))
    }

    /// The dendriform algebra `(D, ≺ + •, ≻)`.
    pub fn to_dendriform(&self) -> DendriformAlgebra {
        DendriformAlgebra { names: self.names.clone(), left: self.left.add(&self.dot), right: self.right.clone() }
    }
}

const TRI_AXIOMS: [&str; 7] = [
    "(a≺b)≺c = a≺(b≺c + b≻c + b•c)",
    "(a≻b)≺c = a≻(b≺c)",
    "(a≺b + a≻b + a•b)≻c = a≻(b≻c)",
    "(a≻b)•c = a≻(b•c)",
    "(a≺b)•c = a•(b≻c)",
    "(a•b)≺c = a•(b≺c)",
    "(a•b)•c = a•(b•c)",
];

pub fn check_tridendriform(t: &TridendriformAlgebra) -> Report {
    let n = t.dim();
    let (l, r, dot) = (&t.left, &t.right, &t.dot);
    let total = l.add(r).add(dot);
    let mut c = Checker::new("tridendriform");
    for (axiom, name) in TRI_AXIOMS.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (lhs, rhs) = match axiom {
                        0 => (l.apply_left(l.basis(i, j), k), l.apply_right(i, total.basis(j, k))),
                        1 => (l.apply_left(r.basis(i, j), k), r.apply_right(i, l.basis(j, k))),
                        2 => (r.apply_left(total.basis(i, j), k), r.apply_right(i, r.basis(j, k))),
                        3 => (dot.apply_left(r.basis(i, j), k), r.apply_right(i, dot.basis(j, k))),
                        4 => (dot.apply_left(l.basis(i, j), k), dot.apply_right(i, r.basis(j, k))),
                        5 => (l.apply_left(dot.basis(i, j), k), dot.apply_right(i, l.basis(j, k))),
                        _ => (dot.apply_left(dot.basis(i, j), k), dot.apply_right(i, dot.basis(j, k))),
                    };
                    let loc = || format!("({}, {}, {})", t.names[i], t.names[j], t.names[k]);
                    if !c.eq(name, loc, lhs, rhs) {
                        return c.finish();
                    }
                }
            }
        }
    }
    c.finish()
}

/// Associative algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    mult: Bilinear,
}

impl AssociativeAlgebra {
    pub fn new(mult: Bilinear) -> Self {
        assert_eq!(mult.shape().0, mult.shape().1);
        AssociativeAlgebra { mult }
    }

    pub fn dim(&self) -> usize {
        self.mult.out_dim()
    }

    pub fn mult(&self) -> &Bilinear {
        &self.mult
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.apply(x, y)
    }
}

pub fn check_associative(a: &AssociativeAlgebra) -> Report {
    check_associative_where(a, |_, _, _| true)
}

pub fn check_associative_where(a: &AssociativeAlgebra, keep: impl Fn(usize, usize, usize) -> bool) -> Report {
    let n = a.dim();
    let m = &a.mult;
    let mut c = Checker::new("associative");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !keep(i, j, k) {
                    continue;
                }
                let lhs = m.apply_left(m.basis(i, j), k);
                let rhs = m.apply_right(i, m.basis(j, k));
                if !c.eq("(ab)c = a(bc)", || format!("(e{i}, e{j}, e{k})"), lhs, rhs) {
                    return c.finish();
                }
            }
        }
    }
    c.finish()
}

/// `a ⋆ b = a ≺ b + a ≻ b`.
pub fn associated_associative(d: &DendriformAlgebra) -> AssociativeAlgebra {
    AssociativeAlgebra::new(d.star_product())
}

/// `a ⋄ b = a ≻ b − b ≺ a`.
pub fn pre_lie_of(d: &DendriformAlgebra) -> Bilinear {
    d.right.sub(&d.left.opposite())
}

/// `[a, b] = a ⋄ b − b ⋄ a`.
pub fn lie_of(d: &DendriformAlgebra) -> Bilinear {
    let p = pre_lie_of(d);
    p.sub(&p.opposite())
}

/// `(a⋄b)⋄c − a⋄(b⋄c) = (b⋄a)⋄c − b⋄(a⋄c)`.
pub fn check_pre_lie(p: &Bilinear) -> Report {
    let n = p.out_dim();
    let assoc =
        |i: usize, j: usize, k: usize| vec_sub(&p.apply_left(p.basis(i, j), k), &p.apply_right(i, p.basis(j, k)));
    let mut c = Checker::new("pre-Lie");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let loc = || format!("(e{i}, e{j}, e{k})");
                if !c.eq("(a,b,c) = (b,a,c)", loc, assoc(i, j, k), assoc(j, i, k)) {
                    return c.finish();
                }
            }
        }
    }
    c.finish()
}

/// Antisymmetry and the Jacobi identity.
pub fn check_lie(b: &Bilinear) -> Report {
    let n = b.out_dim();
    let mut c = Checker::new("Lie");
    for i in 0..n {
        for j in 0..n {
            let lhs = b.basis(i, j).to_vec();
            let rhs: Vector = b.basis(j, i).iter().map(|x| -x).collect();
            if !c.eq("[a,b] = -[b,a]", || format!("(e{i}, e{j})"), lhs, rhs) {
                return c.finish();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t1 = b.apply_right(i, b.basis(j, k));
                let t2 = b.apply_right(j, b.basis(k, i));
                let t3 = b.apply_right(k, b.basis(i, j));
                let sum = vec_add(&vec_add(&t1, &t2), &t3);
                let loc = || format!("(e{i}, e{j}, e{k})");
                if !c.eq("[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0", loc, sum, zero_vec(n)) {
                    return c.finish();
                }
            }
        }
    }
    c.finish()
}

/// The linear map `a ↦ a*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension("involution matrix must be square".into()));
        }
        Ok(Involution { matrix })
    }

    pub fn identity(d: usize) -> Self {
        Involution { matrix: Matrix::identity(d) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.apply(x)
    }
}

/// `** = id`, `(a≺b)* = b*≻a*`, and the consequence `(a≻b)* = b*≺a*`.
pub fn check_involution(d: &DendriformAlgebra, inv: &Involution) -> Result<Report> {
    check_involution_where(d, inv, |_, _| true)
}

pub(crate) fn check_involution_where(
    d: &DendriformAlgebra,
    inv: &Involution,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Report> {
    let n = d.dim();
    if inv.dim() != n {
        return Err(Error::Dimension(format!("involution is {0}x{0}, algebra has dimension {n}", inv.dim())));
    }
    let s = &inv.matrix;
    let mut c = Checker::new("involution");
    let sq = s.mul(s)?;
    for k in 0..n {
        if !c.eq("a** = a", || d.names[k].clone(), sq.column(k), crate::exactmat::unit_vec(n, k)) {
            return Ok(c.finish());
        }
    }
    let star_cols = s.columns();
    let pairs = [("(a≺b)* = b*≻a*", &d.left, &d.right), ("(a≻b)* = b*≺a*", &d.right, &d.left)];
    for (name, prod, mirrored) in pairs {
        for i in 0..n {
            for j in 0..n {
                if !keep(i, j) {
                    continue;
                }
                let lhs = s.apply(prod.basis(i, j));
                let rhs = mirrored.apply(&star_cols[j], &star_cols[i]);
                if !c.eq(name, || format!("({}, {})", d.names[i], d.names[j]), lhs, rhs) {
                    return Ok(c.finish());
                }
            }
        }
    }
    Ok(c.finish())
}

/// A representation `M` of a dendriform algebra: the four action maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    /// `a ≺ m`, shape `d × m → m`.
    pub a_prec_m: Bilinear,
    /// `a ≻ m`.
    pub a_succ_m: Bilinear,
    /// `m ≺ a`, shape `m × d → m`.
    pub m_prec_a: Bilinear,
    /// `m ≻ a`.
    pub m_succ_a: Bilinear,
}

impl Representation {
    pub fn new(
        d: usize,
        m: usize,
        a_prec_m: Bilinear,
        a_succ_m: Bilinear,
        m_prec_a: Bilinear,
        m_succ_a: Bilinear,
    ) -> Result<Self> {
        let ok = a_prec_m.shape() == (d, m, m)
            && a_succ_m.shape() == (d, m, m)
            && m_prec_a.shape() == (m, d, m)
            && m_succ_a.shape() == (m, d, m);
        if !ok {
            return Err(Error::Dimension(format!("representation actions must be {d}x{m}->{m} and {m}x{d}->{m}")));
        }
        Ok(Representation { dim: m, a_prec_m, a_succ_m, m_prec_a, m_succ_a })
    }

    /// `D` acting on itself.
    pub fn adjoint(d: &DendriformAlgebra) -> Self {
        Representation {
            dim: d.dim(),
            a_prec_m: d.left.clone(),
            a_succ_m: d.right.clone(),
            m_prec_a: d.left.clone(),
            m_succ_a: d.right.clone(),
        }
    }

    /// All four actions zero.
    pub fn trivial(d: usize, m: usize) -> Self {
        Representation {
            dim: m,
            a_prec_m: Bilinear::zeros(d, m, m),
            a_succ_m: Bilinear::zeros(d, m, m),
            m_prec_a: Bilinear::zeros(m, d, m),
            m_succ_a: Bilinear::zeros(m, d, m),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base_dim(&self) -> usize {
        self.a_prec_m.shape().0
    }

    /// `θ₁([1]; a, m) = a ≺ m`, `θ₁([2]; a, m) = a ≻ m`.
    pub fn theta1(&self, r: usize) -> &Bilinear {
        if r == 1 {
            &self.a_prec_m
        } else {
            &self.a_succ_m
        }
    }

    /// `θ₂([1]; m, a) = m ≺ a`, `θ₂([2]; m, a) = m ≻ a`.
    pub fn theta2(&self, r: usize) -> &Bilinear {
        if r == 1 {
            &self.m_prec_a
        } else {
            &self.m_succ_a
        }
    }

    /// Bimodule over `(D, ⋆)`: `a·m = a≺m + a≻m`, `m·a = m≺a + m≻a`.
    pub fn bimodule(&self) -> (Bilinear, Bilinear) {
        (self.a_prec_m.add(&self.a_succ_m), self.m_prec_a.add(&self.m_succ_a))
    }

    /// The same representation in a new basis of `M` (columns of `p`).
    pub fn transport(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse().ok_or_else(|| Error::Input("basis change matrix is singular".into()))?;
        let id = Matrix::identity(self.base_dim());
        Ok(Representation {
            dim: self.dim,
            a_prec_m: self.a_prec_m.compose(&p_inv, &id, p),
            a_succ_m: self.a_succ_m.compose(&p_inv, &id, p),
            m_prec_a: self.m_prec_a.compose(&p_inv, p, &id),
            m_succ_a: self.m_succ_a.compose(&p_inv, p, &id),
        })
    }

    /// Moves the `D`-side along an isomorphism `p` of the base algebra.
    pub fn transport_base(&self, p: &Matrix) -> Self {
        let id = Matrix::identity(self.dim);
        Representation {
            dim: self.dim,
            a_prec_m: self.a_prec_m.compose(&id, p, &id),
            a_succ_m: self.a_succ_m.compose(&id, p, &id),
            m_prec_a: self.m_prec_a.compose(&id, &id, p),
            m_succ_a: self.m_succ_a.compose(&id, &id, p),
        }
    }
}

/// The square-zero extension `D ⋉ M` (basis: `D` first, then `M`).
pub fn semidirect(d: &DendriformAlgebra, m: &Representation) -> DendriformAlgebra {
    let (dd, mm) = (d.dim(), m.dim());
    let n = dd + mm;
    let build = |dd_prod: &Bilinear, dm: &Bilinear, md: &Bilinear| {
        Bilinear::from_fn(n, n, n, |i, j| {
            let mut v = zero_vec(n);
            match (i < dd, j < dd) {
                (true, true) => v[..dd].clone_from_slice(dd_prod.basis(i, j)),
                (true, false) => v[dd..].clone_from_slice(dm.basis(i, j - dd)),
                (false, true) => v[dd..].clone_from_slice(md.basis(i - dd, j)),
                (false, false) => {}
            }
            v
        })
    };
    let mut names = d.names.clone();
    names.extend(default_names("m", mm));
    DendriformAlgebra {
        names,
        left: build(&d.left, &m.a_prec_m, &m.m_prec_a),
        right: build(&d.right, &m.a_succ_m, &m.m_succ_a),
    }
}

fn check_rep_shape(d: &DendriformAlgebra, m: &Representation) -> Result<()> {
    if m.base_dim() != d.dim() {
        return Err(Error::Dimension(format!(
            "representation is over a {}-dimensional algebra, got dimension {}",
            m.base_dim(),
            d.dim()
        )));
    }
    Ok(())
}

/// The nine identities: dendriform axioms with exactly one argument in `M`.
pub fn check_representation(d: &DendriformAlgebra, m: &Representation) -> Result<Report> {
    check_rep_shape(d, m)?;
    let sd = semidirect(d, m);
    let dd = d.dim();
    let one_in_m = |i: usize, j: usize, k: usize| (i >= dd) as u8 + (j >= dd) as u8 + (k >= dd) as u8 == 1;
    let mut rep = check_dendriform_where(&sd, one_in_m);
    rep.name = "representation".into();
    Ok(rep)
}

/// Involutive representation: `(a≺m)* = m*≻a*`, `(a≻m)* = m*≺a*` and mirrored forms, `m** = m`.
pub fn check_involutive_representation(
    d: &DendriformAlgebra,
    inv_d: &Involution,
    m: &Representation,
    inv_m: &Involution,
) -> Result<Report> {
    check_rep_shape(d, m)?;
    if inv_m.dim() != m.dim() {
        return Err(Error::Dimension("module involution has the wrong size".into()));
    }
    let sd = semidirect(d, m);
    let dd = d.dim();
    let mut block = Matrix::zeros(sd.dim(), sd.dim());
    block.add_block(0, 0, inv_d.matrix(), &crate::exactmat::int(1));
    block.add_block(dd, dd, inv_m.matrix(), &crate::exactmat::int(1));
    let mut rep = check_involution_where(&sd, &Involution::new(block)?, |i, j| (i >= dd) != (j >= dd))?;
    rep.name = "involutive representation".into();
    Ok(rep)
}

/// Is the structure identically zero?
pub fn is_zero_algebra(d: &DendriformAlgebra) -> bool {
    d.left.is_zero() && d.right.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    fn one_dim(prec: i64, succ: i64) -> DendriformAlgebra {
        let mut l = Bilinear::square(1);
        let mut r = Bilinear::square(1);
        l.set(0, 0, 0, int(prec));
        r.set(0, 0, 0, int(succ));
        DendriformAlgebra::from_products(l, r).unwrap()
    }

    #[test]
    fn dendriform_examples() {
        for d in 0..4 {
            assert!(check_dendriform(&DendriformAlgebra::zero(d)).passed());
        }
        assert!(check_dendriform(&one_dim(1, 0)).passed());
        let bad = check_dendriform(&one_dim(1, 1));
        let v = bad.violation.unwrap();
        assert_eq!(v.identity, DEND_AXIOMS[0]);
        assert_eq!(v.lhs, vec![int(1)]);
        assert_eq!(v.rhs, vec![int(2)]);
    }

    #[test]
    fn associated_products() {
        let a = associated_associative(&DendriformAlgebra::zero(2));
        assert!(a.mult().is_zero());
        let a = associated_associative(&one_dim(1, 0));
        assert_eq!(a.mult().get(0, 0, 0), &int(1));
        assert!(check_associative(&a).passed());

        let mut dot = Bilinear::square(1);
        dot.set(0, 0, 0, int(1));
        let z = Bilinear::square(1);
        let t = TridendriformAlgebra::new(vec!["e".into()], z.clone(), z, dot.clone()).unwrap();
        assert!(check_tridendriform(&t).passed());
        assert_eq!(t.associated_associative().mult(), &dot);
    }

    #[test]
    fn tridendriform_violation_is_named() {
        // (a≺b)•c = a•(b≻c) fails: e≺e = e, e•e = e, e≻e = 0.
        let mut l = Bilinear::square(1);
        l.set(0, 0, 0, int(1));
        let mut dot = Bilinear::square(1);
        dot.set(0, 0, 0, int(1));
        let t = TridendriformAlgebra::new(vec!["e".into()], l, Bilinear::square(1), dot).unwrap();
        let rep = check_tridendriform(&t);
        // identity 1 fails first: (e≺e)≺e = e but e≺(e⋆e) = e≺2e = 2e
        assert_eq!(rep.failed_identity(), Some(TRI_AXIOMS[0]));

        // only the mixed identity (a≺b)•c = a•(b≻c) can fail when ≻ = 0, ≺ ≠ 0 and • ≠ 0 with
        // ≺ and • living on different basis vectors
        let mut l = Bilinear::square(2);
        let mut dot = Bilinear::square(2);
        l.set(0, 1, 1, int(1)); // e0 ≺ e1 = e1
        dot.set(1, 1, 1, int(1)); // e1 • e1 = e1
        let t = TridendriformAlgebra::new(default_names("e", 2), l, Bilinear::square(2), dot).unwrap();
        assert!(!check_tridendriform(&t).passed());
    }

    #[test]
    fn pre_lie_and_lie() {
        let z = DendriformAlgebra::zero(2);
        assert!(pre_lie_of(&z).is_zero() && lie_of(&z).is_zero());
        let d = one_dim(1, 0);
        assert_eq!(pre_lie_of(&d).get(0, 0, 0), &int(-1));
        assert_eq!(lie_of(&d).get(0, 0, 0), &int(0));
        assert!(check_pre_lie(&pre_lie_of(&d)).passed());
        assert!(check_lie(&lie_of(&d)).passed());
        assert!(pre_lie_of(&one_dim(3, 3)).is_zero());
    }

    #[test]
    fn involution_examples() {
        let z = DendriformAlgebra::zero(2);
        assert!(check_involution(&z, &Involution::identity(2)).unwrap().passed());
        let bad = Involution::new(Matrix::from_ints(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(check_involution(&z, &bad).unwrap().failed_identity(), Some("a** = a"));

        let swap = Involution::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        let mut l = Bilinear::square(2);
        l.set(0, 1, 0, int(1)); // e0 ≺ e1 = e0
        let only_left = DendriformAlgebra::from_products(l.clone(), Bilinear::square(2)).unwrap();
        assert!(!check_involution(&only_left, &swap).unwrap().passed());
        let mut r = Bilinear::square(2);
        r.set(0, 1, 1, int(1)); // (e0≺e1)* = e1 must equal e1* ≻ e0* = e0 ≻ e1
        let both = DendriformAlgebra::from_products(l, r).unwrap();
        assert!(check_involution(&both, &swap).unwrap().passed());
    }

    #[test]
    fn adjoint_representation_is_valid() {
        let d = one_dim(1, 0);
        assert!(check_representation(&d, &Representation::adjoint(&d)).unwrap().passed());
        let bad = Representation::adjoint(&one_dim(1, 1));
        assert!(!check_representation(&one_dim(1, 1), &bad).unwrap().passed());
        assert!(check_representation(&d, &Representation::trivial(1, 3)).unwrap().passed());
    }
}
