use crate::algebra::{
    check_dendriform, check_dendriform_morphism, check_equivariant, check_oriented_dendriform, Bilinear,
    DendriformAlgebra, OrientedAction, Representation,
};
use crate::cohomology::{
    coboundary_primitive, is_two_cocycle, Bicomplex, CochainComplex, DendComplex, EquivariantComplex, Oriented,
    TwoCochain,
};
use crate::error::{Error, Result};
use crate::exactmat::{int, vec_sub, zero_vec, Matrix, Vector};
use crate::report::{Checker, Report};

/// An abelian extension `0 → M → B → D → 0` of oriented dendriform algebras with a linear section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub base: DendriformAlgebra,
    pub base_action: OrientedAction,
    pub total: DendriformAlgebra,
    pub total_action: OrientedAction,
    /// `i: M → B`, a `dim B × m` matrix.
    pub inclusion: Matrix,
    /// `p: B → D`.
    pub projection: Matrix,
    /// `s: D → B` with `p∘s = id`.
    pub section: Matrix,
}

impl Extension {
    pub fn kernel_dim(&self) -> usize {
        self.inclusion.cols()
    }

    /// Same extension with another section `s' = s + i∘γ`.
    pub fn with_section_shift(&self, gamma: &Matrix) -> Result<Extension> {
        let shift = self.inclusion.mul(gamma)?;
        Ok(Extension { section: self.section.add(&shift)?, ..self.clone() })
    }

    /// `i(m)` components of `x ∈ ker p`, or `None` if `x` is not in the image of `i`.
    fn kernel_coords(&self, x: &[crate::exactmat::Scalar]) -> Result<Option<Vector>> {
        self.inclusion.solve(x)
    }

    /// The representation of `D` on `M` and the action of `G` on `M` induced through `i` and `s`.
    pub fn induced_module(&self) -> Result<(Representation, OrientedAction)> {
        let (d, m) = (self.base.dim(), self.kernel_dim());
        let s_cols = self.section.columns();
        let i_cols = self.inclusion.columns();
        let pull = |v: Vector| -> Result<Vector> {
            self.kernel_coords(&v)?.ok_or_else(|| Error::Rejected("product with the kernel leaves the kernel".into()))
        };
        let mut maps = Vec::new();
        for (prod, kernel_left) in [
            (self.total.left(), true),
            (self.total.right(), true),
            (self.total.left(), false),
            (self.total.right(), false),
        ] {
            let (l, r) = if kernel_left { (d, m) } else { (m, d) };
            let mut b = Bilinear::zeros(l, r, m);
            for x in 0..l {
                for y in 0..r {
                    let v = if kernel_left {
                        prod.apply(&s_cols[x], &i_cols[y])
                    } else {
                        prod.apply(&i_cols[x], &s_cols[y])
                    };
                    for (k, c) in pull(v)?.into_iter().enumerate() {
                        b.set(x, y, k, c);
                    }
                }
            }
            maps.push(b);
        }
        let mut it = maps.into_iter();
        let (a_prec_m, a_succ_m, m_prec_a, m_succ_a) =
            (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        let rep = Representation::new(d, m, a_prec_m, a_succ_m, m_prec_a, m_succ_a)?;
        let mats = self
            .total_action
            .matrices()
            .iter()
            .map(|gm| {
                let cols = i_cols.iter().map(|c| pull(gm.apply(c))).collect::<Result<Vec<_>>>()?;
                Matrix::from_columns(m, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let act = OrientedAction::new(self.base_action.group().clone(), mats)?;
        Ok((rep, act))
    }
}

/// `B = M ⊕ D` (basis of `M` first) with `g(m, a) = (gm + α(g; ga), ga)` and
/// `(m, a) ≺ (n, b) = (m≺b + a≺n + β([1]; a, b), a≺b)`, `≻` likewise with `[2]`.
pub fn build_extension(cx: &Oriented<DendComplex>, c: &TwoCochain) -> Result<Extension> {
    let cocycle = is_two_cocycle(cx, c)?;
    if !cocycle.passed() {
        return Err(Error::Rejected(cocycle.to_string()));
    }
    let dc = cx.base();
    let (d, m) = (dc.d(), dc.m());
    let n = m + d;
    let alg = dc.algebra();
    let rep = dc.representation();
    let beta = |r: usize, a: usize, b: usize| -> &[crate::exactmat::Scalar] {
        let start = ((r - 1) * d * d + a * d + b) * m;
        &c.beta[start..start + m]
    };
    let product = |r: usize| {
        let (dd, dm, md) = if r == 1 {
            (alg.left(), &rep.a_prec_m, &rep.m_prec_a)
        } else {
            (alg.right(), &rep.a_succ_m, &rep.m_succ_a)
        };
        Bilinear::from_fn(n, n, n, |x, y| {
            let mut v = zero_vec(n);
            match (x < m, y < m) {
                (true, true) => {}
                (true, false) => v[..m].clone_from_slice(md.basis(x, y - m)),
                (false, true) => v[..m].clone_from_slice(dm.basis(x - m, y)),
                (false, false) => {
                    v[..m].clone_from_slice(beta(r, x - m, y - m));
                    v[m..].clone_from_slice(dd.basis(x - m, y - m));
                }
            }
            v
        })
    };
    let mut names: Vec<String> = (0..m).map(|k| format!("m{k}")).collect();
    names.extend(alg.names().iter().cloned());
    let total = DendriformAlgebra::new(names, product(1), product(2))?;

    let act_d = cx.algebra_action();
    let act_m = cx.module_action();
    let one = int(1);
    let mats = (0..cx.group().order())
        .map(|g| {
            let mut b = Matrix::zeros(n, n);
            b.add_block(0, 0, act_m.matrix(g), &one);
            b.add_block(m, m, act_d.matrix(g), &one);
            b.add_block(0, m, &c.alpha[g].mul(act_d.matrix(g))?, &one);
            Ok(b)
        })
        .collect::<Result<Vec<_>>>()?;
    let total_action = OrientedAction::new(cx.group().clone(), mats)?;

    let inclusion = Matrix::from_fn(n, m, |r, k| int((r == k) as i64));
    let projection = Matrix::from_fn(d, n, |a, r| int((r == m + a) as i64));
    let section = projection.transpose();
    let ext = Extension {
        base: alg.clone(),
        base_action: act_d.clone(),
        total,
        total_action,
        inclusion,
        projection,
        section,
    };
    let rep = check_extension(&ext)?;
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    Ok(ext)
}

/// Every structural requirement: `B` oriented dendriform, `i` and `p` oriented morphisms,
/// `p∘s = id`, `p∘i = 0` and `i` injective.
pub fn check_extension(e: &Extension) -> Result<Report> {
    let (d, m, n) = (e.base.dim(), e.kernel_dim(), e.total.dim());
    if e.inclusion.rows() != n
        || e.projection.rows() != d
        || e.projection.cols() != n
        || e.section.rows() != n
        || e.section.cols() != d
        || m + d != n
    {
        return Err(Error::Dimension("extension maps do not fit M ⊕ D".into()));
    }
    let mut parts = vec![check_dendriform(&e.total), check_oriented_dendriform(&e.total, &e.total_action)?];
    parts.push(check_dendriform_morphism(&e.total, &e.base, &e.projection)?);
    parts.push(check_equivariant(&e.projection, &e.total_action, &e.base_action)?);
    let mut c = Checker::new("exactness");
    let ps = e.projection.mul(&e.section)?;
    let pi = e.projection.mul(&e.inclusion)?;
    'outer: {
        for k in 0..d {
            if !c.eq("p∘s = id", || format!("basis vector {k}"), ps.column(k), crate::exactmat::unit_vec(d, k)) {
                break 'outer;
            }
        }
        for k in 0..m {
            if !c.eq("p∘i = 0", || format!("basis vector {k}"), pi.column(k), zero_vec(d)) {
                break 'outer;
            }
        }
        c.scalar_eq("i injective", || "rank of i".into(), int(e.inclusion.rank() as i64), int(m as i64));
    }
    parts.push(c.finish());
    Ok(Report::combine("extension", parts))
}

/// `α(g; a) = g(s(g⁻¹a)) − s(a)` and `β([r]; a, b) = s(a) ∘_r s(b) − s(a ∘_r b)`, read back in `M`.
///
/// With the canonical section this inverts [`build_extension`].
pub fn extract_cocycle(e: &Extension) -> Result<TwoCochain> {
    let (d, m) = (e.base.dim(), e.kernel_dim());
    let ps = e.projection.mul(&e.section)?;
    if !ps.is_identity() {
        return Err(Error::Input("the given section is not a section of p".into()));
    }
    let grp = e.base_action.group();
    let to_m = |v: Vector| -> Result<Vector> {
        e.kernel_coords(&v)?.ok_or_else(|| Error::Rejected("difference does not lie in the kernel".into()))
    };
    let s_cols = e.section.columns();
    let mut alpha = Vec::with_capacity(grp.order());
    for g in 0..grp.order() {
        let ginv = e.base_action.matrix(grp.inv(g));
        let cols = (0..d)
            .map(|a| {
                let moved = e.total_action.matrix(g).apply(&e.section.apply(&ginv.column(a)));
                to_m(vec_sub(&moved, &s_cols[a]))
            })
            .collect::<Result<Vec<_>>>()?;
        alpha.push(Matrix::from_columns(m, &cols)?);
    }
    let mut beta = Vec::with_capacity(2 * d * d * m);
    for (tp, bp) in [(e.total.left(), e.base.left()), (e.total.right(), e.base.right())] {
        for a in 0..d {
            for b in 0..d {
                let lifted = tp.apply(&s_cols[a], &s_cols[b]);
                let direct = e.section.apply(bp.basis(a, b));
                beta.extend(to_m(vec_sub(&lifted, &direct))?);
            }
        }
    }
    Ok(TwoCochain { alpha, beta })
}

/// A witness that two extensions are equivalent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    /// `γ: D → M` with `(α, β) − (α', β') = ∂γ`.
    pub gamma: Matrix,
    /// `φ: B → B'`, `i(m) + s(a) ↦ i'(m + γ(a)) + s'(a)`.
    pub phi: Matrix,
}

/// Solves for `γ` with `extract(e) − extract(e') = ∂γ`; `None` when the classes differ.
pub fn extensions_equivalent(cx: &Oriented<DendComplex>, e: &Extension, e2: &Extension) -> Result<Option<Equivalence>> {
    let (d, m) = (e.base.dim(), e.kernel_dim());
    if e.base != e2.base || e2.kernel_dim() != m || e.base_action != e2.base_action {
        return Err(Error::Input("extensions of different algebras".into()));
    }
    let diff = extract_cocycle(e)?.sub(&extract_cocycle(e2)?);
    let bi = Bicomplex::new(cx, 1)?;
    if diff.to_total().len() != bi.dim(2) {
        return Err(Error::Dimension("extensions do not match the cochain complex".into()));
    }
    let Some(flat) = coboundary_primitive(&bi, 2, &diff.to_total())? else {
        return Ok(None);
    };
    let gamma = Matrix::from_fn(m, d, |o, a| flat[a * m + o].clone());
    let phi = equivalence_map(e, e2, &gamma)?;
    Ok(Some(Equivalence { gamma, phi }))
}

fn equivalence_map(e: &Extension, e2: &Extension, gamma: &Matrix) -> Result<Matrix> {
    let (d, m) = (e.base.dim(), e.kernel_dim());
    let split = |x: &Extension| -> Result<Matrix> {
        let mut cols = x.inclusion.columns();
        cols.extend(x.section.columns());
        Matrix::from_columns(m + d, &cols)
    };
    let src = split(e)?.inverse().ok_or_else(|| Error::Input("i and s do not span B".into()))?;
    let mut shear = Matrix::identity(m + d);
    shear.add_block(0, m, gamma, &int(1));
    split(e2)?.mul(&shear)?.mul(&src)
}

/// `φ` is an oriented dendriform isomorphism with `φ∘i = i'` and `p'∘φ = p`.
pub fn check_equivalence(e: &Extension, e2: &Extension, phi: &Matrix) -> Result<Report> {
    let mut parts = vec![
        check_dendriform_morphism(&e.total, &e2.total, phi)?,
        check_equivariant(phi, &e.total_action, &e2.total_action)?,
    ];
    let mut c = Checker::new("diagram");
    let pi = phi.mul(&e.inclusion)?;
    let pp = e2.projection.mul(phi)?;
    'outer: {
        for k in 0..e.kernel_dim() {
            if !c.eq("φ∘i = i'", || format!("m{k}"), pi.column(k), e2.inclusion.column(k)) {
                break 'outer;
            }
        }
        for k in 0..e.total.dim() {
            if !c.eq("p'∘φ = p", || format!("basis vector {k}"), pp.column(k), e.projection.column(k)) {
                break 'outer;
            }
        }
        c.scalar_eq("φ invertible", || "rank".into(), int(phi.rank() as i64), int(phi.rows() as i64));
    }
    parts.push(c.finish());
    Ok(Report::combine("equivalence", parts))
}
