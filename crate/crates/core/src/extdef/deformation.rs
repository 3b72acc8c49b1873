use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{Bilinear, DendriformAlgebra, OrientedAction};
use crate::cohomology::{is_two_cocycle, DendComplex, Oriented, TwoCochain};
use crate::error::{Error, Result};
use crate::exactmat::{vec_add, zero_vec, Matrix, Vector};
use crate::report::{Checker, Report};

/// A deformation `≺_t = Σ tⁱ ≺_i`, `≻_t = Σ tⁱ ≻_i`, `φ_t = Σ tⁱ φ_i` truncated after `tᴺ`.
///
/// Index 0 holds the undeformed structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    pub order: usize,
    pub left: Vec<Bilinear>,
    pub right: Vec<Bilinear>,
    /// `phi[i][g]` is the matrix of `a ↦ φ_i(g; a)`.
    pub phi: Vec<Vec<Matrix>>,
}

impl TruncatedDeformation {
    /// All higher terms zero.
    pub fn trivial(base: &DendriformAlgebra, act: &OrientedAction, order: usize) -> Self {
        let d = base.dim();
        let q = act.group().order();
        let mut left = vec![base.left().clone()];
        let mut right = vec![base.right().clone()];
        let mut phi = vec![act.matrices().to_vec()];
        for _ in 0..order {
            left.push(Bilinear::square(d));
            right.push(Bilinear::square(d));
            phi.push(vec![Matrix::zeros(d, d); q]);
        }
        TruncatedDeformation { order, left, right, phi }
    }

    /// The infinitesimal deformation `≺₁ = β([1])`, `≻₁ = β([2])`, `φ₁(g; a) = α(g; ga)`.
    pub fn from_cochain(base: &DendriformAlgebra, act: &OrientedAction, c: &TwoCochain) -> Result<Self> {
        let d = base.dim();
        let q = act.group().order();
        if c.alpha.len() != q || c.alpha.iter().any(|a| a.rows() != d || a.cols() != d) || c.beta.len() != 2 * d * d * d
        {
            return Err(Error::Dimension("2-cochain does not have coefficients in the algebra itself".into()));
        }
        let mut def = Self::trivial(base, act, 1);
        def.left[1] = Bilinear::from_vec(d, d, d, c.beta[..d * d * d].to_vec())?;
        def.right[1] = Bilinear::from_vec(d, d, d, c.beta[d * d * d..].to_vec())?;
        def.phi[1] = (0..q).map(|g| c.alpha[g].mul(act.matrix(g))).collect::<Result<_>>()?;
        Ok(def)
    }

    pub fn dim(&self) -> usize {
        self.left[0].out_dim()
    }

    fn validate(&self, base: &DendriformAlgebra, act: &OrientedAction) -> Result<()> {
        let (d, q, n) = (base.dim(), act.group().order(), self.order + 1);
        if act.dim() != d {
            return Err(Error::Dimension(format!("action on dimension {} for an algebra of dimension {d}", act.dim())));
        }
        if self.left.len() != n || self.right.len() != n || self.phi.len() != n {
            return Err(Error::Dimension(format!(
                "a deformation of order {} needs {n} terms in every family",
                self.order
            )));
        }
        let bad_product = self.left.iter().chain(&self.right).any(|b| !b.is_square(d));
        let bad_phi = self.phi.iter().any(|p| p.len() != q || p.iter().any(|m| m.rows() != d || m.cols() != d));
        if bad_product || bad_phi {
            return Err(Error::Dimension("deformation terms do not match the algebra and group".into()));
        }
        if &self.left[0] != base.left() || &self.right[0] != base.right() || self.phi[0] != act.matrices() {
            return Err(Error::Input("order-0 terms differ from the base structure".into()));
        }
        Ok(())
    }

    fn products(&self, r: usize) -> &[Bilinear] {
        if r == 1 {
            &self.left
        } else {
            &self.right
        }
    }
}

fn conv_outer(ps: &[Bilinear], qs: &[Bilinear], n: usize, a: usize, b: usize, c: usize) -> Vector {
    // Σ_{i+j=n} (a ∘_i b) ∘'_j c
    let mut acc = zero_vec(ps[0].out_dim());
    for i in 0..=n {
        let ab = ps[i].basis(a, b);
        acc = vec_add(&acc, &qs[n - i].apply_left(ab, c));
    }
    acc
}

fn conv_inner(ps: &[Bilinear], inner: &[&[Bilinear]], n: usize, a: usize, b: usize, c: usize) -> Vector {
    // Σ_{i+j=n} a ∘_i (Σ_inner b ∘_j c)
    let mut acc = zero_vec(ps[0].out_dim());
    for i in 0..=n {
        let mut bc = zero_vec(acc.len());
        for fam in inner {
            bc = vec_add(&bc, fam[n - i].basis(b, c));
        }
        acc = vec_add(&acc, &ps[i].apply_right(a, &bc));
    }
    acc
}

fn check_order(def: &TruncatedDeformation, act: &OrientedAction, n: usize) -> Report {
    let d = def.dim();
    let grp = act.group();
    let names = grp.names();
    let (l, r) = (&def.left[..], &def.right[..]);
    let mut ch = Checker::new(format!("order {n}"));
    let triple = |a: usize, b: usize, c: usize| move || format!("n = {n}, (e{a}, e{b}, e{c})");
    'outer: {
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let ok = ch.eq(
                        "(a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c)",
                        triple(a, b, c),
                        conv_outer(l, l, n, a, b, c),
                        conv_inner(l, &[l, r], n, a, b, c),
                    ) && ch.eq(
                        "(a ≻ b) ≺ c = a ≻ (b ≺ c)",
                        triple(a, b, c),
                        conv_outer(r, l, n, a, b, c),
                        conv_inner(r, &[l], n, a, b, c),
                    ) && ch.eq(
                        "(a ≺ b + a ≻ b) ≻ c = a ≻ (b ≻ c)",
                        triple(a, b, c),
                        vec_add(&conv_outer(l, r, n, a, b, c), &conv_outer(r, r, n, a, b, c)),
                        conv_inner(r, &[r], n, a, b, c),
                    );
                    if !ok {
                        break 'outer;
                    }
                }
            }
        }
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                let mut rhs = Matrix::zeros(d, d);
                for i in 0..=n {
                    rhs = rhs.add(&def.phi[i][g].mul(&def.phi[n - i][h]).expect("square")).expect("square");
                }
                let lhs = &def.phi[n][grp.mul(g, h)];
                for a in 0..d {
                    let loc = || format!("n = {n}, g = {}, h = {}, a = e{a}", names[g], names[h]);
                    if !ch.eq("φ_n(gh; a) = Σ φ_i(g; φ_j(h; a))", loc, lhs.column(a), rhs.column(a)) {
                        break 'outer;
                    }
                }
            }
        }
        for g in 0..grp.order() {
            let reversing = grp.eps(g) == -1;
            for rr in 1..=2 {
                let own = def.products(rr);
                let target = if reversing { def.products(3 - rr) } else { own };
                let identity = match (rr, reversing) {
                    (1, false) => "Σ φ_i(g; a ≺_j b) = Σ φ_j(g; a) ≺_i φ_k(g; b)",
                    (1, true) => "Σ φ_i(g; a ≺_j b) = Σ φ_j(g; b) ≻_i φ_k(g; a)",
                    (_, false) => "Σ φ_i(g; a ≻_j b) = Σ φ_j(g; a) ≻_i φ_k(g; b)",
                    (_, true) => "Σ φ_i(g; a ≻_j b) = Σ φ_j(g; b) ≺_i φ_k(g; a)",
                };
                for a in 0..d {
                    for b in 0..d {
                        let mut lhs = zero_vec(d);
                        for i in 0..=n {
                            lhs = vec_add(&lhs, &def.phi[i][g].apply(own[n - i].basis(a, b)));
                        }
                        let mut rhs = zero_vec(d);
                        for i in 0..=n {
                            for j in 0..=n - i {
                                let k = n - i - j;
                                let (x, y) = if reversing {
                                    (def.phi[j][g].column(b), def.phi[k][g].column(a))
                                } else {
                                    (def.phi[j][g].column(a), def.phi[k][g].column(b))
                                };
                                rhs = vec_add(&rhs, &target[i].apply(&x, &y));
                            }
                        }
                        let loc = || format!("n = {n}, g = {}, (e{a}, e{b})", names[g]);
                        if !ch.eq(identity, loc, lhs, rhs) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    ch.finish()
}

/// Verifies the dendriform, composition and orientation identities at every order `n ≤ N`.
pub fn check_deformation(base: &DendriformAlgebra, act: &OrientedAction, def: &TruncatedDeformation) -> Result<Report> {
    def.validate(base, act)?;
    let reports: Vec<Report> = (0..=def.order).into_par_iter().map(|n| check_order(def, act, n)).collect();
    Ok(Report::combine("deformation", reports))
}

/// `(ξ_n, π_n)` with `ξ_n(g; a) = φ_n(g; g⁻¹a)`, `π_n([1]) = ≺_n`, `π_n([2]) = ≻_n`, together with the
/// 2-cocycle verdict. `cx` must be the adjoint complex of the base.
pub fn class_at_order(
    cx: &Oriented<DendComplex>,
    def: &TruncatedDeformation,
    n: usize,
) -> Result<(TwoCochain, Report)> {
    let base = cx.base().algebra();
    let act = cx.algebra_action();
    if cx.base().representation() != &crate::algebra::Representation::adjoint(base) {
        return Err(Error::Input("deformation classes live in the adjoint complex".into()));
    }
    def.validate(base, act)?;
    if n == 0 || n > def.order {
        return Err(Error::Input(format!("order {n} is outside 1..={}", def.order)));
    }
    let lower_zero =
        (1..n).all(|i| def.left[i].is_zero() && def.right[i].is_zero() && def.phi[i].iter().all(Matrix::is_zero));
    if !lower_zero {
        return Err(Error::Input(format!("terms below order {n} are not all zero")));
    }
    let grp = act.group();
    let d = base.dim();
    let alpha = (0..grp.order()).map(|g| def.phi[n][g].mul(act.matrix(grp.inv(g)))).collect::<Result<Vec<_>>>()?;
    let mut beta = Vec::with_capacity(2 * d * d * d);
    for prod in [&def.left[n], &def.right[n]] {
        for a in 0..d {
            for b in 0..d {
                beta.extend_from_slice(prod.basis(a, b));
            }
        }
    }
    let c = TwoCochain { alpha, beta };
    let verdict = is_two_cocycle(cx, &c)?;
    Ok((c, verdict))
}

pub fn first_order_class(cx: &Oriented<DendComplex>, def: &TruncatedDeformation) -> Result<(TwoCochain, Report)> {
    class_at_order(cx, def, 1)
}

fn same_base(def: &TruncatedDeformation, def2: &TruncatedDeformation) -> Result<()> {
    let same = def.left[0] == def2.left[0] && def.right[0] == def2.right[0] && def.phi[0] == def2.phi[0];
    if def.order < 1 || def2.order < 1 || !same {
        return Err(Error::Input("not two infinitesimal deformations of the same structure".into()));
    }
    Ok(())
}

/// The order-1 identities of an equivalence `Ψ_t = id + tΨ₁` from `def2` to `def`:
/// `a ≺'₁ b + Ψ₁(a ≺ b) = a ≺₁ b + Ψ₁(a) ≺ b + a ≺ Ψ₁(b)`, likewise for `≻`, and
/// `φ'₁(g; a) + Ψ₁(ga) = gΨ₁(a) + φ₁(g; a)`.
pub fn check_infinitesimal_equivalence(
    def: &TruncatedDeformation,
    def2: &TruncatedDeformation,
    psi: &Matrix,
) -> Result<Report> {
    let d = def.dim();
    same_base(def, def2)?;
    if psi.rows() != d || psi.cols() != d {
        return Err(Error::Dimension(format!("Ψ₁ must be {d}x{d}")));
    }
    let mut ch = Checker::new("infinitesimal equivalence");
    let cols = psi.columns();
    'outer: {
        for (rr, sym) in [(1, "≺"), (2, "≻")] {
            let (p0, p1, p1b) = (&def.products(rr)[0], &def.products(rr)[1], &def2.products(rr)[1]);
            let identity = format!("a {sym}'₁ b + Ψ₁(a {sym} b) = a {sym}₁ b + Ψ₁(a) {sym} b + a {sym} Ψ₁(b)");
            for a in 0..d {
                for b in 0..d {
                    let lhs = vec_add(p1b.basis(a, b), &psi.apply(p0.basis(a, b)));
                    let rhs =
                        vec_add(&vec_add(p1.basis(a, b), &p0.apply_left(&cols[a], b)), &p0.apply_right(a, &cols[b]));
                    if !ch.eq(&identity, || format!("(e{a}, e{b})"), lhs, rhs) {
                        break 'outer;
                    }
                }
            }
        }
        for g in 0..def.phi[0].len() {
            let lhs = def2.phi[1][g].add(&psi.mul(&def.phi[0][g])?)?;
            let rhs = def.phi[0][g].mul(psi)?.add(&def.phi[1][g])?;
            for a in 0..d {
                if !ch.eq(
                    "φ'₁(g; a) + Ψ₁(ga) = gΨ₁(a) + φ₁(g; a)",
                    || format!("g = {g}, a = e{a}"),
                    lhs.column(a),
                    rhs.column(a),
                ) {
                    break 'outer;
                }
            }
        }
    }
    Ok(ch.finish())
}

/// Solves the order-1 equivalence identities for `Ψ₁` directly; `None` when no solution exists.
pub fn infinitesimally_equivalent(def: &TruncatedDeformation, def2: &TruncatedDeformation) -> Result<Option<Matrix>> {
    let d = def.dim();
    same_base(def, def2)?;
    let q = def.phi[0].len();
    let rows = 2 * d * d * d + q * d * d;
    // Ψ₁(e_x) component o is unknown x·d + o
    let mut sys = Matrix::zeros(rows, d * d);
    let mut rhs = zero_vec(rows);
    let mut row = 0;
    for rr in 1..=2 {
        let p0 = &def.products(rr)[0];
        let diff = def2.products(rr)[1].sub(&def.products(rr)[1]);
        for a in 0..d {
            for b in 0..d {
                let ab = p0.basis(a, b);
                for k in 0..d {
                    // Ψ(a)∘b + a∘Ψ(b) − Ψ(a∘b) = a∘'₁b − a∘₁b
                    for o in 0..d {
                        sys.add_to(row, a * d + o, p0.get(o, b, k));
                        sys.add_to(row, b * d + o, p0.get(a, o, k));
                    }
                    for (x, c) in ab.iter().enumerate() {
                        if !c.is_zero() {
                            sys.add_to(row, x * d + k, &-c);
                        }
                    }
                    rhs[row] = diff.get(a, b, k).clone();
                    row += 1;
                }
            }
        }
    }
    for g in 0..q {
        let rho = &def.phi[0][g];
        let diff = def2.phi[1][g].sub(&def.phi[1][g])?;
        for a in 0..d {
            for k in 0..d {
                // gΨ(a) − Ψ(ga) = φ'₁(g; a) − φ₁(g; a)
                for o in 0..d {
                    sys.add_to(row, a * d + o, rho.get(k, o));
                }
                for x in 0..d {
                    let c = rho.get(x, a);
                    if !c.is_zero() {
                        sys.add_to(row, x * d + k, &-c);
                    }
                }
                rhs[row] = diff.get(k, a).clone();
                row += 1;
            }
        }
    }
    let Some(flat) = sys.solve(&rhs)? else {
        return Ok(None);
    };
    let psi = Matrix::from_fn(d, d, |o, x| flat[x * d + o].clone());
    let check = check_infinitesimal_equivalence(def, def2, &psi)?;
    if !check.passed() {
        return Err(Error::Rejected(check.to_string()));
    }
    Ok(Some(psi))
}
