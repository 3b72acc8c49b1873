use super::bilinear::Bilinear;
use super::dendriform::{
    check_associative, check_dendriform, check_tridendriform, default_names, AssociativeAlgebra, DendriformAlgebra,
    TridendriformAlgebra,
};
use super::group::OrientedAction;
use crate::error::{Error, Result};
use crate::exactmat::{int, vec_add, zero_vec, Matrix, Scalar};
use crate::report::{Checker, Report};
use num_traits::Zero;

/// Linear `R` with `R(a)R(b) = R(R(a)b + aR(b) + λab)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterOperator {
    pub matrix: Matrix,
    pub weight: Scalar,
}

impl RotaBaxterOperator {
    pub fn new(matrix: Matrix, weight: Scalar) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension("Rota-Baxter matrix must be square".into()));
        }
        Ok(RotaBaxterOperator { matrix, weight })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `−λ·id − R`, of the same weight.
    pub fn complement(&self) -> Self {
        let neg = Matrix::scalar_identity(self.dim(), &-&self.weight);
        RotaBaxterOperator { matrix: neg.sub(&self.matrix).expect("square"), weight: self.weight.clone() }
    }

    /// `μR`, of weight `μλ`.
    pub fn scaled(&self, mu: &Scalar) -> Self {
        RotaBaxterOperator { matrix: self.matrix.scale(mu), weight: &self.weight * mu }
    }
}

fn check_dims(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Result<()> {
    if a.dim() != rb.dim() {
        return Err(Error::Dimension(format!("operator is {0}x{0}, algebra has dimension {1}", rb.dim(), a.dim())));
    }
    Ok(())
}

/// The weight-λ identity on all basis pairs.
pub fn check_rota_baxter(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Result<Report> {
    check_dims(a, rb)?;
    let n = a.dim();
    let r = &rb.matrix;
    let cols = r.columns();
    let mut c = Checker::new("Rota-Baxter");
    for i in 0..n {
        for j in 0..n {
            let lhs = a.mul(&cols[i], &cols[j]);
            let inner = vec_add(
                &vec_add(&a.mult().apply_left(&cols[i], j), &a.mult().apply_right(i, &cols[j])),
                &a.mult().basis(i, j).iter().map(|x| x * &rb.weight).collect::<Vec<_>>(),
            );
            let rhs = r.apply(&inner);
            if !c.eq("R(a)R(b) = R(R(a)b + aR(b) + λab)", || format!("(e{i}, e{j})"), lhs, rhs) {
                return Ok(c.finish());
            }
        }
    }
    Ok(c.finish())
}

/// `R(ga) = g(R(a))` for every group element.
pub fn check_rota_baxter_equivariance(rb: &RotaBaxterOperator, act: &OrientedAction) -> Result<Report> {
    if act.dim() != rb.dim() {
        return Err(Error::Dimension("action and operator dimensions differ".into()));
    }
    let mut c = Checker::new("Rota-Baxter equivariance");
    let names = act.group().names();
    for (g, m) in act.matrices().iter().enumerate() {
        let lhs = rb.matrix.mul(m)?;
        let rhs = m.mul(&rb.matrix)?;
        for k in 0..rb.dim() {
            if !c.eq("R(ga) = g(R(a))", || format!("g = {}, e{k}", names[g]), lhs.column(k), rhs.column(k)) {
                return Ok(c.finish());
            }
        }
    }
    Ok(c.finish())
}

fn require_rb(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Result<()> {
    let rep = check_rota_baxter(a, rb)?;
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    Ok(())
}

/// `a ≺ b = aR(b)`, `a ≻ b = R(a)b`, `a • b = λab`; the result is re-checked.
pub fn induced_tridendriform(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Result<TridendriformAlgebra> {
    require_rb(a, rb)?;
    let n = a.dim();
    let id = Matrix::identity(n);
    let left = a.mult().compose(&id, &id, &rb.matrix);
    let right = a.mult().compose(&id, &rb.matrix, &id);
    let dot = a.mult().scale(&rb.weight);
    let t = TridendriformAlgebra::new(default_names("e", n), left, right, dot)?;
    let rep = check_tridendriform(&t);
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    Ok(t)
}

/// Weight zero only: `a ≺ b = aR(b)`, `a ≻ b = R(a)b`.
pub fn induced_dendriform(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Result<DendriformAlgebra> {
    if !rb.weight.is_zero() {
        return Err(Error::Input("induced dendriform structure needs a weight-0 operator".into()));
    }
    let t = induced_tridendriform(a, rb)?;
    let d = DendriformAlgebra::from_products(t.left().clone(), t.right().clone())?;
    let rep = check_dendriform(&d);
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    Ok(d)
}

/// Index of `e_p ⊗ e_q ⊗ e_s` in `A^{⊗3}`.
fn idx3(n: usize, p: usize, q: usize, s: usize) -> usize {
    (p * n + q) * n + s
}

/// `r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃` for `r = Σ r[i][j] e_i ⊗ e_j`, as a vector in `A^{⊗3}`.
pub fn cybe_residual(a: &AssociativeAlgebra, r: &Matrix) -> Result<Vec<Scalar>> {
    let n = a.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::Dimension(format!("r must be a {n}x{n} coefficient matrix")));
    }
    let mut out = zero_vec(n * n * n);
    let m = a.mult();
    let terms: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, r.get(i, j)))
        .filter(|t| !t.2.is_zero())
        .collect();
    for &(i, j, rij) in &terms {
        for &(k, l, rkl) in &terms {
            let c = rij * rkl;
            for (p, x) in m.basis(i, k).iter().enumerate() {
                out[idx3(n, p, l, j)] += x * &c;
            }
            for (q, x) in m.basis(j, k).iter().enumerate() {
                out[idx3(n, i, q, l)] -= x * &c;
            }
            for (s, x) in m.basis(j, l).iter().enumerate() {
                out[idx3(n, k, i, s)] += x * &c;
            }
        }
    }
    Ok(out)
}

pub fn check_cybe(a: &AssociativeAlgebra, r: &Matrix) -> Result<Report> {
    let n = a.dim();
    let res = cybe_residual(a, r)?;
    let mut c = Checker::new("CYBE");
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                let v = res[idx3(n, p, q, s)].clone();
                let loc = || format!("component e{p}⊗e{q}⊗e{s}");
                if !c.scalar_eq("r13 r12 - r12 r23 + r23 r13 = 0", loc, v, Scalar::zero()) {
                    return Ok(c.finish());
                }
            }
        }
    }
    Ok(c.finish())
}

/// `R(a) = Σ r_ij e_i a e_j` from a CYBE solution, weight 0.
///
/// With an action and a symmetric `G`-invariant `r`, the second component is the
/// equivariance report of `R`; otherwise equivariance is not asserted and it is `None`.
pub fn rb_from_cybe(
    a: &AssociativeAlgebra,
    r: &Matrix,
    act: Option<&OrientedAction>,
) -> Result<(RotaBaxterOperator, Option<Report>)> {
    let assoc = check_associative(a);
    if !assoc.passed() {
        return Err(Error::Rejected(assoc.to_string()));
    }
    let cybe = check_cybe(a, r)?;
    if !cybe.passed() {
        return Err(Error::Rejected(cybe.to_string()));
    }
    let n = a.dim();
    let m = a.mult();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|x| {
            let mut v = zero_vec(n);
            for i in 0..n {
                for j in 0..n {
                    let rij = r.get(i, j);
                    if rij.is_zero() {
                        continue;
                    }
                    let t = m.apply_left(m.basis(i, x), j);
                    v = vec_add(&v, &t.iter().map(|y| y * rij).collect::<Vec<_>>());
                }
            }
            v
        })
        .collect();
    let rb = RotaBaxterOperator::new(Matrix::from_columns(n, &cols)?, int(0))?;
    let equivariance = match act {
        Some(act) if is_symmetric(r) && is_invariant(r, act)? => Some(check_rota_baxter_equivariance(&rb, act)?),
        _ => None,
    };
    Ok((rb, equivariance))
}

fn is_symmetric(r: &Matrix) -> bool {
    *r == r.transpose()
}

/// `Σ r_ij g e_i ⊗ g e_j = r` for all `g`.
fn is_invariant(r: &Matrix, act: &OrientedAction) -> Result<bool> {
    if act.dim() != r.rows() {
        return Err(Error::Dimension("action and tensor dimensions differ".into()));
    }
    for m in act.matrices() {
        let moved = m.mul(r)?.mul(&m.transpose())?;
        if moved.sub(r)?.is_zero() {
            continue;
        }
        return Ok(false);
    }
    Ok(true)
}

/// `aR(b) + R(a)b`, computed straight from the associative product.
pub fn rb_star_product(a: &AssociativeAlgebra, rb: &RotaBaxterOperator) -> Bilinear {
    let n = a.dim();
    let cols = rb.matrix.columns();
    Bilinear::from_fn(n, n, n, |i, j| vec_add(&a.mult().apply_right(i, &cols[j]), &a.mult().apply_left(&cols[i], j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dendriform::associated_associative;
    use crate::exactmat::frac;

    /// `K[x]/(x³)` on `1, x, x²`.
    fn truncated_poly() -> AssociativeAlgebra {
        let mut m = Bilinear::square(3);
        for i in 0..3 {
            for j in 0..3 {
                if i + j < 3 {
                    m.set(i, j, i + j, int(1));
                }
            }
        }
        AssociativeAlgebra::new(m)
    }

    /// `∫ xⁱ = x^{i+1}/(i+1)`, truncated.
    fn integral() -> RotaBaxterOperator {
        let mut r = Matrix::zeros(3, 3);
        r.set(1, 0, int(1));
        r.set(2, 1, frac(1, 2));
        RotaBaxterOperator::new(r, int(0)).unwrap()
    }

    #[test]
    fn basic_operators() {
        let a = truncated_poly();
        for w in [-2, 0, 3] {
            let zero = RotaBaxterOperator::new(Matrix::zeros(3, 3), int(w)).unwrap();
            assert!(check_rota_baxter(&a, &zero).unwrap().passed());
            let neg = RotaBaxterOperator::new(Matrix::scalar_identity(3, &int(-w)), int(w)).unwrap();
            assert!(check_rota_baxter(&a, &neg).unwrap().passed());
        }
        let r = integral();
        assert!(check_rota_baxter(&a, &r).unwrap().passed());
        assert!(check_rota_baxter(&a, &r.complement()).unwrap().passed());
        assert!(check_rota_baxter(&a, &r.scaled(&frac(-3, 7))).unwrap().passed());
        let wrong = RotaBaxterOperator::new(r.matrix.clone(), int(1)).unwrap();
        assert!(!check_rota_baxter(&a, &wrong).unwrap().passed());
    }

    #[test]
    fn identity_has_weight_minus_one() {
        let a = truncated_poly();
        let id = RotaBaxterOperator::new(Matrix::identity(3), int(-1)).unwrap();
        let t = induced_tridendriform(&a, &id).unwrap();
        assert_eq!(t.left(), a.mult());
        assert_eq!(t.right(), a.mult());
        assert_eq!(t.dot(), &a.mult().scale(&int(-1)));
        assert!(induced_dendriform(&a, &id).is_err());
    }

    #[test]
    fn induced_dendriform_star_matches_direct() {
        let a = truncated_poly();
        let d = induced_dendriform(&a, &integral()).unwrap();
        assert_eq!(associated_associative(&d).mult(), &rb_star_product(&a, &integral()));
        let zero = RotaBaxterOperator::new(Matrix::zeros(3, 3), int(0)).unwrap();
        let d = induced_dendriform(&a, &zero).unwrap();
        assert!(d.left().is_zero() && d.right().is_zero());
    }

    #[test]
    fn cybe_zero_and_square_zero() {
        let a = truncated_poly();
        let (rb, eq) = rb_from_cybe(&a, &Matrix::zeros(3, 3), None).unwrap();
        assert!(rb.matrix.is_zero() && eq.is_none());
        // r = x² ⊗ x² only meets products landing in degree ≥ 4, so every term vanishes.
        let mut r = Matrix::zeros(3, 3);
        r.set(2, 2, int(1));
        let (rb, _) = rb_from_cybe(&a, &r, None).unwrap();
        assert!(check_rota_baxter(&a, &rb).unwrap().passed());
        // r = 1 ⊗ 1 gives r13r12 = r12r23 = r23r13 = 1⊗1⊗1, residual 1⊗1⊗1 ≠ 0.
        let mut r = Matrix::zeros(3, 3);
        r.set(0, 0, int(1));
        let err = rb_from_cybe(&a, &r, None).unwrap_err();
        assert!(err.is_violation());
    }
}
