use super::complexes::DendComplex;
use super::twist::Oriented;
use super::{CochainComplex, EquivariantComplex};
use crate::error::{Error, Result};
use crate::exactmat::{vec_sub, Matrix, Vector};
use crate::report::{Checker, Report};

/// A total 2-cochain `(α, β)` of an oriented dendriform algebra:
/// `α(g; ·): D → M` for every `g` and `β ∈ C²_dend(D, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochain {
    /// `alpha[g]` is the `m × d` matrix of `a ↦ α(g; a)`.
    pub alpha: Vec<Matrix>,
    /// Flat degree-2 dendriform cochain.
    pub beta: Vector,
}

impl TwoCochain {
    pub fn zero(q: usize, d: usize, m: usize) -> Self {
        TwoCochain { alpha: vec![Matrix::zeros(m, d); q], beta: crate::exactmat::zero_vec(2 * d * d * m) }
    }

    /// Coordinates in total degree 2: `β` (bidegree (0,2)) then `α` (bidegree (1,1)).
    pub fn to_total(&self) -> Vector {
        let mut v = self.beta.clone();
        for a in &self.alpha {
            let (m, d) = (a.rows(), a.cols());
            for i in 0..d {
                for o in 0..m {
                    v.push(a.get(o, i).clone());
                }
            }
        }
        v
    }

    pub fn from_total(q: usize, d: usize, m: usize, v: &[crate::exactmat::Scalar]) -> Result<Self> {
        let nb = 2 * d * d * m;
        if v.len() != nb + q * d * m {
            return Err(Error::Dimension(format!(
                "total 2-cochain needs {} coordinates, got {}",
                nb + q * d * m,
                v.len()
            )));
        }
        let alpha = (0..q).map(|g| Matrix::from_fn(m, d, |o, i| v[nb + g * d * m + i * m + o].clone())).collect();
        Ok(TwoCochain { alpha, beta: v[..nb].to_vec() })
    }

    pub fn sub(&self, other: &TwoCochain) -> TwoCochain {
        TwoCochain {
            alpha: self.alpha.iter().zip(&other.alpha).map(|(a, b)| a.sub(b).expect("shape")).collect(),
            beta: vec_sub(&self.beta, &other.beta),
        }
    }

    pub fn add(&self, other: &TwoCochain) -> TwoCochain {
        TwoCochain {
            alpha: self.alpha.iter().zip(&other.alpha).map(|(a, b)| a.add(b).expect("shape")).collect(),
            beta: crate::exactmat::vec_add(&self.beta, &other.beta),
        }
    }
}

fn check_shape(cx: &Oriented<DendComplex>, c: &TwoCochain) -> Result<()> {
    let (d, m) = (cx.base().d(), cx.base().m());
    let q = cx.group().order();
    if c.alpha.len() != q || c.alpha.iter().any(|a| a.rows() != m || a.cols() != d) || c.beta.len() != cx.dim(2) {
        return Err(Error::Dimension("2-cochain does not match the algebra, module and group".into()));
    }
    Ok(())
}

/// `α(gh; a) = gα(h; g⁻¹a) + α(g; a)`, `(gβ − β) = δ_dend α(g; ·)` and `δ_dend β = 0`.
pub fn is_two_cocycle(cx: &Oriented<DendComplex>, c: &TwoCochain) -> Result<Report> {
    check_shape(cx, c)?;
    let grp = cx.group();
    let names = grp.names();
    let (d, m) = (cx.base().d(), cx.base().m());
    let act_d = cx.algebra_action();
    let act_m = cx.module_action();
    let mut ch = Checker::new("2-cocycle");
    for g in 0..grp.order() {
        for h in 0..grp.order() {
            let gh = grp.mul(g, h);
            let rhs = act_m.matrix(g).mul(&c.alpha[h])?.mul(act_d.matrix(grp.inv(g)))?.add(&c.alpha[g])?;
            for a in 0..d {
                let loc = || format!("g = {}, h = {}, a = e{a}", names[g], names[h]);
                if !ch.eq("α(gh; a) = gα(h; g⁻¹a) + α(g; a)", loc, c.alpha[gh].column(a), rhs.column(a)) {
                    return Ok(ch.finish());
                }
            }
        }
    }
    let delta1 = cx.differential(1)?;
    for g in 0..grp.order() {
        let lhs = vec_sub(&cx.action(g, 2).mul_vec(&c.beta)?, &c.beta);
        let alpha_flat: Vector =
            (0..d).flat_map(|i| (0..m).map(move |o| (i, o))).map(|(i, o)| c.alpha[g].get(o, i).clone()).collect();
        let rhs = delta1.mul_vec(&alpha_flat)?;
        for r in 1..=2 {
            for a in 0..d {
                for b in 0..d {
                    let start = ((r - 1) * d * d + a * d + b) * m;
                    let loc = || format!("g = {}, [{r}], (e{a}, e{b})", names[g]);
                    let (l, rr) = (lhs[start..start + m].to_vec(), rhs[start..start + m].to_vec());
                    if !ch.eq("gβ − β = δ_dend α(g; ·)", loc, l, rr) {
                        return Ok(ch.finish());
                    }
                }
            }
        }
    }
    let db = cx.differential(2)?.mul_vec(&c.beta)?;
    for r in 1..=3 {
        for t in 0..d * d * d {
            let args = super::decode(t, d, 3);
            let start = ((r - 1) * d * d * d + t) * m;
            let loc = || format!("[{r}], (e{}, e{}, e{})", args[0], args[1], args[2]);
            if !ch.eq("δ_dend β = 0", loc, db[start..start + m].to_vec(), crate::exactmat::zero_vec(m)) {
                return Ok(ch.finish());
            }
        }
    }
    Ok(ch.finish())
}

/// `α(g; a) = gγ(g⁻¹a) − γ(a)`, `β = δ_dend γ` for `γ: D → M` given as an `m × d` matrix.
pub fn two_coboundary_from(cx: &Oriented<DendComplex>, gamma: &Matrix) -> Result<TwoCochain> {
    let (d, m) = (cx.base().d(), cx.base().m());
    if gamma.rows() != m || gamma.cols() != d {
        return Err(Error::Dimension(format!("γ must be {m}x{d}")));
    }
    let grp = cx.group();
    let alpha = (0..grp.order())
        .map(|g| cx.module_action().matrix(g).mul(gamma)?.mul(cx.algebra_action().matrix(grp.inv(g)))?.sub(gamma))
        .collect::<Result<Vec<_>>>()?;
    let flat: Vector = (0..d).flat_map(|i| (0..m).map(move |o| gamma.get(o, i).clone())).collect();
    let beta = cx.differential(1)?.mul_vec(&flat)?;
    Ok(TwoCochain { alpha, beta })
}
