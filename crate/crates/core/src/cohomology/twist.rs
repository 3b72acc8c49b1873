use super::complexes::{decode, encode, DendComplex, HochComplex};
use super::{CochainComplex, EquivariantComplex, InvolutiveComplex};
use crate::algebra::{Involution, OrientedAction, OrientedGroup};
use crate::error::{Error, Result};
use crate::exactmat::{int, Matrix, Scalar};

/// `(−1)^{(n−1)(n−2)/2}`, also for `n = 0`.
pub fn reversal_sign(n: usize) -> Scalar {
    let n = n as i64;
    if ((n - 1) * (n - 2) / 2) % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `args^{⊗n}` acting on argument tuples (row = tuple of the new cochain),
/// with the argument order reversed when `reverse`.
fn tuple_matrix(n: usize, args: &Matrix, reverse: bool) -> Matrix {
    let d = args.rows();
    let at = args.transpose();
    let mut k = Matrix::identity(1);
    for _ in 0..n {
        k = k.kron(&at);
    }
    if !reverse {
        return k;
    }
    let size = d.pow(n as u32);
    Matrix::from_fn(size, size, |i, c| {
        let mut digits = decode(i, d, n);
        digits.reverse();
        k.get(encode(&digits, d), c).clone()
    })
}

/// Matrix of `f ↦ out ∘ f(args·a₁, …, args·a_n)` on dendriform cochains, or, when `reverse`,
/// of `f ↦ (−1)^{(n−1)(n−2)/2} out ∘ f([n−r+1]; args·a_n, …, args·a₁)`.
pub fn twisted_dend_action(n: usize, args: &Matrix, out: &Matrix, reverse: bool) -> Matrix {
    let slices = Matrix::from_fn(n, n, |r, c| {
        let target = if reverse { n - 1 - r } else { r };
        int((c == target) as i64)
    });
    let m = slices.kron(&tuple_matrix(n, args, reverse)).kron(out);
    if reverse {
        m.scale(&reversal_sign(n))
    } else {
        m
    }
}

/// The Hochschild analogue of [`twisted_dend_action`] (no `[r]` component).
pub fn twisted_hoch_action(n: usize, args: &Matrix, out: &Matrix, reverse: bool) -> Matrix {
    let m = tuple_matrix(n, args, reverse).kron(out);
    if reverse {
        m.scale(&reversal_sign(n))
    } else {
        m
    }
}

/// Cochain complexes on which linear maps of `D` and `M` act by twisting.
pub trait TwistableComplex: CochainComplex {
    fn arg_dim(&self) -> usize;
    fn out_dim(&self) -> usize;
    fn twisted(&self, n: usize, args: &Matrix, out: &Matrix, reverse: bool) -> Matrix;
}

impl TwistableComplex for DendComplex {
    fn arg_dim(&self) -> usize {
        self.d()
    }

    fn out_dim(&self) -> usize {
        self.m()
    }

    fn twisted(&self, n: usize, args: &Matrix, out: &Matrix, reverse: bool) -> Matrix {
        twisted_dend_action(n, args, out, reverse)
    }
}

impl TwistableComplex for HochComplex {
    fn arg_dim(&self) -> usize {
        self.d()
    }

    fn out_dim(&self) -> usize {
        self.m()
    }

    fn twisted(&self, n: usize, args: &Matrix, out: &Matrix, reverse: bool) -> Matrix {
        twisted_hoch_action(n, args, out, reverse)
    }
}

/// A complex with involutions on `D` and `M`, carrying the map `T_n`.
#[derive(Clone, Debug)]
pub struct Involutive<C> {
    base: C,
    inv_d: Involution,
    inv_m: Involution,
}

impl<C: TwistableComplex> Involutive<C> {
    pub fn new(base: C, inv_d: Involution, inv_m: Involution) -> Result<Self> {
        if inv_d.dim() != base.arg_dim() || inv_m.dim() != base.out_dim() {
            return Err(Error::Dimension("involutions do not match the cochain spaces".into()));
        }
        Ok(Involutive { base, inv_d, inv_m })
    }

    pub fn base(&self) -> &C {
        &self.base
    }
}

impl<C: TwistableComplex> CochainComplex for Involutive<C> {
    fn name(&self) -> String {
        format!("involutive {}", self.base.name())
    }

    fn min_degree(&self) -> usize {
        self.base.min_degree()
    }

    fn dim(&self, n: usize) -> usize {
        self.base.dim(n)
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        self.base.differential(n)
    }
}

impl<C: TwistableComplex> InvolutiveComplex for Involutive<C> {
    /// `(T_n f)([r]; a) = (−1)^{(n−1)(n−2)/2} f([n−r+1]; a_n*, …, a₁*)*`.
    fn t_map(&self, n: usize) -> Matrix {
        self.base.twisted(n, self.inv_d.matrix(), self.inv_m.matrix(), true)
    }
}

/// A complex with actions of an oriented group on `D` and `M`.
#[derive(Clone, Debug)]
pub struct Oriented<C> {
    base: C,
    act_d: OrientedAction,
    act_m: OrientedAction,
    inverses: Vec<Matrix>,
}

impl<C: TwistableComplex> Oriented<C> {
    pub fn new(base: C, act_d: OrientedAction, act_m: OrientedAction) -> Result<Self> {
        if act_d.group() != act_m.group() {
            return Err(Error::Input("algebra and module carry actions of different groups".into()));
        }
        if act_d.dim() != base.arg_dim() || act_m.dim() != base.out_dim() {
            return Err(Error::Dimension("group actions do not match the cochain spaces".into()));
        }
        let g = act_d.group();
        let inverses = (0..g.order()).map(|x| act_d.matrix(g.inv(x)).clone()).collect();
        Ok(Oriented { base, act_d, act_m, inverses })
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn algebra_action(&self) -> &OrientedAction {
        &self.act_d
    }

    pub fn module_action(&self) -> &OrientedAction {
        &self.act_m
    }
}

impl<C: TwistableComplex> CochainComplex for Oriented<C> {
    fn name(&self) -> String {
        format!("oriented {}", self.base.name())
    }

    fn min_degree(&self) -> usize {
        self.base.min_degree()
    }

    fn dim(&self, n: usize) -> usize {
        self.base.dim(n)
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        self.base.differential(n)
    }
}

impl<C: TwistableComplex> EquivariantComplex for Oriented<C> {
    fn group(&self) -> &OrientedGroup {
        self.act_d.group()
    }

    /// `(gf)([r]; a) = g f([r]; g⁻¹a₁, …)` or its reversed, reindexed and signed form when `ε(g) = −1`.
    fn action(&self, g: usize, n: usize) -> Matrix {
        let reverse = self.group().eps(g) == -1;
        self.base.twisted(n, &self.inverses[g], self.act_m.matrix(g), reverse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_signs() {
        let s: Vec<i64> = (0..7).map(|n| if reversal_sign(n) == int(1) { 1 } else { -1 }).collect();
        assert_eq!(s, vec![-1, 1, 1, -1, -1, 1, 1]);
    }

    #[test]
    fn t2_swaps_slices() {
        // d = m = 1, * = id: (T₂f)([1]) = f([2]) and vice versa, sign +1.
        let id = Matrix::identity(1);
        let t = twisted_dend_action(2, &id, &id, true);
        assert_eq!(t, Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(twisted_dend_action(1, &id, &id, true), id);
        assert_eq!(twisted_dend_action(3, &id, &id, true).get(0, 2), &int(-1));
    }

    #[test]
    fn reversal_reorders_arguments() {
        // d = 2, n = 2, args = id: (Tf)(e0, e1) = f(e1, e0)
        let id2 = Matrix::identity(2);
        let id1 = Matrix::identity(1);
        let t = twisted_hoch_action(2, &id2, &id1, true);
        assert_eq!(t.get(1, 2), &int(1));
        assert_eq!(t.get(0, 0), &int(1));
        assert_eq!(twisted_hoch_action(0, &id2, &id1, true), Matrix::from_ints(&[&[-1]]));
    }
}
