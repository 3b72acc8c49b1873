//! Small worked examples: algebras, operators and group actions used by tests and the CLI demos.

use crate::algebra::{
    induced_dendriform, induced_tridendriform, AssociativeAlgebra, Bilinear, DendriformAlgebra, Involution,
    OrientedAction, OrientedGroup, RotaBaxterOperator, TridendriformAlgebra,
};
use crate::exactmat::{frac, int, Matrix};

/// All products zero.
pub fn zero_algebra(d: usize) -> DendriformAlgebra {
    DendriformAlgebra::zero(d)
}

/// `e ≺ e = e`, `e ≻ e = 0`.
pub fn one_dim_left() -> DendriformAlgebra {
    let mut l = Bilinear::square(1);
    l.set(0, 0, 0, int(1));
    DendriformAlgebra::from_products(l, Bilinear::square(1)).expect("shape")
}

/// `e ≻ e = e`, `e ≺ e = 0`.
pub fn one_dim_right() -> DendriformAlgebra {
    let mut r = Bilinear::square(1);
    r.set(0, 0, 0, int(1));
    DendriformAlgebra::from_products(Bilinear::square(1), r).expect("shape")
}

/// `𝕂[x]/(x^n)` on the basis `1, x, …, x^{n−1}`.
pub fn truncated_polynomials(n: usize) -> AssociativeAlgebra {
    let mut m = Bilinear::square(n);
    for i in 0..n {
        for j in 0..n - i {
            m.set(i, j, i + j, int(1));
        }
    }
    AssociativeAlgebra::new(m)
}

/// `∫: xⁱ ↦ x^{i+1}/(i+1)` on `𝕂[x]/(x^n)`, weight 0.
pub fn integration(n: usize) -> RotaBaxterOperator {
    let mut r = Matrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        r.set(i + 1, i, frac(1, i as i64 + 1));
    }
    RotaBaxterOperator::new(r, int(0)).expect("square")
}

/// Dendriform structure `a ≺ b = a∫b`, `a ≻ b = (∫a)b` on `𝕂[x]/(x^n)`; `* = id` is an involution.
pub fn integral_dendriform(n: usize) -> DendriformAlgebra {
    induced_dendriform(&truncated_polynomials(n), &integration(n)).expect("∫ is Rota-Baxter")
}

/// Upper triangular 2×2 matrices on `E11, E12, E22`.
pub fn upper_triangular() -> AssociativeAlgebra {
    let mut m = Bilinear::square(3);
    m.set(0, 0, 0, int(1)); // E11 E11 = E11
    m.set(0, 1, 1, int(1)); // E11 E12 = E12
    m.set(1, 2, 1, int(1)); // E12 E22 = E12
    m.set(2, 2, 2, int(1)); // E22 E22 = E22
    AssociativeAlgebra::new(m)
}

/// Projection onto `span{E11, E12}` along `E22`: weight −1.
pub fn triangular_projection() -> RotaBaxterOperator {
    let mut r = Matrix::zeros(3, 3);
    r.set(0, 0, int(1));
    r.set(1, 1, int(1));
    RotaBaxterOperator::new(r, int(-1)).expect("square")
}

pub fn triangular_tridendriform() -> TridendriformAlgebra {
    induced_tridendriform(&upper_triangular(), &triangular_projection()).expect("projection is Rota-Baxter")
}

/// `(D, ≺ + •, ≻)` of [`triangular_tridendriform`].
pub fn triangular_dendriform() -> DendriformAlgebra {
    triangular_tridendriform().to_dendriform()
}

/// `ℤ/2` reversing orientation, acting on `D` through an involution.
pub fn z2_by_involution(inv: &Involution) -> OrientedAction {
    OrientedAction::from_involution(inv)
}

/// `ℤ/4` with `ε(g) = −1` acting through `ℤ/4 → ℤ/2` by an involution.
pub fn z4_by_involution(inv: &Involution) -> OrientedAction {
    let g = OrientedGroup::cyclic(4, -1).expect("Z/4");
    let s = inv.matrix().clone();
    let id = Matrix::identity(inv.dim());
    OrientedAction::new(g, vec![id.clone(), s.clone(), id, s]).expect("shapes")
}

/// `ℤ/2 × ℤ/2` where the first factor acts trivially with `ε = 1` and the second by the involution with `ε = −1`.
pub fn klein_by_involution(inv: &Involution) -> OrientedAction {
    let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    let table = (0..4).map(|x: usize| (0..4).map(|y: usize| x ^ y).collect()).collect();
    let g = OrientedGroup::new(names, table, vec![1, 1, -1, -1]).expect("Klein four-group");
    let s = inv.matrix().clone();
    let id = Matrix::identity(inv.dim());
    OrientedAction::new(g, vec![id.clone(), id, s.clone(), s]).expect("shapes")
}

/// `ℤ/3` acting trivially, orientation-preserving.
pub fn z3_trivial(dim: usize) -> OrientedAction {
    OrientedAction::trivial(OrientedGroup::cyclic(3, 1).expect("Z/3"), dim)
}
