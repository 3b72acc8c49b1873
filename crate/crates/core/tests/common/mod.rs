//! Seeded generators of valid random instances shared by the integration tests.

#![allow(dead_code)]

use dendro::algebra::{
    check_dendriform, check_involution, check_involutive_representation, check_oriented_dendriform,
    check_oriented_representation, check_representation, Bilinear, DendriformAlgebra, Involution, OrientedAction,
    OrientedGroup, Representation,
};
use dendro::exactmat::{int, Matrix};
use dendro::fixtures::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An invertible integer matrix with small entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let p = Matrix::from_vec(n, n, (0..n * n).map(|_| int(rng.gen_range(-2..=2))).collect()).unwrap();
        if p.inverse().is_some() {
            return p;
        }
    }
}

/// `P⁻¹ S P` for the basis change `P`.
pub fn conjugate(s: &Matrix, p: &Matrix) -> Matrix {
    p.inverse().expect("invertible").mul(&s.mul(p).unwrap()).unwrap()
}

/// A random involution of `𝕂ⁿ`: a conjugated diagonal of signs.
pub fn random_involution(rng: &mut ChaCha8Rng, n: usize) -> Involution {
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        s.set(i, i, int(if rng.gen_bool(0.5) { 1 } else { -1 }));
    }
    Involution::new(conjugate(&s, &random_invertible(rng, n))).unwrap()
}

/// `D ⊕ D^rev` with `≺' = (≻)^op`, `≻' = (≺)^op` on the second copy, so swapping the copies is an involution.
pub fn doubled(d: &DendriformAlgebra) -> (DendriformAlgebra, Involution) {
    let n = d.dim();
    let mut l = Bilinear::square(2 * n);
    let mut r = Bilinear::square(2 * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                l.set(i, j, k, d.left().get(i, j, k).clone());
                r.set(i, j, k, d.right().get(i, j, k).clone());
                l.set(n + i, n + j, n + k, d.right().get(j, i, k).clone());
                r.set(n + i, n + j, n + k, d.left().get(j, i, k).clone());
            }
        }
    }
    let swap = Matrix::from_fn(2 * n, 2 * n, |a, b| int(i64::from((a + n) % (2 * n) == b)));
    (DendriformAlgebra::from_products(l, r).unwrap(), Involution::new(swap).unwrap())
}

/// A dendriform algebra of dimension at most 3, with an involution when one is known.
pub fn random_base(rng: &mut ChaCha8Rng) -> (DendriformAlgebra, Option<Involution>) {
    let (d, inv) = match rng.gen_range(0..7) {
        0 => {
            let n = rng.gen_range(1..=3);
            (zero_algebra(n), Some(random_involution(rng, n)))
        }
        1 => (integral_dendriform(2), Some(Involution::identity(2))),
        2 => (integral_dendriform(3), Some(Involution::identity(3))),
        3 => {
            let (d, s) = doubled(&one_dim_left());
            (d, Some(s))
        }
        4 => {
            let (d, s) = doubled(&one_dim_right());
            (d, Some(s))
        }
        5 => (triangular_dendriform(), None),
        _ => (if rng.gen_bool(0.5) { one_dim_left() } else { one_dim_right() }, None),
    };
    let p = random_invertible(rng, d.dim());
    let inv = inv.map(|s| Involution::new(conjugate(s.matrix(), &p)).unwrap());
    (d.transport(&p).unwrap(), inv)
}

/// An oriented instance `(D, M)` with `d, m ≤ 3` and `|G| ≤ 4`.
pub struct Instance {
    pub alg: DendriformAlgebra,
    pub rep: Representation,
    pub inv_d: Option<Involution>,
    pub inv_m: Option<Involution>,
    pub act_d: OrientedAction,
    pub act_m: OrientedAction,
}

fn action_from(kind: usize, inv: Option<&Involution>, dim: usize) -> OrientedAction {
    match (kind, inv) {
        (0, Some(s)) => z2_by_involution(s),
        (1, Some(s)) => z4_by_involution(s),
        (2, Some(s)) => klein_by_involution(s),
        (3, _) => z3_trivial(dim),
        _ => OrientedAction::trivial(OrientedGroup::cyclic(2, 1).unwrap(), dim),
    }
}

pub fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let (alg, inv_d) = random_base(rng);
    let (rep, inv_m) = if rng.gen_bool(0.6) {
        let q = random_invertible(rng, alg.dim());
        let rep = Representation::adjoint(&alg).transport(&q).unwrap();
        (rep, inv_d.as_ref().map(|s| Involution::new(conjugate(s.matrix(), &q)).unwrap()))
    } else {
        let m = rng.gen_range(1..=3);
        (Representation::trivial(alg.dim(), m), Some(random_involution(rng, m)))
    };
    let kinds: Vec<usize> = if inv_d.is_some() { vec![0, 1, 2, 3, 4] } else { vec![3, 4] };
    let kind = *kinds.choose(rng).unwrap();
    let act_d = action_from(kind, inv_d.as_ref(), alg.dim());
    let act_m = action_from(kind, inv_m.as_ref(), rep.dim());
    let inst = Instance { alg, rep, inv_d, inv_m, act_d, act_m };
    assert_valid(&inst);
    inst
}

/// An involutive pair `(D, M)` with `d, m ≤ 3`.
pub fn random_involutive(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let inst = random_instance(rng);
        if inst.inv_d.is_some() && inst.inv_m.is_some() {
            return inst;
        }
    }
}

/// Generator sanity: every random instance is a genuine oriented (and involutive) pair.
pub fn assert_valid(i: &Instance) {
    assert!(check_dendriform(&i.alg).passed());
    assert!(check_representation(&i.alg, &i.rep).unwrap().passed());
    assert!(check_oriented_dendriform(&i.alg, &i.act_d).unwrap().passed());
    assert!(check_oriented_representation(&i.alg, &i.act_d, &i.rep, &i.act_m).unwrap().passed());
    if let (Some(a), Some(b)) = (&i.inv_d, &i.inv_m) {
        assert!(check_involution(&i.alg, a).unwrap().passed());
        assert!(check_involutive_representation(&i.alg, a, &i.rep, b).unwrap().passed());
    }
}
