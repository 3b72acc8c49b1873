use super::*;
use crate::algebra::{Involution, OrientedAction, OrientedGroup, Representation};
use crate::exactmat::{int, Matrix};
use crate::fixtures::*;

#[test]
fn dend_differential_degree_one_expansion() {
    // (δf)([1]; a, b) = a≺f(b) − f(a≺b) + f(a)≺b with D = M = e≺e=e.
    let cx = DendComplex::adjoint(one_dim_left());
    let f = vec![int(1)];
    let df = cx.differential(1).unwrap().mul_vec(&f).unwrap();
    // [1]: e≺e − e + e≺e = 1; [2]: e≻f(e) − f(e≻e) + f(e)≻e = 0
    assert_eq!(df, vec![int(1), int(0)]);
    let cx = DendComplex::adjoint(one_dim_right());
    assert_eq!(cx.differential(1).unwrap().mul_vec(&f).unwrap(), vec![int(0), int(1)]);
}

#[test]
fn differentials_square_to_zero() {
    for d in [one_dim_left(), integral_dendriform(2), triangular_dendriform()] {
        let cx = DendComplex::adjoint(d.clone());
        for n in 1..3 {
            let dd = cx.differential(n + 1).unwrap().mul(&cx.differential(n).unwrap()).unwrap();
            assert!(dd.is_zero(), "δ² ≠ 0 at n = {n}");
        }
        let h = HochComplex::from_dendriform(&d, &Representation::adjoint(&d)).unwrap();
        for n in 0..3 {
            assert!(h.differential(n + 1).unwrap().mul(&h.differential(n).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn hochschild_degree_one() {
    // d = 1, e⋆e = e, M = D: (δf)(e,e) = e·f(e) − f(e) + f(e)·e = f(e)
    let h = HochComplex::from_dendriform(&one_dim_left(), &Representation::adjoint(&one_dim_left())).unwrap();
    assert_eq!(h.differential(1).unwrap(), Matrix::from_ints(&[&[1]]));
    assert_eq!(h.differential(0).unwrap(), Matrix::from_ints(&[&[0]]));
}

#[test]
fn group_differential_examples() {
    let g = OrientedGroup::cyclic(2, 1).unwrap();
    let sign_module = OrientedAction::new(g.clone(), vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])]).unwrap();
    let cx = GroupComplex::new(sign_module);
    // (δm)(g) = gm − m
    assert_eq!(cx.differential(0).unwrap(), Matrix::from_ints(&[&[0], &[-2]]));
    for n in 0..4 {
        assert!(cx.differential(n + 1).unwrap().mul(&cx.differential(n).unwrap()).unwrap().is_zero());
    }
    for n in 1..4 {
        assert_eq!(cohomology(&cx, n).unwrap().dim_h, 0);
    }
    // trivial module: (δf)(g, h) = f(h) − f(gh) + f(g)
    let triv = GroupComplex::new(OrientedAction::trivial(g, 1));
    let d1 = triv.differential(1).unwrap();
    // (g, g): f(g) − f(e) + f(g)
    assert_eq!(d1.row(3), &[int(-1), int(2)]);
}

#[test]
fn cochain_action_is_an_action_and_commutes_with_delta() {
    let d = integral_dendriform(2);
    let inv = Involution::identity(2);
    for act in [z2_by_involution(&inv), z4_by_involution(&inv), klein_by_involution(&inv)] {
        let cx = Oriented::new(DendComplex::adjoint(d.clone()), act.clone(), act.clone()).unwrap();
        let grp = cx.group().clone();
        for n in 1..4 {
            let e = cx.action(grp.identity(), n);
            assert!(e.is_identity());
            for g in 0..grp.order() {
                for h in 0..grp.order() {
                    let lhs = cx.action(g, n).mul(&cx.action(h, n)).unwrap();
                    assert_eq!(lhs, cx.action(grp.mul(g, h), n), "n = {n}");
                }
                if n < 3 {
                    let lhs = cx.differential(n).unwrap().mul(&cx.action(g, n)).unwrap();
                    let rhs = cx.action(g, n + 1).mul(&cx.differential(n).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "δ not equivariant for g = {g}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn t_map_eigenspaces() {
    let inv = Involution::identity(1);
    let cx = Involutive::new(DendComplex::adjoint(zero_algebra(1)), inv.clone(), inv).unwrap();
    assert!(cx.t_map(1).is_identity());
    let plus = Eigencomplex::new(&cx, 1);
    let minus = Eigencomplex::new(&cx, -1);
    assert_eq!((plus.dim(1), minus.dim(1)), (1, 0));
    assert_eq!((plus.dim(2), minus.dim(2)), (1, 1));
    assert_eq!(plus.basis(2).column(0), vec![int(1), int(1)]);
    assert_eq!(minus.basis(2).column(0), vec![int(-1), int(1)]);
    for n in 1..4 {
        assert_eq!(cohomology(&cx, n).unwrap().dim_h, n);
        let split = cohomology(&plus, n).unwrap().dim_h + cohomology(&minus, n).unwrap().dim_h;
        assert_eq!(split, n);
    }
}

#[test]
fn s_map_is_a_chain_map() {
    let d = integral_dendriform(2);
    let rep = Representation::adjoint(&d);
    let dc = DendComplex::new(d.clone(), rep.clone()).unwrap();
    let hc = HochComplex::from_dendriform(&d, &rep).unwrap();
    for n in 1..4 {
        let lhs = hc.differential(n).unwrap().mul(&s_map(n, 2, 2)).unwrap();
        let rhs = s_map(n + 1, 2, 2).mul(&dc.differential(n).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
    let f = DendCochain::from_vec(2, 1, 1, vec![int(2), int(3)]).unwrap();
    assert_eq!(s_map(2, 1, 1).mul_vec(&f.data).unwrap(), vec![int(5)]);
}

#[test]
fn total_complex_squares_to_zero() {
    let inv = Involution::identity(1);
    let act = z2_by_involution(&inv);
    let cx = Oriented::new(DendComplex::adjoint(zero_algebra(1)), act.clone(), act).unwrap();
    let bi = Bicomplex::new(&cx, 1).unwrap();
    for i in 0..3 {
        for j in 1..3 {
            assert!(bi.horizontal(i, j + 1).unwrap().mul(&bi.horizontal(i, j).unwrap()).unwrap().is_zero());
            assert!(bi.vertical(i + 1, j).mul(&bi.vertical(i, j)).unwrap().is_zero());
        }
    }
    for n in 1..4 {
        assert!(bi.differential(n + 1).unwrap().mul(&bi.differential(n).unwrap()).unwrap().is_zero());
    }
    assert_eq!(cohomology(&bi, 2).unwrap().dim_h, 1);
}

#[test]
fn vertical_degree_one_unfolds() {
    // (∂_v β)(g; [1]; a) = gβ([1]; g⁻¹a) − β([1]; a)
    let inv = Involution::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
    let act = z2_by_involution(&inv);
    let cx = Oriented::new(DendComplex::adjoint(zero_algebra(2)), act.clone(), act).unwrap();
    let bi = Bicomplex::new(&cx, 1).unwrap();
    let beta: Vector = (0..4).map(|k| int(k + 1)).collect(); // β(e_i) component o = beta[i*2+o]
    let v = bi.vertical(0, 1).mul_vec(&beta).unwrap();
    // g swaps e0,e1: gβ(g⁻¹e0) = swap(β(e1)) = (4, 3)
    assert_eq!(&v[4..6], &[int(4) - int(1), int(3) - int(2)]);
    assert!(v[..4].iter().all(num_traits::Zero::is_zero));
}

#[test]
fn two_cocycle_examples() {
    let act = OrientedAction::trivial(OrientedGroup::z2_reversing(), 1);
    let cx = Oriented::new(DendComplex::adjoint(zero_algebra(1)), act.clone(), act).unwrap();
    let zero = TwoCochain::zero(2, 1, 1);
    assert!(is_two_cocycle(&cx, &zero).unwrap().passed());
    let gamma = Matrix::from_ints(&[&[3]]);
    let cob = two_coboundary_from(&cx, &gamma).unwrap();
    assert!(is_two_cocycle(&cx, &cob).unwrap().passed());
    let bi = Bicomplex::new(&cx, 1).unwrap();
    let dims = cohomology(&bi, 2).unwrap();
    assert_eq!((dims.dim_z, dims.dim_b, dims.dim_h), (1, 0, 1));
    let z = cocycle_basis(&bi, 2).unwrap();
    let c = TwoCochain::from_total(2, 1, 1, &z[0]).unwrap();
    assert_eq!(c.beta[0], c.beta[1]);
    assert!(is_two_cocycle(&cx, &c).unwrap().passed());
    let mut bad = zero.clone();
    bad.beta[0] = int(1);
    assert!(!is_two_cocycle(&cx, &bad).unwrap().passed());
    assert_eq!(TwoCochain::from_total(2, 1, 1, &c.to_total()).unwrap(), c);
}

#[test]
fn cohomology_ranges() {
    let cx = DendComplex::adjoint(zero_algebra(1));
    let table = cohomology_range(&cx, 1, 3, true).unwrap();
    let dims: Vec<usize> = table.iter().map(|t| t.dims.dim_h).collect();
    assert_eq!(dims, vec![1, 2, 3]);
    assert_eq!(table[2].witnesses.as_ref().unwrap().len(), 3);
    assert!(cohomology(&cx, 0).is_err());
}
