use super::*;
use crate::algebra::{
    check_oriented_dendriform, check_representation, Bilinear, DendriformAlgebra, Involution, OrientedAction,
    OrientedGroup, Representation,
};
use crate::cohomology::{
    cocycle_basis, two_coboundary_from, Bicomplex, DendComplex, EquivariantComplex, Oriented, TwoCochain,
};
use crate::exactmat::{int, Matrix};
use crate::fixtures::*;

fn zero_z2() -> (DendriformAlgebra, OrientedAction, Oriented<DendComplex>) {
    let d = zero_algebra(1);
    let act = OrientedAction::trivial(OrientedGroup::z2_reversing(), 1);
    let cx = Oriented::new(DendComplex::adjoint(d.clone()), act.clone(), act.clone()).unwrap();
    (d, act, cx)
}

fn integral_z2() -> (DendriformAlgebra, OrientedAction, Oriented<DendComplex>) {
    let d = integral_dendriform(2);
    let act = z2_by_involution(&Involution::identity(2));
    let cx = Oriented::new(DendComplex::adjoint(d.clone()), act.clone(), act.clone()).unwrap();
    (d, act, cx)
}

fn cocycles(cx: &Oriented<DendComplex>) -> Vec<TwoCochain> {
    let q = cx.group().order();
    let (d, m) = (cx.base().d(), cx.base().m());
    let bi = Bicomplex::new(cx, 1).unwrap();
    cocycle_basis(&bi, 2).unwrap().iter().map(|z| TwoCochain::from_total(q, d, m, z).unwrap()).collect()
}

fn cohomologous(cx: &Oriented<DendComplex>, a: &TwoCochain, b: &TwoCochain) -> bool {
    let bi = Bicomplex::new(cx, 1).unwrap();
    crate::cohomology::coboundary_primitive(&bi, 2, &a.sub(b).to_total()).unwrap().is_some()
}

#[test]
fn split_extension() {
    let (d, _, cx) = integral_z2();
    let e = build_extension(&cx, &TwoCochain::zero(2, 2, 2)).unwrap();
    assert_eq!(e.total.dim(), 4);
    // (m, a) ≺ (n, b) = (m ≺ b + a ≺ n, a ≺ b): the kernel block reproduces the adjoint action
    let (rep, act) = e.induced_module().unwrap();
    assert_eq!(rep, Representation::adjoint(&d));
    assert_eq!(&act, cx.module_action());
    assert_eq!(extract_cocycle(&e).unwrap(), TwoCochain::zero(2, 2, 2));
}

#[test]
fn round_trip_over_cocycle_bases() {
    for (_, _, cx) in [zero_z2(), integral_z2()] {
        let basis = cocycles(&cx);
        assert!(!basis.is_empty());
        for c in &basis {
            let e = build_extension(&cx, c).unwrap();
            assert!(check_oriented_dendriform(&e.total, &e.total_action).unwrap().passed());
            assert_eq!(&extract_cocycle(&e).unwrap(), c);
            let (rep, _) = e.induced_module().unwrap();
            assert_eq!(&rep, cx.base().representation());
            assert!(check_representation(cx.base().algebra(), &rep).unwrap().passed());
        }
    }
}

#[test]
fn non_cocycles_are_rejected() {
    let (_, _, cx) = zero_z2();
    let mut bad = TwoCochain::zero(2, 1, 1);
    bad.beta[0] = int(1);
    assert!(build_extension(&cx, &bad).is_err());
}

#[test]
fn section_shift_adds_a_coboundary() {
    let (_, _, cx) = integral_z2();
    let gamma = Matrix::from_ints(&[&[1, -2], &[3, 5]]);
    for c in cocycles(&cx) {
        let e = build_extension(&cx, &c).unwrap();
        let shifted = extract_cocycle(&e.with_section_shift(&gamma).unwrap()).unwrap();
        assert_eq!(shifted, c.add(&two_coboundary_from(&cx, &gamma).unwrap()));
    }
}

#[test]
fn bad_section_is_an_input_error() {
    let (_, _, cx) = zero_z2();
    let mut e = build_extension(&cx, &TwoCochain::zero(2, 1, 1)).unwrap();
    e.section = Matrix::zeros(2, 1);
    assert!(matches!(extract_cocycle(&e), Err(crate::Error::Input(_))));
}

#[test]
fn equivalence_matches_cohomology() {
    for (_, _, cx) in [zero_z2(), integral_z2()] {
        let mut cs = cocycles(&cx);
        cs.push(TwoCochain::zero(cx.group().order(), cx.base().d(), cx.base().m()));
        let gamma = Matrix::from_fn(cx.base().m(), cx.base().d(), |r, c| int((r + 2 * c) as i64 + 1));
        cs.push(cs[0].add(&two_coboundary_from(&cx, &gamma).unwrap()));
        for a in &cs {
            for b in &cs {
                let (ea, eb) = (build_extension(&cx, a).unwrap(), build_extension(&cx, b).unwrap());
                let found = extensions_equivalent(&cx, &ea, &eb).unwrap();
                assert_eq!(found.is_some(), cohomologous(&cx, a, b));
                if let Some(eq) = found {
                    assert!(check_equivalence(&ea, &eb, &eq.phi).unwrap().passed());
                }
            }
        }
    }
}

#[test]
fn zero_product_has_inequivalent_extensions() {
    let (_, _, cx) = zero_z2();
    let c = &cocycles(&cx)[0];
    let e0 = build_extension(&cx, &TwoCochain::zero(2, 1, 1)).unwrap();
    let e1 = build_extension(&cx, c).unwrap();
    assert!(extensions_equivalent(&cx, &e0, &e1).unwrap().is_none());
    let same = extensions_equivalent(&cx, &e1, &e1).unwrap().unwrap();
    assert!(same.gamma.is_zero());
}

#[test]
fn trivial_deformation_passes_every_order() {
    let (d, act, cx) = integral_z2();
    for n in 0..4 {
        let def = TruncatedDeformation::trivial(&d, &act, n);
        assert!(check_deformation(&d, &act, &def).unwrap().passed());
    }
    let def = TruncatedDeformation::trivial(&d, &act, 2);
    let (c, verdict) = first_order_class(&cx, &def).unwrap();
    assert!(verdict.passed());
    assert_eq!(c, TwoCochain::zero(2, 2, 2));
}

#[test]
fn zero_product_accepts_any_first_order_product() {
    let d = zero_algebra(2);
    let act = OrientedAction::trivial(OrientedGroup::trivial(), 2);
    let mut def = TruncatedDeformation::trivial(&d, &act, 1);
    def.left[1] = Bilinear::from_vec(2, 2, 2, (0..8).map(|k| int(k - 3)).collect()).unwrap();
    def.right[1] = Bilinear::from_vec(2, 2, 2, (0..8).map(|k| int(k * k)).collect()).unwrap();
    assert!(check_deformation(&d, &act, &def).unwrap().passed());
}

#[test]
fn broken_composition_law_is_reported() {
    let (d, act, _) = integral_z2();
    let mut def = TruncatedDeformation::trivial(&d, &act, 1);
    def.phi[1][0] = Matrix::identity(2);
    let rep = check_deformation(&d, &act, &def).unwrap();
    assert!(rep.failed_identity().unwrap().contains("φ_n(gh; a)"));
    assert!(rep.to_string().contains("n = 1"));
}

#[test]
fn order_zero_mismatch_is_an_input_error() {
    let (d, act, _) = integral_z2();
    let mut def = TruncatedDeformation::trivial(&d, &act, 1);
    def.left[0] = Bilinear::square(2);
    assert!(matches!(check_deformation(&d, &act, &def), Err(crate::Error::Input(_))));
}

#[test]
fn cocycles_give_infinitesimal_deformations() {
    for (d, act, cx) in [zero_z2(), integral_z2()] {
        let basis = cocycles(&cx);
        let defs: Vec<_> = basis.iter().map(|c| TruncatedDeformation::from_cochain(&d, &act, c).unwrap()).collect();
        for (c, def) in basis.iter().zip(&defs) {
            assert!(check_deformation(&d, &act, def).unwrap().passed());
            let (back, verdict) = first_order_class(&cx, def).unwrap();
            assert!(verdict.passed());
            assert_eq!(&back, c);
        }
        for (a, da) in basis.iter().zip(&defs) {
            for (b, db) in basis.iter().zip(&defs) {
                let psi = infinitesimally_equivalent(da, db).unwrap();
                assert_eq!(psi.is_some(), cohomologous(&cx, a, b));
            }
        }
        assert!(infinitesimally_equivalent(&defs[0], &defs[0]).unwrap().unwrap().is_zero());
    }
}

#[test]
fn equivalent_deformations_differ_by_the_coboundary_of_psi() {
    let (d, act, cx) = integral_z2();
    let c = &cocycles(&cx)[0];
    let psi = Matrix::from_ints(&[&[2, 0], &[-1, 1]]);
    let c2 = c.add(&two_coboundary_from(&cx, &psi).unwrap());
    let (d1, d2) = (
        TruncatedDeformation::from_cochain(&d, &act, c).unwrap(),
        TruncatedDeformation::from_cochain(&d, &act, &c2).unwrap(),
    );
    assert!(check_infinitesimal_equivalence(&d1, &d2, &psi).unwrap().passed());
    let found = infinitesimally_equivalent(&d1, &d2).unwrap().unwrap();
    assert!(check_infinitesimal_equivalence(&d1, &d2, &found).unwrap().passed());
    let diff = first_order_class(&cx, &d2).unwrap().0.sub(&first_order_class(&cx, &d1).unwrap().0);
    assert_eq!(diff, two_coboundary_from(&cx, &psi).unwrap());
}

#[test]
fn later_first_nonzero_order() {
    let (d, act, cx) = integral_z2();
    let c = &cocycles(&cx)[0];
    let first = TruncatedDeformation::from_cochain(&d, &act, c).unwrap();
    let mut def = TruncatedDeformation::trivial(&d, &act, 2);
    def.left[2] = first.left[1].clone();
    def.right[2] = first.right[1].clone();
    def.phi[2] = first.phi[1].clone();
    let (back, verdict) = class_at_order(&cx, &def, 2).unwrap();
    assert!(verdict.passed());
    assert_eq!(&back, c);
    assert!(class_at_order(&cx, &first, 2).is_err());
}
