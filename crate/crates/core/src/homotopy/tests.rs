use super::*;
use crate::algebra::{
    associated_associative, check_dendriform, check_involution, induced_dendriform, Bilinear, DendriformAlgebra,
    Involution,
};
use crate::exactmat::{int, unit_vec, zero_vec, Matrix};
use crate::fixtures::{
    integral_dendriform, integration, one_dim_left, one_dim_right, triangular_dendriform, truncated_polynomials,
    zero_algebra,
};

fn broken_left() -> DendriformAlgebra {
    // e ≺ e = e and e ≻ e = e breaks the first axiom
    let mut l = Bilinear::square(1);
    l.set(0, 0, 0, int(1));
    DendriformAlgebra::from_products(l.clone(), l).unwrap()
}

fn two_dim_mixed() -> DendriformAlgebra {
    let mut l = Bilinear::square(2);
    let mut r = Bilinear::square(2);
    l.set(0, 1, 1, int(1));
    r.set(1, 0, 0, int(2));
    r.set(1, 1, 1, int(-1));
    DendriformAlgebra::from_products(l, r).unwrap()
}

#[test]
fn degree_zero_agrees_with_dendriform_checker() {
    for d in [
        zero_algebra(2),
        one_dim_left(),
        one_dim_right(),
        broken_left(),
        two_dim_mixed(),
        integral_dendriform(3),
        triangular_dendriform(),
    ] {
        let dend = check_dendriform(&d);
        let inf = check_dend_infinity(&DendInfinity::from_dendriform(&d), 3);
        assert_eq!(dend.passed(), inf.passed());
        if let (Some(a), Some(b)) = (&dend.violation, &inf.violation) {
            assert_eq!(a.location, b.location);
            let axiom = ["(a≺b)≺c", "(a≻b)≺c", "(a≺b + a≻b)≻c"].iter().position(|p| a.identity.starts_with(p)).unwrap();
            assert!(b.identity.ends_with(&format!("[{}]", axiom + 1)), "{} vs {}", a.identity, b.identity);
        }
    }
}

#[test]
fn zero_family_passes() {
    let space = GradedSpace::new(-1, vec![1, 2, 1]);
    let fam = DendInfinity::zero(space.clone(), 3);
    assert!(check_dend_infinity(&fam, 3).passed());
    assert!(check_a_infinity(&a_infinity_sum(&fam), 3).passed());
    assert!(check_involutive_dend_infinity(&fam, &Matrix::identity(4), 3).unwrap().passed());
}

#[test]
fn non_square_zero_differential_fails_at_one() {
    // e₂ ↦ e₁ ↦ e₀ in degrees 2, 1, 0
    let space = GradedSpace::new(0, vec![1, 1, 1]);
    let mu1 = GradedMap::from_fn(1, 3, |t| if t[0] > 0 { unit_vec(3, t[0] - 1) } else { zero_vec(3) });
    let fam = DendInfinity::new(space, vec![vec![mu1]]).unwrap();
    let rep = check_dend_infinity(&fam, 3);
    assert_eq!(rep.failed_identity(), Some("Dend∞ identity n = 1, [1]"));
    assert_eq!(rep.violation.unwrap().location, "(e2)");
}

#[test]
fn inhomogeneous_map_is_an_input_error() {
    let space = GradedSpace::new(0, vec![1, 1]);
    let mut mu2 = GradedMap::zeros(2, 2);
    mu2.set(&[0, 0], 1, int(1));
    let err = DendInfinity::new(space, vec![vec![GradedMap::zeros(1, 2)], vec![mu2.clone(), mu2]]);
    assert!(matches!(err, Err(crate::Error::Input(_))));
}

#[test]
fn symmetric_slices_with_identity_star() {
    let space = GradedSpace::new(0, vec![2]);
    let p = GradedMap::from_fn(2, 2, |t| unit_vec(2, (t[0] + 2 * t[1]) % 2));
    let q = GradedMap::from_fn(2, 2, |t| unit_vec(2, (t[1] + 2 * t[0]) % 2));
    let fam = DendInfinity::new(space.clone(), vec![vec![GradedMap::zeros(1, 2)], vec![p.clone(), q]]).unwrap();
    assert!(check_involutive_dend_infinity(&fam, &Matrix::identity(2), 2).unwrap().passed());
    let bad = DendInfinity::new(space, vec![vec![GradedMap::zeros(1, 2)], vec![p.clone(), p]]).unwrap();
    assert!(!check_involutive_dend_infinity(&bad, &Matrix::identity(2), 2).unwrap().passed());
}

#[test]
fn involutive_sign_flips_at_arity_three() {
    // μ_{3,[r]}(e₀, e₀, e₀) = c_r e₁ with * = id requires c_r = −c_{4−r}
    let space = GradedSpace::new(0, vec![1, 1]);
    let fam = |c: [i64; 3]| {
        let slices = c
            .iter()
            .map(|&x| {
                let mut m = GradedMap::zeros(3, 2);
                m.set(&[0, 0, 0], 1, int(x));
                m
            })
            .collect();
        let z = |k| vec![GradedMap::zeros(k, 2); k];
        DendInfinity::new(space.clone(), vec![z(1), z(2), slices]).unwrap()
    };
    let id = Matrix::identity(2);
    assert!(check_involutive_dend_infinity(&fam([1, 0, -1]), &id, 3).unwrap().passed());
    assert!(!check_involutive_dend_infinity(&fam([1, 0, 1]), &id, 3).unwrap().passed());
    assert!(!check_involutive_dend_infinity(&fam([0, 1, 0]), &id, 3).unwrap().passed());
    assert_eq!(involutive_sign(&[0, 0, 0]), -1);
    assert_eq!(involutive_sign(&[0, 0]), 1);
}

#[test]
fn degenerate_star_is_rejected() {
    let fam = DendInfinity::zero(GradedSpace::new(0, vec![1, 1]), 2);
    let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    assert!(matches!(check_involutive_dend_infinity(&fam, &swap, 2), Err(crate::Error::Input(_))));
    let scale = Matrix::from_ints(&[&[2, 0], &[0, 1]]);
    assert!(matches!(check_involutive_dend_infinity(&fam, &scale, 2), Err(crate::Error::Input(_))));
}

/// Reverses the symbols by adjacent transpositions, picking up `(−1)^{|x||y|}` at each swap.
fn bubble_sign(degrees: &[i32]) -> i32 {
    let mut seq: Vec<(usize, i32)> = degrees.iter().copied().enumerate().collect();
    let mut sign = 1;
    let n = seq.len();
    for pass in 0..n {
        for p in 0..n - 1 - pass {
            if seq[p].0 < seq[p + 1].0 {
                if seq[p].1.rem_euclid(2) == 1 && seq[p + 1].1.rem_euclid(2) == 1 {
                    sign = -sign;
                }
                seq.swap(p, p + 1);
            }
        }
    }
    assert!(seq.windows(2).all(|w| w[0].0 > w[1].0));
    sign
}

#[test]
fn koszul_sign_matches_transposition_oracle() {
    for len in 0..6u32 {
        for code in 0..4usize.pow(len) {
            let degrees: Vec<i32> = (0..len).map(|p| (code / 4usize.pow(p) % 4) as i32 - 1).collect();
            assert_eq!(koszul_reversal_sign(&degrees), bubble_sign(&degrees), "{degrees:?}");
        }
    }
}

#[test]
fn degree_zero_sum_is_the_associated_product() {
    let d = integral_dendriform(3);
    let sum = a_infinity_sum(&DendInfinity::from_dendriform(&d));
    let star = associated_associative(&d);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(sum.map(2).unwrap().basis(&[i, j]), star.mult().basis(i, j));
        }
    }
    assert!(check_a_infinity(&sum, 3).passed());
}

#[test]
fn r_zero_leaves_only_the_differential() {
    let (fam, _, star) = dg_fixture();
    let zero = Matrix::zeros(6, 6);
    assert!(rb_a_infinity_check(&fam, &zero, 3).unwrap().passed());
    let (ind, rep) = induced_dend_infinity(&fam, &zero, Some(&star), 3).unwrap();
    assert!(rep.passed());
    assert!(ind.maps()[1].iter().all(GradedMap::is_zero));
    assert_eq!(ind.slice(1, 1), fam.map(1));
    assert!(!fam.map(1).unwrap().is_zero());
}

#[test]
fn degree_zero_rb_reproduces_induced_dendriform() {
    let a = truncated_polynomials(4);
    let rb = integration(4);
    let fam = AInfinity::from_associative(&a);
    let (ind, rep) = induced_dend_infinity(&fam, &rb.matrix, None, 3).unwrap();
    assert!(rep.passed());
    let d = induced_dendriform(&a, &rb).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(ind.slice(2, 1).unwrap().basis(&[i, j]), d.left().basis(i, j));
            assert_eq!(ind.slice(2, 2).unwrap().basis(&[i, j]), d.right().basis(i, j));
        }
    }
    assert!(check_involution(&d, &Involution::identity(4)).unwrap().passed());
}

#[test]
fn dg_fixture_is_involutive_a_infinity() {
    let (fam, rb, star) = dg_fixture();
    assert!(check_a_infinity(&fam, 3).passed());
    assert!(check_involutive_a_infinity(&fam, &star, 3).unwrap().passed());
    assert!(rb_a_infinity_check(&fam, &rb, 3).unwrap().passed());
    let (ind, rep) = induced_dend_infinity(&fam, &rb, Some(&star), 3).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(check_a_infinity(&a_infinity_sum(&ind), 3).passed());
}

#[test]
fn graded_commutativity_sign_is_seen() {
    // ε·x = −xε breaks graded commutativity
    let (fam, _, star) = dg_fixture();
    let mut mu2 = fam.map(2).unwrap().clone();
    mu2.set(&[3, 1], 4, int(-1));
    let bad = AInfinity::new(fam.space().clone(), vec![fam.map(1).unwrap().clone(), mu2]).unwrap();
    let rep = check_involutive_a_infinity(&bad, &star, 3).unwrap();
    assert_eq!(rep.violation.unwrap().location, "(x, e)");
}

#[test]
fn non_rota_baxter_operator_is_rejected() {
    let (fam, _, star) = dg_fixture();
    let id = Matrix::identity(6);
    assert!(matches!(induced_dend_infinity(&fam, &id, Some(&star), 3), Err(crate::Error::Rejected(_))));
}
