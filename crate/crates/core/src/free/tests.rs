use super::*;
use crate::algebra::{
    check_action_laws, check_associative, AssociativeAlgebra, Bilinear, OrientedAction, OrientedGroup,
};
use crate::combinatorics::Tree;
use crate::exactmat::{int, Matrix};
use crate::fixtures::truncated_polynomials;

fn tree(s: &str) -> Tree {
    s.parse().unwrap()
}

fn catalan(n: u64) -> u64 {
    // C(2n, n) / (n + 1)
    let mut c: u64 = 1;
    for k in 0..n {
        c = c * (2 * n - k) / (k + 1);
    }
    c / (n + 1)
}

fn swap2() -> OrientedAction {
    OrientedAction::new(
        OrientedGroup::z2_reversing(),
        vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])],
    )
    .unwrap()
}

#[test]
fn tree_products_of_y1() {
    let y = Tree::y1();
    let (p, s) = tree_products(&y, &y);
    assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(tree("(|,(|,|))"), int(1))]);
    assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![(tree("((|,|),|)"), int(1))]);
}

#[test]
fn leaf_rules() {
    let t = tree("((|,|),|)");
    assert_eq!(tree_product(&t, &Tree::Leaf, Side::Prec), TreeSum::from([(t.clone(), int(1))]));
    assert_eq!(tree_product(&Tree::Leaf, &t, Side::Succ), TreeSum::from([(t.clone(), int(1))]));
    assert!(tree_product(&Tree::Leaf, &t, Side::Prec).is_empty());
    assert!(tree_product(&t, &Tree::Leaf, Side::Succ).is_empty());
}

#[test]
fn tree_products_are_homogeneous_and_positive() {
    for m in 1..4 {
        for n in 1..4 {
            for t in crate::combinatorics::enumerate_trees(m) {
                for w in crate::combinatorics::enumerate_trees(n) {
                    let (p, s) = tree_products(&t, &w);
                    assert!(!p.is_empty() && !s.is_empty());
                    assert!(p.iter().chain(&s).all(|(u, c)| u.degree() == m + n && *c > int(0)));
                }
            }
        }
    }
}

#[test]
fn generator_square() {
    let x = FreeDendElement::generator(0);
    let xx = x.product(&x, Side::Prec);
    assert_eq!(xx, FreeDendElement::monomial(tree("(|,(|,|))"), vec![0, 0]).unwrap());
    assert!(FreeDendElement::monomial(Tree::y1(), vec![0, 1]).is_err());
}

#[test]
fn component_dimensions_follow_catalan() {
    for k in 1..3 {
        let f = FreeDendriform::new(k, 4).unwrap();
        for n in 1..=4 {
            assert_eq!(f.component_dim(n) as u64, catalan(n as u64) * (k as u64).pow(n as u32));
        }
    }
}

#[test]
fn window_is_dendriform_and_oriented() {
    for (k, n) in [(1, 4), (2, 3)] {
        let f = FreeDendriform::new(k, n).unwrap();
        let alg = f.algebra();
        assert!(f.check(&alg).passed(), "k = {k}, N = {n}");
        let act = if k == 1 { OrientedAction::trivial(OrientedGroup::z2_reversing(), 1) } else { swap2() };
        let g = f.action(&act).unwrap();
        assert!(f.check_oriented(&alg, &g).unwrap().passed());
    }
}

#[test]
fn reversing_action_on_monomials() {
    let act = swap2();
    let x = FreeDendElement::generator(0);
    assert_eq!(x.act(&act, 0), x);
    assert_eq!(x.act(&act, 1), FreeDendElement::generator(1));
    let m = FreeDendElement::monomial(tree("((|,|),|)"), vec![0, 0]).unwrap();
    assert_eq!(m.act(&act, 1), FreeDendElement::monomial(tree("(|,(|,|))"), vec![1, 1]).unwrap());
    // g(x ≺ y) = gy ≻ gx
    let y = FreeDendElement::generator(1);
    let lhs = x.product(&y, Side::Prec).act(&act, 1);
    let rhs = y.act(&act, 1).product(&x.act(&act, 1), Side::Succ);
    assert_eq!(lhs, rhs);
}

fn letters() -> Vec<String> {
    vec!["1".into(), "2".into()]
}

#[test]
fn max_examples() {
    let m = MaxWordAlgebra::new(letters(), 3).unwrap();
    let (a, b) = (m.parse_word("2").unwrap(), m.parse_word("1").unwrap());
    assert_eq!(max_products(&a, &b), (Some(m.parse_word("21").unwrap()), None));
    assert_eq!(max_products(&b, &a), (None, Some(m.parse_word("12").unwrap())));
    let alg = m.algebra();
    let star = alg.star_product();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let w: Vec<usize> = m.basis()[i].iter().chain(&m.basis()[j]).copied().collect();
            if w.len() <= 3 {
                assert_eq!(star.basis(i, j), crate::exactmat::unit_vec(m.dim(), m.index_of(&w).unwrap()).as_slice());
            }
        }
    }
    assert!(m.check(&alg).passed());
}

#[test]
fn max_action_on_words() {
    let m = MaxWordAlgebra::new(letters(), 3).unwrap();
    let g = OrientedGroup::z2_reversing();
    let perms = vec![vec![0, 1], vec![1, 0]];
    let w = m.parse_word("21").unwrap();
    assert_eq!(act_on_word(&perms[1], -1, &w), w);
    assert_eq!(act_on_word(&perms[0], 1, &w), w);
    assert!(check_action_laws(&m.action(&g, &perms).unwrap()).passed());
    // the identity permutation does not reverse the order
    assert!(matches!(m.action(&g, &[vec![0, 1], vec![0, 1]]), Err(crate::Error::Input(_))));
    let trivial = OrientedGroup::cyclic(2, 1).unwrap();
    assert!(matches!(m.action(&trivial, &perms), Err(crate::Error::Input(_))));
}

#[test]
fn max_with_orientation_preserving_action() {
    let m = MaxWordAlgebra::new(letters(), 3).unwrap();
    let act = m.action(&OrientedGroup::cyclic(2, 1).unwrap(), &[vec![0, 1], vec![0, 1]]).unwrap();
    assert!(m.check_oriented(&m.algebra(), &act).unwrap().passed());
}

#[test]
fn reversal_turns_max_into_min() {
    // a = "2", b = "1": g(a ≺ b) = g("21") = "21" but gb ≻ ga = "2" ≻ "1" = 0
    let m = MaxWordAlgebra::new(letters(), 3).unwrap();
    let act = m.action(&OrientedGroup::z2_reversing(), &[vec![0, 1], vec![1, 0]]).unwrap();
    let rep = m.check_oriented(&m.algebra(), &act).unwrap();
    assert!(!rep.passed());
    let (a, b) = (m.parse_word("2").unwrap(), m.parse_word("1").unwrap());
    assert_eq!(max_products(&a, &b).0, Some(m.parse_word("21").unwrap()));
    assert_eq!(max_products(&b, &a).1, Some(m.parse_word("12").unwrap()));
    assert_eq!(max_products(&m.parse_word("2").unwrap(), &m.parse_word("1").unwrap()).1, None);
}

#[test]
fn tensor_window_is_oriented_associative() {
    let t = TruncatedTensorAlgebra::new(1, 3).unwrap();
    let alg = t.algebra();
    assert!(t.check(&alg).passed());
    let act = t.action(&OrientedAction::trivial(OrientedGroup::z2_reversing(), 1)).unwrap();
    assert!(t.check_oriented(&alg, &act).unwrap().passed());
    let t2 = TruncatedTensorAlgebra::new(2, 3).unwrap();
    let act2 = t2.action(&swap2()).unwrap();
    assert!(t2.check_oriented(&t2.algebra(), &act2).unwrap().passed());
    // v0 ⊗ v1 ↦ gv1 ⊗ gv0 = v0 ⊗ v1
    let i = t2.index_of(&[0, 1]).unwrap();
    assert_eq!(act2.matrix(1).column(i), crate::exactmat::unit_vec(t2.dim(), i));
}

#[test]
fn extension_to_polynomials() {
    let t = TruncatedTensorAlgebra::new(1, 3).unwrap();
    let on_v = OrientedAction::trivial(OrientedGroup::z2_reversing(), 1);
    let a = truncated_polynomials(4);
    assert!(check_associative(&a).passed());
    let on_a = OrientedAction::trivial(OrientedGroup::z2_reversing(), 4);
    let f = Matrix::from_ints(&[&[0], &[1], &[0], &[0]]);
    let (ext, rep) = t.extend_map(&f, &on_v, &a, &on_a).unwrap();
    assert!(rep.passed());
    assert_eq!(ext.column(0), f.column(0));
    assert_eq!(ext.column(2), vec![int(0), int(0), int(0), int(1)]);
}

#[test]
fn extension_is_unique_on_the_window() {
    // unknown F on words of length ≥ 2, constrained by F(v w) = f(v) F(w) with F|_V = f
    let t = TruncatedTensorAlgebra::new(2, 3).unwrap();
    let a = truncated_polynomials(3);
    let f = Matrix::from_ints(&[&[0, 0], &[1, 2], &[0, 1]]);
    let (ext, _) = t
        .extend_map(
            &f,
            &OrientedAction::trivial(OrientedGroup::trivial(), 2),
            &a,
            &OrientedAction::trivial(OrientedGroup::trivial(), 3),
        )
        .unwrap();
    let (n, ad) = (t.dim(), a.dim());
    let higher: Vec<usize> = (0..n).filter(|&i| t.basis()[i].len() >= 2).collect();
    let col = |i: usize| higher.iter().position(|&h| h == i).unwrap();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &i in &higher {
        let w = &t.basis()[i];
        let rest = t.index_of(&w[1..]).unwrap();
        for k in 0..ad {
            let mut row = vec![int(0); higher.len() * ad];
            row[col(i) * ad + k] += int(1);
            let fv = f.column(w[0]);
            if w.len() == 2 {
                rhs.push(a.mul(&fv, &f.column(w[1]))[k].clone());
            } else {
                for x in 0..ad {
                    let coeff = a.mul(&fv, &crate::exactmat::unit_vec(ad, x))[k].clone();
                    row[col(rest) * ad + x] -= coeff;
                }
                rhs.push(int(0));
            }
            rows.push(row);
        }
    }
    let sys = Matrix::from_rows(rows).unwrap();
    assert!(sys.kernel_basis().is_empty());
    let sol = sys.solve(&rhs).unwrap().unwrap();
    for &i in &higher {
        assert_eq!(&sol[col(i) * ad..(col(i) + 1) * ad], ext.column(i).as_slice());
    }
}

#[test]
fn non_equivariant_map_is_rejected() {
    let t = TruncatedTensorAlgebra::new(2, 2).unwrap();
    let a = AssociativeAlgebra::new(Bilinear::square(2));
    let on_a = OrientedAction::trivial(OrientedGroup::z2_reversing(), 2);
    let f = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
    assert!(matches!(t.extend_map(&f, &swap2(), &a, &on_a), Err(crate::Error::Input(_))));
}
