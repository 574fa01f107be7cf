use std::collections::BTreeMap;
use std::sync::Arc;

use exactpoly::{parse, Monomial, Polynomial, Rational};
use liealg::{unit_vector, LieAlgebra, Vector};
use pbw::{commutator, is_central, pbw_multiply, symmetrize, weight_in_enveloping, PbwElement};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn alg(name: &str, dim: usize, brackets: &[(usize, usize, usize, i64)]) -> Arc<LieAlgebra> {
    let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for &(i, j, k, c) in brackets {
        table.entry((i - 1, j - 1)).or_insert_with(|| vec![q(0); dim])[k - 1] += q(c);
    }
    Arc::new(LieAlgebra::from_brackets(name, dim, table.into_iter().map(|((i, j), v)| (i, j, v))).unwrap())
}

fn algebras() -> Vec<Arc<LieAlgebra>> {
    vec![
        alg("g3", 3, &[(1, 2, 3, 1)]),
        alg("g4", 4, &[(1, 2, 3, 1), (1, 3, 4, 1)]),
        alg("g5,4", 5, &[(1, 2, 3, 1), (1, 3, 4, 1), (2, 3, 5, 1)]),
        alg("sl2", 3, &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)]),
        alg("solvable5", 5, &[(1, 3, 3, 1), (1, 4, 4, 1), (1, 5, 5, 1), (2, 3, 4, 1), (2, 4, 5, 1)]),
    ]
}

/// Up to three terms of degree at most two with small coefficients.
fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((0..n, 0..=n, -3i64..=3), 1..=3).prop_map(move |terms| {
        Polynomial::from_terms(
            terms.into_iter().map(|(a, b, c)| {
                let m = if b == n { Monomial::var(a) } else { Monomial::var(a).mul(&Monomial::var(b)) };
                (m, q(c))
            }),
            n,
        )
    })
}

fn triple() -> impl Strategy<Value = (Arc<LieAlgebra>, Polynomial, Polynomial, Polynomial)> {
    (0..algebras().len()).prop_flat_map(|k| {
        let g = algebras()[k].clone();
        let n = g.dim();
        (Just(g), arb_poly(n), arb_poly(n), arb_poly(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative((g, a, b, c) in triple()) {
        let a = PbwElement::from_ordered(g.clone(), &a).unwrap();
        let b = PbwElement::from_ordered(g.clone(), &b).unwrap();
        let c = PbwElement::from_ordered(g, &c).unwrap();
        let left = pbw_multiply(&pbw_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = pbw_multiply(&a, &pbw_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn symmetrization_commutes_with_ad((g, p, _, _) in triple(), y in 0usize..3) {
        let n = g.dim();
        let images: Vec<Polynomial> =
            (0..n).map(|j| g.linear_form(&g.bracket(&unit_vector(n, y), &unit_vector(n, j)))).collect();
        let lhs = symmetrize(&p.apply_derivation(&images).unwrap(), &g).unwrap();
        let xy = PbwElement::generator(g.clone(), y);
        let rhs = commutator(&xy, &symmetrize(&p, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn symmetrized_casimir_elements_are_central() {
    let g = &algebras();
    let cases = [
        (&g[0], "x3"),
        (&g[1], "x4"),
        (&g[1], "x3^2 - 2*x2*x4"),
        (&g[2], "x3^2 + 2*x1*x5 - 2*x2*x4"),
        (&g[3], "x1^2 + 4*x2*x3"),
    ];
    for (alg, text) in cases {
        let s = symmetrize(&parse(text, alg.dim()).unwrap(), alg).unwrap();
        assert!(is_central(&s), "{text} in {}", alg.name());
    }
    let x1 = symmetrize(&parse("x1", 3).unwrap(), &g[0]).unwrap();
    assert!(!is_central(&x1));
}

#[test]
fn semi_invariants_keep_their_weight() {
    let g = &algebras()[4];
    let s = symmetrize(&parse("x4^2 - 2*x3*x5", 5).unwrap(), g).unwrap();
    assert_eq!(weight_in_enveloping(&s), Some(vec![q(2), q(0), q(0), q(0), q(0)]));
    let s = symmetrize(&parse("x5", 5).unwrap(), g).unwrap();
    assert_eq!(weight_in_enveloping(&s), Some(vec![q(1), q(0), q(0), q(0), q(0)]));
    let s = symmetrize(&parse("x3", 5).unwrap(), g).unwrap();
    assert_eq!(weight_in_enveloping(&s), None);
}

#[test]
fn abelian_products_are_commutative() {
    let g = Arc::new(LieAlgebra::abelian("ab3", 3));
    let a = PbwElement::from_ordered(g.clone(), &parse("x3*x1 + x2", 3).unwrap()).unwrap();
    let b = PbwElement::from_ordered(g.clone(), &parse("x2^2 - x1", 3).unwrap()).unwrap();
    let expected = parse("(x3*x1 + x2)*(x2^2 - x1)", 3).unwrap();
    assert_eq!(pbw_multiply(&b, &a).unwrap().to_polynomial(), expected);
    assert_eq!(symmetrize(&expected, &g).unwrap().to_polynomial(), expected);
}
