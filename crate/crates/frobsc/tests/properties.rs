use std::collections::BTreeMap;

use exactpoly::{factor, Polynomial, Rational};
use frobsc::{pfaffian, pfaffian_of, trace_weight, weight_of};
use liealg::{semidirect, LieAlgebra, QMatrix, Torus, Vector};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn alg(name: &str, dim: usize, brackets: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for &(i, j, k, c) in brackets {
        table.entry((i - 1, j - 1)).or_insert_with(|| vec![q(0); dim])[k - 1] += q(c);
    }
    LieAlgebra::from_brackets(name, dim, table.into_iter().map(|((i, j), v)| (i, j, v))).unwrap()
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    let mut acc = Polynomial::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &det(&minor, nvars);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

const NVARS: usize = 4;

fn linear(coeffs: &[i64]) -> Polynomial {
    coeffs
        .iter()
        .enumerate()
        .fold(Polynomial::zero(NVARS), |acc, (v, &c)| &acc + &Polynomial::var(v, NVARS).scale(&q(c)))
}

fn skew_matrix() -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
    prop_oneof![Just(2usize), Just(4), Just(6)].prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, NVARS), pairs).prop_map(move |entries| {
            let mut m = vec![vec![Polynomial::zero(NVARS); n]; n];
            let mut it = entries.iter();
            for i in 0..n {
                for j in i + 1..n {
                    let e = linear(it.next().unwrap());
                    m[j][i] = -&e;
                    m[i][j] = e;
                }
            }
            m
        })
    })
}

fn change_basis(l: &LieAlgebra, p: &QMatrix) -> LieAlgebra {
    let n = l.dim();
    let inv = p.inverse().expect("invertible");
    let col = |a: usize| -> Vector { (0..n).map(|i| p.get(i, a).clone()).collect() };
    let mut out = LieAlgebra::abelian(&format!("{}'", l.name()), n);
    for a in 0..n {
        for b in a + 1..n {
            let coords = inv.mul_vec(&l.bracket(&col(a), &col(b)));
            if coords.iter().any(|c| *c != q(0)) {
                out.set_bracket(a, b, coords).unwrap();
            }
        }
    }
    out
}

fn frobenius_bases() -> Vec<LieAlgebra> {
    let solvable5 = alg("solvable5", 5, &[(1, 3, 3, 1), (1, 4, 4, 1), (1, 5, 5, 1), (2, 3, 4, 1), (2, 4, 5, 1)]);
    let t = Torus::new(vec![[0, -1, 2, 1, 0].iter().map(|&x| q(x)).collect()]);
    vec![
        alg("aff1", 2, &[(1, 2, 2, 1)]),
        alg("aff1+aff1", 4, &[(1, 2, 2, 1), (3, 4, 4, 1)]),
        alg("borel-like", 4, &[(1, 2, 2, 1), (1, 3, 3, 2), (2, 3, 4, 1), (1, 4, 4, 3)]),
        semidirect(&t, &solvable5).unwrap(),
    ]
}

fn changed_frobenius() -> impl Strategy<Value = LieAlgebra> {
    (0..frobenius_bases().len(), proptest::collection::vec(-2i64..=2, 36)).prop_filter_map(
        "singular",
        |(k, entries)| {
            let l = frobenius_bases()[k].clone();
            let n = l.dim();
            let rows = (0..n).map(|i| entries[i * n..(i + 1) * n].iter().map(|&x| q(x)).collect()).collect();
            let p = QMatrix::from_rows(rows, n);
            p.inverse()?;
            Some(change_basis(&l, &p))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pfaffian_squares_to_determinant(m in skew_matrix()) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, det(&m, NVARS));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn pfaffian_factors_are_semi_invariant(l in changed_frobenius()) {
        prop_assert!(l.validate().is_ok());
        let pf = pfaffian_of(&l).unwrap();
        prop_assert!(!pf.is_zero());
        prop_assert!(pf.is_homogeneous());
        prop_assert_eq!(pf.total_degree(), Some((l.dim() / 2) as u32));
        prop_assert_eq!(weight_of(&l, &pf).unwrap(), trace_weight(&l));
        let f = factor(&pf).unwrap();
        let mut total = Rational::from_integer(0.into());
        for (v, mult) in &f.factors {
            prop_assert!(v.is_homogeneous());
            let w = weight_of(&l, v).unwrap();
            prop_assert!(w.is_character(&l));
            total += w.values().iter().cloned().sum::<Rational>() * Rational::from_integer((*mult).into());
        }
        let trace_sum: Rational = trace_weight(&l).values().iter().cloned().sum();
        prop_assert_eq!(total, trace_sum);
    }
}
