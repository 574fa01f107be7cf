use std::collections::BTreeMap;

use exactpoly::{parse, Polynomial, Rational};
use frobsc::{
    delta, is_frobenius, pfaffian_of, semicenter, trace_weight, verify_invariant, weight_of, FrobError,
    SemicenterResult,
};
use liealg::{rng_from_seed, semidirect, LieAlgebra, Torus, Vector};

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

fn torus(diags: &[&[i64]]) -> Torus {
    Torus::new(diags.iter().map(|d| d.iter().map(|&x| q(x)).collect()).collect())
}

fn p(text: &str, nvars: usize) -> Polynomial {
    parse(text, nvars).unwrap()
}

fn generator_set(r: &SemicenterResult) -> Vec<Polynomial> {
    let mut out: Vec<_> = r.generators.iter().map(|g| g.poly_in_g.normalized()).collect();
    out.sort_by_key(|p| p.to_string());
    out
}

fn expected_set(exprs: &[&str], nvars: usize) -> Vec<Polynomial> {
    let mut out: Vec<_> = exprs.iter().map(|e| p(e, nvars).normalized()).collect();
    out.sort_by_key(|p| p.to_string());
    out
}

fn run(g: &LieAlgebra, t: &Torus) -> SemicenterResult {
    semicenter(g, t, &mut rng_from_seed(0)).unwrap()
}

/// Delta of the extension, rewritten in the variables of `g`.
fn delta_in_g(r: &SemicenterResult, n: usize) -> Polynomial {
    assert!(r.delta.variables().iter().all(|&v| v >= r.torus_dim));
    r.delta.reindex(|v| v - r.torus_dim, n)
}

fn solvable5() -> LieAlgebra {
    alg("solvable5", 5, &[(1, 3, 3, 1), (1, 4, 4, 1), (1, 5, 5, 1), (2, 3, 4, 1), (2, 4, 5, 1)])
}

// sl2 = <h, x, y> acting on the two-dimensional module <e0, e1>.
fn sl2_on_plane() -> LieAlgebra {
    alg(
        "sl2+V1",
        5,
        &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1), (1, 4, 4, 1), (1, 5, 5, -1), (2, 5, 4, 1), (3, 4, 5, 1)],
    )
}

// sl2 acting on the binary quadratics <e0, e1, e2> plus the plane <e3, e4>.
fn sl2_on_quadratics_and_plane() -> LieAlgebra {
    alg(
        "sl2+V2+V1",
        8,
        &[
            (1, 2, 2, 2),
            (1, 3, 3, -2),
            (2, 3, 1, 1),
            (1, 4, 4, 2),
            (1, 6, 6, -2),
            (1, 7, 7, 1),
            (1, 8, 8, -1),
            (2, 5, 4, 2),
            (2, 6, 5, 1),
            (2, 8, 7, 1),
            (3, 4, 5, 1),
            (3, 5, 6, 2),
            (3, 7, 8, 1),
        ],
    )
}

// sl2 acting on a five-dimensional nilpotent radical.
fn sl2_on_nilradical() -> LieAlgebra {
    alg(
        "sl2+R",
        8,
        &[
            (1, 2, 2, 2),
            (1, 3, 3, -2),
            (2, 3, 1, 1),
            (6, 8, 4, 1),
            (7, 8, 5, 1),
            (1, 4, 4, 1),
            (1, 5, 5, -1),
            (1, 6, 6, 1),
            (1, 7, 7, -1),
            (2, 5, 4, 1),
            (2, 7, 6, 1),
            (3, 4, 5, 1),
            (3, 6, 7, 1),
        ],
    )
}

#[test]
fn solvable_example_generators_and_delta() {
    let g = solvable5();
    let r = run(&g, &torus(&[&[0, -1, 2, 1, 0]]));
    assert_eq!(generator_set(&r), expected_set(&["x5", "x4^2 - 2*x3*x5"], 5));
    assert_eq!(delta_in_g(&r, 5), p("x5^2*(x4^2 - 2*x3*x5)^2", 5));
    assert!(r.flags.all_pass(), "{:?}", r.flags);
    assert_eq!(r.index_g, 1);
    assert_eq!(r.degree_sum, 3);
    assert_eq!(r.c_value, 3);
}

#[test]
fn solvable_example_weights() {
    let l = semidirect(&torus(&[&[0, -1, 2, 1, 0]]), &solvable5()).unwrap();
    let w = weight_of(&l, &p("x6", 6)).unwrap();
    assert_eq!(w.values(), &[q(0), q(1), q(0), q(0), q(0), q(0)]);
    assert_eq!(trace_weight(&l).values(), &[q(2), q(3), q(0), q(0), q(0), q(0)]);
    assert_eq!(weight_of(&l, &p("x4", 6)), Err(FrobError::NotSemiInvariant { basis: 3 }));
    assert!(is_frobenius(&l));
    assert_eq!(delta(&l), p("x6^2*(x5^2 - 2*x4*x6)^2", 6));
}

#[test]
fn sl2_on_plane_example() {
    let g = sl2_on_plane();
    let r = run(&g, &torus(&[&[0, 0, 0, 1, 1]]));
    assert_eq!(delta_in_g(&r, 5), p("4*(x5^2*x2 + x4*x5*x1 - x4^2*x3)^2", 5));
    assert_eq!(generator_set(&r), expected_set(&["x5^2*x2 + x4*x5*x1 - x4^2*x3"], 5));
    assert!(r.flags.all_pass(), "{:?}", r.flags);
}

#[test]
fn sl2_on_quadratics_and_plane_example() {
    let g = sl2_on_quadratics_and_plane();
    let t = torus(&[&[0, 0, 0, 1, 1, 1, 0, 0], &[0, 0, 0, 0, 0, 0, 1, 1]]);
    let r = run(&g, &t);
    assert_eq!(delta_in_g(&r, 8), p("4*(x5^2 - 4*x4*x6)^2*(x4*x8^2 - x5*x7*x8 + x6*x7^2)^2", 8));
    assert_eq!(generator_set(&r), expected_set(&["x5^2 - 4*x4*x6", "x4*x8^2 - x5*x7*x8 + x6*x7^2"], 8));
    assert!(r.flags.all_pass(), "{:?}", r.flags);
    for gen in &r.generators {
        assert_eq!(verify_invariant(&g, &gen.poly_in_g), Ok(true));
    }
}

#[test]
fn sl2_on_nilradical_example() {
    let g = sl2_on_nilradical();
    let t = torus(&[&[0, 0, 0, 1, 1, 0, 0, 1], &[0, 0, 0, 1, 1, 1, 1, 0]]);
    let r = run(&g, &t);
    let expected_delta = "4*(x4*x7 - x5*x6)^2*(x5^2*x2 + x4*x5*x1 - x4^2*x3 - x4*x7*x8 + x5*x6*x8)^2";
    assert_eq!(delta_in_g(&r, 8), p(expected_delta, 8));
    assert_eq!(
        generator_set(&r),
        expected_set(&["x4*x7 - x5*x6", "x5^2*x2 + x4*x5*x1 - x4^2*x3 - x4*x7*x8 + x5*x6*x8"], 8)
    );
    assert!(r.flags.all_pass(), "{:?}", r.flags);
}

#[test]
fn filiform_four_with_catalog_torus() {
    let g = alg("g4", 4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
    let r = run(&g, &torus(&[&[0, 1, 1, 1], &[1, -2, -1, 0]]));
    assert_eq!(generator_set(&r), expected_set(&["x4", "x3^2 - 2*x2*x4"], 4));
    assert_eq!(r.flags.invariant_on_g, Some(true));
    assert!(r.flags.all_pass());
}

#[test]
fn rejects_bad_tori() {
    let g3 = alg("g3", 3, &[(1, 2, 3, 1)]);
    let mut rng = rng_from_seed(0);
    assert!(matches!(semicenter(&g3, &torus(&[&[1, 1, 1]]), &mut rng), Err(FrobError::Torus(_))));
    assert_eq!(semicenter(&g3, &Torus::trivial(), &mut rng), Err(FrobError::TorusDimension { torus_dim: 0, index: 1 }));
    // A zero generator makes the torus dependent.
    let g4 = alg("g4", 4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
    let flat = torus(&[&[0, 0, 0, 0], &[1, 1, 2, 3]]);
    assert!(matches!(semicenter(&g4, &flat, &mut rng), Err(FrobError::Torus(_))));
    // Right dimension, but both generators scale the center the same way.
    let same = torus(&[&[1, 1, 2, 3], &[2, 2, 4, 6]]);
    assert!(matches!(semicenter(&g4, &same, &mut rng), Err(FrobError::Torus(_))));
    let spanning = torus(&[&[1, 1, 2, 3], &[1, 0, 1, 2]]);
    assert_eq!(semicenter(&g4, &spanning, &mut rng).map(|_| ()), Ok(()));
}

#[test]
fn invariants_of_small_nilpotent_algebras() {
    let g3 = alg("g3", 3, &[(1, 2, 3, 1)]);
    assert_eq!(verify_invariant(&g3, &p("x1", 3)), Ok(false));
    assert_eq!(verify_invariant(&g3, &p("1", 3)), Ok(true));
    let g54 = alg("g5,4", 5, &[(1, 2, 3, 1), (1, 3, 4, 1), (2, 3, 5, 1)]);
    assert_eq!(verify_invariant(&g54, &p("x3^2 + 2*x1*x5 - 2*x2*x4", 5)), Ok(true));
    assert!(weight_of(&g3, &p("x3", 3)).unwrap().is_zero());
}

#[test]
fn two_dimensional_nonabelian_is_frobenius() {
    let l = alg("aff1", 2, &[(1, 2, 2, 1)]);
    assert!(is_frobenius(&l));
    assert_eq!(pfaffian_of(&l).unwrap(), p("x2", 2));
    assert_eq!(trace_weight(&l).values(), &[q(1), q(0)]);
}
