#![allow(dead_code)]

use exactpoly::Rational;
use liealg::{LieAlgebra, Torus, Vector};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qv(v: &[i64]) -> Vector {
    v.iter().map(|&x| q(x)).collect()
}

/// Algebra from 1-based `(i, j, k, c)` meaning `[x_i, x_j] += c x_k`.
pub fn alg(name: &str, dim: usize, brackets: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let mut table: std::collections::BTreeMap<(usize, usize), Vector> = Default::default();
    for &(i, j, k, c) in brackets {
        table.entry((i - 1, j - 1)).or_insert_with(|| qv(&vec![0; dim]))[k - 1] += q(c);
    }
    LieAlgebra::from_brackets(name, dim, table.into_iter().map(|((i, j), v)| (i, j, v))).unwrap()
}

pub fn torus(diags: &[&[i64]]) -> Torus {
    Torus::new(diags.iter().map(|d| qv(d)).collect())
}

pub fn g3() -> LieAlgebra {
    alg("g3", 3, &[(1, 2, 3, 1)])
}

pub fn g4() -> LieAlgebra {
    alg("g4", 4, &[(1, 2, 3, 1), (1, 3, 4, 1)])
}

pub fn g5_4() -> LieAlgebra {
    alg("g5,4", 5, &[(1, 2, 3, 1), (1, 3, 4, 1), (2, 3, 5, 1)])
}

pub fn g6_16() -> LieAlgebra {
    alg("g6,16", 6, &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1)])
}

pub fn g7_3_12() -> LieAlgebra {
    alg("g7,3.12", 7, &[(1, 2, 5, 1), (1, 3, 6, 1), (2, 4, 6, 1), (3, 4, 7, 1)])
}

pub fn g7_3_13() -> LieAlgebra {
    alg("g7,3.13", 7, &[(1, 2, 5, 1), (1, 5, 6, 1), (2, 5, 7, 1), (3, 4, 7, 1)])
}

/// Five-dimensional solvable algebra with index 1 used as a worked example.
pub fn solvable5() -> LieAlgebra {
    alg("solvable5", 5, &[(1, 3, 3, 1), (1, 4, 4, 1), (1, 5, 5, 1), (2, 3, 4, 1), (2, 4, 5, 1)])
}

pub fn sl2() -> LieAlgebra {
    // h, x, y
    alg("sl2", 3, &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)])
}

/// Direct sum with the second summand's basis placed after the first.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let (m, n) = (a.dim(), b.dim());
    let mut out = LieAlgebra::abelian(&format!("{}+{}", a.name(), b.name()), m + n);
    for i in 0..m {
        for j in i + 1..m {
            let mut v = a.bracket_basis(i, j).clone();
            v.extend(qv(&vec![0; n]));
            if v.iter().any(|c| *c != q(0)) {
                out.set_bracket(i, j, v).unwrap();
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = qv(&vec![0; m]);
            v.extend(b.bracket_basis(i, j).iter().cloned());
            if v.iter().any(|c| *c != q(0)) {
                out.set_bracket(m + i, m + j, v).unwrap();
            }
        }
    }
    out
}
