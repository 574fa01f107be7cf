use std::collections::HashMap;

use exactpoly::Polynomial;
use liealg::LieAlgebra;

use crate::FrobError;

/// Pfaffian of a skew-symmetric matrix by expansion along the first row,
/// memoized on the set of remaining indices. `Pf([[0, a], [-a, 0]]) = a`.
pub fn pfaffian(m: &[Vec<Polynomial>]) -> Result<Polynomial, FrobError> {
    let n = m.len();
    if !n.is_multiple_of(2) {
        return Err(FrobError::OddDimension(n));
    }
    if n > 64 {
        return Err(FrobError::TooLarge(n));
    }
    let nvars = m.first().and_then(|r| r.first()).map_or(0, Polynomial::nvars);
    for i in 0..n {
        if m[i].len() != n {
            return Err(FrobError::NotSkew { i: i + 1, j: m[i].len() + 1 });
        }
        for j in i..n {
            if m[i][j] != -&m[j][i] {
                return Err(FrobError::NotSkew { i: i + 1, j: j + 1 });
            }
        }
    }
    if n == 0 {
        return Ok(Polynomial::one(nvars));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(expand(m, full, nvars, &mut memo))
}

fn expand(m: &[Vec<Polynomial>], set: u64, nvars: usize, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    if set == 0 {
        return Polynomial::one(nvars);
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << first);
    let mut out = Polynomial::zero(nvars);
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let a = &m[first][j];
        if !a.is_zero() {
            let sub = expand(m, rest & !(1u64 << j), nvars, memo);
            if !sub.is_zero() {
                let term = a * &sub;
                out = if sign_positive { &out + &term } else { &out - &term };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(set, out.clone());
    out
}

/// `Pf` of the bracket matrix of `l`; odd dimension is an error.
pub fn pfaffian_of(l: &LieAlgebra) -> Result<Polynomial, FrobError> {
    pfaffian(&l.bracket_matrix())
}

/// `det([x_i, x_j])`: `Pf^2` in even dimension, zero in odd dimension.
pub fn delta(l: &LieAlgebra) -> Polynomial {
    if l.dim() % 2 == 1 {
        return Polynomial::zero(l.dim());
    }
    let pf = pfaffian_of(l).expect("bracket matrices are skew");
    &pf * &pf
}

pub fn is_frobenius(l: &LieAlgebra) -> bool {
    l.dim().is_multiple_of(2) && !pfaffian_of(l).expect("bracket matrices are skew").is_zero()
}
