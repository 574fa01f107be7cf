use std::collections::BTreeMap;
use std::sync::Arc;

use exactpoly::{Monomial, Polynomial, Rational};
use liealg::LieAlgebra;
use num_traits::{One, Zero};

use crate::element::{PbwElement, Straightener};
use crate::PbwError;

pub const DEFAULT_DEGREE_CAP: u32 = 6;

/// The symmetrization `s(p)` with the default degree cap.
pub fn symmetrize(p: &Polynomial, g: &Arc<LieAlgebra>) -> Result<PbwElement, PbwError> {
    symmetrize_with_cap(p, g, DEFAULT_DEGREE_CAP)
}

/// `s(y_1 ... y_m) = (1/m!) sum over orderings of y_{p(1)} ... y_{p(m)}`,
/// summed over distinct orderings of the multiset with multinomial weights.
pub fn symmetrize_with_cap(p: &Polynomial, g: &Arc<LieAlgebra>, cap: u32) -> Result<PbwElement, PbwError> {
    if p.nvars() != g.dim() {
        return Err(PbwError::WrongVariableCount { found: p.nvars(), dim: g.dim() });
    }
    if let Some(d) = p.total_degree().filter(|&d| d > cap) {
        return Err(PbwError::DegreeCapExceeded { degree: d, cap });
    }
    let mut st = Straightener::new(g);
    let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut letters: Vec<usize> = m.pairs().iter().flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize)).collect();
        let weight = c * multinomial_inverse(m);
        loop {
            for (mm, d) in st.word(&letters) {
                *terms.entry(mm).or_insert_with(Rational::zero) += &weight * d;
            }
            if !next_permutation(&mut letters) {
                break;
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    let poly = Polynomial::from_terms(terms, g.dim());
    PbwElement::from_ordered(g.clone(), &poly)
}

/// `prod(a_i!) / m!` for the monomial `prod x_i^{a_i}` of degree `m`.
fn multinomial_inverse(m: &Monomial) -> Rational {
    let fact = |k: u32| (1..=k).fold(Rational::one(), |acc, i| acc * Rational::from_integer(i.into()));
    m.pairs().iter().fold(Rational::one(), |acc, &(_, e)| acc * fact(e)) / fact(m.degree())
}

/// Advances to the next distinct ordering in lexicographic order.
fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("a larger letter exists");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}
