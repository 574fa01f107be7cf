use std::fmt;

use num_traits::Zero;

use exactpoly::{Polynomial, Rational};
use liealg::{unit_vector, LieAlgebra};

use crate::FrobError;

/// A character of `L`, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    values: Vec<Rational>,
}

impl WeightVector {
    /// Panics unless the functional vanishes on `[L, L]`.
    pub fn new(l: &LieAlgebra, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), l.dim(), "one value per basis element");
        let w = WeightVector { values };
        assert!(w.is_character(l), "weight does not vanish on [L, L]");
        w
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_character(&self, l: &LieAlgebra) -> bool {
        l.derived_algebra()
            .basis()
            .iter()
            .all(|v| v.iter().zip(&self.values).fold(Rational::zero(), |acc, (a, b)| acc + a * b).is_zero())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Images `x_j -> [y, x_j]` describing `ad y` as a derivation of `S(L)`.
pub fn ad_images(l: &LieAlgebra, y: &[Rational]) -> Vec<Polynomial> {
    let n = l.dim();
    (0..n).map(|j| l.linear_form(&l.bracket(y, &unit_vector(n, j)))).collect()
}

/// `lambda` with `ad y(v) = lambda(y) v` for every basis element `y`.
pub fn weight_of(l: &LieAlgebra, v: &Polynomial) -> Result<WeightVector, FrobError> {
    if v.is_zero() {
        return Err(FrobError::ZeroPolynomial);
    }
    let n = l.dim();
    let mut values = Vec::with_capacity(n);
    for y in 0..n {
        let image = v.apply_derivation(&ad_images(l, &unit_vector(n, y)))?;
        if image.is_zero() {
            values.push(Rational::zero());
            continue;
        }
        // ad y preserves degree, so a multiple of v has a constant quotient.
        match image.divide_exact(v)? {
            Some(q) if q.is_constant() => values.push(q.constant_term()),
            _ => return Err(FrobError::NotSemiInvariant { basis: y + 1 }),
        }
    }
    Ok(WeightVector::new(l, values))
}

/// `x -> tr(ad x)` on the basis.
pub fn trace_weight(l: &LieAlgebra) -> WeightVector {
    let n = l.dim();
    let values = (0..n).map(|i| (0..n).fold(Rational::zero(), |acc, j| acc + l.structure_constant(i, j, j))).collect();
    WeightVector::new(l, values)
}

/// Whether `ad y(p) = 0` for every basis element `y` of `g`.
pub fn verify_invariant(g: &LieAlgebra, p: &Polynomial) -> Result<bool, FrobError> {
    if p.is_zero() {
        return Err(FrobError::ZeroPolynomial);
    }
    let n = g.dim();
    for y in 0..n {
        if !p.apply_derivation(&ad_images(g, &unit_vector(n, y)))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
