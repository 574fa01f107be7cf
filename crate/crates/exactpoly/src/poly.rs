use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::{PolyError, Rational};

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// variable context `x1..x{nvars}` (0-based internally).
///
/// Terms are kept in a map ordered by graded-lex order, so the last entry is
/// the leading term. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(c: i64, nvars: usize) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)), nvars)
    }

    /// The variable `x{v+1}`.
    ///
    /// Panics if `v >= nvars`.
    pub fn var(v: usize, nvars: usize) -> Self {
        assert!(v < nvars, "variable index {v} outside context of {nvars} variables");
        Self::monomial(Monomial::var(v), Rational::one(), nvars)
    }

    pub fn monomial(m: Monomial, c: Rational, nvars: usize) -> Self {
        debug_assert!(m.max_var().is_none_or(|v| v < nvars));
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            debug_assert!(m.max_var().is_none_or(|v| v < nvars));
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&Monomial::one()).is_one()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables that occur with a positive exponent.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.pairs().iter().map(|&(v, _)| v)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ContextMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ctx(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division: returns `Ok(Some(q))` with `self = q * divisor`, or
    /// `Ok(None)` when the division leaves a remainder.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.check_ctx(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            // The leading monomial of a multiple of `divisor` is always a
            // multiple of `lm`, so a non-divisible leading term is final.
            let Some(qm) = lm.quotient_of(m) else {
                return Ok(None);
            };
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn derivative(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            if e == 0 {
                continue;
            }
            let m2 = rest.mul(&Monomial::var_pow(v, e - 1));
            out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Applies the derivation `D` of the symmetric algebra determined by
    /// `D(x_i) = images[i]` (Leibniz rule extended from the generators).
    pub fn apply_derivation(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::ContextMismatch { left: self.nvars, right: images.len() });
        }
        for img in images {
            self.check_ctx(img)?;
        }
        let mut out = Polynomial::zero(self.nvars);
        for v in self.variables() {
            if images[v].is_zero() {
                continue;
            }
            let d = self.derivative(v);
            for (ma, ca) in &d.terms {
                for (mb, cb) in &images[v].terms {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Ring substitution `x_i -> images[i]`; the result lives in the
    /// context of the images.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::ContextMismatch { left: self.nvars, right: images.len() });
        }
        let target = images.first().map_or(self.nvars, Polynomial::nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(PolyError::ContextMismatch { left: target, right: self.nvars });
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone(), target);
            for &(v, e) in m.pairs() {
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap() * &images[v];
                    powers[v].push(next);
                }
                term = &term * &powers[v][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitutes the constant `value` for variable `v`.
    pub fn substitute(&self, v: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            let mut coeff = c.clone();
            if e > 0 {
                coeff *= num_traits::pow(value.clone(), e as usize);
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                t *= num_traits::pow(point[v].clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to variable `v`: `self = sum_k c_k * x_v^k`.
    pub fn coefficients_in(&self, v: usize) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            out.entry(e).or_insert_with(|| Polynomial::zero(self.nvars)).add_term(rest, c.clone());
        }
        out
    }

    /// Leading coefficient with respect to variable `v`.
    pub fn lc_in(&self, v: usize) -> Polynomial {
        let d = self.degree_in(v);
        self.coefficients_in(v).remove(&d).unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Moves the polynomial into a larger or smaller context by renaming
    /// variables with `map`; every occurring variable must map below `nvars`.
    pub fn reindex<F: Fn(usize) -> usize>(&self, map: F, nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let m2 = m.map_vars(&map);
            assert!(m2.max_var().is_none_or(|v| v < nvars), "reindex outside target context");
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Same polynomial in a context with `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Polynomial {
        self.reindex(|v| v, nvars)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators after clearing denominators.
    pub fn integer_content(&self) -> BigInt {
        let l = self.denominator_lcm();
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&l / c.denom()))))
    }

    /// Splits `self = unit * prim` where `prim` has integer coefficients with
    /// content 1 and a positive graded-lex leading coefficient.
    pub fn unit_normal(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let l = self.denominator_lcm();
        let g = self.integer_content();
        let mut unit = Rational::new(g, l);
        if self.leading_coefficient().is_negative() {
            unit = -unit;
        }
        let inv = unit.recip();
        (unit, self.scale(&inv))
    }

    /// Canonical representative up to a rational scalar.
    pub fn normalized(&self) -> Polynomial {
        self.unit_normal().1
    }

    /// `true` if `other = c * self` for some nonzero rational `c`.
    pub fn is_associate(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() || self.nvars != other.nvars {
            return false;
        }
        self.normalized() == other.normalized()
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial contexts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial contexts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial contexts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x5", 5) * &p("x5", 5), p("x5^2", 5));
        assert_eq!(&p("x4^2 - 2*x3*x5", 5) * &p("x5^2", 5), p("x4^2*x5^2 - 2*x3*x5^3", 5));
        let q = p("3*x1*x2 - 1/2*x3 + 7", 3);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = p("x1", 2);
        let b = p("x1", 3);
        assert!(matches!(a.try_add(&b), Err(PolyError::ContextMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let a = p("x5^2*(x4^2 - 2*x3*x5)", 5);
        let q = a.divide_exact(&p("x5", 5)).unwrap().unwrap();
        assert_eq!(q, p("x5*(x4^2-2*x3*x5)", 5));
        assert_eq!(&q * &p("x5", 5), a);
        assert!(p("x1 + x2", 2).divide_exact(&p("x1", 2)).unwrap().is_none());
        let z = Polynomial::zero(3).divide_exact(&p("x1 - x3^2", 3)).unwrap().unwrap();
        assert!(z.is_zero());
        assert!(matches!(p("x1", 2).divide_exact(&Polynomial::zero(2)), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn derivation_examples() {
        // ad x1 on g3: x2 -> x3
        let n = 3;
        let images = vec![Polynomial::zero(n), p("x3", n), Polynomial::zero(n)];
        assert_eq!(p("x2*x3", n).apply_derivation(&images).unwrap(), p("x3^2", n));
        assert!(p("17/3", n).apply_derivation(&images).unwrap().is_zero());
        // ad x1 on g4: x2 -> x3, x3 -> x4
        let n = 4;
        let images = vec![Polynomial::zero(n), p("x3", n), p("x4", n), Polynomial::zero(n)];
        assert!(p("x3^2 - 2*x2*x4", n).apply_derivation(&images).unwrap().is_zero());
        assert!(p("x1", n).apply_derivation(&images[..3]).is_err());
    }

    #[test]
    fn unit_normal_form() {
        let q = p("-6*x1^2 + 3/2*x2", 2);
        let (u, prim) = q.unit_normal();
        assert_eq!(prim, p("4*x1^2 - x2", 2));
        assert_eq!(prim.scale(&u), q);
        assert!(q.is_associate(&p("x2 - 4*x1^2", 2)));
    }

    #[test]
    fn compose_substitutes_variables() {
        let f = p("x1^2 - x2", 2);
        let images = vec![p("x1 + x2", 2), p("2*x1", 2)];
        assert_eq!(f.compose(&images).unwrap(), p("x1^2 + 2*x1*x2 + x2^2 - 2*x1", 2));
    }
}
