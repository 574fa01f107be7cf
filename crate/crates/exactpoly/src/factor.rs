//! Irreducible factorization over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gcd::{content_in, squarefree_decomposition};
use crate::monomial::Monomial;
use crate::univariate::{PartialFractions, UniPoly};
use crate::zassenhaus;
use crate::{PolyError, Polynomial, Rational};

/// Evaluation points are tried from `[-9, 9]` first, then from a wider box.
const SMALL_RANGE: i64 = 9;
const WIDE_RANGE: i64 = 99;
const SMALL_ATTEMPTS: usize = 12;
const TOTAL_ATTEMPTS: usize = 40;

/// `unit * prod f_i^{m_i}`, each `f_i` normalized and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, nvars: usize) -> Polynomial {
        let mut out = Polynomial::constant(self.unit.clone(), nvars);
        for (f, m) in &self.factors {
            out = &out * &f.pow(*m);
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, m) in &self.factors {
            if *m == 1 {
                write!(f, " * ({p})")?;
            } else {
                write!(f, " * ({p})^{m}")?;
            }
        }
        Ok(())
    }
}

/// Factors `p` with the default seed 0.
pub fn factor(p: &Polynomial) -> Result<Factorization, PolyError> {
    factor_with_seed(p, 0)
}

/// Factors `p`; the output is a deterministic function of `p` and `seed`.
pub fn factor_with_seed(p: &Polynomial, seed: u64) -> Result<Factorization, PolyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    factor_with_rng(p, &mut rng)
}

pub fn factor_with_rng<R: Rng>(p: &Polynomial, rng: &mut R) -> Result<Factorization, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(p)? {
        for g in factor_squarefree(&part, rng)? {
            factors.push((g, m));
        }
    }
    finish(p, factors)
}

/// Sorts the factors, fixes the unit, and checks the reconstruction.
pub(crate) fn finish(p: &Polynomial, mut factors: Vec<(Polynomial, u32)>) -> Result<Factorization, PolyError> {
    factors.sort_by_cached_key(|(f, m)| (f.total_degree(), f.to_string(), *m));
    let mut prod = Polynomial::one(p.nvars());
    for (f, m) in &factors {
        prod = &prod * &f.pow(*m);
    }
    let unit = p.leading_coefficient() / prod.leading_coefficient();
    let result = Factorization { unit, factors };
    if prod.scale(&result.unit) != *p {
        return Err(PolyError::InternalFactorFailure(format!("reconstruction mismatch for {p}")));
    }
    Ok(result)
}

/// Irreducible factors of a normalized squarefree polynomial.
pub(crate) fn factor_squarefree<R: Rng>(f: &Polynomial, rng: &mut R) -> Result<Vec<Polynomial>, PolyError> {
    let mut out = Vec::new();
    let mut f = f.normalized();
    if f.is_constant() {
        return Ok(out);
    }

    // Pure variable factors.
    for v in f.variables() {
        let min = f.terms().map(|(m, _)| m.exponent(v)).min().unwrap_or(0);
        if min > 0 {
            let x = Polynomial::var(v, f.nvars());
            for _ in 0..min {
                out.push(x.clone());
                f = f.divide_exact(&x)?.expect("variable divides every term");
            }
        }
    }
    if f.is_constant() {
        return Ok(out);
    }

    let vars = f.variables();
    if vars.len() == 1 {
        let v = *vars.iter().next().unwrap();
        out.extend(factor_univariate(&f, v, rng));
        return Ok(out);
    }

    if f.is_homogeneous() {
        let last = *vars.iter().next_back().unwrap();
        let affine = f.substitute(last, &Rational::one());
        for g in factor_squarefree(&affine, rng)? {
            out.push(homogenize(&g, last));
        }
        return Ok(out);
    }

    let v = *vars.iter().min_by_key(|&&v| (f.degree_in(v), v)).unwrap();
    let c = content_in(&f, v);
    if !c.is_constant() {
        out.extend(factor_squarefree(&c, rng)?);
        let rest = f.divide_exact(&c)?.expect("content divides");
        out.extend(factor_squarefree(&rest, rng)?);
        return Ok(out);
    }
    if f.degree_in(v) == 1 {
        out.push(f);
        return Ok(out);
    }

    let others: Vec<usize> = vars.iter().copied().filter(|&y| y != v).collect();
    for attempt in 0..TOTAL_ATTEMPTS {
        let range = if attempt < SMALL_ATTEMPTS { SMALL_RANGE } else { WIDE_RANGE };
        // Early attempts favour zeros, which keep the shifted problem sparse.
        let sparse = attempt < SMALL_ATTEMPTS / 2;
        let point: Vec<i64> = others
            .iter()
            .map(|_| if sparse && rng.gen_bool(0.5) { 0 } else { rng.gen_range(-range..=range) })
            .collect();
        if let Some(gs) = lift_at_point(&f, v, &others, &point, rng) {
            out.extend(gs);
            return Ok(out);
        }
    }
    Err(PolyError::InternalFactorFailure(format!("no usable evaluation point for {f}")))
}

fn homogenize(g: &Polynomial, v: usize) -> Polynomial {
    let d = g.total_degree().unwrap_or(0);
    let terms = g.terms().map(|(m, c)| (m.mul(&Monomial::var_pow(v, d - m.degree())), c.clone())).collect::<Vec<_>>();
    Polynomial::from_terms(terms, g.nvars()).normalized()
}

fn univariate_of(f: &Polynomial, v: usize) -> UniPoly {
    let n = f.degree_in(v) as usize;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (m, c) in f.terms() {
        let (e, _) = m.split_var(v);
        coeffs[e as usize] += c;
    }
    UniPoly::from_coeffs(coeffs)
}

fn from_univariate(u: &UniPoly, v: usize, nvars: usize) -> Polynomial {
    Polynomial::from_terms(
        u.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::var_pow(v, k as u32), c.clone())),
        nvars,
    )
}

fn factor_univariate<R: Rng>(f: &Polynomial, v: usize, rng: &mut R) -> Vec<Polynomial> {
    let z = univariate_of(f, v).primitive_integer();
    zassenhaus::factor_squarefree(&z, rng)
        .into_iter()
        .map(|g| from_univariate(&UniPoly::from_ints(&g), v, f.nvars()).normalized())
        .collect()
}

/// One evaluation-and-lift attempt. `f` is squarefree, primitive in `x_v`,
/// and of degree at least 2 in `x_v`. Returns `None` when the point is
/// unlucky and another one should be tried.
fn lift_at_point<R: Rng>(
    f: &Polynomial,
    v: usize,
    others: &[usize],
    point: &[i64],
    rng: &mut R,
) -> Option<Vec<Polynomial>> {
    let nvars = f.nvars();
    let n = f.degree_in(v);
    let lc = f.lc_in(v);

    let mut image = f.clone();
    let mut lc_image = lc.clone();
    for (&y, &a) in others.iter().zip(point) {
        let a = Rational::from_integer(BigInt::from(a));
        image = image.substitute(y, &a);
        lc_image = lc_image.substitute(y, &a);
    }
    let lval = lc_image.constant_term();
    if lval.is_zero() {
        return None;
    }
    let u = univariate_of(&image, v);
    debug_assert_eq!(u.degree(), Some(n as usize));
    if !u.is_squarefree() {
        return None;
    }

    let ufacs = zassenhaus::factor_squarefree(&u.primitive_integer(), rng);
    let r = ufacs.len();
    if r == 1 {
        // Any proper factorization of f would survive evaluation.
        return Some(vec![f.clone()]);
    }

    // Every lifted factor gets the leading coefficient lc(f), which is
    // compensated by lifting lc(f)^(r-1) * f.
    let w: Vec<UniPoly> = ufacs
        .iter()
        .map(|g| {
            let g = UniPoly::from_ints(g);
            let s = &lval / g.lc();
            g.scale(&s)
        })
        .collect();
    let pf = PartialFractions::new(&w)?;

    let shift = |sign: i64| -> Vec<Polynomial> {
        let mut images: Vec<Polynomial> = (0..nvars).map(|i| Polynomial::var(i, nvars)).collect();
        for (&y, &a) in others.iter().zip(point) {
            images[y] = &images[y] + &Polynomial::from_int(sign * a, nvars);
        }
        images
    };
    let forward = shift(1);
    let target = (&lc.pow(r as u32 - 1) * f).compose(&forward).ok()?;
    let lc_shifted = lc.compose(&forward).ok()?;
    let lc_tail = &lc_shifted - &Polynomial::constant(lval.clone(), nvars);

    let mut h: Vec<Polynomial> = w
        .iter()
        .map(|wi| {
            let d = wi.degree().unwrap() as u32;
            &from_univariate(wi, v, nvars) + &lc_tail.mul_monomial(&Monomial::var_pow(v, d), &Rational::one())
        })
        .collect();

    let z_degree = |m: &Monomial| m.degree() - m.exponent(v);
    let max_k = target.terms().map(|(m, _)| z_degree(m)).max().unwrap_or(0);
    for k in 1..=max_k {
        let prod = h.iter().fold(Polynomial::one(nvars), |acc, hi| &acc * hi);
        let err = &target - &prod;
        if err.is_zero() {
            break;
        }
        let mut layers: std::collections::BTreeMap<Monomial, Vec<Rational>> = Default::default();
        for (m, c) in err.terms() {
            let zd = z_degree(m);
            if zd < k {
                return None;
            }
            if zd > k {
                continue;
            }
            let (e, rest) = m.split_var(v);
            let slot = layers.entry(rest).or_insert_with(|| vec![Rational::zero(); n as usize]);
            *slot.get_mut(e as usize)? = c.clone();
        }
        for (mu, coeffs) in layers {
            let sigmas = pf.solve(&UniPoly::from_coeffs(coeffs));
            for (hi, s) in h.iter_mut().zip(&sigmas) {
                if !s.is_zero() {
                    let term = from_univariate(s, v, nvars).mul_monomial(&mu, &Rational::one());
                    *hi = &*hi + &term;
                }
            }
        }
    }
    let prod = h.iter().fold(Polynomial::one(nvars), |acc, hi| &acc * hi);
    if prod != target {
        return None;
    }

    let backward = shift(-1);
    let mut gs = Vec::with_capacity(r);
    for hi in &h {
        let g = hi.compose(&backward).ok()?;
        let c = content_in(&g, v);
        gs.push(g.divide_exact(&c).ok()??.normalized());
    }
    let check = gs.iter().fold(Polynomial::one(nvars), |acc, g| &acc * g);
    if !check.is_associate(f) {
        return None;
    }
    Some(gs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n).unwrap()
    }

    #[test]
    fn semi_invariant_example() {
        let f = factor(&p("x5^2*(x4^2 - 2*x3*x5)^2", 5)).unwrap();
        assert!(f.unit.is_one());
        assert_eq!(f.factors, vec![(p("x5", 5), 2), (p("2*x3*x5 - x4^2", 5), 2)]);
    }

    #[test]
    fn difference_of_squares_and_units() {
        let f = factor(&p("-3/2*x1^2 + 3/2*x2^2", 2)).unwrap();
        assert_eq!(f.unit, Rational::new((-3).into(), 2.into()));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(2), p("-3/2*x1^2 + 3/2*x2^2", 2));
        let sq = factor(&p("(x1 + x2)^2", 2)).unwrap();
        assert_eq!(sq.factors, vec![(p("x1 + x2", 2), 2)]);
    }

    #[test]
    fn irreducible_quadratic_form() {
        let f = factor(&p("x2^2 - 4*x1*x3", 3)).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn non_monic_multivariate() {
        let a = p("x1*x2^2 + x3 + 1", 3);
        let b = p("x2*x3 - x1^2 + 2", 3);
        let c = p("x1*x3 + x2", 3);
        let f = &(&a * &b) * &c;
        let got = factor(&f).unwrap();
        assert_eq!(got.factors.len(), 3);
        for g in [&a, &b, &c] {
            assert!(got.factors.iter().any(|(h, m)| *m == 1 && h.is_associate(g)), "{g}");
        }
    }

    #[test]
    fn homogeneous_products() {
        let a = p("x1^2 - x2*x3 + 2*x3^2", 4);
        let b = p("x4*x1 - x2^2", 4);
        let f = &(&a * &b) * &p("x3", 4);
        let got = factor(&f).unwrap();
        assert_eq!(got.factors.len(), 3);
        assert_eq!(got.expand(4), f);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(factor(&p("0", 1)), Err(PolyError::ZeroPolynomial)));
    }
}
