//! Factorization by Kronecker substitution: a slow, independent route for
//! polynomials in at most three variables.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::factor::finish;
use crate::gcd::squarefree_decomposition;
use crate::monomial::Monomial;
use crate::univariate::UniPoly;
use crate::zassenhaus::{self, primitive, zmul, ZPoly};
use crate::{PolyError, Polynomial, Rational};

pub const KRONECKER_MAX_VARS: usize = 3;

/// Factors `p` by mapping `x_{j_k} -> t^(B^k)` for the occurring variables,
/// factoring the univariate image, and recombining by trial division.
pub fn factor_kronecker(p: &Polynomial) -> Result<crate::Factorization, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars: Vec<usize> = p.variables().into_iter().collect();
    if vars.len() > KRONECKER_MAX_VARS {
        return Err(PolyError::TooManyVariables(vars.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(p)? {
        for g in split(&part, &vars, &mut rng) {
            factors.push((g, m));
        }
    }
    finish(p, factors)
}

fn split(f: &Polynomial, vars: &[usize], rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let base = vars.iter().map(|&v| f.degree_in(v)).max().unwrap_or(0) as u64 + 1;
    let weights: Vec<u64> = (0..vars.len()).map(|k| base.pow(k as u32)).collect();

    let image_degree = f
        .terms()
        .map(|(m, _)| vars.iter().zip(&weights).map(|(&v, w)| m.exponent(v) as u64 * w).sum::<u64>())
        .max()
        .unwrap_or(0) as usize;
    let mut image = vec![Rational::zero(); image_degree + 1];
    for (m, c) in f.terms() {
        let e: u64 = vars.iter().zip(&weights).map(|(&v, w)| m.exponent(v) as u64 * w).sum();
        image[e as usize] += c;
    }
    let image = UniPoly::from_coeffs(image);

    // The image need not be squarefree; collect irreducibles with repetition.
    let mut pieces: Vec<ZPoly> = Vec::new();
    let mut rest = image.clone();
    while rest.degree().unwrap_or(0) > 0 {
        let d = rest.derivative();
        let g = rest.gcd(&d);
        let sq = rest.div_rem(&g).0;
        for z in zassenhaus::factor_squarefree(&sq.primitive_integer(), rng) {
            pieces.push(z);
        }
        rest = g;
        // Each round peels one copy of every remaining irreducible.
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
    }

    let unmap = |z: &[BigInt]| -> Polynomial {
        let terms = z.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
            let mut e = e as u64;
            let mut pairs = Vec::new();
            for &v in vars {
                pairs.push((v, (e % base) as u32));
                e /= base;
            }
            (Monomial::from_pairs(pairs), Rational::from_integer(c.clone()))
        });
        Polynomial::from_terms(terms, f.nvars())
    };

    let mut target = f.normalized();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pieces.len() && !target.is_constant() {
        let mut hit = None;
        for subset in subsets(pieces.len(), size) {
            let prod = subset.iter().fold(vec![BigInt::from(1)], |acc, &i| zmul(&acc, &pieces[i]));
            let cand = unmap(&primitive(&prod));
            if cand.is_constant() {
                continue;
            }
            if let Some(q) = target.divide_exact(&cand).expect("nonzero") {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand.normalized());
                target = q.normalized();
                for &i in subset.iter().rev() {
                    pieces.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if !target.is_constant() {
        found.push(target);
    }
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
