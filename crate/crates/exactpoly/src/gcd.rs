//! Multivariate gcd by primitive remainder sequences, contents, and
//! squarefree decomposition.

use crate::monomial::Monomial;
use crate::{PolyError, Polynomial};

fn exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.divide_exact(b).expect("nonzero divisor").expect("division known to be exact")
}

/// Normalized gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::ContextMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let a = a.normalized();
    let b = b.normalized();
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.nvars());
    }
    if a == b {
        return a;
    }
    let (small, big) = if a.num_terms() <= b.num_terms() { (&a, &b) } else { (&b, &a) };
    if big.divide_exact(small).expect("nonzero").is_some() {
        return small.clone();
    }

    let va = a.variables();
    let vb = b.variables();
    // A common factor only involves variables present in both.
    let v = match va.intersection(&vb).min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v)) {
        Some(&v) => v,
        None => return Polynomial::one(a.nvars()),
    };

    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd_unchecked(&ca, &cb);
    let mut p = exact(&a, &ca);
    let mut q = exact(&b, &cb);
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.degree_in(v) == 0 {
            break Polynomial::one(a.nvars());
        }
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            break q;
        }
        p = q;
        q = primitive_in(&r, v);
    };
    (&c * &primitive_in(&g, v)).normalized()
}

/// `lc_v(b)^k * a` reduced modulo `b` with respect to `x_v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let d = r.degree_in(v) - db;
        let lr = r.lc_in(v);
        let shift = Monomial::var_pow(v, d);
        let t = (&lr * b).mul_monomial(&shift, &crate::Rational::from_integer(1.into()));
        r = &(&lb * &r) - &t;
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `x_v`,
/// normalized. For `p` free of `x_v` this is `p` itself.
pub fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p.coefficients_in(v).into_values().collect();
    coeffs.sort_by_key(Polynomial::num_terms);
    let mut g = Polynomial::zero(p.nvars());
    for c in &coeffs {
        g = gcd_unchecked(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// `p / content_in(p, v)`, normalized.
pub fn primitive_in(p: &Polynomial, v: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    exact(p, &content_in(p, v)).normalized()
}

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime
/// normalized squarefree parts `(s_i, i)` with `p = unit * prod s_i^i`.
/// Parts with equal multiplicity may be listed separately.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, u32)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(squarefree_rec(&p.normalized()))
}

fn squarefree_rec(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    if p.is_constant() {
        return Vec::new();
    }
    let v = p.variables().into_iter().min_by_key(|&v| (p.degree_in(v), v)).expect("nonconstant");
    let c = content_in(p, v);
    let mut out = squarefree_rec(&c);
    let f = exact(p, &c);

    // Yun's algorithm in x_v; every factor of f involves x_v.
    let df = f.derivative(v);
    let a0 = gcd_unchecked(&f, &df);
    let mut b = exact(&f, &a0);
    let mut cc = exact(&df, &a0);
    let mut d = &cc - &b.derivative(v);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd_unchecked(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = exact(&b, &a);
        cc = exact(&d, &a);
        d = &cc - &b.derivative(v);
        i += 1;
    }
    out
}

/// Product of the distinct irreducible factors, normalized.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, PolyError> {
    let parts = squarefree_decomposition(p)?;
    let mut out = Polynomial::one(p.nvars());
    for (s, _) in &parts {
        out = &out * s;
    }
    Ok(out.normalized())
}
