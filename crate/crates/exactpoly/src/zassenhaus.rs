//! Univariate factorization over the integers: modular factorization,
//! Hensel lifting to a coefficient bound, and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::modular::{self, Fp};

pub(crate) type ZPoly = Vec<BigInt>;

const PRIMES: [u64; 24] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// How many admissible primes are tried before picking the one with the
/// fewest modular factors.
const PRIME_TRIALS: usize = 4;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

/// Exact division over the integers, `None` if `b` does not divide `a`.
pub(crate) fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rr) = top.div_rem(lb);
        if !rr.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(ztrim(q))
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> ZPoly {
    let mut g = content(a);
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    modular::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_fp(a: &Fp) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lifts `f = g0 * h0 (mod p)` with `g0` monic to `f = g * h (mod p^k)`.
fn lift_pair(f: &[BigInt], g0: &Fp, h0: &Fp, p: u64, k: u32, m: &BigInt) -> (ZPoly, ZPoly) {
    let (one, s, t) = modular::ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let _ = s;
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let lcf = f.last().unwrap().mod_floor(m);
    *h.last_mut().unwrap() = lcf;
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let e = reduce(&sub_z(f, &zmul(&g, &h)), m);
        if e.is_empty() {
            break;
        }
        let c: ZPoly = e.iter().map(|x| x / &pj).collect();
        let c = to_fp(&c, p);
        let dg = modular::rem(&modular::mul(&t, &c, p), g0, p);
        let num = modular::sub(&c, &modular::mul(&dg, h0, p), p);
        let (dh, r) = modular::div_rem(&num, g0, p);
        debug_assert!(r.is_empty());
        g = reduce(&add_z(&g, &scale_z(&from_fp(&dg), &pj)), m);
        h = reduce(&add_z(&h, &scale_z(&from_fp(&dh), &pj)), m);
        pj *= &pb;
    }
    (g, h)
}

fn add_z(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    ztrim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()).collect())
}

fn sub_z(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    ztrim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()).collect())
}

fn scale_z(a: &[BigInt], c: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|x| x * c).collect())
}

/// Multifactor lift by recursive splitting; returns monic factors mod `m`.
fn lift_all(f: &[BigInt], factors: &[Fp], p: u64, k: u32, m: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(m).expect("leading coefficient invertible mod p^k");
        return vec![reduce(&scale_z(f, &inv), m)];
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid].iter().fold(vec![1u64], |acc, u| modular::mul(&acc, u, p));
    let lcp = to_fp(&[f.last().unwrap().clone()], p)[0];
    let h0 = factors[mid..].iter().fold(vec![lcp], |acc, u| modular::mul(&acc, u, p));
    let (g, h) = lift_pair(f, &g0, &h0, p, k, m);
    let mut out = lift_all(&g, &factors[..mid], p, k, m);
    out.extend(lift_all(&h, &factors[mid..], p, k, m));
    out
}

/// Bound on the coefficients of `lc(f) * g` for any factor `g` of `f`.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let lc = f.last().unwrap().abs();
    let root = BigInt::from(n + 1).sqrt() + 1;
    root * (BigInt::one() << n) * maxc * lc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial of
/// positive degree, each primitive with positive leading coefficient.
pub(crate) fn factor_squarefree<R: Rng>(f: &[BigInt], rng: &mut R) -> Vec<ZPoly> {
    let f = primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }

    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in &PRIMES {
        let lcp = to_fp(&[f[n].clone()], p);
        if lcp.is_empty() {
            continue;
        }
        let fp = to_fp(&f, p);
        if !modular::is_squarefree(&fp, p) {
            continue;
        }
        let facs = modular::factor_squarefree(&modular::monic(&fp, p), p, rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= PRIME_TRIALS {
            break;
        }
    }
    let (p, modular_factors) = match best {
        Some(b) => b,
        None => return factor_fallback_large_prime(&f, rng),
    };
    recombine(&f, p, &modular_factors)
}

fn recombine(f: &[BigInt], p: u64, modular_factors: &[Fp]) -> Vec<ZPoly> {
    let bound = coefficient_bound(f) * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = lift_all(f, modular_factors, p, k, &m);
    let mut f = f.to_vec();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), s) {
            let lc = f.last().unwrap().clone();
            let g = subset.iter().fold(vec![lc], |acc, &i| reduce(&zmul(&acc, &lifted[i]), &m));
            let g = primitive(&symmetric(&g, &m));
            if let Some(q) = zdiv_exact(&f, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive(&f));
    }
    found
}

/// Every small prime divides the leading coefficient or the discriminant;
/// search larger primes.
fn factor_fallback_large_prime<R: Rng>(f: &[BigInt], rng: &mut R) -> Vec<ZPoly> {
    let mut p = 101u64;
    loop {
        if is_prime(p) {
            let lcp = to_fp(&[f.last().unwrap().clone()], p);
            let fp = to_fp(f, p);
            if !lcp.is_empty() && modular::is_squarefree(&fp, p) {
                let facs = modular::factor_squarefree(&modular::monic(&fp, p), p, rng);
                if facs.len() == 1 {
                    return vec![f.to_vec()];
                }
                return recombine(f, p, &facs);
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
