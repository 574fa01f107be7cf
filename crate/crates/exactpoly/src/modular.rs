//! Polynomials over a small prime field `F_p` (odd `p < 2^31`), used only
//! inside the univariate factorizer.

use rand::Rng;

pub(crate) type Fp = Vec<u64>;

pub(crate) fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn deg(a: &Fp) -> Option<usize> {
    a.len().checked_sub(1)
}

#[cfg(test)]
fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p).collect())
}

pub(crate) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

pub(crate) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &Fp, c: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub(crate) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv(l, p), p),
    }
}

pub(crate) fn div_rem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = deg(b).expect("division by zero polynomial mod p");
    let linv = inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    let Some(da) = deg(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db] * linv % p;
        if c == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bc % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    div_rem(a, b, p).1
}

pub(crate) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub(crate) fn ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let l = inv(*r0.last().unwrap(), p);
    (scale(&r0, l, p), scale(&s0, l, p), scale(&t0, l, p))
}

pub(crate) fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

fn pow_poly_mod(base: &Fp, mut e: u128, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

pub(crate) fn is_squarefree(a: &Fp, p: u64) -> bool {
    let d = derivative(a, p);
    !d.is_empty() && gcd(a, &d, p).len() == 1
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut i = 0;
    while deg(&f).unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = pow_poly_mod(&h, p as u128, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() > 1 {
            out.push((g.clone(), i));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    if f.len() > 1 {
        let d = f.len() - 1;
        out.push((f, d));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting.
fn equal_degree<R: Rng>(f: &Fp, d: usize, p: u64, rng: &mut R) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e = ((p as u128).pow(d as u32) - 1) / 2;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let g = gcd(&a, f, p);
        let g = if g.len() > 1 {
            g
        } else {
            let b = pow_poly_mod(&a, e, f, p);
            gcd(&sub(&b, &vec![1], p), f, p)
        };
        if g.len() > 1 && g.len() < f.len() {
            let h = div_rem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Irreducible monic factors of a monic squarefree polynomial over `F_p`.
pub(crate) fn factor_squarefree<R: Rng>(f: &Fp, p: u64, rng: &mut R) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out.sort();
    out
}
