use std::cmp::Ordering;
use std::fmt;

/// A commutative monomial `x_{v1}^{e1} * x_{v2}^{e2} * ...`, stored as
/// `(variable, exponent)` pairs sorted by variable with no zero exponents.
///
/// Variables are 0-based internally; the text form prints them 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(var, _)| var);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, le)) if *last == var => *le += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    /// Dense exponent vector of length `nvars`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(exps.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(v, &e)| (v, e)).collect())
    }

    pub fn to_exponents(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.0 {
            out[v] = e;
        }
        out
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        match self.0.binary_search_by_key(&v, |&(var, _)| var) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    /// Largest variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other
                .0
                .iter()
                .filter_map(|&(v, e)| {
                    let r = e - self.exponent(v);
                    (r > 0).then_some((v, r))
                })
                .collect(),
        ))
    }

    /// Greatest common divisor of two monomials.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let m = e.min(other.exponent(v));
                    (m > 0).then_some((v, m))
                })
                .collect(),
        )
    }

    /// Removes variable `v`, returning its exponent and the remaining monomial.
    pub fn split_var(&self, v: usize) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }

    /// Renames variables through `map`; the caller guarantees injectivity on
    /// the variables that occur.
    pub fn map_vars<F: Fn(usize) -> usize>(&self, map: F) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (map(v), e)))
    }
}

/// Graded lexicographic order with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{}", v + 1)?;
            } else {
                write!(f, "x{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x1 = Monomial::var(0);
        let x2 = Monomial::var(1);
        assert!(x1 > x2);
        assert!(Monomial::var_pow(1, 2) > x1);
        // x1*x3 > x2^2 in grlex with x1 > x2 > x3
        let x1x3 = Monomial::from_pairs([(0, 1), (2, 1)]);
        assert!(x1x3 > Monomial::var_pow(1, 2));
        assert!(Monomial::one() < x2);
    }

    #[test]
    fn mul_and_divide() {
        let a = Monomial::from_pairs([(0, 1), (2, 2)]);
        let b = Monomial::from_pairs([(2, 1), (3, 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_pairs([(0, 1), (2, 3), (3, 1)]));
        assert_eq!(a.quotient_of(&ab), Some(b.clone()));
        assert!(!ab.divides(&a));
        assert_eq!(a.gcd(&b), Monomial::var(2));
        assert_eq!(format!("{ab}"), "x1*x3^3*x4");
    }
}
