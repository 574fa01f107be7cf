use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use exactpoly::{Monomial, Polynomial, Rational};
use liealg::LieAlgebra;
use num_traits::Zero;

use crate::PbwError;

type Terms = BTreeMap<Monomial, Rational>;

/// An element of `U(g)` written on ordered monomials `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, Debug)]
pub struct PbwElement {
    algebra: Arc<LieAlgebra>,
    terms: Terms,
}

impl PartialEq for PbwElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for PbwElement {}

fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn add_term(terms: &mut Terms, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(m);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PbwElement {
    pub fn zero(algebra: Arc<LieAlgebra>) -> Self {
        PbwElement { algebra, terms: Terms::new() }
    }

    pub fn one(algebra: Arc<LieAlgebra>) -> Self {
        Self::scalar(algebra, Rational::from_integer(1.into()))
    }

    pub fn scalar(algebra: Arc<LieAlgebra>, c: Rational) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::one(), c);
        PbwElement { algebra, terms }
    }

    /// The basis element `x_{v+1}` (0-based `v`).
    pub fn generator(algebra: Arc<LieAlgebra>, v: usize) -> Self {
        assert!(v < algebra.dim(), "generator index out of range");
        let mut terms = Terms::new();
        terms.insert(Monomial::var(v), Rational::from_integer(1.into()));
        PbwElement { algebra, terms }
    }

    /// Reads each monomial of `p` as the ordered PBW monomial with the same
    /// exponents. This is not symmetrization.
    pub fn from_ordered(algebra: Arc<LieAlgebra>, p: &Polynomial) -> Result<Self, PbwError> {
        if p.nvars() != algebra.dim() {
            return Err(PbwError::WrongVariableCount { found: p.nvars(), dim: algebra.dim() });
        }
        let terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(PbwElement { algebra, terms })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same coefficients viewed as a commutative polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())), self.algebra.dim())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms =
            if c.is_zero() { Terms::new() } else { self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() };
        PbwElement { algebra: self.algebra.clone(), terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PbwError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(PbwElement { algebra: self.algebra.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PbwError> {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    fn check(&self, other: &Self) -> Result<(), PbwError> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(PbwError::ContextMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            })
        }
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Right multiplication of ordered monomials by single generators, memoized
/// for the lifetime of one product.
pub(crate) struct Straightener<'a> {
    algebra: &'a LieAlgebra,
    memo: HashMap<(Monomial, usize), Terms>,
}

impl<'a> Straightener<'a> {
    pub(crate) fn new(algebra: &'a LieAlgebra) -> Self {
        Straightener { algebra, memo: HashMap::new() }
    }

    /// `m * x_j` in normal form.
    fn monomial_times(&mut self, m: &Monomial, j: usize) -> Terms {
        let k = match m.max_var() {
            Some(k) if k > j => k,
            _ => {
                let mut out = Terms::new();
                out.insert(m.mul(&Monomial::var(j)), Rational::from_integer(1.into()));
                return out;
            }
        };
        if let Some(hit) = self.memo.get(&(m.clone(), j)) {
            return hit.clone();
        }
        // m = m' x_k with k > j, so m x_j = (m' x_j) x_k + m' [x_k, x_j].
        let rest = Monomial::var(k).quotient_of(m).expect("k occurs in m");
        let mut out = Terms::new();
        for (a, c) in self.monomial_times(&rest, j) {
            for (b, d) in self.monomial_times(&a, k) {
                add_term(&mut out, b, &c * &d);
            }
        }
        let bracket = self.algebra.bracket_basis(k, j).clone();
        for (l, c) in bracket.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (b, d) in self.monomial_times(&rest, l) {
                add_term(&mut out, b, c * &d);
            }
        }
        self.memo.insert((m.clone(), j), out.clone());
        out
    }

    pub(crate) fn times_generator(&mut self, u: &Terms, j: usize) -> Terms {
        let mut out = Terms::new();
        for (m, c) in u {
            for (b, d) in self.monomial_times(m, j) {
                add_term(&mut out, b, c * &d);
            }
        }
        out
    }

    /// Straightens the word `x_{w_1} x_{w_2} ...`.
    pub(crate) fn word(&mut self, w: &[usize]) -> Terms {
        let mut acc = Terms::new();
        acc.insert(Monomial::one(), Rational::from_integer(1.into()));
        for &j in w {
            acc = self.times_generator(&acc, j);
        }
        acc
    }

    pub(crate) fn multiply(&mut self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in b {
            let mut acc = a.clone();
            for (v, e) in m.pairs() {
                for _ in 0..*e {
                    acc = self.times_generator(&acc, *v);
                }
            }
            for (mm, d) in acc {
                add_term(&mut out, mm, d * c);
            }
        }
        out
    }
}

/// The product `a b` in `U(g)`, straightened with the brackets of `g`.
pub fn pbw_multiply(a: &PbwElement, b: &PbwElement) -> Result<PbwElement, PbwError> {
    a.check(b)?;
    let terms = Straightener::new(&a.algebra).multiply(&a.terms, &b.terms);
    Ok(PbwElement { algebra: a.algebra.clone(), terms })
}

/// `a b - b a`.
pub fn commutator(a: &PbwElement, b: &PbwElement) -> Result<PbwElement, PbwError> {
    a.check(b)?;
    let mut st = Straightener::new(&a.algebra);
    let mut terms = st.multiply(&a.terms, &b.terms);
    for (m, c) in st.multiply(&b.terms, &a.terms) {
        add_term(&mut terms, m, -c);
    }
    Ok(PbwElement { algebra: a.algebra.clone(), terms })
}

/// Whether `u` commutes with every basis element of its algebra.
pub fn is_central(u: &PbwElement) -> bool {
    weight_in_enveloping(u).is_some_and(|w| w.iter().all(Zero::is_zero))
}

/// `lambda` with `[x_j, u] = lambda_j u` for every basis element, if `u` is a
/// nonzero semi-invariant of `U(g)`.
pub fn weight_in_enveloping(u: &PbwElement) -> Option<Vec<Rational>> {
    let g = u.algebra.as_ref();
    let mut st = Straightener::new(g);
    let (lead_m, lead_c) = u.terms.iter().next_back()?;
    let mut weight = Vec::with_capacity(g.dim());
    for j in 0..g.dim() {
        let mut x = Terms::new();
        x.insert(Monomial::var(j), Rational::from_integer(1.into()));
        let mut diff = st.multiply(&x, &u.terms);
        for (m, c) in st.times_generator(&u.terms, j) {
            add_term(&mut diff, m, -c);
        }
        let lambda = diff.get(lead_m).map_or_else(Rational::zero, |c| c / lead_c);
        for (m, c) in &u.terms {
            add_term(&mut diff, m.clone(), -(c * &lambda));
        }
        if !diff.is_empty() {
            return None;
        }
        weight.push(lambda);
    }
    Some(weight)
}
