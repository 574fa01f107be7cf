use exactpoly::{factor, factor_kronecker, parse, Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random polynomial with at most `terms` terms of total degree `<= deg`.
fn arb_poly(nvars: usize, deg: u32, terms: usize, rational: bool) -> impl Strategy<Value = Polynomial> {
    let term = (
        proptest::collection::vec(0..=deg, nvars),
        (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
        if rational { 1i64..=3 } else { 1i64..=1 },
    );
    proptest::collection::vec(term, 1..=terms).prop_map(move |ts| {
        let mut out = Polynomial::zero(nvars);
        for (exps, c, d) in ts {
            if exps.iter().sum::<u32>() > deg {
                continue;
            }
            let m = Monomial::from_exponents(&exps);
            out = &out + &Polynomial::monomial(m, rat(c, d), nvars);
        }
        out
    })
}

fn nonconstant(nvars: usize, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    arb_poly(nvars, deg, terms, false).prop_filter("nonconstant", |p| !p.is_constant())
}

fn check_factorization(p: &Polynomial) -> exactpoly::Factorization {
    let f = factor(p).expect("factorization succeeds");
    assert_eq!(f.expand(p.nvars()), *p, "reconstruction of {p}");
    for (i, (g, m)) in f.factors.iter().enumerate() {
        assert!(*m >= 1);
        assert_eq!(*g, g.normalized(), "factor {g} is normalized");
        assert!(!g.is_constant());
        for (h, _) in &f.factors[i + 1..] {
            assert!(!g.is_associate(h), "{g} and {h} are associated");
        }
    }
    f
}

/// Rational roots of an integer polynomial (coefficients low to high).
fn rational_roots(c: &[BigInt]) -> Vec<Rational> {
    let mut c = c.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if c[0].is_zero() {
        out.push(Rational::zero());
        while c[0].is_zero() {
            c.remove(0);
        }
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut d = Vec::new();
        let mut k = BigInt::one();
        while k <= n {
            if (&n % &k).is_zero() {
                d.push(k.clone());
            }
            k += 1;
        }
        d
    };
    for p in divisors(&c[0]) {
        for q in divisors(c.last().unwrap()) {
            for s in [1, -1] {
                let r = Rational::new(&p * s, q.clone());
                let v = c.iter().rev().fold(Rational::zero(), |acc, a| acc * &r + Rational::from_integer(a.clone()));
                if v.is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn integer_univariate(p: &Polynomial, v: usize) -> Vec<BigInt> {
    let n = p.degree_in(v) as usize;
    let mut c = vec![Rational::zero(); n + 1];
    for (m, a) in p.terms() {
        c[m.exponent(v) as usize] += a;
    }
    let l = c.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    c.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Independent oracle for total degree <= 3: such a polynomial is reducible
/// over the rationals iff it has a linear factor `x_j - r(others)`, where `r`
/// is affine. `r` is pinned down by rational roots of specializations along
/// an affine frame, so the candidate search is exhaustive.
fn has_linear_factor(p: &Polynomial) -> bool {
    let vars: Vec<usize> = p.variables().into_iter().collect();
    let n = p.nvars();
    let grid: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3, 4, 5, 7];
    for &j in &vars {
        if p.degree_in(j) == 0 {
            continue;
        }
        let others: Vec<usize> = vars.iter().copied().filter(|&y| y != j).collect();
        let specialize = |point: &[(usize, i64)]| -> Vec<BigInt> {
            let mut q = p.clone();
            for &(y, a) in point {
                q = q.substitute(y, &rat(a, 1));
            }
            integer_univariate(&q, j)
        };
        let nonzero = |c: &Vec<BigInt>| c.iter().any(|x| !x.is_zero());
        // Base point with a nonvanishing specialization.
        let mut base = None;
        'outer: for &a in &grid {
            for &b in &grid {
                let pt: Vec<(usize, i64)> =
                    others.iter().enumerate().map(|(k, &y)| (y, if k == 0 { a } else { b + k as i64 })).collect();
                if nonzero(&specialize(&pt)) {
                    base = Some(pt);
                    break 'outer;
                }
            }
        }
        let Some(base) = base else { continue };
        let base_roots = rational_roots(&specialize(&base));
        // For each other variable, a step along its axis with a nonvanishing specialization.
        let mut steps = Vec::new();
        for (k, _) in others.iter().enumerate() {
            let step = (1..=12).find_map(|t| {
                let mut pt = base.clone();
                pt[k].1 += t;
                let c = specialize(&pt);
                nonzero(&c).then(|| (t, rational_roots(&c)))
            });
            match step {
                Some(s) => steps.push(s),
                None => return true,
            }
        }
        let mut choices: Vec<Vec<Rational>> = vec![Vec::new()];
        for (_, roots) in &steps {
            choices = choices
                .iter()
                .flat_map(|ch| roots.iter().map(move |r| [ch.clone(), vec![r.clone()]].concat()))
                .collect();
        }
        for r0 in &base_roots {
            for ch in &choices {
                // r(a) = r0 + sum_k slope_k * (a_k - base_k), slope_k = (r_k - r0) / t_k.
                let mut lin = Polynomial::constant(r0.clone(), n);
                for (k, &y) in others.iter().enumerate() {
                    let slope = (&ch[k] - r0) / rat(steps[k].0, 1);
                    let shifted = &Polynomial::var(y, n) - &Polynomial::from_int(base[k].1, n);
                    lin = &lin + &shifted.scale(&slope);
                }
                let lin_factor = &Polynomial::var(j, n) - &lin;
                if p.divide_exact(&lin_factor).unwrap().is_some() {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn divide_round_trip(
        p in arb_poly(5, 4, 6, true),
        q in arb_poly(5, 4, 6, true).prop_filter("nonzero", |q| !q.is_zero()),
    ) {
        let pq = &p * &q;
        prop_assert_eq!(pq.divide_exact(&q).unwrap(), Some(p));
    }

    #[test]
    fn leibniz_rule(
        p in arb_poly(4, 3, 5, true),
        q in arb_poly(4, 3, 5, true),
        images in proptest::collection::vec(arb_poly(4, 2, 3, true), 4),
    ) {
        let d = |x: &Polynomial| x.apply_derivation(&images).unwrap();
        prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
    }

    #[test]
    fn parse_print_fixed_point(p in arb_poly(4, 4, 6, true)) {
        let text = p.to_string();
        let back = parse(&text, 4).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factorization_of_random_products(
        parts in proptest::collection::vec((nonconstant(4, 3, 4), 1u32..=2), 1..=3),
        unit in (-6i64..=6).prop_filter("nonzero", |c| *c != 0),
    ) {
        let mut p = Polynomial::constant(rat(unit, 5), 4);
        for (q, m) in &parts {
            p = &p * &q.pow(*m);
        }
        let f = check_factorization(&p);
        let total: u32 = f.factors.iter().map(|(_, m)| *m).sum();
        let at_least: u32 = parts.iter().map(|(_, m)| *m).sum();
        prop_assert!(total >= at_least);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kronecker_agrees(
        parts in proptest::collection::vec((nonconstant(3, 2, 4), 1u32..=2), 1..=3),
    ) {
        let mut p = Polynomial::one(3);
        for (q, m) in &parts {
            p = &p * &q.pow(*m);
        }
        prop_assert_eq!(factor(&p).unwrap(), factor_kronecker(&p).unwrap());
    }

    #[test]
    fn irreducibility_matches_linear_factor_search(
        p in nonconstant(3, 3, 5),
        q in nonconstant(3, 1, 3),
        r in nonconstant(3, 2, 4),
        shape in 0..3u8,
    ) {
        let p = match shape {
            0 => p,
            1 => &q * &r,
            _ => q.clone(),
        };
        prop_assume!(p.total_degree().unwrap() <= 3);
        let f = factor(&p).unwrap();
        let multiplicity: u32 = f.factors.iter().map(|(_, m)| *m).sum();
        let oracle_reducible = p.total_degree().unwrap() >= 2 && has_linear_factor(&p);
        let engine_reducible = multiplicity >= 2;
        prop_assert_eq!(engine_reducible, oracle_reducible, "{}", p);
    }
}

#[test]
fn examples_from_the_catalog_shapes() {
    let p = |s: &str, n: usize| parse(s, n).unwrap();
    let f = check_factorization(&p("4*(x2^2 - 4*x1*x3)^2*(x1*x5^2 - x2*x4*x5 + x3*x4^2)^2", 5));
    assert_eq!(f.unit, rat(4, 1));
    assert_eq!(f.factors.len(), 2);
    assert!(f.factors.iter().all(|(_, m)| *m == 2));
    assert!(factor(&p("x2^2 - 4*x1*x3", 3)).unwrap().is_irreducible());
    let g = check_factorization(&p("(x1 + x2)^2", 2));
    assert_eq!(g.factors, vec![(p("x1 + x2", 2), 2)]);
    assert!(p("x1", 1).divide_exact(&p("x1 + 1", 1)).unwrap().is_none());
    assert!(p("x1 + x2", 2).divide_exact(&p("x1", 2)).unwrap().is_none());
}

#[test]
fn higher_degree_sparse_products() {
    let p = |s: &str| parse(s, 10).unwrap();
    let a = p("x1*x6 - x2*x5 + x3*x4");
    let b = p("x7^2*x8 - 2*x6*x9*x10 + x4^3");
    let c = p("x10");
    let d = p("x5*x10 - x6*x9 + x7*x8 + 3*x2*x3");
    let prod = &(&(&a * &b) * &c.pow(2)) * &d.pow(2);
    let f = check_factorization(&prod);
    assert_eq!(f.factors.len(), 4);
    for (g, m) in [(&a, 1), (&b, 1), (&c, 2), (&d, 2)] {
        assert!(f.factors.iter().any(|(h, k)| *k == m && h.is_associate(g)), "{g}");
    }
    assert!(f.factors.iter().all(|(h, _)| h.is_homogeneous()));
}
