use rand::Rng;

use exactpoly::{factor_with_rng, Polynomial};
use liealg::{c_value, check_torus, index, semidirect, LieAlgebra, QMatrix, Subspace, Torus};

use crate::pfaffian::pfaffian_of;
use crate::weights::{trace_weight, weight_of, WeightVector};
use crate::FrobError;

/// One irreducible factor of the Pfaffian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    /// The factor in the variables of `L = T + g` (torus variables first).
    pub poly: Polynomial,
    /// The same factor in the variables of `g`.
    pub poly_in_g: Polynomial,
    pub multiplicity: u32,
    pub weight: WeightVector,
}

/// Outcome of each structural check on the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicenterFlags {
    /// The generator weights are linearly independent.
    pub weights_independent: bool,
    /// No generator involves a torus variable.
    pub generators_in_g: bool,
    /// `r = dim L - dim L_Lambda`.
    pub kernel_codimension: bool,
    /// `r = index(L_Lambda)`.
    pub kernel_index: bool,
    /// Sum of generator degrees is at most `c(g)`.
    pub degree_bound: bool,
    /// For nilpotent `g`: every weight vanishes on `g`. `None` otherwise.
    pub invariant_on_g: Option<bool>,
    /// The weight of the Pfaffian is the trace functional.
    pub pfaffian_weight_is_trace: bool,
    /// The Pfaffian is homogeneous of degree `dim L / 2`.
    pub pfaffian_homogeneous: bool,
}

impl SemicenterFlags {
    pub fn all_pass(&self) -> bool {
        self.weights_independent
            && self.generators_in_g
            && self.kernel_codimension
            && self.kernel_index
            && self.degree_bound
            && self.invariant_on_g != Some(false)
            && self.pfaffian_weight_is_trace
            && self.pfaffian_homogeneous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicenterResult {
    pub extension: LieAlgebra,
    pub torus_dim: usize,
    pub index_g: usize,
    pub pfaffian: Polynomial,
    pub delta: Polynomial,
    pub generators: Vec<Generator>,
    /// Common kernel of the generator weights, inside `L`.
    pub lambda_kernel: Subspace,
    pub lambda_kernel_index: usize,
    pub degree_sum: u32,
    pub c_value: usize,
    pub flags: SemicenterFlags,
}

/// Runs the extension pipeline: `L = T + g` must be Frobenius with
/// `dim T = index(g)`; the irreducible factors of `Pf(L)` then generate the
/// semicenter of `S(g)`.
pub fn semicenter<R: Rng>(g: &LieAlgebra, t: &Torus, rng: &mut R) -> Result<SemicenterResult, FrobError> {
    check_torus(g, t)?;
    let index_g = index(g, rng);
    let m = t.dim();
    if m != index_g {
        return Err(FrobError::TorusDimension { torus_dim: m, index: index_g });
    }
    let l = semidirect(t, g)?;
    let total = l.dim();
    if total % 2 == 1 {
        return Err(FrobError::NotFrobenius);
    }
    let pf = pfaffian_of(&l)?;
    if pf.is_zero() {
        return Err(FrobError::NotFrobenius);
    }
    let delta = &pf * &pf;
    let n = g.dim();

    let fac = factor_with_rng(&pf, rng)?;
    let mut generators = Vec::with_capacity(fac.factors.len());
    for (p, mult) in &fac.factors {
        let weight = weight_of(&l, p)?;
        let in_g = p.variables().iter().all(|&v| v >= m);
        let poly_in_g = if in_g { p.reindex(|v| v - m, n) } else { Polynomial::zero(n) };
        generators.push(Generator { poly: p.clone(), poly_in_g, multiplicity: *mult, weight });
    }
    let r = generators.len();

    let weight_matrix = QMatrix::from_rows(generators.iter().map(|gen| gen.weight.values().to_vec()).collect(), total);
    let lambda_kernel = weight_matrix.nullspace();
    let kernel_algebra = l.subalgebra(&lambda_kernel, "kernel")?;
    let lambda_kernel_index = index(&kernel_algebra, rng);
    let degree_sum: u32 = generators.iter().map(|gen| gen.poly.total_degree().unwrap_or(0)).sum();
    let c = c_value(n, index_g);

    let invariant_on_g = g
        .is_nilpotent()
        .then(|| generators.iter().all(|gen| gen.weight.values()[m..].iter().all(num_traits::Zero::is_zero)));
    let flags = SemicenterFlags {
        weights_independent: weight_matrix.rank() == r,
        generators_in_g: generators.iter().all(|gen| !gen.poly_in_g.is_zero()),
        kernel_codimension: total - lambda_kernel.dim() == r,
        kernel_index: lambda_kernel_index == r,
        degree_bound: degree_sum as usize <= c && c == c_value(total, 0),
        invariant_on_g,
        pfaffian_weight_is_trace: weight_of(&l, &pf)? == trace_weight(&l),
        pfaffian_homogeneous: pf.is_homogeneous() && pf.total_degree() == Some((total / 2) as u32),
    };

    Ok(SemicenterResult {
        extension: l,
        torus_dim: m,
        index_g,
        pfaffian: pf,
        delta,
        generators,
        lambda_kernel,
        lambda_kernel_index,
        degree_sum,
        c_value: c,
        flags,
    })
}
