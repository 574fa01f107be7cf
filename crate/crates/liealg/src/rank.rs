//! Generic rank of the bracket matrix, the index, and the Frobenius
//! semiradical, by sampling functionals.

use rand::Rng;

use exactpoly::Rational;

use crate::algebra::LieAlgebra;
use crate::linalg::{Subspace, Vector};

const FIRST_BATCH: usize = 8;
const SMALL_BOX: i64 = 9;
const ESCALATED_BATCH: usize = 32;
const LARGE_BOX: i64 = 99;
const SEMIRADICAL_PATIENCE: usize = 5;
const SEMIRADICAL_CAP: usize = 100;

/// Sampled generic rank of `B_f = (f([x_i, x_j]))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEstimate {
    pub rank: usize,
    /// A functional attaining `rank`.
    pub witness: Vector,
    /// `rank` meets the upper bound `dim - dim Z` (rounded down to even),
    /// so it is exact.
    pub certified: bool,
    pub samples: usize,
}

fn sample<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Vector {
    (0..n).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect()
}

pub fn generic_rank<R: Rng>(l: &LieAlgebra, rng: &mut R) -> RankEstimate {
    let n = l.dim();
    let bound = {
        let b = n - l.center().dim();
        b - b % 2
    };
    let mut best =
        RankEstimate { rank: 0, witness: vec![Rational::from_integer(0.into()); n], certified: bound == 0, samples: 0 };
    if bound == 0 {
        return best;
    }
    let mut batch = |count: usize, range: i64, best: &mut RankEstimate| -> usize {
        let mut top = 0;
        for _ in 0..count {
            let f = sample(n, range, rng);
            let r = l.form_matrix(&f).rank();
            best.samples += 1;
            top = top.max(r);
            if r > best.rank {
                best.rank = r;
                best.witness = f;
            }
            if best.rank == bound {
                best.certified = true;
                break;
            }
        }
        top
    };
    let a = batch(FIRST_BATCH, SMALL_BOX, &mut best);
    if best.certified {
        return best;
    }
    let b = batch(FIRST_BATCH, SMALL_BOX, &mut best);
    if best.certified {
        return best;
    }
    if a != b || !best.rank.is_multiple_of(2) {
        batch(ESCALATED_BATCH, LARGE_BOX, &mut best);
    }
    best
}

/// `dim L` minus the generic rank of the bracket matrix.
pub fn index<R: Rng>(l: &LieAlgebra, rng: &mut R) -> usize {
    l.dim() - generic_rank(l, rng).rank
}

/// Span of the kernels `L(f)` over sampled regular functionals `f`; stops
/// once several consecutive regular samples leave the span unchanged.
pub fn frobenius_semiradical<R: Rng>(l: &LieAlgebra, rng: &mut R) -> Subspace {
    let n = l.dim();
    let est = generic_rank(l, rng);
    let mut span = l.form_matrix(&est.witness).nullspace();
    if est.rank == n {
        return Subspace::zero(n);
    }
    let mut stall = 0;
    let mut samples = 0;
    while stall < SEMIRADICAL_PATIENCE && samples < SEMIRADICAL_CAP && span.dim() < n {
        samples += 1;
        let f = sample(n, SMALL_BOX, rng);
        let b = l.form_matrix(&f);
        if b.rank() < est.rank {
            continue;
        }
        let next = span.sum(&b.nullspace());
        if next.dim() > span.dim() {
            span = next;
            stall = 0;
        } else {
            stall += 1;
        }
    }
    span
}
