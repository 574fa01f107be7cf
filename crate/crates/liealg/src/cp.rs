use crate::algebra::LieAlgebra;
use crate::linalg::Subspace;

/// Why a subspace is not a commutative-polarization ideal.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CpViolation {
    #[error("subspace is not commutative")]
    NotCommutative,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace has dimension {dim}, expected c = {expected}")]
    WrongDimension { dim: usize, expected: usize },
}

/// `c(L) = (dim L + i(L)) / 2`.
pub fn c_value(dim: usize, index: usize) -> usize {
    debug_assert_eq!((dim + index) % 2, 0, "dim - index is even");
    (dim + index) / 2
}

/// Checks `[P, P] = 0`, `[L, P] ⊆ P` and `dim P = c(L)` in that order.
pub fn verify_cp_ideal(l: &LieAlgebra, p: &Subspace, index: usize) -> Result<(), CpViolation> {
    if !l.is_commutative(p) {
        return Err(CpViolation::NotCommutative);
    }
    if !l.is_ideal(p) {
        return Err(CpViolation::NotIdeal);
    }
    let expected = c_value(l.dim(), index);
    if p.dim() != expected {
        return Err(CpViolation::WrongDimension { dim: p.dim(), expected });
    }
    Ok(())
}
