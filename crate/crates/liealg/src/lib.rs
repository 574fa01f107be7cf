//! Lie algebras over the rationals given by structure constants: Jacobi
//! validation, bracket matrices, index and Frobenius semiradical by
//! sampling, centers, derivations, diagonal tori, semidirect products and
//! commutative polarizations.

mod algebra;
mod cp;
mod linalg;
mod rank;
mod torus;

pub use algebra::{JacobiViolation, LieAlgebra};
pub use cp::{c_value, verify_cp_ideal, CpViolation};
pub use linalg::{is_zero_vector, unit_vector, zero_vector, QMatrix, Subspace, Vector};
pub use rank::{frobenius_semiradical, generic_rank, index, RankEstimate};
pub use torus::{check_torus, semidirect, ParametricTorus, Torus, TorusViolation};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The random source used throughout: ChaCha8 seeded from a `u64`.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent seed for a named sub-task (FNV-1a over the name).
pub fn derive_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("basis index {index} outside 1..{dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of x{0} with itself")]
    SelfBracket(usize),
    #[error("vector of length {len} in dimension {dim}")]
    WrongLength { len: usize, dim: usize },
    #[error("bracket [x{0}, x{1}] given twice with different values")]
    ConflictingBracket(usize, usize),
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("torus entry {0} is not affine in the parameters")]
    NonAffineEntry(String),
}
