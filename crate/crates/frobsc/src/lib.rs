//! Semi-invariants of a Lie algebra `g` via a Frobenius extension
//! `L = T + g` by a diagonal torus: the irreducible factors of the Pfaffian
//! of `L`'s bracket matrix generate the semicenter of `S(g)`.

mod pfaffian;
mod semicenter;
mod weights;

pub use pfaffian::{delta, is_frobenius, pfaffian, pfaffian_of};
pub use semicenter::{semicenter, Generator, SemicenterFlags, SemicenterResult};
pub use weights::{ad_images, trace_weight, verify_invariant, weight_of, WeightVector};

use exactpoly::PolyError;
use liealg::{LieError, TorusViolation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FrobError {
    #[error("Pfaffian of an odd-dimensional ({0}) matrix")]
    OddDimension(usize),
    #[error("matrix of size {0} is too large")]
    TooLarge(usize),
    #[error("matrix is not skew-symmetric at ({i}, {j})")]
    NotSkew { i: usize, j: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not a semi-invariant: ad x{basis} does not act by a scalar")]
    NotSemiInvariant { basis: usize },
    #[error("torus has dimension {torus_dim} but the index is {index}")]
    TorusDimension { torus_dim: usize, index: usize },
    #[error("extension is not Frobenius (determinant of the bracket matrix is zero)")]
    NotFrobenius,
    #[error(transparent)]
    Torus(#[from] TorusViolation),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lie(#[from] LieError),
}
