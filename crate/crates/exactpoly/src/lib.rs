//! Exact sparse multivariate polynomials over the rationals: arithmetic,
//! derivations, gcd and squarefree decomposition, and factorization into
//! irreducibles.

mod factor;
mod gcd;
mod kronecker;
mod modular;
mod monomial;
mod parse;
mod poly;
mod univariate;
mod zassenhaus;

pub use factor::{factor, factor_with_rng, factor_with_seed, Factorization};
pub use gcd::{content_in, gcd, primitive_in, squarefree_decomposition, squarefree_part};
pub use kronecker::factor_kronecker;
pub use monomial::Monomial;
pub use parse::{parse, parse_with};
pub use poly::Polynomial;
pub use univariate::UniPoly;

pub type Rational = num_rational::BigRational;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable x{index} at {pos} is outside x1..x{nvars}")]
    VariableOutOfRange { pos: usize, index: usize, nvars: usize },
    #[error("unknown name `{name}` at {pos}")]
    UnknownName { pos: usize, name: String },
    #[error("variable contexts differ: {left} vs {right}")]
    ContextMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("too many variables for this method: {0}")]
    TooManyVariables(usize),
    #[error("internal factorization failure: {0}")]
    InternalFactorFailure(String),
}
