//! Elements of the universal enveloping algebra `U(g)` in PBW normal form,
//! the symmetrization map `S(g) -> U(g)`, and centrality checks.

mod element;
mod symmetrize;

pub use element::{commutator, is_central, pbw_multiply, weight_in_enveloping, PbwElement};
pub use symmetrize::{symmetrize, symmetrize_with_cap, DEFAULT_DEGREE_CAP};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("elements belong to different algebras ({left} and {right})")]
    ContextMismatch { left: String, right: String },
    #[error("degree {degree} exceeds the symmetrization cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("polynomial has {found} variables but the algebra has dimension {dim}")]
    WrongVariableCount { found: usize, dim: usize },
}
