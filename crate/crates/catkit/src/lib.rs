//! A line-oriented catalog of Lie algebras together with what is known
//! about them (index, center, semiradical, polarizations, tori, invariants),
//! and a driver that recomputes and checks every claim.

mod entry;
mod instantiate;
mod report;
mod run;
mod verify;

pub use entry::{load_entry, load_file, CatalogEntry, ExpectationSet, Tag, PARAMETERS};
pub use instantiate::{
    candidate_values, instantiate_parameters, instantiate_with_budget, Instantiation, Strategy, DEFAULT_CANDIDATES,
};
pub use report::{CheckResult, LoadFailure, Parameter, PipelineSummary, Report, Status, Summary};
pub use run::{catalog_files, run_catalog, summarize, Filter};
pub use verify::verify_entry;

use liealg::{JacobiViolation, LieError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("missing '{0}' line")]
    Missing(&'static str),
    #[error("{name} violates the Jacobi identity: {violation}")]
    Jacobi { name: String, violation: JacobiViolation },
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0} has no torus")]
    NoTorus(String),
    #[error("{name}: no Frobenius extension among the first {tried} parameter choices")]
    NoValidInstantiation { name: String, tried: usize },
    #[error("bad filter '{0}', expected dim=N, name=NAME or tag=TAG")]
    BadFilter(String),
    #[error("entry name '{0}' appears twice")]
    DuplicateName(String),
}
