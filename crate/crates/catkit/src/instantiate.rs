use exactpoly::Rational;
use frobsc::is_frobenius;
use liealg::{check_torus, derive_seed, rng_from_seed, semidirect, Torus};
use rand::seq::SliceRandom;

use crate::entry::CatalogEntry;
use crate::CatalogError;

/// How candidate parameter values are ordered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Sequential,
    /// The same candidates, shuffled by the seed.
    Random,
}

pub const DEFAULT_CANDIDATES: usize = 20;

/// Fixed candidate values, chosen to avoid the small integers where
/// parametrized tori tend to degenerate.
pub fn candidate_values() -> Vec<Rational> {
    const LIST: [(i64, i64); 20] = [
        (2, 1),
        (3, 1),
        (1, 2),
        (5, 1),
        (-2, 1),
        (7, 3),
        (7, 1),
        (-3, 1),
        (2, 3),
        (11, 1),
        (-5, 2),
        (13, 4),
        (17, 1),
        (-7, 1),
        (3, 5),
        (19, 1),
        (-11, 3),
        (23, 5),
        (29, 1),
        (-13, 1),
    ];
    LIST.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instantiation {
    pub torus: Torus,
    pub values: Vec<(String, Rational)>,
}

/// Picks parameter values making `T + g` Frobenius. Attempt `t` assigns the
/// `j`-th parameter the candidate at position `t + j`, so several parameters
/// never share a value.
pub fn instantiate_parameters(
    entry: &CatalogEntry,
    strategy: Strategy,
    seed: u64,
) -> Result<Instantiation, CatalogError> {
    instantiate_with_budget(entry, strategy, seed, DEFAULT_CANDIDATES)
}

pub fn instantiate_with_budget(
    entry: &CatalogEntry,
    strategy: Strategy,
    seed: u64,
    budget: usize,
) -> Result<Instantiation, CatalogError> {
    let torus = entry.torus.as_ref().ok_or_else(|| CatalogError::NoTorus(entry.name.clone()))?;
    let params = torus.params();
    if params.is_empty() {
        return Ok(Instantiation { torus: torus.instantiate(&[]), values: Vec::new() });
    }
    let mut candidates = candidate_values();
    if strategy == Strategy::Random {
        candidates.shuffle(&mut rng_from_seed(derive_seed(seed, &entry.name)));
    }
    let pool = candidates.len();
    for attempt in 0..budget {
        let values: Vec<Rational> = (0..params.len()).map(|j| candidates[(attempt + j) % pool].clone()).collect();
        let t = torus.instantiate(&values);
        if check_torus(&entry.algebra, &t).is_err() {
            continue;
        }
        let l = semidirect(&t, &entry.algebra).expect("torus checked");
        if is_frobenius(&l) {
            return Ok(Instantiation { torus: t, values: params.iter().cloned().zip(values).collect() });
        }
    }
    Err(CatalogError::NoValidInstantiation { name: entry.name.clone(), tried: budget })
}
