use num_traits::Zero;

use exactpoly::{Polynomial, Rational};

use crate::algebra::LieAlgebra;
use crate::linalg::{QMatrix, Vector};
use crate::LieError;

/// Commuting family of derivations, each diagonal in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Torus {
    generators: Vec<Vector>,
}

impl Torus {
    pub fn new(diagonals: Vec<Vector>) -> Self {
        Torus { generators: diagonals }
    }

    pub fn trivial() -> Self {
        Torus::default()
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Diagonal entries of each generator.
    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn matrix(&self, k: usize) -> QMatrix {
        let d = &self.generators[k];
        let mut m = QMatrix::zero(d.len(), d.len());
        for (i, c) in d.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        m
    }
}

/// Why a torus is rejected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TorusViolation {
    #[error("generator t{generator} has {len} entries, algebra has dimension {dim}")]
    WrongLength { generator: usize, len: usize, dim: usize },
    #[error("generator t{generator} is not a derivation: fails on [x{i}, x{j}] at component x{k}")]
    NotDerivation { generator: usize, i: usize, j: usize, k: usize },
    #[error("torus generators are linearly dependent")]
    Dependent,
}

/// Checks that every generator is a derivation and that the generators are
/// linearly independent. Indices in the report are 1-based.
pub fn check_torus(g: &LieAlgebra, t: &Torus) -> Result<(), TorusViolation> {
    let n = g.dim();
    for (a, d) in t.generators().iter().enumerate() {
        if d.len() != n {
            return Err(TorusViolation::WrongLength { generator: a + 1, len: d.len(), dim: n });
        }
        // A diagonal map is a derivation iff d_k = d_i + d_j whenever x_k
        // occurs in [x_i, x_j].
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() && d[k] != &d[i] + &d[j] {
                        return Err(TorusViolation::NotDerivation { generator: a + 1, i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        debug_assert!(g.is_derivation(&t.matrix(a)));
    }
    if t.dim() > 0 && QMatrix::from_rows(t.generators().to_vec(), n).rank() < t.dim() {
        return Err(TorusViolation::Dependent);
    }
    Ok(())
}

/// `T + g` with basis `t1..tm, x1..xn`, `[t_a, x_j] = t_a(x_j)`.
pub fn semidirect(t: &Torus, g: &LieAlgebra) -> Result<LieAlgebra, TorusViolation> {
    check_torus(g, t)?;
    let m = t.dim();
    let n = g.dim();
    let total = m + n;
    let mut l = LieAlgebra::abelian(g.name(), total);
    let embed = |v: &Vector| -> Vector {
        let mut w = vec![Rational::zero(); m];
        w.extend(v.iter().cloned());
        w
    };
    for (a, d) in t.generators().iter().enumerate() {
        for (j, c) in d.iter().enumerate() {
            if !c.is_zero() {
                let mut v = vec![Rational::zero(); total];
                v[m + j] = c.clone();
                l.set_bracket(a, m + j, v).expect("fresh pair");
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let v = g.bracket_basis(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                l.set_bracket(m + i, m + j, embed(v)).expect("fresh pair");
            }
        }
    }
    Ok(l)
}

/// Torus whose diagonal entries are affine functions of named parameters,
/// stored as polynomials in one variable per parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricTorus {
    params: Vec<String>,
    generators: Vec<Vec<Polynomial>>,
}

impl ParametricTorus {
    pub fn new(params: Vec<String>, generators: Vec<Vec<Polynomial>>) -> Result<Self, LieError> {
        for row in &generators {
            for e in row {
                if e.nvars() != params.len() {
                    return Err(LieError::WrongLength { len: e.nvars(), dim: params.len() });
                }
                if e.total_degree().unwrap_or(0) > 1 {
                    return Err(LieError::NonAffineEntry(e.to_string()));
                }
            }
        }
        Ok(ParametricTorus { params, generators })
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn instantiate(&self, values: &[Rational]) -> Torus {
        assert_eq!(values.len(), self.params.len(), "one value per parameter");
        Torus::new(self.generators.iter().map(|row| row.iter().map(|e| e.evaluate(values)).collect()).collect())
    }
}
