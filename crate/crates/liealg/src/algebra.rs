use std::fmt;

use num_traits::Zero;

use exactpoly::{Polynomial, Rational};

use crate::linalg::{is_zero_vector, unit_vector, zero_vector, QMatrix, Subspace, Vector};
use crate::LieError;

/// Lie algebra on the basis `x1..xn` given by structure constants.
/// Indices are 0-based in the API; `[x_i, x_j] = sum_k c[i][j][k] x_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    table: Vec<Vector>,
}

/// A failed Jacobi identity on a basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub defect: Vector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "Jacobi identity fails on (x{}, x{}, x{}): defect (", i + 1, j + 1, k + 1)?;
        for (n, c) in self.defect.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl LieAlgebra {
    /// Abelian algebra of dimension `dim`.
    pub fn abelian(name: &str, dim: usize) -> Self {
        LieAlgebra { name: name.to_string(), dim, table: vec![zero_vector(dim); dim * dim] }
    }

    /// Builds an algebra from the brackets `[x_i, x_j]` for the listed
    /// pairs; unlisted pairs bracket to zero. Jacobi is not checked here.
    pub fn from_brackets<I>(name: &str, dim: usize, brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Vector)>,
    {
        let mut l = LieAlgebra::abelian(name, dim);
        for (i, j, v) in brackets {
            l.set_bracket(i, j, v)?;
        }
        Ok(l)
    }

    /// Sets `[x_i, x_j] = v` and `[x_j, x_i] = -v`. Setting a pair twice
    /// with different values is an error.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) -> Result<(), LieError> {
        let n = self.dim;
        if i >= n || j >= n {
            return Err(LieError::IndexOutOfRange { index: i.max(j) + 1, dim: n });
        }
        if i == j {
            return Err(LieError::SelfBracket(i + 1));
        }
        if v.len() != n {
            return Err(LieError::WrongLength { len: v.len(), dim: n });
        }
        let current = &self.table[i * n + j];
        if !is_zero_vector(current) && *current != v {
            return Err(LieError::ConflictingBracket(i + 1, j + 1));
        }
        self.table[j * n + i] = v.iter().map(|c| -c.clone()).collect();
        self.table[i * n + j] = v;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[x_i, x_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[i * self.dim + j][k]
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Checks the Jacobi identity on all basis triples `i < j < k`.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a: usize, b: usize, c: usize| self.bracket(self.bracket_basis(a, b), &unit_vector(n, c));
                    let mut defect = e(i, j, k);
                    for (d, x) in defect.iter_mut().zip(e(j, k, i)) {
                        *d += x;
                    }
                    for (d, x) in defect.iter_mut().zip(e(k, i, j)) {
                        *d += x;
                    }
                    if !is_zero_vector(&defect) {
                        return Err(JacobiViolation { triple: (i, j, k), defect });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad u` acting on coordinates: column `j` is `[u, x_j]`.
    pub fn ad_matrix(&self, u: &[Rational]) -> QMatrix {
        let n = self.dim;
        let mut m = QMatrix::zero(n, n);
        for j in 0..n {
            let col = self.bracket(u, &unit_vector(n, j));
            for (k, c) in col.into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Skew matrix of linear forms `[x_i, x_j]` in the symmetric algebra.
    pub fn bracket_matrix(&self) -> Vec<Vec<Polynomial>> {
        let n = self.dim;
        (0..n).map(|i| (0..n).map(|j| self.linear_form(self.bracket_basis(i, j))).collect()).collect()
    }

    /// The element `sum_k v_k x_k` as a degree-1 polynomial.
    pub fn linear_form(&self, v: &[Rational]) -> Polynomial {
        let n = self.dim;
        let mut p = Polynomial::zero(n);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &Polynomial::var(k, n).scale(c);
            }
        }
        p
    }

    /// `B_f[i][j] = f([x_i, x_j])` for a functional `f` given by its values
    /// on the basis.
    pub fn form_matrix(&self, f: &[Rational]) -> QMatrix {
        let n = self.dim;
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j).iter().zip(f).fold(Rational::zero(), |acc, (c, x)| acc + c * x);
                m.set(j, i, -v.clone());
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // Row (j, k): coefficient of x_k in [x, x_j] as a linear form in x.
        let mut m = QMatrix::zero(0, n);
        for j in 0..n {
            for k in 0..n {
                let row: Vector = (0..n).map(|i| self.structure_constant(i, j, k).clone()).collect();
                if !is_zero_vector(&row) {
                    m.push_row(row);
                }
            }
        }
        m.nullspace()
    }

    /// Whether `d` (with `d(x_j) = sum_k d[k][j] x_k`) is a derivation.
    pub fn is_derivation(&self, d: &QMatrix) -> bool {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let col = |j: usize| -> Vector { (0..n).map(|k| d.get(k, j).clone()).collect() };
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.bracket_basis(i, j));
                let mut rhs = self.bracket(&col(i), &unit_vector(n, j));
                for (r, x) in rhs.iter_mut().zip(self.bracket(&unit_vector(n, i), &col(j))) {
                    *r += x;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Dimension of the derivation algebra, from the linear conditions on
    /// the `n^2` matrix entries.
    pub fn derivation_dim(&self) -> usize {
        let n = self.dim;
        let var = |k: usize, j: usize| k * n + j;
        let mut m = QMatrix::zero(0, n * n);
        for i in 0..n {
            for j in i + 1..n {
                // D([x_i,x_j]) - [D x_i, x_j] - [x_i, D x_j] = 0, component k.
                for k in 0..n {
                    let mut row = zero_vector(n * n);
                    for (l, c) in self.bracket_basis(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            row[var(k, l)] += c;
                        }
                    }
                    for l in 0..n {
                        let c1 = self.structure_constant(l, j, k);
                        if !c1.is_zero() {
                            row[var(l, i)] -= c1;
                        }
                        let c2 = self.structure_constant(i, l, k);
                        if !c2.is_zero() {
                            row[var(l, j)] -= c2;
                        }
                    }
                    if !is_zero_vector(&row) {
                        m.push_row(row);
                    }
                }
            }
        }
        n * n - m.rank()
    }

    /// Span of `[A, B]`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                let w = self.bracket(u, v);
                if !is_zero_vector(&w) {
                    vs.push(w);
                }
            }
        }
        Subspace::span(self.dim, vs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    pub fn is_nilpotent(&self) -> bool {
        let full = Subspace::full(self.dim);
        let mut term = full.clone();
        loop {
            let next = self.bracket_span(&full, &term);
            if next.dim() == 0 {
                return true;
            }
            if next.dim() == term.dim() {
                return false;
            }
            term = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(&Subspace::full(self.dim), s))
    }

    pub fn is_commutative(&self, s: &Subspace) -> bool {
        self.bracket_span(s, s).dim() == 0
    }

    /// The Lie algebra on the echelon basis of `s`, if `s` is closed.
    pub fn subalgebra(&self, s: &Subspace, name: &str) -> Result<LieAlgebra, LieError> {
        let b = s.basis();
        let m = b.len();
        let mut out = LieAlgebra::abelian(name, m);
        for p in 0..m {
            for q in p + 1..m {
                let w = self.bracket(&b[p], &b[q]);
                let coords = s.coordinates(&w).ok_or(LieError::NotClosed)?;
                out.set_bracket(p, q, coords)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim)
    }
}

impl fmt::Display for LieAlgebra {
    /// One line per nonzero bracket `[x_i, x_j] = ...` with `i < j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name, self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_basis(i, j);
                if !is_zero_vector(v) {
                    writeln!(f, "[x{}, x{}] = {}", i + 1, j + 1, self.linear_form(v))?;
                }
            }
        }
        Ok(())
    }
}
