//! Exact linear algebra over the rationals.

use num_traits::{One, Zero};

use exactpoly::Rational;

pub type Vector = Vec<Rational>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vector>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![zero_vector(cols); rows] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(data: Vec<Vector>, cols: usize) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        QMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i][j] = v;
    }

    pub fn push_row(&mut self, row: Vector) {
        assert_eq!(row.len(), self.cols, "row length");
        self.data.push(row);
        self.rows += 1;
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        self.data.iter().map(|r| r.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let aug: Vec<Vector> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend(unit_vector(n, i));
                row
            })
            .collect();
        let (r, pivots) = QMatrix::from_rows(aug, 2 * n).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_rows(r.data.into_iter().map(|row| row[n..].to_vec()).collect(), n))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (QMatrix { rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}` in reduced echelon form.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = zero_vector(self.cols);
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.data[row][f].clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }
}

/// Subspace of `Q^n` kept as a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        let m = QMatrix::from_rows(rows, ambient);
        let (r, pivots) = m.rref();
        let basis = r.data.into_iter().take(pivots.len()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is not in the
    /// subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
        is_zero_vector(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = sum a_i u_i = sum b_j w_j; solve for (a, b).
        let d1 = self.dim();
        let d2 = other.dim();
        let mut m = QMatrix::zero(self.ambient, d1 + d2);
        for k in 0..self.ambient {
            for (i, u) in self.basis.iter().enumerate() {
                m.set(k, i, u[k].clone());
            }
            for (j, w) in other.basis.iter().enumerate() {
                m.set(k, d1 + j, -w[k].clone());
            }
        }
        let vectors = m.nullspace().basis.into_iter().map(|sol| {
            let mut v = zero_vector(self.ambient);
            for (a, u) in sol[..d1].iter().zip(&self.basis) {
                for (x, y) in v.iter_mut().zip(u) {
                    *x += a * y;
                }
            }
            v
        });
        Subspace::span(self.ambient, vectors.collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qv(v: &[i64]) -> Vector {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = QMatrix::from_rows(vec![qv(&[1, 2, 3]), qv(&[2, 4, 6]), qv(&[0, 1, 1])], 3);
        assert_eq!(m.rank(), 2);
        let n = m.nullspace();
        assert_eq!(n.dim(), 1);
        assert!(is_zero_vector(&m.mul_vec(&n.basis()[0])));
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::span(3, vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])]);
        let b = Subspace::span(3, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(3, vec![qv(&[2, 2, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.coordinates(&qv(&[3, 3, -1])), Some(qv(&[3, -1])));
        assert!(!a.contains(&qv(&[1, 0, 0])));
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_rows(vec![qv(&[2, 1]), qv(&[5, 3])], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));
        assert!(QMatrix::from_rows(vec![qv(&[1, 2]), qv(&[2, 4])], 2).inverse().is_none());
    }
}
