use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of Gauss-Jordan elimination: the reduced matrix and its pivot columns.
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    m[(i, j)] = v.clone();
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[F]) {
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Matrix<F>) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![F::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Matrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    /// Kronecker product; row index `i*o.rows + k`, column index `j*o.cols + l`.
    pub fn kron(&self, o: &Matrix<F>) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + k, j * o.cols + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, o: &Matrix<F>) -> Self {
        assert_eq!(self.cols, o.cols, "vstack width");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, o: &Matrix<F>) -> Self {
        assert_eq!(self.rows, o.rows, "hstack height");
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| if j < self.cols { self[(i, j)].clone() } else { o[(i, j - self.cols)].clone() })
    }

    /// Gauss-Jordan elimination scanning columns left to right.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    let v = m[(r, j)].mul(&inv);
                    m[(r, j)] = v;
                }
            }
            let pivot_row: Vec<(usize, F)> = (c..m.cols).filter(|&j| !m[(r, j)].is_zero()).map(|j| (j, m[(r, j)].clone())).collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let cur = m[(i, *j)].sub(&f.mul(v));
                    m[(i, *j)] = cur;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    /// Rank by sparse elimination of the rows, which is much cheaper than a
    /// dense reduction on the mostly-zero matrices of tensor maps.
    pub fn rank(&self) -> usize {
        let mut span = super::Subspace::zero(self.cols);
        for i in 0..self.rows {
            let row: Vec<(usize, F)> = self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect();
            if !row.is_empty() {
                span.insert(row);
            }
        }
        span.dim()
    }

    /// The unique solution of the pivoted system with free variables set to zero.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        if b.len() != self.rows {
            return Err(Error::DimMismatch(format!("rhs of length {} for {} rows", b.len(), self.rows)));
        }
        let aug = self.hstack(&Matrix::from_cols(self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = matrix[(i, self.cols)].clone();
        }
        Ok(x)
    }

    /// Solve `self · X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix<F>) -> Result<Matrix<F>> {
        if b.rows != self.rows {
            return Err(Error::DimMismatch("solve_matrix rows".into()));
        }
        let aug = self.hstack(b);
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(c, j)] = matrix[(i, self.cols + j)].clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let Rref { matrix, pivots } = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            let rank = pivots.iter().filter(|&&c| c < n).count();
            return Err(Error::NotBijective { rank, domain: n, codomain: n });
        }
        Ok(Matrix::from_fn(n, n, |i, j| matrix[(i, n + j)].clone()))
    }

    /// Basis of the null space as columns of the returned vectors, one per free column.
    pub fn null_vectors(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = matrix[(i, f)].neg();
            }
            out.push(v);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::from_i64(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn solve_back_substitution() {
        let a = q(&[&[1, 1], &[0, 1]]);
        let x = a.solve(&[Q::from_i64(3), Q::from_i64(1)]).unwrap();
        assert_eq!(x, vec![Q::from_i64(2), Q::from_i64(1)]);
        let z = Matrix::<Q>::zeros(2, 2);
        assert_eq!(z.solve(&[Q::one(), Q::zero()]), Err(Error::NoSolution));
    }

    #[test]
    fn inverse_diagonal_and_singular() {
        let a = q(&[&[2, 0], &[0, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 0)], Q::new(1, 2));
        assert_eq!(inv[(1, 1)], Q::new(1, 3));
        assert!(a.mul(&inv).is_identity());
        let s = q(&[&[1, 1], &[1, 1]]);
        assert!(matches!(s.inverse(), Err(Error::NotBijective { rank: 1, .. })));
    }

    #[test]
    fn kernel_rank_nullity() {
        let a = q(&[&[1, 1]]);
        let k = a.null_vectors();
        assert_eq!(k, vec![vec![Q::from_i64(-1), Q::one()]]);
        assert_eq!(a.rank() + k.len(), 2);
    }
}
