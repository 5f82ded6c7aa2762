use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn dense_from_sparse<F: Field>(n: usize, v: &SparseVec<F>) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - c·b` for sparse vectors.
fn axpy<F: Field>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A subspace of `F^ambient`, stored as its canonical reduced row echelon basis.
///
/// Rows are kept fully reduced at every step: each row is 1 at its pivot, 0 at
/// every other pivot and 0 left of its pivot. Inserting vectors in any order
/// therefore ends in the same representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    /// Rows sorted by pivot once `finish` has run; insertion order before.
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    /// `row_of[c]` is the row with pivot `c`, or `usize::MAX`.
    row_of: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new(), row_of: vec![usize::MAX; ambient] }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            s.rows.push(vec![(i, F::one())]);
            s.pivots.push(i);
            s.row_of[i] = i;
        }
        s
    }

    pub fn spanned_by<'a>(ambient: usize, vecs: impl IntoIterator<Item = &'a [F]>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vecs {
            s.insert_dense(v);
        }
        s.finish();
        s
    }

    pub fn spanned_by_sparse(ambient: usize, vecs: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vecs {
            s.insert(v);
        }
        s.finish();
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of[c] != usize::MAX
    }

    pub fn row_for_pivot(&self, c: usize) -> Option<&SparseVec<F>> {
        let r = self.row_of[c];
        (r != usize::MAX).then(|| &self.rows[r])
    }

    /// Reduce a sparse vector against the basis. The result is zero at every pivot.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for (c, x) in v {
            let r = self.row_of[*c];
            if r != usize::MAX {
                // current coefficient at c is still x: rows vanish on other pivots
                out = axpy(&out, x, &self.rows[r]);
            }
        }
        out
    }

    pub fn reduce_dense(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let r = self.row_of[c];
            if r != usize::MAX {
                let x = x.clone();
                for (j, y) in &self.rows[r] {
                    let cur = out[*j].sub(&x.mul(y));
                    out[*j] = cur;
                }
            }
        }
        out
    }

    pub fn contains_sparse(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce_dense(v).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        assert!(v.last().map_or(true, |(i, _)| *i < self.ambient), "vector outside ambient space");
        let mut w = self.reduce(&v);
        let Some((p, lead)) = w.first().cloned() else { return false };
        let inv = lead.inv().expect("nonzero lead");
        for e in w.iter_mut() {
            e.1 = e.1.mul(&inv);
        }
        for r in 0..self.rows.len() {
            let row = &self.rows[r];
            if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                let c = row[k].1.clone();
                self.rows[r] = axpy(row, &c, &w);
            }
        }
        self.row_of[p] = self.rows.len();
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn insert_dense(&mut self, v: &[F]) -> bool {
        self.insert(sparse_from_dense(v))
    }

    /// Sort rows by pivot so that the representation is canonical.
    pub fn finish(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let rows = std::mem::take(&mut self.rows);
        let mut rows: Vec<Option<SparseVec<F>>> = rows.into_iter().map(Some).collect();
        self.rows = order.iter().map(|&r| rows[r].take().expect("row")).collect();
        self.pivots = order.iter().map(|&r| self.pivots[r]).collect();
        self.row_of = vec![usize::MAX; self.ambient];
        for (i, &p) in self.pivots.iter().enumerate() {
            self.row_of[p] = i;
        }
    }

    /// Dense basis matrix, one row per basis vector.
    pub fn basis_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows.len(), self.ambient);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                m[(i, *j)] = x.clone();
            }
        }
        m
    }

    pub fn basis_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| dense_from_sparse(self.ambient, r)).collect()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Annihilator: all `y` with `y·x = 0` for every `x` in the subspace.
    pub fn annihilator(&self) -> Subspace<F> {
        kernel(&self.basis_matrix())
    }

    pub fn is_subspace_of(&self, o: &Subspace<F>) -> bool {
        self.ambient == o.ambient && self.rows.iter().all(|r| o.contains_sparse(r))
    }
}

/// Canonical basis of `{x : A x = 0}`.
pub fn kernel<F: Field>(a: &Matrix<F>) -> Subspace<F> {
    let vs = a.null_vectors();
    Subspace::spanned_by(a.cols(), vs.iter().map(|v| v.as_slice()))
}

/// Canonical basis of the column space of `A`.
pub fn image<F: Field>(a: &Matrix<F>) -> Subspace<F> {
    let cols: Vec<Vec<F>> = (0..a.cols()).map(|j| a.col(j)).collect();
    Subspace::spanned_by(a.rows(), cols.iter().map(|v| v.as_slice()))
}

pub fn intersect<F: Field>(subspaces: &[Subspace<F>]) -> Result<Subspace<F>> {
    let Some(first) = subspaces.first() else {
        return Err(Error::DimMismatch("intersection of an empty family".into()));
    };
    let n = first.ambient();
    if let Some(s) = subspaces.iter().find(|s| s.ambient() != n) {
        return Err(Error::AmbientMismatch(n, s.ambient()));
    }
    let mut eqs = Subspace::zero(n);
    for s in subspaces {
        for r in s.annihilator().rows() {
            eqs.insert(r.clone());
        }
    }
    eqs.finish();
    Ok(kernel(&eqs.basis_matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn v(x: &[i64]) -> Vec<Q> {
        x.iter().map(|&a| Q::from_i64(a)).collect()
    }

    #[test]
    fn canonical_regardless_of_order() {
        let a = v(&[1, 2, 0, 1]);
        let b = v(&[0, 1, 1, 1]);
        let c = v(&[1, 3, 1, 2]);
        let s1 = Subspace::spanned_by(4, [a.as_slice(), b.as_slice(), c.as_slice()]);
        let s2 = Subspace::spanned_by(4, [c.as_slice(), b.as_slice()]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert_eq!(s1.pivots(), &[0, 1]);
    }

    #[test]
    fn intersection_examples() {
        let full = Subspace::<Q>::full(2);
        assert_eq!(intersect(&[full.clone(), full.clone()]).unwrap(), full);
        let e1 = Subspace::spanned_by(2, [v(&[1, 0]).as_slice()]);
        let e2 = Subspace::spanned_by(2, [v(&[0, 1]).as_slice()]);
        assert_eq!(intersect(&[e1, e2]).unwrap().dim(), 0);
        let p = Subspace::spanned_by(3, [v(&[1, 0, 0]).as_slice(), v(&[0, 1, 0]).as_slice()]);
        let r = Subspace::spanned_by(3, [v(&[0, 1, 1]).as_slice(), v(&[1, 0, 1]).as_slice()]);
        let i = intersect(&[p, r]).unwrap();
        assert_eq!(i.dim(), 1);
        assert_eq!(i.basis_dense(), vec![v(&[1, -1, 0])]);
        let mismatch = intersect(&[Subspace::<Q>::full(2), Subspace::full(3)]);
        assert_eq!(mismatch, Err(Error::AmbientMismatch(2, 3)));
    }

    #[test]
    fn kernel_is_echelon() {
        let a = Matrix::from_rows(vec![v(&[1, 1])]).unwrap();
        assert_eq!(kernel(&a).basis_dense(), vec![v(&[1, -1])]);
        assert_eq!(kernel(&Matrix::<Q>::identity(2)).dim(), 0);
        assert_eq!(kernel(&Matrix::<Q>::zeros(2, 2)).dim(), 2);
    }
}
