//! Dense tensors over a fixed list of leg dimensions and sparse multilinear
//! maps between them.
//!
//! Every Sweedler-style expression in the crate is evaluated by starting from
//! a basis tensor and applying [`Lin`]s (coproducts, products, tables such as
//! `X ↦ X+ ⊗ X-`) to selected legs.

use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};

fn size(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Decompose a flat row-major index.
pub fn unflatten(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn flatten(dims: &[usize], multi: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// A linear map `⊗ in_dims → ⊗ out_dims`, stored by sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin<F> {
    pub in_dims: Vec<usize>,
    pub out_dims: Vec<usize>,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> Lin<F> {
    /// Columns must be sorted by index with no zero entries.
    pub fn new(in_dims: Vec<usize>, out_dims: Vec<usize>, cols: Vec<SparseVec<F>>) -> Self {
        assert_eq!(cols.len(), size(&in_dims), "column count");
        Lin { in_dims, out_dims, cols }
    }

    pub fn from_fn(in_dims: Vec<usize>, out_dims: Vec<usize>, mut f: impl FnMut(usize) -> Vec<F>) -> Self {
        let cols = (0..size(&in_dims))
            .map(|i| {
                let v = f(i);
                debug_assert_eq!(v.len(), size(&out_dims));
                crate::linalg::sparse_from_dense(&v)
            })
            .collect();
        Lin { in_dims, out_dims, cols }
    }

    pub fn from_tensors(in_dims: Vec<usize>, out_dims: Vec<usize>, cols: &[Tensor<F>]) -> Self {
        Self::from_fn(in_dims, out_dims, |i| cols[i].data.clone())
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        Self::from_fn(vec![m.cols()], vec![m.rows()], |j| m.col(j))
    }

    pub fn identity(n: usize) -> Self {
        Lin { in_dims: vec![n], out_dims: vec![n], cols: (0..n).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn col(&self, i: usize) -> &SparseVec<F> {
        &self.cols[i]
    }

    /// The image of input basis element `i` as a tensor.
    pub fn image(&self, i: usize) -> Tensor<F> {
        let mut t = Tensor::zeros(&self.out_dims);
        for (j, x) in &self.cols[i] {
            t.data[*j] = x.clone();
        }
        t
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(size(&self.out_dims), size(&self.in_dims));
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m[(*i, j)] = x.clone();
            }
        }
        m
    }

    pub fn apply_vec(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); size(&self.out_dims)];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, y) in &self.cols[j] {
                out[*i].add_mul(x, y);
            }
        }
        out
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Lin<F>) -> Lin<F> {
        assert_eq!(self.out_dims.iter().product::<usize>(), other.in_dims.iter().product::<usize>(), "composition");
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut v = vec![F::zero(); size(&other.out_dims)];
                for (j, x) in c {
                    for (i, y) in &other.cols[*j] {
                        v[*i].add_mul(x, y);
                    }
                }
                crate::linalg::sparse_from_dense(&v)
            })
            .collect();
        Lin { in_dims: self.in_dims.clone(), out_dims: other.out_dims.clone(), cols }
    }
}

/// Dense row-major tensor; the last leg varies fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<F> {
    dims: Vec<usize>,
    data: Vec<F>,
}

impl<F: Field> Tensor<F> {
    pub fn zeros(dims: &[usize]) -> Self {
        Tensor { dims: dims.to_vec(), data: vec![F::zero(); size(dims)] }
    }

    pub fn from_vec(dims: &[usize], data: Vec<F>) -> Self {
        assert_eq!(data.len(), size(dims), "tensor data length");
        Tensor { dims: dims.to_vec(), data }
    }

    pub fn basis(dims: &[usize], multi: &[usize]) -> Self {
        let mut t = Self::zeros(dims);
        t.data[flatten(dims, multi)] = F::one();
        t
    }

    /// Basis vector of a single leg.
    pub fn e(n: usize, i: usize) -> Self {
        Self::basis(&[n], &[i])
    }

    pub fn vector(v: &[F]) -> Self {
        Tensor { dims: vec![v.len()], data: v.to_vec() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Tensor<F>) -> Tensor<F> {
        assert_eq!(self.dims, o.dims, "tensor add");
        Tensor { dims: self.dims.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Tensor<F>) -> Tensor<F> {
        assert_eq!(self.dims, o.dims, "tensor sub");
        Tensor { dims: self.dims.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &F) -> Tensor<F> {
        Tensor { dims: self.dims.clone(), data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn outer(&self, o: &Tensor<F>) -> Tensor<F> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&o.dims);
        let mut data = vec![F::zero(); self.data.len() * o.data.len()];
        for (i, a) in self.data.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.data.iter().enumerate() {
                if !b.is_zero() {
                    data[i * o.data.len() + j] = a.mul(b);
                }
            }
        }
        Tensor { dims, data }
    }

    /// New leg `k` is old leg `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor<F> {
        assert_eq!(perm.len(), self.dims.len(), "permutation length");
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zeros(&dims);
        for (idx, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let m = unflatten(&self.dims, idx);
            let nm: Vec<usize> = perm.iter().map(|&p| m[p]).collect();
            out.data[flatten(&dims, &nm)] = x.clone();
        }
        out
    }

    /// Apply `lin` to the given legs (in the order listed). The output legs
    /// replace the input legs at the position of the smallest of them.
    pub fn apply(&self, legs: &[usize], lin: &Lin<F>) -> Tensor<F> {
        assert_eq!(legs.len(), lin.in_dims.len(), "leg count for map");
        for (k, &l) in legs.iter().enumerate() {
            assert_eq!(self.dims[l], lin.in_dims[k], "leg {l} has dim {} but map expects {}", self.dims[l], lin.in_dims[k]);
        }
        let pos = *legs.iter().min().expect("at least one leg");
        let rest: Vec<usize> = (0..self.dims.len()).filter(|l| !legs.contains(l)).collect();
        let before: Vec<usize> = rest.iter().copied().filter(|&l| l < pos).collect();
        let after: Vec<usize> = rest.iter().copied().filter(|&l| l > pos).collect();
        let mut dims: Vec<usize> = before.iter().map(|&l| self.dims[l]).collect();
        dims.extend_from_slice(&lin.out_dims);
        dims.extend(after.iter().map(|&l| self.dims[l]));
        let out_size = size(&lin.out_dims);
        let after_size: usize = after.iter().map(|&l| self.dims[l]).product();
        let mut data = vec![F::zero(); size(&dims)];
        let mut m = vec![0usize; self.dims.len()];
        for (idx, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut r = idx;
            for k in (0..self.dims.len()).rev() {
                m[k] = r % self.dims[k];
                r /= self.dims[k];
            }
            let input = legs.iter().fold(0, |acc, &l| acc * self.dims[l] + m[l]);
            let b = before.iter().fold(0, |acc, &l| acc * self.dims[l] + m[l]);
            let a = after.iter().fold(0, |acc, &l| acc * self.dims[l] + m[l]);
            let base = b * out_size * after_size + a;
            for (o, c) in &lin.cols[input] {
                data[base + o * after_size].add_mul(x, c);
            }
        }
        Tensor { dims, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn apply_inserts_at_first_leg() {
        // swap map on 2x3 inputs -> 3x2
        let swap = Lin::<Q>::from_fn(vec![2, 3], vec![3, 2], |i| {
            let m = unflatten(&[2, 3], i);
            let mut v = vec![Q::zero(); 6];
            v[flatten(&[3, 2], &[m[1], m[0]])] = Q::one();
            v
        });
        let t = Tensor::<Q>::basis(&[4, 2, 3], &[1, 1, 2]);
        let u = t.apply(&[1, 2], &swap);
        assert_eq!(u, Tensor::basis(&[4, 3, 2], &[1, 2, 1]));
        let p = t.permute(&[2, 0, 1]);
        assert_eq!(p, Tensor::basis(&[3, 4, 2], &[2, 1, 1]));
    }
}
