use crate::field::Field;
use crate::linalg::{Matrix, SparseVec, Subspace};

/// `ambient / relations`, with the non-pivot columns of the echelonized
/// relations as representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace<F> {
    relations: Subspace<F>,
    free: Vec<usize>,
    rep_of: Vec<usize>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(relations: Subspace<F>) -> Self {
        let n = relations.ambient();
        let free: Vec<usize> = (0..n).filter(|&c| !relations.is_pivot(c)).collect();
        let mut rep_of = vec![usize::MAX; n];
        for (i, &c) in free.iter().enumerate() {
            rep_of[c] = i;
        }
        QuotientSpace { relations, free, rep_of }
    }

    pub fn trivial(ambient: usize) -> Self {
        Self::new(Subspace::zero(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// Ambient column used for each representative.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project_sparse(&self, v: &SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (c, x) in v {
            match self.relations.row_for_pivot(*c) {
                Some(row) => {
                    for (j, y) in row.iter().skip(1) {
                        let r = self.rep_of[*j];
                        let cur = out[r].sub(&x.mul(y));
                        out[r] = cur;
                    }
                }
                None => out[self.rep_of[*c]].add_assign(x),
            }
        }
        out
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match self.relations.row_for_pivot(c) {
                Some(row) => {
                    // row[0] is the pivot itself, the rest sits on free columns
                    for (j, y) in row.iter().skip(1) {
                        let r = self.rep_of[*j];
                        let cur = out[r].sub(&x.mul(y));
                        out[r] = cur;
                    }
                }
                None => out[self.rep_of[c]].add_assign(x),
            }
        }
        out
    }

    pub fn section(&self, r: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient()];
        for (i, x) in r.iter().enumerate() {
            out[self.free[i]] = x.clone();
        }
        out
    }

    pub fn project_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(), self.ambient());
        for c in 0..self.ambient() {
            let mut e = vec![F::zero(); self.ambient()];
            e[c] = F::one();
            m.set_col(c, &self.project(&e));
        }
        m
    }

    pub fn section_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.ambient(), self.dim());
        for (i, &c) in self.free.iter().enumerate() {
            m[(c, i)] = F::one();
        }
        m
    }
}
