use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{subspace, Matrix, QuotientSpace, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VSpace {
    pub dim: usize,
    pub label: String,
}

impl VSpace {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        VSpace { dim, label: label.into() }
    }
}

/// A matrix together with its domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<F> {
    pub domain: VSpace,
    pub codomain: VSpace,
    pub matrix: Matrix<F>,
}

impl<F: Field> LinearMap<F> {
    pub fn new(domain: VSpace, codomain: VSpace, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != codomain.dim || matrix.cols() != domain.dim {
            return Err(Error::DimMismatch(format!(
                "{}x{} matrix for {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.label,
                codomain.label
            )));
        }
        Ok(LinearMap { domain, codomain, matrix })
    }

    pub fn identity(space: VSpace) -> Self {
        let matrix = Matrix::identity(space.dim);
        LinearMap { domain: space.clone(), codomain: space, matrix }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &LinearMap<F>) -> Result<Self> {
        if first.codomain.dim != self.domain.dim {
            return Err(Error::DimMismatch(format!("cannot compose {} after {}", self.domain.label, first.codomain.label)));
        }
        Ok(LinearMap { domain: first.domain.clone(), codomain: self.codomain.clone(), matrix: self.matrix.mul(&first.matrix) })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

pub fn solve_linear<F: Field>(a: &LinearMap<F>, b: &[F]) -> Result<Vec<F>> {
    a.matrix.solve(b)
}

pub fn kernel<F: Field>(a: &LinearMap<F>) -> Subspace<F> {
    subspace::kernel(&a.matrix)
}

pub fn quotient_by<F: Field>(ambient: &VSpace, relation_vectors: &[Vec<F>]) -> Result<QuotientSpace<F>> {
    if let Some(v) = relation_vectors.iter().find(|v| v.len() != ambient.dim) {
        return Err(Error::DimMismatch(format!("relation of length {} in {}", v.len(), ambient.label)));
    }
    let rel = Subspace::spanned_by(ambient.dim, relation_vectors.iter().map(|v| v.as_slice()));
    Ok(QuotientSpace::new(rel))
}

pub fn intersect<F: Field>(subspaces: &[Subspace<F>]) -> Result<Subspace<F>> {
    subspace::intersect(subspaces)
}

pub fn invert_map<F: Field>(a: &LinearMap<F>) -> Result<LinearMap<F>> {
    if a.domain.dim != a.codomain.dim {
        return Err(Error::DimMismatch(format!("{} -> {} is not square", a.domain.label, a.codomain.label)));
    }
    let inv = a.matrix.inverse()?;
    Ok(LinearMap { domain: a.codomain.clone(), codomain: a.domain.clone(), matrix: inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn v(x: &[i64]) -> Vec<Q> {
        x.iter().map(|&a| Q::from_i64(a)).collect()
    }

    #[test]
    fn quotient_examples() {
        let amb = VSpace::new(2, "V");
        let q = quotient_by(&amb, &[v(&[1, -1])]).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&v(&[1, 0])), q.project(&v(&[0, 1])));

        let q = quotient_by::<Q>(&VSpace::new(3, "V"), &[]).unwrap();
        assert!(q.project_matrix().is_identity());
        assert!(q.section_matrix().is_identity());

        let rels = [v(&[1, 1, 0, 0]), v(&[0, 1, 1, 0]), v(&[0, 0, 1, 1]), v(&[1, 2, 2, 1])];
        let q = quotient_by(&VSpace::new(4, "V"), &rels).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.project_matrix().mul(&q.section_matrix()).is_identity());
    }

    #[test]
    fn invert_examples() {
        let d = Matrix::from_rows(vec![v(&[2, 0]), v(&[0, 3])]).unwrap();
        let a = LinearMap::new(VSpace::new(2, "V"), VSpace::new(2, "V"), d).unwrap();
        let inv = invert_map(&a).unwrap();
        assert_eq!(inv.matrix[(0, 0)], Q::new(1, 2));
        assert_eq!(inv.matrix[(1, 1)], Q::new(1, 3));
        let s = Matrix::from_rows(vec![v(&[1, 1]), v(&[1, 1])]).unwrap();
        let a = LinearMap::new(VSpace::new(2, "V"), VSpace::new(2, "V"), s).unwrap();
        assert!(matches!(invert_map(&a), Err(Error::NotBijective { rank: 1, .. })));
    }
}
