//! Finite-dimensional unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{sparse_from_dense, Matrix, SparseVec};
use crate::report::{tuples, Report};
use crate::tensor::Lin;

/// `e_i · e_j = Σ_k c_{ijk} e_k` with a distinguished unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    name: String,
    dim: usize,
    /// `table[i * dim + j]` is `e_i e_j`.
    table: Vec<SparseVec<F>>,
    unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    /// Validating constructor; `c[i][j][k]` is the coefficient of `e_k` in `e_i e_j`.
    pub fn new(name: impl Into<String>, c: &[Vec<Vec<F>>], unit: Vec<F>) -> Result<Self> {
        let a = Self::unchecked(name, c, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// Build without running the axiom suite. Shapes are still checked.
    pub fn unchecked(name: impl Into<String>, c: &[Vec<Vec<F>>], unit: Vec<F>) -> Result<Self> {
        let name = name.into();
        let n = c.len();
        if n == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if unit.len() != n || c.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimMismatch(format!("structure constants of {name} are not {n}x{n}x{n}")));
        }
        let table = c.iter().flat_map(|r| r.iter().map(|v| sparse_from_dense(v))).collect();
        Ok(Algebra { name, dim: n, table, unit })
    }

    pub fn from_products(name: impl Into<String>, dim: usize, mut f: impl FnMut(usize, usize) -> Vec<F>, unit: Vec<F>) -> Result<Self> {
        let c: Vec<Vec<Vec<F>>> = (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect();
        Self::new(name, &c, unit)
    }

    pub fn validate(&self) -> Result<()> {
        let r = check_algebra(self);
        if let Some(c) = r.failures().next() {
            return Err(Error::AlgebraAxiom { algebra: self.name.clone(), law: c.id.clone(), witness: c.witness.clone() });
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim + j]
    }

    /// Dense structure constants `c[i][j][k]`.
    pub fn structure(&self) -> Vec<Vec<Vec<F>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut v = vec![F::zero(); self.dim];
                        for (k, x) in self.product_of_basis(i, j) {
                            v[*k] = x.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in self.product_of_basis(i, j) {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    /// The product as a map `A ⊗ A → A`.
    pub fn mul_lin(&self) -> Lin<F> {
        Lin::new(vec![self.dim, self.dim], vec![self.dim], self.table.clone())
    }

    /// `k → A`, `1 ↦ 1_A`.
    pub fn unit_lin(&self) -> Lin<F> {
        Lin::new(vec![1], vec![self.dim], vec![sparse_from_dense(&self.unit)])
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product_of_basis(i, j) == self.product_of_basis(j, i)))
    }

    /// Same basis, reversed product. Involutive bit for bit.
    pub fn opposite(&self) -> Algebra<F> {
        let n = self.dim;
        let table = (0..n * n).map(|ij| self.table[(ij % n) * n + ij / n].clone()).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Algebra { name, dim: n, table, unit: self.unit.clone() }
    }

    /// Tensor product algebra on the basis `e_i ⊗ f_j ↦ i * m + j`.
    pub fn tensor(&self, o: &Algebra<F>) -> Algebra<F> {
        let (n, m) = (self.dim, o.dim);
        let d = n * m;
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let (i, j) = (a / m, a % m);
                let (k, l) = (b / m, b % m);
                let mut v = vec![F::zero(); d];
                for (p, x) in self.product_of_basis(i, k) {
                    for (q, y) in o.product_of_basis(j, l) {
                        v[p * m + q].add_mul(x, y);
                    }
                }
                table.push(sparse_from_dense(&v));
            }
        }
        let mut unit = vec![F::zero(); d];
        for (i, x) in self.unit.iter().enumerate() {
            for (j, y) in o.unit.iter().enumerate() {
                unit[i * m + j] = x.mul(y);
            }
        }
        Algebra { name: format!("{}(x){}", self.name, o.name), dim: d, table, unit }
    }

    /// `B^e = B ⊗ B̄`.
    pub fn enveloping(&self) -> Algebra<F> {
        self.tensor(&self.opposite()).with_name(format!("{}^e", self.name))
    }

    /// Coordinates of the basis in terms of the product of two elements given
    /// by matrices; used by morphism checks.
    fn images_mul(&self, f: &Matrix<F>, x: &[F], y: &[F]) -> Vec<F> {
        self.mul(&f.mul_vec(x), &f.mul_vec(y))
    }
}

/// Matrices of the left and right regular action of each basis element.
pub fn regular_actions<F: Field>(a: &Algebra<F>) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    let left = (0..a.dim()).map(|i| a.left_matrix(&a.basis(i))).collect();
    let right = (0..a.dim()).map(|i| a.right_matrix(&a.basis(i))).collect();
    (left, right)
}

/// Associativity on all basis triples and both unit laws on all basis elements.
pub fn check_algebra<F: Field>(a: &Algebra<F>) -> Report {
    let n = a.dim();
    let mut r = Report::new("algebra");
    r.check_all("assoc", "(e_ie_j)e_k=e_i(e_je_k)", tuples(&[n, n, n]), |t| {
        let ij = a.mul(&a.basis(t[0]), &a.basis(t[1]));
        let jk = a.mul(&a.basis(t[1]), &a.basis(t[2]));
        a.mul(&ij, &a.basis(t[2])) == a.mul(&a.basis(t[0]), &jk)
    });
    r.check_all("unit-left", "1e_i=e_i", tuples(&[n]), |t| a.mul(a.unit(), &a.basis(t[0])) == a.basis(t[0]));
    r.check_all("unit-right", "e_i1=e_i", tuples(&[n]), |t| a.mul(&a.basis(t[0]), a.unit()) == a.basis(t[0]));
    r
}

/// A validated unital algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism<F> {
    pub name: String,
    /// `target.dim × source.dim`
    pub matrix: Matrix<F>,
}

impl<F: Field> AlgebraMorphism<F> {
    pub fn new(name: impl Into<String>, source: &Algebra<F>, target: &Algebra<F>, matrix: Matrix<F>) -> Result<Self> {
        let name = name.into();
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimMismatch(format!("{name}: {}x{} matrix for {} -> {}", matrix.rows(), matrix.cols(), source.dim(), target.dim())));
        }
        if let Some(w) = morphism_failure(source, target, &matrix) {
            return Err(Error::NotAlgebraMap { map: name, witness: w });
        }
        Ok(AlgebraMorphism { name, matrix })
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        self.matrix.mul_vec(x)
    }

    pub fn lin(&self) -> Lin<F> {
        Lin::from_matrix(&self.matrix)
    }
}

/// First basis pair violating multiplicativity, or `[]` when `f(1) != 1`.
pub fn morphism_failure<F: Field>(source: &Algebra<F>, target: &Algebra<F>, f: &Matrix<F>) -> Option<Vec<usize>> {
    if f.mul_vec(source.unit()) != target.unit() {
        return Some(vec![]);
    }
    let n = source.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(&source.mul(&source.basis(i), &source.basis(j)));
            if lhs != target.images_mul(f, &source.basis(i), &source.basis(j)) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// The group algebra on a multiplication table, identity element at index 0
/// after validation.
pub fn group_algebra<F: Field>(name: &str, table: &[Vec<usize>]) -> Result<Algebra<F>> {
    let n = table.len();
    check_group(table)?;
    let e = (0..n).find(|&i| (0..n).all(|j| table[i][j] == j)).expect("identity checked");
    let mut unit = vec![F::zero(); n];
    unit[e] = F::one();
    Algebra::from_products(
        name,
        n,
        |i, j| {
            let mut v = vec![F::zero(); n];
            v[table[i][j]] = F::one();
            v
        },
        unit,
    )
}

pub fn check_group(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not square over 0..n".into()));
    }
    let e = (0..n).find(|&i| (0..n).all(|j| table[i][j] == j && table[j][i] == j)).ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!("not associative at ({i},{j},{k})")));
                }
            }
        }
        if !(0..n).any(|j| table[i][j] == e) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn z2() -> Algebra<Q> {
        group_algebra("QZ2", &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// Upper triangular 2x2 matrices on e11, e12, e22.
    fn t2() -> Algebra<Q> {
        let unit = vec![Q::one(), Q::zero(), Q::one()];
        Algebra::from_products(
            "T2",
            3,
            |i, j| {
                let mut v = vec![Q::zero(); 3];
                match (i, j) {
                    (0, 0) => v[0] = Q::one(),
                    (0, 1) => v[1] = Q::one(),
                    (1, 2) => v[1] = Q::one(),
                    (2, 2) => v[2] = Q::one(),
                    _ => {}
                }
                v
            },
            unit,
        )
        .unwrap()
    }

    #[test]
    fn z2_passes_and_perturbation_fails() {
        assert!(check_algebra(&z2()).pass());
        let mut c = z2().structure();
        c[0][1][1] = Q::from_i64(2);
        let err = Algebra::new("bad", &c, vec![Q::one(), Q::zero()]).unwrap_err();
        assert_eq!(err, Error::AlgebraAxiom { algebra: "bad".into(), law: "assoc".into(), witness: vec![0, 0, 1] });
        assert_eq!(Algebra::<Q>::new("zero", &[], vec![]), Err(Error::ZeroAlgebra));
    }

    #[test]
    fn opposite_properties() {
        assert_eq!(z2().opposite().structure(), z2().structure());
        let t = t2();
        let op = t.opposite();
        assert_eq!(op.product_of_basis(1, 0), t.product_of_basis(0, 1));
        assert_eq!(op.opposite().structure(), t.structure());
        assert!(check_algebra(&op).pass());
    }

    #[test]
    fn enveloping_of_product_algebra() {
        let qq = Algebra::<Q>::from_products(
            "QxQ",
            2,
            |i, j| {
                let mut v = vec![Q::zero(); 2];
                if i == j {
                    v[i] = Q::one();
                }
                v
            },
            vec![Q::one(), Q::one()],
        )
        .unwrap();
        let e = qq.enveloping();
        assert_eq!(e.dim(), 4);
        assert!(e.is_commutative());
        for i in 0..4 {
            assert_eq!(e.mul(&e.basis(i), &e.basis(i)), e.basis(i));
        }
        assert!(check_algebra(&e).pass());
        let k = group_algebra::<Q>("k", &[vec![0]]).unwrap();
        assert_eq!(k.enveloping().dim(), 1);
    }
}
