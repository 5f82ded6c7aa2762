use super::Bialgebroid;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

pub const TENSOR_BBAR: &str = "int_b L(b~) * (b~)L";
pub const TENSOR_B: &str = "int_b L(b) * (b)L";
pub const COTENSOR_B: &str = "int_b (b)L * L(b)";
pub const COTENSOR_BBAR: &str = "int_b (b~)L * L(b~)";
pub const DIAMOND: &str = "int_b (b~)L * (b)L";

/// `λ: L⊗_B̄ L → L◇L` and its inverse. `table` sends `X` to a canonical
/// representative of `X₊ ⊗ X₋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftHopf<F> {
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub lambda: Matrix<F>,
    pub lambda_inv: Matrix<F>,
    pub table: Lin<F>,
}

/// `μ: L⊗^B L → L◇L` and its inverse. `table` sends `X` to `X₍₋₎ ⊗ X₍₊₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiLeftHopf<F> {
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub mu: Matrix<F>,
    pub mu_inv: Matrix<F>,
    pub table: Lin<F>,
}

fn invert<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    if m.rows() != m.cols() {
        return None;
    }
    m.inverse().ok()
}

pub fn galois_lambda<F: Field>(bg: &Bialgebroid<F>) -> Result<LeftHopf<F>> {
    let n = bg.n();
    let domain = bg.space(TENSOR_BBAR, 2)?;
    let codomain = bg.space(DIAMOND, 2)?;
    let lambda = descend_map(&domain, &codomain, "lambda", |t| {
        let t = t.apply(&[0], bg.delta());
        bg.mul_legs(&t, 1, 2)
    })?;
    let lambda_inv = invert(&lambda).ok_or(Error::NotLeftHopf { rank: lambda.rank(), dim: domain.dim().max(codomain.dim()) })?;
    let one = bg.one();
    let table = Lin::from_fn(vec![n], vec![n, n], |x| {
        let rep = lambda_inv.mul_vec(&codomain.project(&bg.e(x).outer(&one)));
        domain.section(&rep).into_data()
    });
    Ok(LeftHopf { domain, codomain, lambda, lambda_inv, table })
}

pub fn galois_mu<F: Field>(bg: &Bialgebroid<F>) -> Result<AntiLeftHopf<F>> {
    let n = bg.n();
    let domain = bg.space(COTENSOR_B, 2)?;
    let codomain = bg.space(DIAMOND, 2)?;
    let mu = descend_map(&domain, &codomain, "mu", |t| {
        // X⊗Y ↦ Y₍₁₎X ⊗ Y₍₂₎
        let t = t.apply(&[1], bg.delta());
        bg.mul_legs(&t, 1, 0)
    })?;
    let mu_inv = invert(&mu).ok_or(Error::NotAntiLeftHopf { rank: mu.rank(), dim: domain.dim().max(codomain.dim()) })?;
    let one = bg.one();
    let table = Lin::from_fn(vec![n], vec![n, n], |x| {
        let rep = mu_inv.mul_vec(&codomain.project(&one.outer(&bg.e(x))));
        domain.section(&rep).into_data()
    });
    Ok(AntiLeftHopf { domain, codomain, mu, mu_inv, table })
}

impl<F: Field> LeftHopf<F> {
    /// `X₊ ⊗ X₋` for an arbitrary tensor leg: replaces leg `k` by two legs.
    pub fn pm(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.table)
    }

    /// Same structure with one table entry replaced, for perturbation tests.
    pub fn with_entry(&self, x: usize, value: Tensor<F>) -> Self {
        let n = self.table.in_dims[0];
        let table = Lin::from_fn(vec![n], vec![n, n], |i| if i == x { value.data().to_vec() } else { self.table.image(i).into_data() });
        LeftHopf { table, ..self.clone() }
    }
}

impl<F: Field> AntiLeftHopf<F> {
    pub fn bracket(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.table)
    }

    pub fn with_entry(&self, x: usize, value: Tensor<F>) -> Self {
        let n = self.table.in_dims[0];
        let table = Lin::from_fn(vec![n], vec![n, n], |i| if i == x { value.data().to_vec() } else { self.table.image(i).into_data() });
        AntiLeftHopf { table, ..self.clone() }
    }
}
