//! Constructors for the standard examples: group bialgebras over the ground
//! field and enveloping bialgebroids `B ⊗ B̄`.

use crate::algebra::{group_algebra, Algebra};
use crate::bering::BeRing;
use crate::bialgebroid::{Bialgebroid, BialgebroidData};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Matrix;

fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// The ground field as a one-dimensional algebra.
pub fn ground<F: Field>() -> Algebra<F> {
    Algebra::from_products("k", 1, |_, _| vec![F::one()], vec![F::one()]).expect("k is an algebra")
}

/// `k^n` with orthogonal idempotents.
pub fn diagonal<F: Field>(name: &str, n: usize) -> Algebra<F> {
    Algebra::from_products(name, n, |i, j| if i == j { unit_vec(n, i) } else { vec![F::zero(); n] }, vec![F::one(); n]).expect("diagonal algebra")
}

/// Upper triangular 2×2 matrices on `e11, e12, e22`.
pub fn upper_triangular2<F: Field>() -> Algebra<F> {
    let idx = |i: usize, j: usize| match (i, j) {
        (0, 0) => Some(0),
        (0, 1) => Some(1),
        (1, 1) => Some(2),
        _ => None,
    };
    let pos = [(0, 0), (0, 1), (1, 1)];
    Algebra::from_products(
        "T2",
        3,
        |a, b| {
            let ((i, j), (k, l)) = (pos[a], pos[b]);
            let mut v = vec![F::zero(); 3];
            if j == k {
                v[idx(i, l).expect("upper triangular is closed")] = F::one();
            }
            v
        },
        vec![F::one(), F::zero(), F::one()],
    )
    .expect("T2 is an algebra")
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// `Z2 × Z2` on `1, a, b, ab` as bit masks.
pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect()
}

/// Monoid algebra of a multiplication table with identity `0`, with
/// `Δ(m) = m ⊗ m` and `ε(m) = 1`. Hopf exactly when the monoid is a group.
pub fn monoid_bialgebra_data<F: Field>(name: &str, table: &[Vec<usize>]) -> Result<BialgebroidData<F>> {
    let n = table.len();
    let total = Algebra::from_products(name, n, |i, j| unit_vec(n, table[i][j]), unit_vec(n, 0))?;
    let k = ground::<F>();
    let unit = Matrix::from_cols(n, &[total.unit().to_vec()]);
    let ring = BeRing::new(k, total, unit.clone(), unit)?;
    let delta = Matrix::from_fn(n * n, n, |r, c| if r == c * n + c { F::one() } else { F::zero() });
    let eps = Matrix::from_fn(1, n, |_, _| F::one());
    Ok(BialgebroidData { ring, delta, eps })
}

pub fn group_bialgebroid<F: Field>(name: &str, table: &[Vec<usize>]) -> Result<Bialgebroid<F>> {
    group_algebra::<F>(name, table)?;
    Bialgebroid::new(monoid_bialgebra_data(name, table)?)
}

/// `L = B ⊗ B̄` with `s(b) = b⊗1`, `t(b̄) = 1⊗b̄`, `Δ(b⊗b̄') = (b⊗1)◇(1⊗b̄')`
/// and `ε(b⊗b̄') = bb'`. Basis `e_i ⊗ e_j ↦ i·m + j`.
pub fn enveloping_data<F: Field>(base: &Algebra<F>) -> Result<BialgebroidData<F>> {
    let m = base.dim();
    let total = base.enveloping();
    let n = total.dim();
    let one = base.unit();
    let pair = |x: &[F], y: &[F]| -> Vec<F> {
        let mut v = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                v[i * m + j] = a.mul(b);
            }
        }
        v
    };
    let s = Matrix::from_cols(n, &(0..m).map(|i| pair(&base.basis(i), one)).collect::<Vec<_>>());
    let t = Matrix::from_cols(n, &(0..m).map(|j| pair(one, &base.basis(j))).collect::<Vec<_>>());
    let ring = BeRing::new(base.clone(), total, s, t)?;
    let delta_cols: Vec<Vec<F>> = (0..n)
        .map(|x| {
            let (i, j) = (x / m, x % m);
            let (l, r) = (pair(&base.basis(i), one), pair(one, &base.basis(j)));
            let mut v = vec![F::zero(); n * n];
            for (p, a) in l.iter().enumerate() {
                for (q, b) in r.iter().enumerate() {
                    v[p * n + q] = a.mul(b);
                }
            }
            v
        })
        .collect();
    let delta = Matrix::from_cols(n * n, &delta_cols);
    let eps_cols: Vec<Vec<F>> = (0..n).map(|x| base.mul(&base.basis(x / m), &base.basis(x % m))).collect();
    let eps = Matrix::from_cols(m, &eps_cols);
    Ok(BialgebroidData { ring, delta, eps })
}

pub fn enveloping_bialgebroid<F: Field>(base: &Algebra<F>) -> Result<Bialgebroid<F>> {
    Bialgebroid::new(enveloping_data(base)?)
}

/// `Γ(g^i h^j, g^k h^l) = (-1)^{jk}` on the Klein group algebra, indexed as
/// in [`klein_table`].
pub fn klein_cocycle<F: Field>() -> Matrix<F> {
    crate::twist::group_cocycle(4, |x, y| if (x >> 1) & y & 1 == 1 { F::one().neg() } else { F::one() })
}

/// The one-dimensional comodule `k_g` of a group bialgebroid, `1 ↦ g ◇ 1`.
pub fn group_like_comodule<F: Field>(bg: &Bialgebroid<F>, g: usize) -> Result<crate::comodule::LeftComodule<F>> {
    use crate::module::{ActionKey, MultiModule};
    let one = vec![Matrix::identity(1)];
    let carrier = MultiModule::new("K", 1).with_action(ActionKey::left_b(), one.clone()).with_action(ActionKey::right_b(), one);
    crate::comodule::LeftComodule::new(bg, carrier, &Matrix::from_fn(bg.n(), 1, |r, _| if r == g { F::one() } else { F::zero() }))
}
