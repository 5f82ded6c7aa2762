//! Comodule algebras and their coinvariant subalgebras.

use super::{LeftComodule, RightComodule};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::bialgebroid::Bialgebroid;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{subspace, Matrix, Subspace};
use crate::module::{ActionKey, MultiModule, Side};
use crate::report::{Gate, Report};
use crate::tensor::Tensor;

/// `P` with `b·p·b' = η(b)pη(b')` and the opposite actions `b̄·p = pη(b)`,
/// `p·b̄ = η(b)p`. For a `B̄`-ring the roles of the two pairs are swapped.
fn ring_carrier<F: Field>(p: &Algebra<F>, images: &[Vec<F>], primary_bar: bool) -> MultiModule<F> {
    let left: Vec<Matrix<F>> = images.iter().map(|x| p.left_matrix(x)).collect();
    let right: Vec<Matrix<F>> = images.iter().map(|x| p.right_matrix(x)).collect();
    let (lk, rk, lo, ro) = if primary_bar {
        (ActionKey::left_bbar(), ActionKey::right_bbar(), ActionKey::left_b(), ActionKey::right_b())
    } else {
        (ActionKey::left_b(), ActionKey::right_b(), ActionKey::left_bbar(), ActionKey::right_bbar())
    };
    MultiModule::new("P", p.dim()).with_action(lk, left.clone()).with_action(rk, right.clone()).with_action(lo, right).with_action(ro, left)
}

fn add_family<F: Field>(carrier: &mut MultiModule<F>, p: &Algebra<F>, family: &str, basis: &[Vec<F>]) {
    carrier.set_action(ActionKey::new(family, Side::Left, false), basis.iter().map(|x| p.left_matrix(x)).collect());
    carrier.set_action(ActionKey::new(family, Side::Right, false), basis.iter().map(|x| p.right_matrix(x)).collect());
}

/// `{p : a(p) = b(p)}` for two maps into the same quotient.
fn equalizer<F: Field>(d: usize, f: impl Fn(usize) -> Vec<F>) -> Subspace<F> {
    let cols: Vec<Vec<F>> = (0..d).map(f).collect();
    let rows = cols.first().map_or(0, |c| c.len());
    subspace::kernel(&Matrix::from_cols(rows, &cols))
}

fn subalgebra_failure<F: Field>(p: &Algebra<F>, s: &Subspace<F>) -> Option<Vec<usize>> {
    if !s.contains(p.unit()) {
        return Some(vec![]);
    }
    let b = s.basis_dense();
    for (i, x) in b.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !s.contains(&p.mul(x, y)) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// The subalgebra on the canonical basis of `s`, as an algebra of its own.
fn restrict<F: Field>(name: &str, p: &Algebra<F>, s: &Subspace<F>) -> Result<Algebra<F>> {
    let b = s.basis_dense();
    let coords = |v: &[F]| s.coords(v).ok_or(Error::NotSubalgebra { witness: vec![] });
    let unit = coords(p.unit())?;
    let mut table = Vec::with_capacity(b.len() * b.len());
    for x in &b {
        for y in &b {
            table.push(coords(&p.mul(x, y))?);
        }
    }
    Algebra::from_products(name, b.len(), |i, j| table[i * b.len() + j].clone(), unit)
}

/// Left `L`-comodule algebra: a `B`-ring `η: B → P` whose coaction is
/// multiplicative in the Takeuchi product. `coinvariants` is
/// `N = {p : δ(p) = 1◇p}`; the carrier also has the left and right actions
/// of `N` under the family name `N` and the regular actions of `P` under `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComoduleAlgebra<F> {
    pub algebra: Algebra<F>,
    pub eta: AlgebraMorphism<F>,
    pub comodule: LeftComodule<F>,
    pub coinvariants: Subspace<F>,
}

/// Right `L`-comodule algebra over a `B̄`-ring `η̄: B̄ → P`, with
/// coinvariants `M = {p : δ(p) = p◇1}` acting under the family name `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComoduleAlgebra<F> {
    pub algebra: Algebra<F>,
    pub eta: AlgebraMorphism<F>,
    pub comodule: RightComodule<F>,
    pub coinvariants: Subspace<F>,
}

impl<F: Field> LeftComoduleAlgebra<F> {
    pub fn new(bg: &Bialgebroid<F>, algebra: Algebra<F>, eta: &Matrix<F>, coaction: &Matrix<F>) -> Result<Self> {
        match Self::check(bg, algebra, eta, coaction) {
            (Some(c), _) => Ok(c),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    /// `eta` is `dim P × dim B`, `coaction` is `(n · dim P) × dim P`.
    pub fn check(bg: &Bialgebroid<F>, algebra: Algebra<F>, eta: &Matrix<F>, coaction: &Matrix<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut g = Gate::new("comodule");
        let eta = match AlgebraMorphism::new("eta", bg.base(), &algebra, eta.clone()) {
            Ok(m) => m,
            Err(e) => {
                g.note("eta", "eta:B->P", Some(e));
                return (None, (g.report, g.first));
            }
        };
        g.note("eta", "eta:B->P", None);
        let images: Vec<Vec<F>> = (0..bg.nb()).map(|b| eta.apply(&bg.base().basis(b))).collect();
        let (c, (rep, err)) = LeftComodule::check(bg, ring_carrier(&algebra, &images, false), coaction);
        g.report.extend(rep);
        let Some(mut comodule) = c else {
            g.first = err;
            return (None, (g.report, g.first));
        };
        let d = algebra.dim();
        let mul = algebra.mul_lin();
        let one_l = bg.one();
        let one_p = Tensor::vector(algebra.unit());
        let dia = &comodule.diamond;

        let w = (!dia.equal(&comodule.coact(&one_p, 0), &one_l.outer(&one_p))).then(Vec::new);
        g.note("unit", "delta(1)=1<>1", w.map(|w| Error::NotComoduleAlgebra { witness: w }));
        let w = crate::report::tuples(&[d, d]).into_iter().find(|t| {
            let pq = Tensor::vector(&algebra.mul(&algebra.basis(t[0]), &algebra.basis(t[1])));
            let v = comodule.coaction().image(t[0]).outer(&comodule.coaction().image(t[1]));
            let rhs = bg.mul_legs(&v, 0, 2).apply(&[1, 2], &mul);
            !dia.equal(&comodule.coact(&pq, 0), &rhs)
        });
        g.note("multiplicative", "delta(pq)=p(-1)q(-1)<>p(0)q(0)", w.map(|w| Error::NotComoduleAlgebra { witness: w }));

        let coinvariants = equalizer(d, |p| dia.project(&comodule.coaction().image(p).sub(&one_l.outer(&comodule.e(p)))));
        let w = subalgebra_failure(&algebra, &coinvariants);
        g.note("coinvariants", "N=coL(P)subalgebra", w.map(|w| Error::NotSubalgebra { witness: w }));
        if !g.ok() {
            return (None, (g.report, g.first));
        }
        add_family(&mut comodule.carrier, &algebra, "N", &coinvariants.basis_dense());
        add_family(&mut comodule.carrier, &algebra, "P", &(0..d).map(|i| algebra.basis(i)).collect::<Vec<_>>());
        (Some(LeftComoduleAlgebra { algebra, eta, comodule, coinvariants }), (g.report, None))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn carrier(&self) -> &MultiModule<F> {
        &self.comodule.carrier
    }

    pub fn e(&self, p: usize) -> Tensor<F> {
        Tensor::e(self.dim(), p)
    }

    pub fn one(&self) -> Tensor<F> {
        Tensor::vector(self.algebra.unit())
    }

    pub fn mul_legs(&self, t: &Tensor<F>, i: usize, j: usize) -> Tensor<F> {
        t.apply(&[i, j], &self.algebra.mul_lin())
    }

    /// `N` on the canonical basis of the coinvariants.
    pub fn coinvariant_algebra(&self) -> Result<Algebra<F>> {
        restrict("N", &self.algebra, &self.coinvariants)
    }
}

impl<F: Field> RightComoduleAlgebra<F> {
    pub fn new(bg: &Bialgebroid<F>, algebra: Algebra<F>, eta: &Matrix<F>, coaction: &Matrix<F>) -> Result<Self> {
        match Self::check(bg, algebra, eta, coaction) {
            (Some(c), _) => Ok(c),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    /// `eta` is `dim P × dim B` for `η̄: B̄ → P`, `coaction` is `(dim P · n) × dim P`.
    pub fn check(bg: &Bialgebroid<F>, algebra: Algebra<F>, eta: &Matrix<F>, coaction: &Matrix<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut g = Gate::new("comodule");
        let eta = match AlgebraMorphism::new("eta-bar", &bg.base().opposite(), &algebra, eta.clone()) {
            Ok(m) => m,
            Err(e) => {
                g.note("eta", "eta:Bbar->P", Some(e));
                return (None, (g.report, g.first));
            }
        };
        g.note("eta", "eta:Bbar->P", None);
        let images: Vec<Vec<F>> = (0..bg.nb()).map(|b| eta.apply(&bg.base().basis(b))).collect();
        let (c, (rep, err)) = RightComodule::check(bg, ring_carrier(&algebra, &images, true), coaction);
        g.report.extend(rep);
        let Some(mut comodule) = c else {
            g.first = err;
            return (None, (g.report, g.first));
        };
        let d = algebra.dim();
        let mul = algebra.mul_lin();
        let one_l = bg.one();
        let one_p = Tensor::vector(algebra.unit());
        let dia = &comodule.diamond;

        let w = (!dia.equal(&comodule.coact(&one_p, 0), &one_p.outer(&one_l))).then(Vec::new);
        g.note("unit", "delta(1)=1<>1", w.map(|w| Error::NotComoduleAlgebra { witness: w }));
        let w = crate::report::tuples(&[d, d]).into_iter().find(|t| {
            let pq = Tensor::vector(&algebra.mul(&algebra.basis(t[0]), &algebra.basis(t[1])));
            let v = comodule.coaction().image(t[0]).outer(&comodule.coaction().image(t[1]));
            let rhs = v.apply(&[0, 2], &mul);
            !dia.equal(&comodule.coact(&pq, 0), &bg.mul_legs(&rhs, 1, 2))
        });
        g.note("multiplicative", "delta(pq)=p(0)q(0)<>p(1)q(1)", w.map(|w| Error::NotComoduleAlgebra { witness: w }));

        let coinvariants = equalizer(d, |p| dia.project(&comodule.coaction().image(p).sub(&comodule.e(p).outer(&one_l))));
        let w = subalgebra_failure(&algebra, &coinvariants);
        g.note("coinvariants", "M=P^coL subalgebra", w.map(|w| Error::NotSubalgebra { witness: w }));
        if !g.ok() {
            return (None, (g.report, g.first));
        }
        add_family(&mut comodule.carrier, &algebra, "M", &coinvariants.basis_dense());
        add_family(&mut comodule.carrier, &algebra, "P", &(0..d).map(|i| algebra.basis(i)).collect::<Vec<_>>());
        (Some(RightComoduleAlgebra { algebra, eta, comodule, coinvariants }), (g.report, None))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn carrier(&self) -> &MultiModule<F> {
        &self.comodule.carrier
    }

    pub fn e(&self, p: usize) -> Tensor<F> {
        Tensor::e(self.dim(), p)
    }

    pub fn one(&self) -> Tensor<F> {
        Tensor::vector(self.algebra.unit())
    }

    pub fn mul_legs(&self, t: &Tensor<F>, i: usize, j: usize) -> Tensor<F> {
        t.apply(&[i, j], &self.algebra.mul_lin())
    }

    pub fn coinvariant_algebra(&self) -> Result<Algebra<F>> {
        restrict("M", &self.algebra, &self.coinvariants)
    }
}

/// `L` over itself through `η = s` and `δ = Δ`.
pub fn left_regular<F: Field>(bg: &Bialgebroid<F>) -> Result<LeftComoduleAlgebra<F>> {
    LeftComoduleAlgebra::new(bg, bg.total().clone(), &bg.source().matrix, &bg.delta_matrix())
}

/// `L` over itself through `η̄ = t` and `δ = Δ`.
pub fn right_regular<F: Field>(bg: &Bialgebroid<F>) -> Result<RightComoduleAlgebra<F>> {
    RightComoduleAlgebra::new(bg, bg.total().clone(), &bg.target().matrix, &bg.delta_matrix())
}
