use crate::bialgebroid::Bialgebroid;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::report::{tuples, Gate, Report};
use crate::tensor::{Lin, Tensor};

/// A skew pairing `τ[• | •]: L ⊗ Π → B`. `form` is `nB × (nL·nΠ)`, column
/// `x·nΠ + α` holding `τ[e_x | e_α]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPairing<F> {
    pub form: Matrix<F>,
    lin: Lin<F>,
}

/// `τ[X | α] = ε(X s(ε(α)))`.
pub fn trivial_pairing<F: Field>(l: &Bialgebroid<F>, pi: &Bialgebroid<F>) -> Matrix<F> {
    let (nl, np) = (l.n(), pi.n());
    let lin = Lin::from_fn(vec![nl, np], vec![l.nb()], |c| {
        let b = pi.e(c % np).apply(&[0], pi.eps()).apply(&[0], l.s());
        l.mul_legs(&l.e(c / np).outer(&b), 0, 1).apply(&[0], l.eps()).into_data()
    });
    lin.to_matrix()
}

/// A pairing of two group algebras over the ground field from its values on
/// group elements.
pub fn group_pairing<F: Field>(nl: usize, np: usize, mut value: impl FnMut(usize, usize) -> F) -> Matrix<F> {
    Matrix::from_fn(1, nl * np, |_, c| value(c / np, c % np))
}

pub(crate) fn same_base<F: Field>(l: &Bialgebroid<F>, pi: &Bialgebroid<F>) -> Result<()> {
    if l.base().structure() != pi.base().structure() || l.base().unit() != pi.base().unit() {
        return Err(Error::DimMismatch("both bialgebroids must have the same base algebra".into()));
    }
    Ok(())
}

impl<F: Field> SkewPairing<F> {
    pub fn new(l: &Bialgebroid<F>, pi: &Bialgebroid<F>, form: Matrix<F>) -> Result<Self> {
        match Self::check(l, pi, form) {
            (Some(p), _) => Ok(p),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    /// Validate the five pairing axioms on basis elements.
    pub fn check(l: &Bialgebroid<F>, pi: &Bialgebroid<F>, form: Matrix<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut g = Gate::new("double");
        if let Err(e) = same_base(l, pi) {
            g.note("assemble", "tau:L(x)Pi->B", Some(e));
            return (None, (g.report, g.first));
        }
        let (nl, np, nb) = (l.n(), pi.n(), l.nb());
        if form.rows() != nb || form.cols() != nl * np {
            g.note("assemble", "tau:L(x)Pi->B", Some(Error::DimMismatch(format!("pairing must be {nb}x{}", nl * np))));
            return (None, (g.report, g.first));
        }
        let p = SkewPairing { lin: Lin::from_fn(vec![nl, np], vec![nb], |c| form.col(c)), form };
        let ax = |axiom: &str, w: Option<Vec<usize>>| w.map(|w| Error::AxiomFails { axiom: axiom.into(), witness: w });
        let mul_b = |a: &Tensor<F>, b: &Tensor<F>| a.outer(b).apply(&[0, 1], l.mul_b());
        let lm = |a: &Tensor<F>, b: &Tensor<F>| a.outer(b).apply(&[0, 1], l.mul());
        let pm = |a: &Tensor<F>, b: &Tensor<F>| a.outer(b).apply(&[0, 1], pi.mul());
        let ls = |b: usize| l.e_b(b).apply(&[0], l.s());
        let lt = |b: usize| l.e_b(b).apply(&[0], l.t());
        let ps = |b: usize| pi.e_b(b).apply(&[0], pi.s());
        let pt = |b: usize| pi.e_b(b).apply(&[0], pi.t());

        let w = tuples(&[nb, nb, nb, nb, nb, nl, np]).into_iter().find(|t| {
            let (a, b, c, d, f, x, al) = (t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
            let xx = lm(&lm(&lm(&lm(&ls(a), &lt(b)), &l.e(x)), &ls(c)), &lt(d));
            let lhs = mul_b(&p.value(&xx, &pi.e(al)), &l.e_b(f));
            let aa = pm(&pm(&pm(&pm(&ps(c), &pt(f)), &pi.e(al)), &ps(d)), &pt(b));
            let rhs = mul_b(&l.e_b(a), &p.value(&l.e(x), &aa));
            lhs != rhs
        });
        g.note("bimodule", "t[ab~Xcd~|a]f=at[X|cf~ad b~]", ax("bimodule", w));

        let w = tuples(&[nl, np, np]).into_iter().find(|t| {
            let (x, a, b) = (t[0], t[1], t[2]);
            let lhs = p.value(&l.e(x), &pm(&pi.e(a), &pi.e(b)));
            let dx = l.e(x).apply(&[0], l.delta()).outer(&pi.e(b)).apply(&[1, 2], &p.lin);
            // α t(τ[X₂|β]) paired with X₁
            let first = pi.e(a).outer(&dx.apply(&[1], pi.t())).apply(&[0, 2], pi.mul()).apply(&[1, 0], &p.lin);
            // t(τ[X₂|β]) X₁ paired with α
            let second = l.mul_legs(&dx.apply(&[1], l.t()), 1, 0).outer(&pi.e(a)).apply(&[0, 1], &p.lin);
            lhs != first || lhs != second
        });
        g.note("comultiplicative-pi", "t[X|ab]=t[X1|at[X2|b]~]=t[t[X2|b]~X1|a]", ax("comultiplicative-pi", w));

        let w = tuples(&[nl, nl, np]).into_iter().find(|t| {
            let (x, y, a) = (t[0], t[1], t[2]);
            let lhs = p.value(&lm(&l.e(x), &l.e(y)), &pi.e(a));
            let ya = l.e(y).outer(&pi.e(a).apply(&[0], pi.delta())).apply(&[0, 1], &p.lin);
            // X s(τ[Y|α₁]) paired with α₂
            let first = l.mul_legs(&l.e(x).outer(&ya.apply(&[0], l.s())), 0, 1).apply(&[0, 1], &p.lin);
            // X paired with s(τ[Y|α₁]) α₂
            let second = l.e(x).outer(&pi.mul_legs(&ya.apply(&[0], pi.s()), 0, 1)).apply(&[0, 1], &p.lin);
            lhs != first || lhs != second
        });
        g.note("comultiplicative-l", "t[XY|a]=t[Xt[Y|a1]|a2]=t[X|t[Y|a1]a2]", ax("comultiplicative-l", w));

        let w = (0..nl).find(|&x| p.value(&l.e(x), &pi.one()) != l.e(x).apply(&[0], l.eps())).map(|x| vec![x]);
        g.note("unit-pi", "t[X|1]=eps(X)", ax("unit-pi", w));
        let w = (0..np).find(|&a| p.value(&l.one(), &pi.e(a)) != pi.e(a).apply(&[0], pi.eps())).map(|a| vec![a]);
        g.note("unit-l", "t[1|a]=eps(a)", ax("unit-l", w));

        if g.ok() {
            (Some(p), (g.report, None))
        } else {
            (None, (g.report, g.first))
        }
    }

    /// `τ` as a map `[nL, nΠ] → [nB]`.
    pub fn lin(&self) -> &Lin<F> {
        &self.lin
    }

    pub fn value(&self, x: &Tensor<F>, alpha: &Tensor<F>) -> Tensor<F> {
        x.outer(alpha).apply(&[0, 1], &self.lin)
    }
}
