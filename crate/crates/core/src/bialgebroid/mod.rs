//! Left bialgebroids: axiom verification, iterated coproducts and the
//! co-opposite.

mod hopf;
mod identities;

pub use hopf::{galois_lambda, galois_mu, AntiLeftHopf, LeftHopf, COTENSOR_B, COTENSOR_BBAR, DIAMOND, TENSOR_B, TENSOR_BBAR};
pub use identities::{verify_anti_left_identities, verify_left_hopf_identities, verify_mixed_identities};
pub(crate) use identities::identity;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::bering::BeRing;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{ActionKey, MultiModule};
use crate::report::Report;
use crate::space::{descend_columns, Space};
use crate::tensor::{Lin, Tensor};

/// `L◇L` as a quotient with the Takeuchi cut.
pub const TAKEUCHI: &str = "int^a int_b (b~)L(a~) * (b)L(a)";
/// `L×L×L`.
pub const TRIPLE: &str = "int^{a,b} int_{c,d} (c~)L(a~) * (c,d~)L(a,b~) * (d)L(b)";

/// Unvalidated input: a `B^e`-ring plus coproduct and counit matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebroidData<F> {
    pub ring: BeRing<F>,
    /// `n² × n`, column `X` holds a representative of `Δ(X)` in `L ⊗ L`
    pub delta: Matrix<F>,
    /// `nB × n`
    pub eps: Matrix<F>,
}

/// A validated left bialgebroid with its working spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebroid<F> {
    pub ring: BeRing<F>,
    pub l: MultiModule<F>,
    delta: Lin<F>,
    eps: Lin<F>,
    mul: Lin<F>,
    mul_b: Lin<F>,
    s: Lin<F>,
    t: Lin<F>,
    tower: Lin<F>,
    pub takeuchi: Space<F>,
    pub triple: Space<F>,
}

impl<F: Field> Bialgebroid<F> {
    pub fn new(data: BialgebroidData<F>) -> Result<Self> {
        let (b, report) = Self::check(data);
        match b {
            Some(b) => Ok(b),
            None => Err(report.1.expect("failed validation carries an error")),
        }
    }

    /// Run every axiom. The candidate is returned only when all of them hold.
    pub fn check(data: BialgebroidData<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut report = Report::new("bialgebroid");
        match Self::assemble(data) {
            Ok(b) => {
                let first = b.axioms(&mut report);
                if first.is_none() {
                    (Some(b), (report, None))
                } else {
                    (None, (report, first))
                }
            }
            Err(e) => {
                report.record_error("assemble", "L,s,t,Delta,eps", &e);
                (None, (report, Some(e)))
            }
        }
    }

    fn assemble(data: BialgebroidData<F>) -> Result<Self> {
        let BialgebroidData { ring, delta, eps } = data;
        let (n, nb) = (ring.n(), ring.nb());
        if delta.rows() != n * n || delta.cols() != n {
            return Err(Error::DimMismatch(format!("coproduct must be {}x{n}", n * n)));
        }
        if eps.rows() != nb || eps.cols() != n {
            return Err(Error::DimMismatch(format!("counit must be {nb}x{n}")));
        }
        let l = ring.module("L");
        let takeuchi = Space::build(TAKEUCHI, &[&l, &l])?;
        let triple = Space::build(TRIPLE, &[&l, &l, &l])?;
        let raw = Lin::from_fn(vec![n], vec![n, n], |x| delta.col(x));
        let delta = Lin::from_fn(vec![n], vec![n, n], |x| takeuchi.normalize(&raw.image(x)).into_data());
        let tower = Lin::from_fn(vec![n], vec![n, n, n], |x| {
            let t = delta.image(x).apply(&[0], &delta);
            triple.normalize(&t).into_data()
        });
        Ok(Bialgebroid {
            mul: ring.total.mul_lin(),
            mul_b: ring.base.mul_lin(),
            s: ring.s_lin(),
            t: ring.t_lin(),
            eps: Lin::from_matrix(&eps),
            delta,
            tower,
            l,
            ring,
            takeuchi,
            triple,
        })
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn nb(&self) -> usize {
        self.ring.nb()
    }

    pub fn total(&self) -> &Algebra<F> {
        &self.ring.total
    }

    pub fn base(&self) -> &Algebra<F> {
        &self.ring.base
    }

    pub fn delta(&self) -> &Lin<F> {
        &self.delta
    }

    pub fn eps(&self) -> &Lin<F> {
        &self.eps
    }

    pub fn mul(&self) -> &Lin<F> {
        &self.mul
    }

    pub fn mul_b(&self) -> &Lin<F> {
        &self.mul_b
    }

    pub fn s(&self) -> &Lin<F> {
        &self.s
    }

    pub fn t(&self) -> &Lin<F> {
        &self.t
    }

    /// `X ↦ X₍₁₎ ⊗ X₍₂₎ ⊗ X₍₃₎`, canonical in the triple product.
    pub fn tower(&self) -> &Lin<F> {
        &self.tower
    }

    /// Coproduct as an `n² × n` matrix of canonical representatives.
    pub fn delta_matrix(&self) -> Matrix<F> {
        self.delta.to_matrix()
    }

    pub fn eps_matrix(&self) -> Matrix<F> {
        self.eps.to_matrix()
    }

    pub fn data(&self) -> BialgebroidData<F> {
        BialgebroidData { ring: self.ring.clone(), delta: self.delta_matrix(), eps: self.eps_matrix() }
    }

    pub fn e(&self, x: usize) -> Tensor<F> {
        Tensor::e(self.n(), x)
    }

    pub fn one(&self) -> Tensor<F> {
        Tensor::vector(self.total().unit())
    }

    pub fn e_b(&self, b: usize) -> Tensor<F> {
        Tensor::e(self.nb(), b)
    }

    /// Left (right) multiplication on leg `k` by `s(b)` or `t(b)`.
    pub fn act(&self, tensor: &Tensor<F>, leg: usize, key: &ActionKey, b: usize) -> Tensor<F> {
        let m = &self.l.action(key).expect("L carries all four actions")[b];
        tensor.apply(&[leg], &Lin::from_matrix(m))
    }

    /// Multiply legs `i` and `j` (in that order) of a tensor.
    pub fn mul_legs(&self, t: &Tensor<F>, i: usize, j: usize) -> Tensor<F> {
        t.apply(&[i, j], &self.mul)
    }

    /// `L` as a bimodule in the sense of its left `B^e`-action (`b.X.c = s(b)t(c)X`).
    pub fn space(&self, expr: &str, legs: usize) -> Result<Space<F>> {
        let v: Vec<&MultiModule<F>> = (0..legs).map(|_| &self.l).collect();
        Space::build(expr, &v)
    }

    fn axioms(&self, r: &mut Report) -> Option<Error> {
        let (n, nb) = (self.n(), self.nb());
        let l = self.total();
        let mut first: Option<Error> = None;
        let mut note = |r: &mut Report, id: &str, label: &str, e: Option<Error>| {
            match &e {
                None => r.record(id, label, None),
                Some(err) => r.record_error(id, label, err),
            }
            if first.is_none() {
                first = e;
            }
        };

        let w = (0..n).find(|&x| !self.takeuchi.contains(&self.delta.image(x)));
        note(r, "takeuchi", "Delta(X)in(LxL)", w.map(|x| Error::CoproductNotInTakeuchi { witness: vec![x] }));

        let diamond = &self.takeuchi;
        let mut w = None;
        'outer: for b in 0..nb {
            for c in 0..nb {
                for x in 0..n {
                    let y = self.act(&self.act(&self.e(x), 0, &ActionKey::left_bbar(), c), 0, &ActionKey::left_b(), b);
                    let lhs = y.apply(&[0], &self.delta);
                    let d = self.delta.image(x);
                    let rhs = self.act(&self.act(&d, 0, &ActionKey::left_b(), b), 1, &ActionKey::left_bbar(), c);
                    if !diamond.equal(&lhs, &rhs) {
                        w = Some(vec![b, c, x]);
                        break 'outer;
                    }
                }
            }
        }
        note(r, "delta-linear", "Delta(s(b)t(c)X)=s(b)X1<>t(c)X2", w.map(|w| Error::CoproductNotBilinear { witness: w }));

        let mut w = None;
        'outer2: for b in 0..nb {
            for c in 0..nb {
                for x in 0..n {
                    let y = self.act(&self.act(&self.e(x), 0, &ActionKey::left_bbar(), c), 0, &ActionKey::left_b(), b);
                    let lhs = y.apply(&[0], &self.eps);
                    let rhs = self.e_b(b).outer(&self.e(x).apply(&[0], &self.eps)).apply(&[0, 1], &self.mul_b);
                    let rhs = rhs.outer(&self.e_b(c)).apply(&[0, 1], &self.mul_b);
                    if lhs != rhs {
                        w = Some(vec![b, c, x]);
                        break 'outer2;
                    }
                }
            }
        }
        note(r, "eps-linear", "eps(s(b)t(c)X)=b.eps(X).c", w.map(|w| Error::CounitNotBilinear { witness: w }));

        let w = (0..n).find(|&x| {
            let d = self.delta.image(x);
            !self.triple.equal(&d.apply(&[0], &self.delta), &d.apply(&[1], &self.delta))
        });
        note(r, "coassoc", "(Delta.id)Delta(X)=(id.Delta)Delta(X)", w.map(|x| Error::NotCoassociative { witness: vec![x] }));

        let w = (0..n).find(|&x| {
            let d = self.delta.image(x).apply(&[0], &self.eps).apply(&[0], &self.s);
            self.mul_legs(&d, 0, 1) != self.e(x)
        });
        note(r, "counit-left", "s(eps(X1))X2=X", w.map(|x| Error::CounitLawFails { side: "left".into(), witness: vec![x] }));
        let w = (0..n).find(|&x| {
            let d = self.delta.image(x).apply(&[1], &self.eps).apply(&[1], &self.t);
            self.mul_legs(&d, 1, 0) != self.e(x)
        });
        note(r, "counit-right", "t(eps(X2))X1=X", w.map(|x| Error::CounitLawFails { side: "right".into(), witness: vec![x] }));

        let one = self.one();
        let d1 = one.apply(&[0], &self.delta);
        let w = (!diamond.equal(&d1, &one.outer(&one))).then(Vec::new);
        note(r, "delta-unit", "Delta(1)=1<>1", w.map(|w| Error::NotAlgebraMap { map: "Delta".into(), witness: w }));
        let mut w = None;
        'outer3: for x in 0..n {
            for y in 0..n {
                let xy = self.e(x).outer(&self.e(y)).apply(&[0, 1], &self.mul);
                let lhs = xy.apply(&[0], &self.delta);
                let p = self.delta.image(x).outer(&self.delta.image(y));
                let rhs = p.apply(&[0, 2], &self.mul).apply(&[1, 2], &self.mul);
                if !diamond.equal(&lhs, &rhs) {
                    w = Some(vec![x, y]);
                    break 'outer3;
                }
            }
        }
        note(r, "delta-mult", "Delta(XY)=X1Y1<>X2Y2", w.map(|w| Error::NotAlgebraMap { map: "Delta".into(), witness: w }));

        let e1 = one.apply(&[0], &self.eps);
        let w = (e1.data() != self.base().unit()).then(Vec::new);
        note(r, "eps-unit", "eps(1)=1", w.map(|w| Error::CounitLawFails { side: "unit".into(), witness: w }));
        let mut w = None;
        let mut w_hat = None;
        for x in 0..n {
            for y in 0..n {
                let ey = self.e(y).apply(&[0], &self.eps);
                let xy = l.mul(&l.basis(x), &l.basis(y));
                let exy = Tensor::vector(&xy).apply(&[0], &self.eps);
                let xs = self.e(x).outer(&ey.apply(&[0], &self.s)).apply(&[0, 1], &self.mul).apply(&[0], &self.eps);
                let xt = self.e(x).outer(&ey.apply(&[0], &self.t)).apply(&[0, 1], &self.mul).apply(&[0], &self.eps);
                if w.is_none() && (xs != exy || xt != exy) {
                    w = Some(vec![x, y]);
                }
                for b in 0..nb {
                    // eps-hat(XY)(b) = eps-hat(X)(eps-hat(Y)(b))
                    let sb = self.e_b(b).apply(&[0], &self.s);
                    let lhs = Tensor::vector(&xy).outer(&sb).apply(&[0, 1], &self.mul).apply(&[0], &self.eps);
                    let inner = self.e(y).outer(&sb).apply(&[0, 1], &self.mul).apply(&[0], &self.eps).apply(&[0], &self.s);
                    let rhs = self.e(x).outer(&inner).apply(&[0, 1], &self.mul).apply(&[0], &self.eps);
                    if w_hat.is_none() && lhs != rhs {
                        w_hat = Some(vec![x, y, b]);
                    }
                }
            }
        }
        note(r, "eps-character", "eps(Xeps(Y))=eps(XY)=eps(Xeps(Y)~)", w.map(|w| Error::CounitLawFails { side: "character".into(), witness: w }));
        note(r, "eps-hat", "epshat(XY)=epshat(X)epshat(Y)", w_hat.map(|w| Error::CounitLawFails { side: "epshat".into(), witness: w }));

        match self.alpha_maps() {
            Ok((a, a2)) => {
                let bijective = |m: &Lin<F>| m.in_dims == m.out_dims && Subspace::spanned_by_sparse(m.out_dims[0], (0..m.in_dims[0]).map(|c| m.col(c).clone())).dim() == m.in_dims[0];
                let e = (!bijective(&a)).then(|| Error::AlphaNotBijective("alpha".into()));
                note(r, "alpha", "alpha:(LxL)xL->LxLxL", e);
                let e = (!bijective(&a2)).then(|| Error::AlphaNotBijective("alpha'".into()));
                note(r, "alpha-prime", "alpha':Lx(LxL)->LxLxL", e);
            }
            Err(e) => note(r, "alpha", "alpha:(LxL)xL->LxLxL", Some(e)),
        }
        first
    }

    /// `α` and `α′` from the cut of their domains to the cut of the triple
    /// product.
    pub fn alpha_maps(&self) -> Result<(Lin<F>, Lin<F>)> {
        let l = &self.l;
        let lxl = &self.takeuchi;
        let left = lxl.induced_module(
            "T",
            &[l, l],
            &[(ActionKey::left_bbar(), 1, ActionKey::left_bbar()), (ActionKey::right_bbar(), 1, ActionKey::right_bbar())],
        )?;
        let right = lxl.induced_module("U", &[l, l], &[(ActionKey::left_b(), 0, ActionKey::left_b()), (ActionKey::right_b(), 0, ActionKey::right_b())])?;
        let dom_a = Space::build("int^b int_d (d~)T(b~) * (d)L(b)", &[&left, l])?;
        let dom_a2 = Space::build("int^a int_c (c~)L(a~) * (c)U(a)", &[l, &right])?;
        let n = self.n();
        let to_triple_a = |t: &Tensor<F>| -> Tensor<F> {
            let mut out = vec![F::zero(); n * n * n];
            for (idx, x) in t.data().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (k, y) = (idx / n, idx % n);
                let m = lxl.section(&lxl.cut_basis(k));
                for (j, v) in m.data().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    out[j * n + y].add_mul(x, v);
                }
            }
            Tensor::from_vec(&[n, n, n], out)
        };
        let to_triple_a2 = |t: &Tensor<F>| -> Tensor<F> {
            let d = dom_a2.dims()[1];
            let mut out = vec![F::zero(); n * n * n];
            for (idx, x) in t.data().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (y, k) = (idx / d, idx % d);
                let m = lxl.section(&lxl.cut_basis(k));
                for (j, v) in m.data().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    out[y * n * n + j].add_mul(x, v);
                }
            }
            Tensor::from_vec(&[n, n, n], out)
        };
        let triple = &self.triple;
        let restricted = |from: &Space<F>, what: &str, f: &dyn Fn(&Tensor<F>) -> Tensor<F>| -> Result<Lin<F>> {
            let cols = descend_columns(from, triple, what, f)?;
            if from.cut_dim() == from.dim() && triple.cut_dim() == triple.dim() {
                return Ok(Lin::new(vec![from.dim()], vec![triple.dim()], cols));
            }
            let mut m = Matrix::zeros(triple.dim(), from.dim());
            for (c, col) in cols.iter().enumerate() {
                for (r, x) in col {
                    m[(*r, c)] = x.clone();
                }
            }
            Ok(Lin::from_matrix(&restrict_to_cuts(from, triple, m)?))
        };
        Ok((restricted(&dom_a, "alpha", &to_triple_a)?, restricted(&dom_a2, "alpha'", &to_triple_a2)?))
    }

    /// Co-opposite bialgebroid over `B̄`: `s` and `t` exchanged, coproduct flipped.
    pub fn cop(&self) -> Result<Self> {
        let base = self.base().opposite();
        let total = self.total().clone();
        let s = self.ring.t.matrix.clone();
        let t = self.ring.s.matrix.clone();
        let ring = BeRing::new(base, total, s, t)?;
        let n = self.n();
        let flip = Lin::from_fn(vec![n], vec![n, n], |x| self.delta.image(x).permute(&[1, 0]).into_data());
        Self::new(BialgebroidData { ring, delta: flip.to_matrix(), eps: self.eps_matrix() })
    }

    /// Morphism view of the counit, for callers that want a matrix.
    pub fn counit_morphism_matrix(&self) -> Matrix<F> {
        self.eps_matrix()
    }

    /// Source map as a morphism (already validated by the ring).
    pub fn source(&self) -> &AlgebraMorphism<F> {
        &self.ring.s
    }

    pub fn target(&self) -> &AlgebraMorphism<F> {
        &self.ring.t
    }
}

/// Restrict a map on representatives to the cut of its domain and express the
/// images in cut coordinates of the codomain.
pub fn restrict_to_cuts<F: Field>(from: &Space<F>, to: &Space<F>, m: Matrix<F>) -> Result<Matrix<F>> {
    if from.cut_dim() == from.dim() && to.cut_dim() == to.dim() {
        return Ok(m);
    }
    let mut cols = Vec::with_capacity(from.cut_dim());
    for k in 0..from.cut_dim() {
        let img = m.mul_vec(&from.cut_basis(k));
        let c = to.cut_coords(&img).ok_or_else(|| Error::NotWellDefined { context: format!("image leaves the cut of {}", to.label()), witness: vec![k] })?;
        cols.push(c);
    }
    Ok(Matrix::from_cols(to.cut_dim(), &cols))
}
