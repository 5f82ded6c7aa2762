//! Left Galois extensions `N ⊆ P`: the canonical map, the translation map
//! `τ(X) = X^⟨1⟩ ⊗_N X^⟨2⟩` and its identities, and the translation maps of
//! `L` recovered from `τ`.

use super::identities::build_or_fail;
use super::{LeftComoduleAlgebra, SkewRegular};
use crate::bialgebroid::{identity, AntiLeftHopf, Bialgebroid, LeftHopf, COTENSOR_B, TENSOR_BBAR};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, Side};
use crate::report::{tuples, Report};
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

pub const PNP: &str = "int_{n@N} P(n) * (n)P";
pub const PNPNP: &str = "int_{n@N,m@N} P(n) * (n)P(m) * (m)P";

/// `can: P⊗_N P → L◇P`, `p ⊗ q ↦ p₍₋₁₎ ◇ p₍₀₎q`, with `τ(X) = can⁻¹(X◇1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisExtension<F> {
    pub alg: LeftComoduleAlgebra<F>,
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub can: Matrix<F>,
    pub can_inv: Matrix<F>,
    pub tau: Lin<F>,
}

pub fn canonical_map<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>) -> Result<GaloisExtension<F>> {
    let p = alg.carrier();
    let domain = Space::build(PNP, &[p, p])?;
    let codomain = alg.comodule.diamond.clone();
    let can = descend_map(&domain, &codomain, "can", |t| alg.mul_legs(&alg.comodule.coact(t, 0), 1, 2))?;
    let can_inv = (can.rows() == can.cols()).then(|| can.inverse().ok()).flatten().ok_or(Error::NotGalois {
        rank: can.rank(),
        domain: domain.dim(),
        codomain: codomain.dim(),
    })?;
    let d = alg.dim();
    let one = alg.one();
    let tau = Lin::from_fn(vec![bg.n()], vec![d, d], |x| domain.section(&can_inv.mul_vec(&codomain.project(&bg.e(x).outer(&one)))).into_data());
    Ok(GaloisExtension { alg: alg.clone(), domain, codomain, can, can_inv, tau })
}

impl<F: Field> GaloisExtension<F> {
    /// Replace an `L` leg by `X^⟨1⟩ ⊗ X^⟨2⟩`.
    pub fn split(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.tau)
    }

    pub fn with_entry(&self, x: usize, value: Tensor<F>) -> Self {
        GaloisExtension { tau: super::replace_entry(&self.tau, x, value), ..self.clone() }
    }

    /// `η ∘ ε` as a map `L → P`.
    pub(crate) fn eta_eps(&self, bg: &Bialgebroid<F>) -> Lin<F> {
        bg.eps().then(&self.alg.eta.lin())
    }
}

/// Translation catalog of a left Galois extension.
pub fn verify_translation_identities<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>, h: &LeftHopf<F>) -> Report {
    let mut r = Report::new("galois");
    let (n, nb) = (bg.n(), bg.nb());
    let alg = &gx.alg;
    let (d, p, l) = (alg.dim(), alg.carrier(), &bg.l);
    let co = &alg.comodule;
    let xs = || tuples(&[n]);
    let one = alg.one();
    let tau = |x: usize| gx.tau.image(x);

    let label = "X<1>(-1)<>X<1>(0) (x)N X<2> = X1<>X2<1> (x)N X2<2>";
    if let Some(sp) = build_or_fail(&mut r, "translation-1", label, "int_{b,n@N} (b~)L * (b)P(n) * (n)P", &[l, p, p]) {
        identity(&mut r, "translation-1", label, &sp, xs(), false, |t| (co.coact(&tau(t[0]), 0), gx.split(&bg.delta().image(t[0]), 1)));
    }
    let label = "X<2>(-1) (x) X<1> (x)N X<2>(0) = X- (x) X+<1> (x)N X+<2>";
    if let Some(sp) = build_or_fail(&mut r, "translation-2", label, "int_{b,n@N} (b~)L * P(n) * (n,b)P", &[l, p, p]) {
        identity(&mut r, "translation-2", label, &sp, xs(), false, |t| {
            (co.coact(&tau(t[0]), 1).permute(&[1, 0, 2]), gx.split(&h.table.image(t[0]), 0).permute(&[2, 0, 1]))
        });
    }
    identity(&mut r, "translation-3", "X<1>(-1)<>X<1>(0)X<2> = X<>1", &gx.codomain, xs(), false, |t| {
        (alg.mul_legs(&co.coact(&tau(t[0]), 0), 1, 2), bg.e(t[0]).outer(&one))
    });
    identity(&mut r, "translation-4", "p(-1)<1> (x)N p(-1)<2>p(0) = p (x)N 1", &gx.domain, tuples(&[d]), false, |t| {
        (alg.mul_legs(&gx.split(&co.coaction().image(t[0]), 0), 1, 2), alg.e(t[0]).outer(&one))
    });
    let nkey = |side| ActionKey::new("N", side, false);
    identity(&mut r, "translation-5", "nX<1> (x)N X<2> = X<1> (x)N X<2>n", &gx.domain, tuples(&[alg.coinvariants.dim(), n]), false, |t| {
        let v = tau(t[1]);
        (co.act(&v, 0, &nkey(Side::Left), t[0]), co.act(&v, 1, &nkey(Side::Right), t[0]))
    });
    identity(&mut r, "translation-6", "(s(a)Xs(b))<1> (x)N (s(a)Xs(b))<2> = aX<1>b (x)N X<2>", &gx.domain, tuples(&[nb, nb, n]), false, |t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_b(), t[0]), 0, &ActionKey::right_b(), t[1]);
        let v = co.act(&co.act(&tau(t[2]), 0, &ActionKey::left_b(), t[0]), 0, &ActionKey::right_b(), t[1]);
        (gx.split(&x, 0), v)
    });
    identity(&mut r, "translation-7", "(t(a)Xt(b))<1> (x)N (t(a)Xt(b))<2> = X<1> (x)N bX<2>a", &gx.domain, tuples(&[nb, nb, n]), false, |t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_bbar(), t[0]), 0, &ActionKey::right_bbar(), t[1]);
        let v = co.act(&co.act(&tau(t[2]), 1, &ActionKey::left_b(), t[1]), 1, &ActionKey::right_b(), t[0]);
        (gx.split(&x, 0), v)
    });
    let plain = Space::plain("P", &[d]);
    let ee = gx.eta_eps(bg);
    identity(&mut r, "translation-8", "X<1>X<2> = eta(eps(X))", &plain, xs(), false, |t| (alg.mul_legs(&tau(t[0]), 0, 1), bg.e(t[0]).apply(&[0], &ee)));
    identity(&mut r, "translation-9", "(XY)<1> (x)N (XY)<2> = X<1>Y<1> (x)N Y<2>X<2>", &gx.domain, tuples(&[n, n]), false, |t| {
        let xy = bg.mul_legs(&bg.e(t[0]).outer(&bg.e(t[1])), 0, 1);
        let v = alg.mul_legs(&tau(t[0]).outer(&tau(t[1])), 0, 2);
        (gx.split(&xy, 0), alg.mul_legs(&v, 2, 1))
    });
    let label = "X+<1> (x)N X-<1> (x)N X-<2>X+<2> = X<1> (x)N X<2> (x)N 1";
    if let Some(sp) = build_or_fail(&mut r, "translation-10", label, PNPNP, &[p, p, p]) {
        identity(&mut r, "translation-10", label, &sp, xs(), false, |t| {
            let v = gx.split(&gx.split(&h.table.image(t[0]), 0), 2);
            (alg.mul_legs(&v, 3, 1).permute(&[0, 2, 1]), tau(t[0]).outer(&one))
        });
    }
    r
}

/// Identities linking `τ` with the skew regular structure of `P`.
pub fn verify_skew_translation_identities<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>, s: &SkewRegular<F>, a: &AntiLeftHopf<F>) -> Report {
    let mut r = Report::new("galois");
    let n = bg.n();
    let alg = &gx.alg;
    let (d, p, l) = (alg.dim(), alg.carrier(), &bg.l);
    let xs = || tuples(&[n]);
    let one = alg.one();
    let tau = |x: usize| gx.tau.image(x);
    let rc = Lin::from_fn(vec![d], vec![d, n], |q| s.table.image(q).permute(&[1, 0]).into_data());

    identity(&mut r, "skew-translation-1", "p[0]p[1]<1> (x)N p[1]<2> = 1 (x)N p", &gx.domain, tuples(&[d]), false, |t| {
        (alg.mul_legs(&gx.split(&s.table.image(t[0]), 0), 2, 0), one.outer(&alg.e(t[0])))
    });
    identity(&mut r, "skew-translation-2", "(pq)[1] (x)^B (pq)[0] = q[1]p[1] (x)^B p[0]q[0]", &s.domain, tuples(&[d, d]), false, |t| {
        let pq = alg.mul_legs(&alg.e(t[0]).outer(&alg.e(t[1])), 0, 1);
        let v = bg.mul_legs(&s.table.image(t[0]).outer(&s.table.image(t[1])), 2, 0);
        (s.split(&pq, 0), alg.mul_legs(&v, 1, 2))
    });
    let label = "X<1> (x)N X<2>[0]<>X<2>[1] = X1<1> (x)N X1<2><>X2";
    if let Some(sp) = build_or_fail(&mut r, "skew-translation-3", label, "int_{n@N,b} P(n) * (n,b~)P * (b)L", &[p, p, l]) {
        identity(&mut r, "skew-translation-3", label, &sp, xs(), false, |t| (tau(t[0]).apply(&[1], &rc), gx.split(&bg.delta().image(t[0]), 0)));
    }
    let label = "X<1>[0] (x)N X<2> (x) X<1>[1] = X[+]<1> (x)N X[+]<2> (x) X[-]";
    if let Some(sp) = build_or_fail(&mut r, "skew-translation-4", label, "int_{n@N,b} P(n,b) * (n)P * (b)L", &[p, p, l]) {
        identity(&mut r, "skew-translation-4", label, &sp, xs(), false, |t| {
            (tau(t[0]).apply(&[0], &rc).permute(&[0, 2, 1]), gx.split(&a.table.image(t[0]), 1).permute(&[1, 2, 0]))
        });
    }
    let label = "X[+]<1>X[-]<1> (x)N X[-]<2> (x)N X[+]<2> = 1 (x)N X<1> (x)N X<2>";
    if let Some(sp) = build_or_fail(&mut r, "skew-translation-5", label, PNPNP, &[p, p, p]) {
        identity(&mut r, "skew-translation-5", label, &sp, xs(), false, |t| {
            let v = gx.split(&gx.split(&a.table.image(t[0]), 0), 2);
            (alg.mul_legs(&v, 2, 0), one.outer(&tau(t[0])))
        });
    }
    r
}

/// Solve `embed(T(x)) = R(x)` for a table `T` on `from`, one `x` at a time,
/// after checking that `embed` is injective on `from`.
pub(crate) fn reconstruct<F: Field>(
    from: &Space<F>,
    to: &Space<F>,
    what: &str,
    embed: impl Fn(&Tensor<F>) -> Tensor<F>,
    n: usize,
    rhs: impl Fn(usize) -> Tensor<F>,
) -> Result<Lin<F>> {
    let m = descend_map(from, to, what, embed)?;
    if m.rank() != from.dim() {
        return Err(Error::RoundTripFails { what: format!("{what}: embedding is not injective"), witness: vec![] });
    }
    let mut cols = Vec::with_capacity(n);
    for x in 0..n {
        let v = m.solve(&to.project(&rhs(x))).map_err(|_| Error::RoundTripFails { what: what.into(), witness: vec![x] })?;
        cols.push(from.section(&v));
    }
    Ok(Lin::from_tensors(vec![n], from.dims().to_vec(), &cols))
}

/// `X₊ ⊗ X₋` from `X₊ ⊗ X₋ ⊗ 1 = X^⟨1⟩₍₋₁₎ ⊗ X^⟨2⟩₍₋₁₎ ⊗ X^⟨1⟩₍₀₎X^⟨2⟩₍₀₎`.
pub fn hopf_from_galois<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>) -> Result<Lin<F>> {
    let alg = &gx.alg;
    let co = &alg.comodule;
    let tbb = bg.space(TENSOR_BBAR, 2)?;
    let target = Space::build("int_{a,b} (b~)L(a~) * (a~)L * (b)P", &[&bg.l, &bg.l, alg.carrier()])?;
    let one = alg.one();
    reconstruct(&tbb, &target, "X+ (x) X- (x) 1", |t| t.outer(&one), bg.n(), |x| {
        let v = co.coact(&co.coact(&gx.tau.image(x), 0), 2);
        alg.mul_legs(&v, 1, 3).permute(&[0, 2, 1])
    })
}

/// `X₍₋₎ ⊗ X₍₊₎` from `X₍₊₎ ⊗ 1 ⊗ X₍₋₎ = X^⟨1⟩₍[0]₎₍₋₁₎ ⊗ X^⟨1⟩₍[0]₎₍₀₎X^⟨2⟩ ⊗ X^⟨1⟩₍[1]₎`.
pub fn anti_hopf_from_skew_galois<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>, s: &SkewRegular<F>) -> Result<Lin<F>> {
    let alg = &gx.alg;
    let co = &alg.comodule;
    let cb = bg.space(COTENSOR_B, 2)?;
    let target = Space::build("int_{a,b} (a~)L(b) * (a)P * (b)L", &[&bg.l, alg.carrier(), &bg.l])?;
    let one = alg.one();
    reconstruct(&cb, &target, "X[+] (x) 1 (x) X[-]", |t| t.outer(&one).permute(&[1, 2, 0]), bg.n(), |x| {
        let v = co.coact(&s.split(&gx.tau.image(x), 0), 1);
        alg.mul_legs(&v, 2, 3).permute(&[1, 2, 0])
    })
}
