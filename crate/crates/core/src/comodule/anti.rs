//! Anti-right Galois extensions `M ⊆ P` for right comodule algebras:
//! `ĉan(p ⊗ q) = p₍₀₎q ◇ p₍₁₎` and `τ̂(X) = X^[1̂] ⊗_M X^[2̂] = ĉan⁻¹(1◇X)`.

use super::galois::reconstruct;
use super::identities::build_or_fail;
use super::{Regular, RightComoduleAlgebra};
use crate::bialgebroid::{identity, AntiLeftHopf, Bialgebroid, LeftHopf, COTENSOR_B, TENSOR_BBAR};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, Side};
use crate::report::{tuples, Report};
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

pub const PMP: &str = "int_{m@M} P(m) * (m)P";
pub const PMPMP: &str = "int_{m@M,k@M} P(m) * (m)P(k) * (k)P";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiRightGalois<F> {
    pub alg: RightComoduleAlgebra<F>,
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub can: Matrix<F>,
    pub can_inv: Matrix<F>,
    pub tau: Lin<F>,
}

pub fn anti_right_galois<F: Field>(bg: &Bialgebroid<F>, alg: &RightComoduleAlgebra<F>) -> Result<AntiRightGalois<F>> {
    let p = alg.carrier();
    let domain = Space::build(PMP, &[p, p])?;
    let codomain = alg.comodule.diamond.clone();
    let can = descend_map(&domain, &codomain, "can-hat", |t| alg.mul_legs(&alg.comodule.coact(t, 0), 0, 2))?;
    let can_inv = (can.rows() == can.cols()).then(|| can.inverse().ok()).flatten().ok_or(Error::NotGalois {
        rank: can.rank(),
        domain: domain.dim(),
        codomain: codomain.dim(),
    })?;
    let d = alg.dim();
    let one = alg.one();
    let tau = Lin::from_fn(vec![bg.n()], vec![d, d], |x| domain.section(&can_inv.mul_vec(&codomain.project(&one.outer(&bg.e(x))))).into_data());
    Ok(AntiRightGalois { alg: alg.clone(), domain, codomain, can, can_inv, tau })
}

impl<F: Field> AntiRightGalois<F> {
    pub fn split(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.tau)
    }

    pub fn with_entry(&self, x: usize, value: Tensor<F>) -> Self {
        AntiRightGalois { tau: super::replace_entry(&self.tau, x, value), ..self.clone() }
    }
}

/// Anti translation catalog.
pub fn verify_anti_translation_identities<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>, a: &AntiLeftHopf<F>) -> Report {
    let mut r = Report::new("galois");
    let (n, nb) = (bg.n(), bg.nb());
    let alg = &gx.alg;
    let (d, p, l) = (alg.dim(), alg.carrier(), &bg.l);
    let co = &alg.comodule;
    let xs = || tuples(&[n]);
    let one = alg.one();
    let tau = |x: usize| gx.tau.image(x);

    let label = "X^1(0) (x)M X^2 (x) X^1(1) = X1^1 (x)M X1^2 (x) X2";
    if let Some(sp) = build_or_fail(&mut r, "anti-translation-1", label, "int_{m@M,b} (b~)P(m) * (m)P * (b)L", &[p, p, l]) {
        identity(&mut r, "anti-translation-1", label, &sp, xs(), false, |t| {
            (co.coact(&tau(t[0]), 0).permute(&[0, 2, 1]), gx.split(&bg.delta().image(t[0]), 0))
        });
    }
    let label = "X^1 (x)M X^2(0)<>X^2(1) = X[+]^1 (x)M X[+]^2<>X[-]";
    if let Some(sp) = build_or_fail(&mut r, "anti-translation-2", label, "int_{m@M,b} P(m) * (m,b~)P * (b)L", &[p, p, l]) {
        identity(&mut r, "anti-translation-2", label, &sp, xs(), false, |t| {
            (co.coact(&tau(t[0]), 1), gx.split(&a.table.image(t[0]), 1).permute(&[1, 2, 0]))
        });
    }
    identity(&mut r, "anti-translation-3", "X^1(0)X^2<>X^1(1) = 1<>X", &gx.codomain, xs(), false, |t| {
        (alg.mul_legs(&co.coact(&tau(t[0]), 0), 0, 2), one.outer(&bg.e(t[0])))
    });
    identity(&mut r, "anti-translation-4", "p(1)^1 (x)M p(1)^2p(0) = p (x)M 1", &gx.domain, tuples(&[d]), false, |t| {
        let v = gx.split(&co.coaction().image(t[0]), 1);
        (alg.mul_legs(&v, 2, 0).permute(&[1, 0]), alg.e(t[0]).outer(&one))
    });
    let mkey = |side| ActionKey::new("M", side, false);
    identity(&mut r, "anti-translation-5", "mX^1 (x)M X^2 = X^1 (x)M X^2m", &gx.domain, tuples(&[alg.coinvariants.dim(), n]), false, |t| {
        let v = tau(t[1]);
        (co.act(&v, 0, &mkey(Side::Left), t[0]), co.act(&v, 1, &mkey(Side::Right), t[0]))
    });
    identity(&mut r, "anti-translation-6", "(s(a)Xs(b))^1 (x)M (s(a)Xs(b))^2 = X^1 (x)M b~X^2a~", &gx.domain, tuples(&[nb, nb, n]), false, |t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_b(), t[0]), 0, &ActionKey::right_b(), t[1]);
        let v = co.act(&co.act(&tau(t[2]), 1, &ActionKey::left_bbar(), t[1]), 1, &ActionKey::right_bbar(), t[0]);
        (gx.split(&x, 0), v)
    });
    identity(&mut r, "anti-translation-7", "(t(a)Xt(b))^1 (x)M (t(a)Xt(b))^2 = a~X^1b~ (x)M X^2", &gx.domain, tuples(&[nb, nb, n]), false, |t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_bbar(), t[0]), 0, &ActionKey::right_bbar(), t[1]);
        let v = co.act(&co.act(&tau(t[2]), 0, &ActionKey::left_bbar(), t[0]), 0, &ActionKey::right_bbar(), t[1]);
        (gx.split(&x, 0), v)
    });
    let plain = Space::plain("P", &[d]);
    let ee = bg.eps().then(&alg.eta.lin());
    identity(&mut r, "anti-translation-8", "X^1X^2 = eta(eps(X)~)", &plain, xs(), false, |t| (alg.mul_legs(&tau(t[0]), 0, 1), bg.e(t[0]).apply(&[0], &ee)));
    identity(&mut r, "anti-translation-9", "(XY)^1 (x)M (XY)^2 = X^1Y^1 (x)M Y^2X^2", &gx.domain, tuples(&[n, n]), false, |t| {
        let xy = bg.mul_legs(&bg.e(t[0]).outer(&bg.e(t[1])), 0, 1);
        let v = alg.mul_legs(&tau(t[0]).outer(&tau(t[1])), 0, 2);
        (gx.split(&xy, 0), alg.mul_legs(&v, 2, 1))
    });
    let label = "X[+]^1 (x)M X[-]^1 (x)M X[-]^2X[+]^2 = X^1 (x)M X^2 (x)M 1";
    if let Some(sp) = build_or_fail(&mut r, "anti-translation-10", label, PMPMP, &[p, p, p]) {
        identity(&mut r, "anti-translation-10", label, &sp, xs(), false, |t| {
            let v = gx.split(&gx.split(&a.table.image(t[0]), 1), 0);
            (alg.mul_legs(&v, 1, 3).permute(&[2, 0, 1]), tau(t[0]).outer(&one))
        });
    }
    r
}

/// Identities linking `τ̂` with the regular structure of `P`.
pub fn verify_regular_anti_identities<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>, s: &Regular<F>, h: &LeftHopf<F>) -> Report {
    let mut r = Report::new("galois");
    let n = bg.n();
    let alg = &gx.alg;
    let (d, p, l) = (alg.dim(), alg.carrier(), &bg.l);
    let xs = || tuples(&[n]);
    let one = alg.one();
    let tau = |x: usize| gx.tau.image(x);

    identity(&mut r, "regular-anti-1", "p[0]p[-1]^1 (x)M p[-1]^2 = 1 (x)M p", &gx.domain, tuples(&[d]), false, |t| {
        (alg.mul_legs(&gx.split(&s.table.image(t[0]), 1), 0, 1), one.outer(&alg.e(t[0])))
    });
    identity(&mut r, "regular-anti-2", "(pq)[0] (x)Bbar (pq)[-1] = p[0]q[0] (x)Bbar q[-1]p[-1]", &s.domain, tuples(&[d, d]), false, |t| {
        let pq = alg.mul_legs(&alg.e(t[0]).outer(&alg.e(t[1])), 0, 1);
        let v = alg.mul_legs(&s.table.image(t[0]).outer(&s.table.image(t[1])), 0, 2);
        (s.split(&pq, 0), bg.mul_legs(&v, 2, 1))
    });
    let label = "X^1 (x)M X^2[0]<>X^2[-1] = X2^1 (x)M X2^2<>X1";
    if let Some(sp) = build_or_fail(&mut r, "regular-anti-3", label, "int_{m@M,b} P(m) * (m)P(b~) * (b~)L", &[p, p, l]) {
        identity(&mut r, "regular-anti-3", label, &sp, xs(), false, |t| {
            (s.split(&tau(t[0]), 1), gx.split(&bg.delta().image(t[0]), 1).permute(&[1, 2, 0]))
        });
    }
    let label = "X^1[0] (x)M X^2 (x) X^1[-1] = X+^1 (x)M X+^2 (x) X-";
    if let Some(sp) = build_or_fail(&mut r, "regular-anti-4", label, "int_{m@M,b} P(m,b~) * (m)P * (b~)L", &[p, p, l]) {
        identity(&mut r, "regular-anti-4", label, &sp, xs(), false, |t| {
            (s.split(&tau(t[0]), 0).permute(&[0, 2, 1]), gx.split(&h.table.image(t[0]), 0))
        });
    }
    let label = "X+^1X-^1 (x)M X-^2 (x)M X+^2 = 1 (x)M X^1 (x)M X^2";
    if let Some(sp) = build_or_fail(&mut r, "regular-anti-5", label, PMPMP, &[p, p, p]) {
        identity(&mut r, "regular-anti-5", label, &sp, xs(), false, |t| {
            let v = gx.split(&gx.split(&h.table.image(t[0]), 0), 2);
            (alg.mul_legs(&v, 0, 2).permute(&[0, 2, 1]), one.outer(&tau(t[0])))
        });
    }
    r
}

/// `X₍₋₎ ⊗ X₍₊₎` from `1 ⊗ X₍₊₎ ⊗ X₍₋₎ = X^[1̂]₍₀₎X^[2̂]₍₀₎ ⊗ X^[1̂]₍₁₎ ⊗ X^[2̂]₍₁₎`.
pub fn anti_hopf_from_anti_galois<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>) -> Result<Lin<F>> {
    let alg = &gx.alg;
    let co = &alg.comodule;
    let cb = bg.space(COTENSOR_B, 2)?;
    let target = Space::build("int_{b,c} (b~)P * (b)L(c) * (c)L", &[alg.carrier(), &bg.l, &bg.l])?;
    let one = alg.one();
    reconstruct(&cb, &target, "1 (x) X[+] (x) X[-]", |t| one.outer(&t.permute(&[1, 0])), bg.n(), |x| {
        let v = co.coact(&co.coact(&gx.tau.image(x), 0), 2);
        alg.mul_legs(&v, 0, 2)
    })
}

/// `X₊ ⊗ X₋` from `X₊ ⊗ 1 ⊗ X₋ = X^[1̂]₍[0]₎₍₁₎ ⊗ X^[1̂]₍[0]₎₍₀₎X^[2̂] ⊗ X^[1̂]₍[-1]₎`.
pub fn hopf_from_regular_anti_galois<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>, s: &Regular<F>) -> Result<Lin<F>> {
    let alg = &gx.alg;
    let co = &alg.comodule;
    let tbb = bg.space(TENSOR_BBAR, 2)?;
    let target = Space::build("int_{a,b} (a)L(b~) * (a~)P * (b~)L", &[&bg.l, alg.carrier(), &bg.l])?;
    let one = alg.one();
    reconstruct(&tbb, &target, "X+ (x) 1 (x) X-", |t| t.outer(&one).permute(&[0, 2, 1]), bg.n(), |x| {
        let v = co.coact(&s.split(&gx.tau.image(x), 0), 0);
        alg.mul_legs(&v, 0, 3).permute(&[1, 0, 2])
    })
}
