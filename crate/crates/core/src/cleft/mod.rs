//! Cleft extensions `N ⊆ P` given by a cleaving map `γ: L → P`: the map
//! `j(X⊗p) = X₍₁₎◇γ(X₍₂₎)p`, the table `X^α ⊗ X^β = j⁻¹(X◇1)`, the induced
//! Galois structure, the algebra `L#^γN` and the normal basis isomorphism.
//! The submodules build crossed products `L#_σN` from a measuring and a
//! ring-valued 2-cocycle, and relate them by gauge transformations.

mod crossed;
mod gauge;

pub use crossed::{
    check_measuring_cocycle, cocycle_ring_identity, convolution_inverse, convolution_unit, convolve, crossed_is_cleft, crossed_product, extract_from_cleft,
    trivial_measuring, trivial_ring_cocycle, verify_extraction, BbarRing, CrossedProduct, Measuring, RingCocycle,
};
pub use gauge::{extract_gauge, gauge_iso, gauge_transform, random_gauge, search_gauge, GaugeElement};

use crate::algebra::{check_algebra, Algebra, AlgebraMorphism};
use crate::bialgebroid::{identity, Bialgebroid, LeftHopf};
use crate::comodule::{canonical_map, GaloisExtension, LeftComoduleAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, MultiModule, Side};
use crate::report::{tuples, Gate, Report};
use crate::space::{descend_map, Space};
use crate::tensor::{unflatten, Lin, Tensor};

/// `L ⊗_B̄ P` with `X t(b) ⊗ p = X ⊗ ι(b)p`, the domain of `j`.
pub const LBAR_P: &str = "int_b L(b~) * (b~)P";
/// `L ◇_B P` with `t(b)X ⊗ p = X ⊗ η(b)p`, the codomain of `j`.
pub const DIAMOND_P: &str = "int_b (b~)L * (b)P";
/// `L ⊗_B̄ N`, the carrier of `L#^γN` and of `L#_σN`.
pub const LBAR_N: &str = "int_b L(b~) * (b~)N";

/// Nonzero entries of a tensor with their multi-indices.
pub(crate) fn nonzero<F: Field>(t: &Tensor<F>) -> Vec<(Vec<usize>, F)> {
    t.data().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (unflatten(t.dims(), i), x.clone())).collect()
}

pub(crate) fn axpy<F: Field>(out: &mut [F], c: &F, v: &[F]) {
    for (o, x) in out.iter_mut().zip(v) {
        o.add_mul(c, x);
    }
}

/// An algebra on the classes of `space` from a product of raw basis
/// elements, certified to kill the relations on both sides, to be
/// associative and to have the class of `unit` as its unit.
pub(crate) fn ring_on_quotient<F: Field>(space: &Space<F>, name: &str, context: &str, unit: &Tensor<F>, raw: impl Fn(usize, usize) -> Result<Vec<F>>) -> Result<Algebra<F>> {
    let (d, rd) = (space.dim(), space.raw_dim());
    let mut table = Vec::with_capacity(rd * rd);
    for i in 0..rd {
        for j in 0..rd {
            table.push(raw(i, j)?);
        }
    }
    let prod = |u: &[(usize, F)], v: &[(usize, F)]| {
        let mut out = vec![F::zero(); d];
        for (i, a) in u {
            for (j, b) in v {
                axpy(&mut out, &a.mul(b), &table[i * rd + j]);
            }
        }
        out
    };
    for (k, r) in space.quotient().relations().rows().iter().enumerate() {
        for i in 0..rd {
            let e = [(i, F::one())];
            if prod(r, &e).iter().chain(&prod(&e, r)).any(|x| !x.is_zero()) {
                return Err(Error::NotWellDefined { context: context.into(), witness: vec![k, i] });
            }
        }
    }
    let reps: Vec<Vec<(usize, F)>> = (0..d)
        .map(|k| {
            let mut v = vec![F::zero(); d];
            v[k] = F::one();
            space.section(&v).data().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
        })
        .collect();
    let c: Vec<Vec<Vec<F>>> = (0..d).map(|i| (0..d).map(|j| prod(&reps[i], &reps[j])).collect()).collect();
    let algebra = Algebra::unchecked(name, &c, space.project(unit))?;
    let rep = check_algebra(&algebra);
    if let Some(f) = rep.failures().next() {
        return Err(if f.id == "assoc" {
            Error::NotAssociative { witness: f.witness.clone() }
        } else {
            Error::AlgebraAxiom { algebra: name.into(), law: f.id.clone(), witness: f.witness.clone() }
        });
    }
    Ok(algebra)
}

/// `P` with `b·p·b' = η(b)pη(b')`, `b̄·p = ι(b)p`, `p·b̄ = pι(b)` and the
/// regular actions of the coinvariants (`N`) and of `P` itself.
fn cleft_carrier<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, iota: &AlgebraMorphism<F>) -> MultiModule<F> {
    let p = &alg.algebra;
    let nb = bg.nb();
    let eta: Vec<Vec<F>> = (0..nb).map(|b| alg.eta.apply(&bg.base().basis(b))).collect();
    let io: Vec<Vec<F>> = (0..nb).map(|b| iota.apply(&bg.base().basis(b))).collect();
    let left = |xs: &[Vec<F>]| xs.iter().map(|x| p.left_matrix(x)).collect::<Vec<_>>();
    let right = |xs: &[Vec<F>]| xs.iter().map(|x| p.right_matrix(x)).collect::<Vec<_>>();
    let nbasis = alg.coinvariants.basis_dense();
    let pbasis: Vec<Vec<F>> = (0..p.dim()).map(|i| p.basis(i)).collect();
    MultiModule::new("P", p.dim())
        .with_action(ActionKey::left_b(), left(&eta))
        .with_action(ActionKey::right_b(), right(&eta))
        .with_action(ActionKey::left_bbar(), left(&io))
        .with_action(ActionKey::right_bbar(), right(&io))
        .with_action(ActionKey::new("N", Side::Left, false), left(&nbasis))
        .with_action(ActionKey::new("N", Side::Right, false), right(&nbasis))
        .with_action(ActionKey::new("P", Side::Left, false), left(&pbasis))
        .with_action(ActionKey::new("P", Side::Right, false), right(&pbasis))
}

/// The coinvariants of a comodule algebra as a `B̄`-ring through `ι`, with
/// `L ⊗_B̄ N` and its inclusion into `L ⊗_B̄ P`.
pub(crate) struct NSide<F> {
    pub ring: BbarRing<F>,
    pub lbar_n: Space<F>,
    /// `N` coordinates to `P`, as a map `[dN] → [dP]`
    pub embed: Lin<F>,
}

pub(crate) fn n_side<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, iota: &AlgebraMorphism<F>) -> Result<NSide<F>> {
    let n_alg = alg.coinvariant_algebra()?;
    let nbasis = alg.coinvariants.basis_dense();
    let cols: Vec<Vec<F>> = (0..bg.nb())
        .map(|b| alg.coinvariants.coords(&iota.apply(&bg.base().basis(b))).ok_or(Error::BbarNotInCoinvariants { witness: vec![b] }))
        .collect::<Result<_>>()?;
    let ring = BbarRing::new(bg, n_alg, Matrix::from_cols(nbasis.len(), &cols))?;
    let lbar_n = Space::build(LBAR_N, &[&bg.l, &ring.module])?;
    let embed = Lin::from_fn(vec![nbasis.len()], vec![alg.dim()], |i| nbasis[i].clone());
    Ok(NSide { ring, lbar_n, embed })
}

/// A cleft extension `N ⊆ P` with cleaving map `γ` and `B̄ ⊆ N` given by
/// the algebra map `ι: B̄ → P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleftExtension<F> {
    pub alg: LeftComoduleAlgebra<F>,
    pub iota: AlgebraMorphism<F>,
    pub gamma: Lin<F>,
    /// `P` with the `η` and `ι` actions
    pub carrier: MultiModule<F>,
    pub lbar_p: Space<F>,
    pub diamond_p: Space<F>,
    pub j: Matrix<F>,
    pub j_inv: Matrix<F>,
    /// `X ↦ X^α ⊗ X^β`, canonical in `L ⊗_B̄ P`
    pub alpha_beta: Lin<F>,
    /// the coinvariants as a `B̄`-ring through `ι`
    pub ring: BbarRing<F>,
    pub lbar_n: Space<F>,
    embed: Lin<F>,
    /// classes of `L ⊗_B̄ N` to classes of `L ⊗_B̄ P`
    incl: Matrix<F>,
    /// `N` coordinates to classes of `1 ⊗ n` in `L ⊗_B̄ P`
    unit_line: Matrix<F>,
}

/// Validate `ι` and `γ` and assemble `j`, `j⁻¹` and the `α β` table.
/// `iota` is `dim P × nB`, `gamma` is `dim P × n`.
pub fn check_cleft<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, iota: &Matrix<F>, gamma: &Matrix<F>) -> (Option<CleftExtension<F>>, (Report, Option<Error>)) {
    let mut g = Gate::new("cleft");
    let (n, nb, d) = (bg.n(), bg.nb(), alg.dim());
    if gamma.rows() != d || gamma.cols() != n {
        g.note("assemble", "gamma:L->P", Some(Error::DimMismatch(format!("cleaving map must be {d}x{n}"))));
        return (None, (g.report, g.first));
    }
    let iota = match AlgebraMorphism::new("iota", &bg.base().opposite(), &alg.algebra, iota.clone()) {
        Ok(m) => m,
        Err(e) => {
            g.note("iota", "iota:Bbar->P", Some(e));
            return (None, (g.report, g.first));
        }
    };
    g.note("iota", "iota:Bbar->P", None);
    let w = (0..nb).find(|&b| !alg.coinvariants.contains(&iota.apply(&bg.base().basis(b))));
    g.note("bbar-in-n", "iota(Bbar)inN", w.map(|b| Error::BbarNotInCoinvariants { witness: vec![b] }));

    let gl = Lin::from_matrix(gamma);
    let p = &alg.algebra;
    let law = |law: &str, w: Option<Vec<usize>>| w.map(|w| Error::GammaNotColinear { law: law.into(), witness: w });
    let g1 = gamma.mul_vec(bg.total().unit());
    let w = (0..g1.len()).find(|&i| g1[i] != p.unit()[i]).map(|i| vec![i]);
    g.note("unit", "gamma(1)=1", law("unit", w));
    let dia = &alg.comodule.diamond;
    let w = (0..n).find(|&x| !dia.equal(&alg.comodule.coact(&bg.e(x).apply(&[0], &gl), 0), &bg.delta().image(x).apply(&[1], &gl))).map(|x| vec![x]);
    g.note("colinear", "delta(gamma(X))=X1<>gamma(X2)", law("colinear", w));
    let gam = |x: &Tensor<F>| x.apply(&[0], &gl).into_data();
    let e_iota = |b: usize| iota.apply(&bg.base().basis(b));
    let e_eta = |b: usize| alg.eta.apply(&bg.base().basis(b));
    let w = tuples(&[nb, nb, n]).into_iter().find(|t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_bbar(), t[0]), 0, &ActionKey::right_bbar(), t[1]);
        gam(&x) != p.mul(&p.mul(&e_iota(t[0]), &gam(&bg.e(t[2]))), &e_iota(t[1]))
    });
    g.note("bbar-bilinear", "gamma(t(a)Xt(b))=iota(a)gamma(X)iota(b)", law("bbar-bilinear", w));
    let w = tuples(&[nb, nb, n]).into_iter().find(|t| {
        let x = bg.act(&bg.act(&bg.e(t[2]), 0, &ActionKey::left_b(), t[0]), 0, &ActionKey::right_b(), t[1]);
        gam(&x) != p.mul(&p.mul(&e_eta(t[0]), &gam(&bg.e(t[2]))), &e_eta(t[1]))
    });
    g.note("b-bilinear", "gamma(s(a)Xs(b))=eta(a)gamma(X)eta(b)", law("b-bilinear", w));
    if !g.ok() {
        return (None, (g.report, g.first));
    }

    let carrier = cleft_carrier(bg, alg, &iota);
    let built = (|| -> Result<_> {
        let lbar_p = Space::build(LBAR_P, &[&bg.l, &carrier])?;
        let diamond_p = Space::build(DIAMOND_P, &[&bg.l, &carrier])?;
        let j = descend_map(&lbar_p, &diamond_p, "j", |t| j_raw(bg, alg, &gl, t))?;
        Ok((lbar_p, diamond_p, j))
    })();
    let (lbar_p, diamond_p, j) = match built {
        Ok(v) => v,
        Err(e) => {
            g.note("j-bijective", "j:L(x)P->L<>P", Some(e));
            return (None, (g.report, g.first));
        }
    };
    let j_inv = match (j.rows() == j.cols()).then(|| j.inverse().ok()).flatten() {
        Some(m) => m,
        None => {
            g.note("j-bijective", "j:L(x)P->L<>P", Some(Error::JNotBijective { rank: j.rank(), dim: lbar_p.dim().max(diamond_p.dim()) }));
            return (None, (g.report, g.first));
        }
    };
    g.note("j-bijective", "j:L(x)P->L<>P", None);
    let one = alg.one();
    let alpha_beta = Lin::from_fn(vec![n], vec![n, d], |x| lbar_p.section(&j_inv.mul_vec(&diamond_p.project(&bg.e(x).outer(&one)))).into_data());

    let side = n_side(bg, alg, &iota).and_then(|s| {
        let incl = descend_map(&s.lbar_n, &lbar_p, "L(x)N->L(x)P", |t| t.apply(&[1], &s.embed))?;
        if incl.rank() != s.lbar_n.dim() {
            return Err(Error::RoundTripFails { what: "L(x)N->L(x)P is not injective".into(), witness: vec![] });
        }
        Ok((s, incl))
    });
    let (side, incl) = match side {
        Ok(v) => v,
        Err(e) => {
            g.note("coinvariant-ring", "N(x)Bbar", Some(e));
            return (None, (g.report, g.first));
        }
    };
    g.note("coinvariant-ring", "N(x)Bbar", None);
    let one_l = bg.one();
    let dn = side.ring.dim();
    let unit_line = Matrix::from_cols(lbar_p.dim(), &(0..dn).map(|c| lbar_p.project(&one_l.outer(&side.embed.image(c)))).collect::<Vec<_>>());
    let c = CleftExtension {
        alg: alg.clone(),
        iota,
        gamma: gl,
        carrier,
        lbar_p,
        diamond_p,
        j,
        j_inv,
        alpha_beta,
        ring: side.ring,
        lbar_n: side.lbar_n,
        embed: side.embed,
        incl,
        unit_line,
    };
    (Some(c), (g.report, None))
}

/// `X ⊗ p ↦ X₍₁₎ ⊗ γ(X₍₂₎)p` on a raw tensor `[n, dP]`.
fn j_raw<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, gamma: &Lin<F>, t: &Tensor<F>) -> Tensor<F> {
    alg.mul_legs(&t.apply(&[0], bg.delta()).apply(&[1], gamma), 1, 2)
}

impl<F: Field> CleftExtension<F> {
    pub fn new(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, iota: &Matrix<F>, gamma: &Matrix<F>) -> Result<Self> {
        match check_cleft(bg, alg, iota, gamma) {
            (Some(c), _) => Ok(c),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Replace an `L` leg by `X^α ⊗ X^β`.
    pub fn split(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.alpha_beta)
    }

    pub fn gamma_matrix(&self) -> Matrix<F> {
        self.gamma.to_matrix()
    }

    /// `ι` as a `dim P × nB` matrix.
    pub fn iota_matrix(&self) -> Matrix<F> {
        self.iota.matrix.clone()
    }

    /// The element of `P` with coordinates `m` in the basis of `N`.
    pub fn n_elt(&self, m: &[F]) -> Tensor<F> {
        Tensor::vector(m).apply(&[0], &self.embed)
    }

    /// Embedding `N → P` as a map `[dN] → [dP]`.
    pub fn embed(&self) -> &Lin<F> {
        &self.embed
    }

    /// The `N` coordinates of `m` when the class `v` of `L ⊗_B̄ P` is `1 ⊗ m`.
    pub fn collapse(&self, v: &[F]) -> Option<Vec<F>> {
        self.unit_line.solve(v).ok().filter(|m| self.unit_line.mul_vec(m) == v)
    }

    /// The class in `L ⊗_B̄ N` of a class `v` of `L ⊗_B̄ P` whose second leg lies in `N`.
    pub fn to_lbar_n(&self, v: &[F]) -> Option<Vec<F>> {
        self.incl.solve(v).ok()
    }

    /// Same structure with one entry of the `α β` table replaced, for perturbation tests.
    pub fn with_entry(&self, x: usize, value: Tensor<F>) -> Self {
        CleftExtension { alpha_beta: crate::comodule::replace_entry(&self.alpha_beta, x, value), ..self.clone() }
    }

    /// `j` on a raw tensor `[n, dP]`.
    pub fn j_raw(&self, bg: &Bialgebroid<F>, t: &Tensor<F>) -> Tensor<F> {
        j_raw(bg, &self.alg, &self.gamma, t)
    }
}

/// The identities of the `α β` table: both inverse laws, the four one-sided
/// bimodule laws, the `B̄`-balancing, and the compatibilities with `Δ` and
/// with `X₊ ⊗ X₋`.
pub fn verify_cleaving_identities<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>, h: &LeftHopf<F>) -> Report {
    let mut r = Report::new("cleft");
    let (n, nb) = (bg.n(), bg.nb());
    let xs = || tuples(&[n]);
    let one = c.alg.one();
    let ab = |x: usize| c.alpha_beta.image(x);
    let alg = &c.alg;
    let p_act = |t: &Tensor<F>, leg: usize, key: ActionKey, b: usize| t.apply(&[leg], &Lin::from_matrix(&c.carrier.action(&key).expect("cleft carrier")[b]));

    identity(&mut r, "cleaving-1", "j(X^a(x)X^b)=X<>1", &c.diamond_p, xs(), false, |t| (c.j_raw(bg, &ab(t[0])), bg.e(t[0]).outer(&one)));
    identity(&mut r, "cleaving-2", "X1^a(x)X1^b gamma(X2)=X(x)1", &c.lbar_p, xs(), false, |t| {
        let v = c.split(&bg.delta().image(t[0]), 0).apply(&[2], &c.gamma);
        (alg.mul_legs(&v, 1, 2), bg.e(t[0]).outer(&one))
    });
    identity(&mut r, "cleaving-3", "(s(a)X)^a(x)(s(a)X)^b=s(a)X^a(x)X^b", &c.lbar_p, tuples(&[nb, n]), false, |t| {
        (c.split(&bg.act(&bg.e(t[1]), 0, &ActionKey::left_b(), t[0]), 0), bg.act(&ab(t[1]), 0, &ActionKey::left_b(), t[0]))
    });
    identity(&mut r, "cleaving-4", "(Xs(b))^a(x)(Xs(b))^b=X^as(b)(x)X^b", &c.lbar_p, tuples(&[nb, n]), false, |t| {
        (c.split(&bg.act(&bg.e(t[1]), 0, &ActionKey::right_b(), t[0]), 0), bg.act(&ab(t[1]), 0, &ActionKey::right_b(), t[0]))
    });
    identity(&mut r, "cleaving-5", "(t(a)X)^a(x)(t(a)X)^b=X^a(x)X^b eta(a)", &c.lbar_p, tuples(&[nb, n]), false, |t| {
        (c.split(&bg.act(&bg.e(t[1]), 0, &ActionKey::left_bbar(), t[0]), 0), p_act(&ab(t[1]), 1, ActionKey::right_b(), t[0]))
    });
    identity(&mut r, "cleaving-6", "(Xt(b))^a(x)(Xt(b))^b=X^a(x)eta(b)X^b", &c.lbar_p, tuples(&[nb, n]), false, |t| {
        (c.split(&bg.act(&bg.e(t[1]), 0, &ActionKey::right_bbar(), t[0]), 0), p_act(&ab(t[1]), 1, ActionKey::left_b(), t[0]))
    });
    identity(&mut r, "cleaving-7", "t(b)X^a(x)X^b=X^a(x)X^b iota(b)", &c.lbar_p, tuples(&[nb, n]), false, |t| {
        (bg.act(&ab(t[1]), 0, &ActionKey::left_bbar(), t[0]), p_act(&ab(t[1]), 1, ActionKey::right_bbar(), t[0]))
    });
    let label = "X^a1<>X^a2(x)X^b=X1<>X2^a(x)X2^b";
    if let Some(sp) = crate::comodule::build_or_fail(&mut r, "cleaving-8", label, "int_{b,c} (c~)L * (c)L(b~) * (b~)P", &[&bg.l, &bg.l, &c.carrier]) {
        identity(&mut r, "cleaving-8", label, &sp, xs(), false, |t| (ab(t[0]).apply(&[0], bg.delta()), c.split(&bg.delta().image(t[0]), 1)));
    }
    let label = "X^a(x)X^b(-1)(x)X^b(0)=X+^a(x)X-(x)X+^b";
    if let Some(sp) = crate::comodule::build_or_fail(&mut r, "cleaving-9", label, "int^{c,d} int_{a,b} (c~)L(a~) * (b~)L(d~) * (a~,b)P(c~,d)", &[&bg.l, &bg.l, &c.carrier]) {
        identity(&mut r, "cleaving-9", label, &sp, xs(), false, |t| {
            (alg.comodule.coact(&ab(t[0]), 1), c.split(&h.pm(&bg.e(t[0]), 0), 0).permute(&[0, 2, 1]))
        });
    }
    r
}

/// `p ↦ p₍₋₁₎^α ⊗ p₍₋₁₎^β p₍₀₎`, certified to land in `L ⊗_B̄ N`. Returns
/// the class in `L ⊗_B̄ N`.
pub fn coinvariant_factorization<F: Field>(c: &CleftExtension<F>, p: &Tensor<F>) -> Result<Vec<F>> {
    let v = c.alg.mul_legs(&c.split(&c.alg.comodule.coact(p, 0), 0), 1, 2);
    c.to_lbar_n(&c.lbar_p.project(&v)).ok_or(Error::RoundTripFails { what: "factorization leaves L(x)N".into(), witness: vec![] })
}

/// The canonical map of the underlying comodule algebra, with its
/// translation map compared against `τ(X) = γ(X^α) ⊗_N X^β`.
pub fn cleft_to_galois<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>) -> Result<(GaloisExtension<F>, Report)> {
    let gx = canonical_map(bg, &c.alg)?;
    let mut r = Report::new("cleft");
    identity(&mut r, "cleft-translation", "X<1>(x)NX<2>=gamma(X^a)(x)NX^b", &gx.domain, tuples(&[bg.n()]), false, |t| {
        (gx.tau.image(t[0]), c.alpha_beta.image(t[0]).apply(&[0], &c.gamma))
    });
    Ok((gx, r))
}

/// `L#^γN` on `L ⊗_B̄ N` with
/// `(X⊗n)(Y⊗m) = (X₍₁₎Y₍₁₎)^α ⊗ (X₍₁₎Y₍₁₎)^β γ(X₍₂₎) n γ(Y₍₂₎) m`.
pub fn gamma_crossed_product<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>) -> Result<Algebra<F>> {
    let dn = c.ring.dim();
    let alg = &c.alg;
    let unit = bg.one().outer(&Tensor::vector(c.ring.algebra.unit()));
    let dx: Vec<Vec<(Vec<usize>, F)>> = (0..bg.n()).map(|x| nonzero(&bg.delta().image(x))).collect();
    ring_on_quotient(&c.lbar_n, &format!("{}#gamma", bg.total().name()), "gamma crossed product", &unit, |i, j| {
        let (x, a, y, b) = (i / dn, i % dn, j / dn, j % dn);
        let mut acc = vec![F::zero(); c.lbar_p.dim()];
        for (xi, cx) in &dx[x] {
            for (yi, cy) in &dx[y] {
                let xy = bg.mul_legs(&bg.e(xi[0]).outer(&bg.e(yi[0])), 0, 1);
                let w = alg.mul_legs(&bg.e(xi[1]).apply(&[0], &c.gamma).outer(&c.n_elt(&c.ring.e(a))), 0, 1);
                let w = alg.mul_legs(&w.outer(&bg.e(yi[1]).apply(&[0], &c.gamma)), 0, 1);
                let w = alg.mul_legs(&w.outer(&c.n_elt(&c.ring.e(b))), 0, 1);
                let v = alg.mul_legs(&c.split(&xy, 0).outer(&w), 1, 2);
                axpy(&mut acc, &cx.mul(cy), &c.lbar_p.project(&v));
            }
        }
        c.to_lbar_n(&acc).ok_or(Error::NotWellDefined { context: "gamma crossed product leaves L(x)N".into(), witness: vec![i, j] })
    })
}

/// `φ: P → L#^γN` with `φ(p) = p₍₋₁₎^α ⊗ p₍₋₁₎^β p₍₀₎`, its inverse
/// `φ⁻¹(X⊗n) = γ(X)n`, and the algebra `L#^γN`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalBasis<F> {
    pub phi: Matrix<F>,
    pub phi_inv: Matrix<F>,
    pub product: Algebra<F>,
}

/// Build `φ` and `φ⁻¹` and certify that they are mutually inverse,
/// `B`-bilinear, `L`-colinear, unital and multiplicative.
pub fn normal_basis_iso<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>) -> (Option<NormalBasis<F>>, (Report, Option<Error>)) {
    let mut g = Gate::new("cleft");
    let (d, nb) = (c.dim(), bg.nb());
    let fail = |property: &str, w: Option<Vec<usize>>| w.map(|w| Error::NotIsomorphism { property: property.into(), witness: w });
    let built = (|| -> Result<_> {
        let cols: Vec<Vec<F>> = (0..d).map(|p| coinvariant_factorization(c, &c.alg.e(p))).collect::<Result<_>>()?;
        let phi = Matrix::from_cols(c.lbar_n.dim(), &cols);
        let plain = Space::plain("P", &[d]);
        let alg = &c.alg;
        let phi_inv = descend_map(&c.lbar_n, &plain, "phi inverse", |t| alg.mul_legs(&t.apply(&[0], &c.gamma).apply(&[1], &c.embed), 0, 1))?;
        let product = gamma_crossed_product(bg, c)?;
        Ok((phi, phi_inv, product))
    })();
    let (phi, phi_inv, product) = match built {
        Ok(v) => v,
        Err(e) => {
            g.note("assemble", "phi:P->L#N", Some(e));
            return (None, (g.report, g.first));
        }
    };
    let w = (!phi_inv.mul(&phi).is_identity() || !phi.mul(&phi_inv).is_identity()).then(Vec::new);
    g.note("bijective", "phi^-1phi=id,phiphi^-1=id", fail("bijective", w));

    let phi_t = |p: &Tensor<F>| Tensor::vector(&phi.mul_vec(p.data()));
    let rep = |v: &Tensor<F>| c.lbar_n.section(v.data());
    let eta = |b: usize| c.alg.eta.apply(&bg.base().basis(b));
    let pm = &c.alg.algebra;
    let w = tuples(&[nb, nb, d]).into_iter().find(|t| {
        let q = pm.mul(&pm.mul(&eta(t[0]), &pm.basis(t[2])), &eta(t[1]));
        let lhs = phi_t(&Tensor::vector(&q));
        let v = bg.act(&bg.act(&rep(&phi_t(&c.alg.e(t[2]))), 0, &ActionKey::left_b(), t[0]), 0, &ActionKey::right_b(), t[1]);
        lhs.data() != c.lbar_n.project(&v).as_slice()
    });
    g.note("bilinear", "phi(apb)=s(a)Xs(b)(x)n", fail("bilinear", w));

    let phi_rep = Lin::from_fn(vec![d], c.lbar_n.dims().to_vec(), |p| rep(&phi_t(&c.alg.e(p))).into_data());
    let w = match Space::build("int_{b,c} (c~)L * (c)L(b~) * (b~)N", &[&bg.l, &bg.l, &c.ring.module]) {
        Ok(sp) => (0..d)
            .find(|&p| {
                let lhs = rep(&phi_t(&c.alg.e(p))).apply(&[0], bg.delta());
                let rhs = c.alg.comodule.coaction().image(p).apply(&[1], &phi_rep);
                !sp.equal(&lhs, &rhs)
            })
            .map(|p| vec![p]),
        Err(_) => Some(vec![]),
    };
    g.note("colinear", "X1(x)X2(x)n=p(-1)(x)phi(p(0))", fail("colinear", w));

    let w = (phi.mul_vec(pm.unit()) != product.unit()).then(Vec::new);
    g.note("unit", "phi(1)=1(x)1", fail("unit", w));
    let w = tuples(&[d, d]).into_iter().find(|t| {
        let lhs = phi.mul_vec(&pm.mul(&pm.basis(t[0]), &pm.basis(t[1])));
        lhs != product.mul(&phi.mul_vec(&pm.basis(t[0])), &phi.mul_vec(&pm.basis(t[1])))
    });
    g.note("multiplicative", "phi(pq)=phi(p)phi(q)", fail("multiplicative", w));
    if g.ok() {
        (Some(NormalBasis { phi, phi_inv, product }), (g.report, None))
    } else {
        (None, (g.report, g.first))
    }
}

/// The converse direction: from a Galois extension with a normal basis
/// isomorphism `φ⁻¹: L ⊗_B̄ N → P` (a `dim P × dim(L⊗_B̄N)` matrix), read
/// `γ(X) = φ⁻¹(X⊗1)`, check that it is cleaving, and compare its table with
/// `X^α ⊗ X^β = L(X^⟨1⟩) ⊗ R(X^⟨1⟩) X^⟨2⟩` where `φ(p) = L(p) ⊗ R(p)`.
pub fn cleft_from_normal_basis<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, iota: &Matrix<F>, phi_inv: &Matrix<F>) -> Result<(CleftExtension<F>, Report)> {
    let io = AlgebraMorphism::new("iota", &bg.base().opposite(), &alg.algebra, iota.clone())?;
    let side = n_side(bg, alg, &io)?;
    let (n, d) = (bg.n(), alg.dim());
    if phi_inv.rows() != d || phi_inv.cols() != side.lbar_n.dim() {
        return Err(Error::DimMismatch(format!("normal basis map must be {d}x{}", side.lbar_n.dim())));
    }
    let phi = phi_inv.inverse().map_err(|_| Error::NotIsomorphism { property: "bijective".into(), witness: vec![] })?;
    let one_n = Tensor::vector(side.ring.algebra.unit());
    let gamma = Matrix::from_cols(d, &(0..n).map(|x| phi_inv.mul_vec(&side.lbar_n.project(&bg.e(x).outer(&one_n)))).collect::<Vec<_>>());
    let c = CleftExtension::new(bg, alg, iota, &gamma)?;
    let gx = canonical_map(bg, alg)?;
    let phi_rep = Lin::from_fn(vec![d], c.lbar_n.dims().to_vec(), |p| c.lbar_n.section(&phi.mul_vec(&alg.algebra.basis(p))).into_data());
    let mut r = Report::new("cleft");
    identity(&mut r, "normal-basis-alpha-beta", "X^a(x)X^b=L(X<1>)(x)R(X<1>)X<2>", &c.lbar_p, tuples(&[n]), false, |t| {
        let v = gx.tau.image(t[0]).apply(&[0], &phi_rep).apply(&[1], &c.embed);
        (c.alpha_beta.image(t[0]), alg.mul_legs(&v, 1, 2))
    });
    Ok((c, r))
}
