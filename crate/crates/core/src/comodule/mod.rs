//! Comodules over a left bialgebroid, their skew regular and regular maps,
//! comodule algebras, Galois extensions and relative Hopf modules.

mod algebra;
mod anti;
mod galois;
mod identities;
mod roundtrip;

pub use algebra::{left_regular, right_regular, LeftComoduleAlgebra, RightComoduleAlgebra};
pub use anti::{anti_hopf_from_anti_galois, anti_right_galois, hopf_from_regular_anti_galois, verify_anti_translation_identities, verify_regular_anti_identities, AntiRightGalois};
pub use galois::{anti_hopf_from_skew_galois, canonical_map, hopf_from_galois, verify_skew_translation_identities, verify_translation_identities, GaloisExtension};
pub use identities::{verify_regular_identities, verify_skew_regular_identities};
pub(crate) use identities::build_or_fail;
pub use roundtrip::{opposite_of_regular, opposite_of_skew, verify_anti_structure_theorem, verify_opposite, verify_opposite_regular, verify_structure_theorem};

use crate::bialgebroid::{AntiLeftHopf, Bialgebroid, LeftHopf};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, MultiModule};
use crate::report::{Gate, Report};
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

/// Left comodule over `L`: a `B`-bimodule `Γ` with `δ: Γ → L×Γ`,
/// `p ↦ p₍₋₁₎ ◇ p₍₀₎`, bilinear in the sense `δ(bpb') = s(b)p₍₋₁₎s(b') ◇ p₍₀₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule<F> {
    pub carrier: MultiModule<F>,
    coaction: Lin<F>,
    /// `L◇Γ` with the Takeuchi cut
    pub diamond: Space<F>,
}

/// Right comodule: a `B̄`-bimodule with `δ: Γ → Γ×L`, `p ↦ p₍₀₎ ◇ p₍₁₎`,
/// `δ(b̄p) = p₍₀₎ ◇ t(b)p₍₁₎` and `δ(pb̄) = p₍₀₎ ◇ p₍₁₎t(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule<F> {
    pub carrier: MultiModule<F>,
    coaction: Lin<F>,
    pub diamond: Space<F>,
}

pub(crate) fn left_diamond(g: &str) -> String {
    format!("int^a int_b (b~)L(a~) * (b){g}(a)")
}

pub(crate) fn right_diamond(g: &str) -> String {
    format!("int^a int_b (b~){g}(a~) * (b)L(a)")
}

fn coaction_lin<F: Field>(m: &Matrix<F>, in_dim: usize, out: Vec<usize>, space: &Space<F>) -> Result<Lin<F>> {
    let rows: usize = out.iter().product();
    if m.rows() != rows || m.cols() != in_dim {
        return Err(Error::DimMismatch(format!("coaction must be {rows}x{in_dim}")));
    }
    let raw = Lin::from_fn(vec![in_dim], out.clone(), |p| m.col(p));
    Ok(Lin::from_fn(vec![in_dim], out, |p| space.normalize(&raw.image(p)).into_data()))
}

fn first_failure(d: usize, nb: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..nb).flat_map(|b| (0..d).map(move |p| (b, p))).find(|&(b, p)| bad(b, p)).map(|(b, p)| vec![b, p])
}

impl<F: Field> LeftComodule<F> {
    pub fn new(bg: &Bialgebroid<F>, carrier: MultiModule<F>, coaction: &Matrix<F>) -> Result<Self> {
        match Self::check(bg, carrier, coaction) {
            (Some(c), _) => Ok(c),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    /// Validate the comodule laws; `coaction` is `(n·d) × d`.
    pub fn check(bg: &Bialgebroid<F>, carrier: MultiModule<F>, coaction: &Matrix<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut g = Gate::new("comodule");
        let built = Space::build(&left_diamond(&carrier.name), &[&bg.l, &carrier])
            .and_then(|diamond| Ok((coaction_lin(coaction, carrier.dim, vec![bg.n(), carrier.dim], &diamond)?, diamond)));
        let (coaction, diamond) = match built {
            Ok(x) => x,
            Err(e) => {
                g.note("assemble", "Gamma,delta", Some(e));
                return (None, (g.report, g.first));
            }
        };
        let c = LeftComodule { carrier, coaction, diamond };
        c.laws(bg, &mut g);
        if g.ok() {
            (Some(c), (g.report, None))
        } else {
            (None, (g.report, g.first))
        }
    }

    fn laws(&self, bg: &Bialgebroid<F>, g: &mut Gate) {
        let (d, nb) = (self.dim(), bg.nb());
        let law = |law: &str, w: Option<Vec<usize>>| w.map(|w| Error::NotComodule { law: law.into(), witness: w });

        let w = (0..d).find(|&p| !self.diamond.contains(&self.coaction.image(p))).map(|p| vec![p]);
        g.note("takeuchi", "delta(p)in(LxGamma)", law("takeuchi", w));

        let w = first_failure(d, nb, |b, p| {
            let lhs = self.coact(&self.act(&self.e(p), 0, &ActionKey::left_b(), b), 0);
            let rhs = bg.act(&self.coaction.image(p), 0, &ActionKey::left_b(), b);
            !self.diamond.equal(&lhs, &rhs)
        })
        .or_else(|| {
            first_failure(d, nb, |b, p| {
                let lhs = self.coact(&self.act(&self.e(p), 0, &ActionKey::right_b(), b), 0);
                let rhs = bg.act(&self.coaction.image(p), 0, &ActionKey::right_b(), b);
                !self.diamond.equal(&lhs, &rhs)
            })
        });
        g.note("bilinear", "delta(bpb')=s(b)p(-1)s(b')<>p(0)", law("bilinear", w));

        match Space::build(&format!("int^{{a,b}} int_{{c,d}} (c~)L(a~) * (c,d~)L(a,b~) * (d){}(b)", self.name()), &[&bg.l, &bg.l, &self.carrier]) {
            Ok(triple) => {
                let w = (0..d).find(|&p| {
                    let t = self.coaction.image(p);
                    !triple.equal(&t.apply(&[0], bg.delta()), &t.apply(&[1], &self.coaction))
                });
                g.note("coassoc", "(Delta.id)delta=(id.delta)delta", law("coassociativity", w.map(|p| vec![p])));
            }
            Err(e) => g.note("coassoc", "(Delta.id)delta=(id.delta)delta", Some(e)),
        }

        let w = match self.carrier.action_lin(&ActionKey::left_b()) {
            Ok(act) => (0..d).find(|&p| self.coaction.image(p).apply(&[0], bg.eps()).apply(&[0, 1], &act) != self.e(p)).map(|p| vec![p]),
            Err(e) => return g.note("counit", "eps(p(-1))p(0)=p", Some(e)),
        };
        g.note("counit", "eps(p(-1))p(0)=p", law("counit", w));
    }

    pub fn name(&self) -> &str {
        &self.carrier.name
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn e(&self, p: usize) -> Tensor<F> {
        Tensor::e(self.dim(), p)
    }

    /// `p ↦ p₍₋₁₎ ⊗ p₍₀₎`, canonical in `L◇Γ`.
    pub fn coaction(&self) -> &Lin<F> {
        &self.coaction
    }

    pub fn coaction_matrix(&self) -> Matrix<F> {
        self.coaction.to_matrix()
    }

    /// Replace leg `leg` (a `Γ` leg) by `p₍₋₁₎ ⊗ p₍₀₎`.
    pub fn coact(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.coaction)
    }

    /// Act on a `Γ` leg by a basis element through one of the carrier's actions.
    pub fn act(&self, t: &Tensor<F>, leg: usize, key: &ActionKey, b: usize) -> Tensor<F> {
        act_on(&self.carrier, t, leg, key, b)
    }
}

impl<F: Field> RightComodule<F> {
    pub fn new(bg: &Bialgebroid<F>, carrier: MultiModule<F>, coaction: &Matrix<F>) -> Result<Self> {
        match Self::check(bg, carrier, coaction) {
            (Some(c), _) => Ok(c),
            (None, (_, e)) => Err(e.expect("failed validation carries an error")),
        }
    }

    /// Validate the comodule laws; `coaction` is `(d·n) × d`.
    pub fn check(bg: &Bialgebroid<F>, carrier: MultiModule<F>, coaction: &Matrix<F>) -> (Option<Self>, (Report, Option<Error>)) {
        let mut g = Gate::new("comodule");
        let built = Space::build(&right_diamond(&carrier.name), &[&carrier, &bg.l])
            .and_then(|diamond| Ok((coaction_lin(coaction, carrier.dim, vec![carrier.dim, bg.n()], &diamond)?, diamond)));
        let (coaction, diamond) = match built {
            Ok(x) => x,
            Err(e) => {
                g.note("assemble", "Gamma,delta", Some(e));
                return (None, (g.report, g.first));
            }
        };
        let c = RightComodule { carrier, coaction, diamond };
        c.laws(bg, &mut g);
        if g.ok() {
            (Some(c), (g.report, None))
        } else {
            (None, (g.report, g.first))
        }
    }

    fn laws(&self, bg: &Bialgebroid<F>, g: &mut Gate) {
        let (d, nb) = (self.dim(), bg.nb());
        let law = |law: &str, w: Option<Vec<usize>>| w.map(|w| Error::NotComodule { law: law.into(), witness: w });

        let w = (0..d).find(|&p| !self.diamond.contains(&self.coaction.image(p))).map(|p| vec![p]);
        g.note("takeuchi", "delta(p)in(GammaxL)", law("takeuchi", w));

        let w = first_failure(d, nb, |b, p| {
            let lhs = self.coact(&self.act(&self.e(p), 0, &ActionKey::left_bbar(), b), 0);
            let rhs = bg.act(&self.coaction.image(p), 1, &ActionKey::left_bbar(), b);
            !self.diamond.equal(&lhs, &rhs)
        })
        .or_else(|| {
            first_failure(d, nb, |b, p| {
                let lhs = self.coact(&self.act(&self.e(p), 0, &ActionKey::right_bbar(), b), 0);
                let rhs = bg.act(&self.coaction.image(p), 1, &ActionKey::right_bbar(), b);
                !self.diamond.equal(&lhs, &rhs)
            })
        });
        g.note("bilinear", "delta(b~pb'~)=p(0)<>t(b)p(1)t(b')", law("bilinear", w));

        match Space::build(&format!("int^{{a,b}} int_{{c,d}} (c~){}(a~) * (c,d~)L(a,b~) * (d)L(b)", self.name()), &[&self.carrier, &bg.l, &bg.l]) {
            Ok(triple) => {
                let w = (0..d).find(|&p| {
                    let t = self.coaction.image(p);
                    !triple.equal(&t.apply(&[1], bg.delta()), &t.apply(&[0], &self.coaction))
                });
                g.note("coassoc", "(id.Delta)delta=(delta.id)delta", law("coassociativity", w.map(|p| vec![p])));
            }
            Err(e) => g.note("coassoc", "(id.Delta)delta=(delta.id)delta", Some(e)),
        }

        let w = match self.carrier.action_lin(&ActionKey::left_bbar()) {
            Ok(act) => (0..d).find(|&p| self.coaction.image(p).apply(&[1], bg.eps()).apply(&[1, 0], &act) != self.e(p)).map(|p| vec![p]),
            Err(e) => return g.note("counit", "eps(p(1))~p(0)=p", Some(e)),
        };
        g.note("counit", "eps(p(1))~p(0)=p", law("counit", w));
    }

    pub fn name(&self) -> &str {
        &self.carrier.name
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn e(&self, p: usize) -> Tensor<F> {
        Tensor::e(self.dim(), p)
    }

    /// `p ↦ p₍₀₎ ⊗ p₍₁₎`, canonical in `Γ◇L`.
    pub fn coaction(&self) -> &Lin<F> {
        &self.coaction
    }

    pub fn coaction_matrix(&self) -> Matrix<F> {
        self.coaction.to_matrix()
    }

    pub fn coact(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.coaction)
    }

    pub fn act(&self, t: &Tensor<F>, leg: usize, key: &ActionKey, b: usize) -> Tensor<F> {
        act_on(&self.carrier, t, leg, key, b)
    }
}

pub(crate) fn act_on<F: Field>(m: &MultiModule<F>, t: &Tensor<F>, leg: usize, key: &ActionKey, b: usize) -> Tensor<F> {
    let mats = m.action(key).unwrap_or_else(|e| panic!("{e}"));
    t.apply(&[leg], &Lin::from_matrix(&mats[b]))
}

/// `φ: L⊗^B Γ → L◇Γ`, `X ⊗ p ↦ p₍₋₁₎X ◇ p₍₀₎`. `table` sends `p` to
/// `p₍[1]₎ ⊗ p₍[0]₎ = φ⁻¹(1◇p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRegular<F> {
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub phi: Matrix<F>,
    pub phi_inv: Matrix<F>,
    pub table: Lin<F>,
}

/// `ψ: Γ⊗_B̄ L → Γ◇L`, `p ⊗ X ↦ p₍₀₎ ◇ p₍₁₎X`. `table` sends `p` to
/// `p₍[0]₎ ⊗ p₍[-1]₎ = ψ⁻¹(p◇1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regular<F> {
    pub domain: Space<F>,
    pub codomain: Space<F>,
    pub psi: Matrix<F>,
    pub psi_inv: Matrix<F>,
    pub table: Lin<F>,
}

fn invert<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    (m.rows() == m.cols()).then(|| m.inverse().ok()).flatten()
}

pub fn skew_regular<F: Field>(bg: &Bialgebroid<F>, g: &LeftComodule<F>) -> Result<SkewRegular<F>> {
    let domain = Space::build(&format!("int_b (b)L * {}(b)", g.name()), &[&bg.l, &g.carrier])?;
    let codomain = g.diamond.clone();
    let phi = descend_map(&domain, &codomain, "phi", |t| bg.mul_legs(&g.coact(t, 1), 1, 0))?;
    let phi_inv = invert(&phi).ok_or(Error::NotSkewRegular { rank: phi.rank(), dim: domain.dim().max(codomain.dim()) })?;
    let one = bg.one();
    let table = Lin::from_fn(vec![g.dim()], vec![bg.n(), g.dim()], |p| domain.section(&phi_inv.mul_vec(&codomain.project(&one.outer(&g.e(p))))).into_data());
    Ok(SkewRegular { domain, codomain, phi, phi_inv, table })
}

pub fn regular<F: Field>(bg: &Bialgebroid<F>, g: &RightComodule<F>) -> Result<Regular<F>> {
    let domain = Space::build(&format!("int_b {}(b~) * (b~)L", g.name()), &[&g.carrier, &bg.l])?;
    let codomain = g.diamond.clone();
    let psi = descend_map(&domain, &codomain, "psi", |t| bg.mul_legs(&g.coact(t, 0), 1, 2))?;
    let psi_inv = invert(&psi).ok_or(Error::NotRegular { rank: psi.rank(), dim: domain.dim().max(codomain.dim()) })?;
    let one = bg.one();
    let table = Lin::from_fn(vec![g.dim()], vec![g.dim(), bg.n()], |p| domain.section(&psi_inv.mul_vec(&codomain.project(&g.e(p).outer(&one)))).into_data());
    Ok(Regular { domain, codomain, psi, psi_inv, table })
}

impl<F: Field> SkewRegular<F> {
    /// Replace a `Γ` leg by the two legs `p₍[1]₎ ⊗ p₍[0]₎`.
    pub fn split(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.table)
    }

    /// The induced right comodule `p ↦ p₍[0]₎ ◇ p₍[1]₎` on `Γ` with
    /// `b̄pb̄' = b'pb`.
    pub fn right_comodule(&self, bg: &Bialgebroid<F>, g: &LeftComodule<F>) -> Result<RightComodule<F>> {
        let mut carrier = g.carrier.clone();
        carrier.set_action(ActionKey::left_bbar(), g.carrier.action(&ActionKey::right_b())?.to_vec());
        carrier.set_action(ActionKey::right_bbar(), g.carrier.action(&ActionKey::left_b())?.to_vec());
        let d = g.dim();
        let m = Lin::from_fn(vec![d], vec![d, bg.n()], |p| self.table.image(p).permute(&[1, 0]).into_data()).to_matrix();
        RightComodule::new(bg, carrier, &m)
    }

    pub fn with_entry(&self, p: usize, value: Tensor<F>) -> Self {
        SkewRegular { table: replace_entry(&self.table, p, value), ..self.clone() }
    }
}

impl<F: Field> Regular<F> {
    /// Replace a `Γ` leg by the two legs `p₍[0]₎ ⊗ p₍[-1]₎`.
    pub fn split(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(&[leg], &self.table)
    }

    /// The induced left comodule `p ↦ p₍[-1]₎ ◇ p₍[0]₎` on `Γ` with
    /// `b'pb = b̄pb̄'`.
    pub fn left_comodule(&self, bg: &Bialgebroid<F>, g: &RightComodule<F>) -> Result<LeftComodule<F>> {
        let mut carrier = g.carrier.clone();
        carrier.set_action(ActionKey::left_b(), g.carrier.action(&ActionKey::right_bbar())?.to_vec());
        carrier.set_action(ActionKey::right_b(), g.carrier.action(&ActionKey::left_bbar())?.to_vec());
        let d = g.dim();
        let m = Lin::from_fn(vec![d], vec![bg.n(), d], |p| self.table.image(p).permute(&[1, 0]).into_data()).to_matrix();
        LeftComodule::new(bg, carrier, &m)
    }

    pub fn with_entry(&self, p: usize, value: Tensor<F>) -> Self {
        Regular { table: replace_entry(&self.table, p, value), ..self.clone() }
    }
}

pub(crate) fn replace_entry<F: Field>(lin: &Lin<F>, x: usize, value: Tensor<F>) -> Lin<F> {
    Lin::from_fn(lin.in_dims.clone(), lin.out_dims.clone(), |i| if i == x { value.data().to_vec() } else { lin.image(i).into_data() })
}

/// `p₍[1]₎ ⊗ p₍[0]₎ = p₍₋₁₎₍₋₎ ⊗ ε(p₍₋₁₎₍₊₎)p₍₀₎` when `L` is anti-left Hopf.
pub fn skew_from_anti_left<F: Field>(bg: &Bialgebroid<F>, a: &AntiLeftHopf<F>, g: &LeftComodule<F>, s: &SkewRegular<F>) -> Result<Lin<F>> {
    let act = g.carrier.action_lin(&ActionKey::left_b())?;
    Ok(Lin::from_fn(vec![g.dim()], vec![bg.n(), g.dim()], |p| {
        let t = a.bracket(&g.coaction.image(p), 0).apply(&[1], bg.eps()).apply(&[1, 2], &act);
        s.domain.normalize(&t).into_data()
    }))
}

/// `p₍[0]₎ ⊗ p₍[-1]₎ = ε(p₍₁₎₊)‾p₍₀₎ ⊗ p₍₁₎₋` when `L` is left Hopf.
pub fn regular_from_left<F: Field>(bg: &Bialgebroid<F>, h: &LeftHopf<F>, g: &RightComodule<F>, r: &Regular<F>) -> Result<Lin<F>> {
    let act = g.carrier.action_lin(&ActionKey::left_bbar())?;
    Ok(Lin::from_fn(vec![g.dim()], vec![g.dim(), bg.n()], |p| {
        let t = h.pm(&g.coaction.image(p), 1).apply(&[1], bg.eps()).apply(&[1, 0], &act);
        r.domain.normalize(&t).into_data()
    }))
}
