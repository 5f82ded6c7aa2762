//! Relative Hopf modules over Galois extensions and the structure theorems
//! `Λ ≅ co(P⊗_N Λ)` and `M ≅ P ⊗_N coM` (with their mirror images), plus
//! the opposite of a skew regular or regular Galois extension.

use super::anti::{anti_right_galois, AntiRightGalois};
use super::galois::{canonical_map, GaloisExtension};
use super::{regular, skew_regular, LeftComodule, LeftComoduleAlgebra, Regular, RightComodule, RightComoduleAlgebra, SkewRegular};
use crate::bialgebroid::Bialgebroid;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{subspace, Matrix, Subspace};
use crate::module::{ActionKey, MultiModule, Side};
use crate::report::Report;
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

/// Which structure theorem: left Galois with `P` acting on the left or on
/// the right (through the skew regular map), anti-right Galois likewise
/// (through the regular map).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Variant {
    Left,
    Skew,
    Anti,
    RegularAnti,
}

impl Variant {
    fn id(self) -> &'static str {
        match self {
            Variant::Left => "left",
            Variant::Skew => "skew",
            Variant::Anti => "anti",
            Variant::RegularAnti => "regular-anti",
        }
    }

    fn family(self) -> &'static str {
        match self {
            Variant::Left | Variant::Skew => "N",
            Variant::Anti | Variant::RegularAnti => "M",
        }
    }

    /// Side on which `P` acts on the relative Hopf module.
    fn p_side(self) -> Side {
        match self {
            Variant::Left | Variant::Anti => Side::Left,
            Variant::Skew | Variant::RegularAnti => Side::Right,
        }
    }

    fn left_coaction(self) -> bool {
        matches!(self, Variant::Left | Variant::Skew)
    }

    /// `P ⊗_F X` or `X ⊗_F P` for a module named `x`.
    fn tensor_expr(self, x: &str) -> String {
        let f = self.family();
        match self.p_side() {
            Side::Left => format!("int_{{n@{f}}} P(n) * (n){x}"),
            Side::Right => format!("int_{{n@{f}}} {x}(n) * (n)P"),
        }
    }

    fn x_leg(self) -> usize {
        match self.p_side() {
            Side::Left => 1,
            Side::Right => 0,
        }
    }
}

/// A relative Hopf module `W = P⊗_F Λ` (or `Λ⊗_F P`) on quotient coordinates.
struct HopfModule<F> {
    carrier: MultiModule<F>,
    coaction: Lin<F>,
    diamond: Space<F>,
    /// `w ↦ w₍[1]₎ ⊗ w₍[0]₎` or `w ↦ w₍[0]₎ ⊗ w₍[-1]₎` for the right-module variants
    split: Option<Lin<F>>,
}

struct Ext<'a, F> {
    variant: Variant,
    p: &'a MultiModule<F>,
    p_coaction: &'a Lin<F>,
    tau: &'a Lin<F>,
    unit: Tensor<F>,
}

fn keys(v: Variant) -> Vec<ActionKey> {
    let f = v.family();
    match v {
        Variant::Left => vec![ActionKey::new("P", Side::Left, false), ActionKey::new(f, Side::Left, false), ActionKey::left_b()],
        Variant::Anti => vec![ActionKey::new("P", Side::Left, false), ActionKey::new(f, Side::Left, false), ActionKey::left_bbar()],
        Variant::Skew => vec![ActionKey::new("P", Side::Right, false), ActionKey::new(f, Side::Right, false), ActionKey::left_b(), ActionKey::right_b()],
        Variant::RegularAnti => {
            vec![ActionKey::new("P", Side::Right, false), ActionKey::new(f, Side::Right, false), ActionKey::left_bbar(), ActionKey::right_bbar()]
        }
    }
}

fn induced<F: Field>(bg: &Bialgebroid<F>, ext: &Ext<F>, v: &MultiModule<F>) -> Result<(HopfModule<F>, Space<F>)> {
    let var = ext.variant;
    let p_leg = 1 - var.x_leg();
    let legs: Vec<&MultiModule<F>> = if p_leg == 0 { vec![ext.p, v] } else { vec![v, ext.p] };
    let q = Space::build(&var.tensor_expr("V"), &legs)?;
    let actions: Vec<(ActionKey, usize, ActionKey)> = keys(var).into_iter().map(|k| (k.clone(), p_leg, k)).collect();
    let carrier = q.induced_module("W", &legs, &actions)?;
    let dw = carrier.dim;
    let raw_dims = q.dims().to_vec();
    let proj = Lin::from_fn(raw_dims.clone(), vec![dw], |i| q.project(&q.raw_basis(i)));
    let n = bg.n();
    let co = ext.p_coaction;
    let m = match var {
        Variant::Left => Lin::from_fn(vec![dw], vec![n, dw], |k| q.section(&unit(dw, k)).apply(&[0], co).apply(&[1, 2], &proj).into_data()),
        Variant::Skew => Lin::from_fn(vec![dw], vec![n, dw], |k| q.section(&unit(dw, k)).apply(&[1], co).permute(&[1, 0, 2]).apply(&[1, 2], &proj).into_data()),
        Variant::Anti => Lin::from_fn(vec![dw], vec![dw, n], |k| q.section(&unit(dw, k)).apply(&[0], co).permute(&[0, 2, 1]).apply(&[0, 1], &proj).into_data()),
        Variant::RegularAnti => Lin::from_fn(vec![dw], vec![dw, n], |k| q.section(&unit(dw, k)).apply(&[1], co).apply(&[0, 1], &proj).into_data()),
    }
    .to_matrix();
    let module = match var {
        Variant::Left => {
            let diamond = Space::build("int_b (b~)L * (b)W", &[&bg.l, &carrier])?;
            let coaction = normalized(&m, dw, vec![n, dw], &diamond);
            HopfModule { carrier, coaction, diamond, split: None }
        }
        Variant::Anti => {
            let diamond = Space::build("int_b (b~)W * (b)L", &[&carrier, &bg.l])?;
            let coaction = normalized(&m, dw, vec![dw, n], &diamond);
            HopfModule { carrier, coaction, diamond, split: None }
        }
        Variant::Skew => {
            let c = LeftComodule::new(bg, carrier, &m)?;
            let s = skew_regular(bg, &c)?;
            HopfModule { coaction: c.coaction().clone(), diamond: c.diamond.clone(), carrier: c.carrier, split: Some(s.table) }
        }
        Variant::RegularAnti => {
            let c = RightComodule::new(bg, carrier, &m)?;
            let s = regular(bg, &c)?;
            HopfModule { coaction: c.coaction().clone(), diamond: c.diamond.clone(), carrier: c.carrier, split: Some(s.table) }
        }
    };
    Ok((module, q))
}

fn unit<F: Field>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

fn normalized<F: Field>(m: &Matrix<F>, d: usize, out: Vec<usize>, space: &Space<F>) -> Lin<F> {
    Lin::from_fn(vec![d], out, |w| space.normalize(&Tensor::from_vec(space.dims(), m.col(w))).into_data())
}

fn coinvariants<F: Field>(bg: &Bialgebroid<F>, var: Variant, w: &HopfModule<F>) -> Subspace<F> {
    let d = w.carrier.dim;
    let one = bg.one();
    let cols: Vec<Vec<F>> = (0..d)
        .map(|k| {
            let e = Tensor::e(d, k);
            let triv = if var.left_coaction() { one.outer(&e) } else { e.outer(&one) };
            w.diamond.project(&w.coaction.image(k).sub(&triv))
        })
        .collect();
    subspace::kernel(&Matrix::from_cols(w.diamond.dim(), &cols))
}

/// `Λ → co(W)`, `λ ↦ 1⊗λ` (or `λ⊗1`): image inside the coinvariants, injective and onto.
fn induction<F: Field>(bg: &Bialgebroid<F>, ext: &Ext<F>, v: &MultiModule<F>) -> Result<Option<Vec<usize>>> {
    let (w, q) = induced(bg, ext, v)?;
    let co = coinvariants(bg, ext.variant, &w);
    let unit_p = &ext.unit;
    let mut cols = Vec::with_capacity(v.dim);
    for k in 0..v.dim {
        let e = Tensor::e(v.dim, k);
        let t = if ext.variant.x_leg() == 1 { unit_p.outer(&e) } else { e.outer(unit_p) };
        let img = q.project(&t);
        if !co.contains(&img) {
            return Ok(Some(vec![k]));
        }
        cols.push(img);
    }
    let m = Matrix::from_cols(w.carrier.dim, &cols);
    if m.rank() != v.dim || co.dim() != v.dim {
        return Ok(Some(vec![co.dim(), m.rank()]));
    }
    Ok(None)
}

/// `W ≅ P ⊗_F co(W)` (or `co(W) ⊗_F P`) through the translation map, with
/// inverse the action of `P`.
fn hopf_module<F: Field>(bg: &Bialgebroid<F>, ext: &Ext<F>, v: &MultiModule<F>) -> Result<Option<Vec<usize>>> {
    let var = ext.variant;
    let (w, _) = induced(bg, ext, v)?;
    let dw = w.carrier.dim;
    let co = coinvariants(bg, var, &w);
    let basis = co.basis_dense();
    let emb = Lin::from_fn(vec![basis.len()], vec![dw], |k| basis[k].clone());
    let fkey = ActionKey::new(var.family(), var.p_side(), false);
    let mut c = MultiModule::new("C", basis.len());
    let mut mats = Vec::new();
    for (i, a) in w.carrier.action(&fkey)?.iter().enumerate() {
        let cols: Vec<Vec<F>> = basis
            .iter()
            .map(|b| co.coords(&a.mul_vec(b)).ok_or_else(|| Error::NotWellDefined { context: "coinvariants are not a module".into(), witness: vec![i] }))
            .collect::<Result<_>>()?;
        mats.push(Matrix::from_cols(basis.len(), &cols));
    }
    c.set_action(fkey, mats);

    let xl = var.x_leg();
    let pair = |x: &MultiModule<F>| -> Result<Space<F>> {
        let legs: Vec<&MultiModule<F>> = if xl == 1 { vec![ext.p, x] } else { vec![x, ext.p] };
        Space::build(&var.tensor_expr(&x.name), &legs)
    };
    let q = pair(&c)?;
    let qw = pair(&w.carrier)?;
    let iota = descend_map(&q, &qw, "coinvariants into W", |t| t.apply(&[xl], &emb))?;
    if iota.rank() != q.dim() {
        return Err(Error::RoundTripFails { what: "P(x)coW -> P(x)W is not injective".into(), witness: vec![] });
    }
    let act = w.carrier.action_lin(&ActionKey::new("P", var.p_side(), false))?;
    let plain = Space::plain("W", &[dw]);
    let g = descend_map(&q, &plain, "p(x)c -> pc", |t| {
        let t = t.apply(&[xl], &emb);
        if xl == 1 {
            t.apply(&[0, 1], &act)
        } else {
            t.apply(&[1, 0], &act)
        }
    })?;
    let mut fcols = Vec::with_capacity(dw);
    for k in 0..dw {
        let t = match var {
            Variant::Left => w.coaction.image(k).apply(&[0], ext.tau).apply(&[1, 2], &act),
            Variant::Skew => w.split.as_ref().expect("skew table").image(k).apply(&[0], ext.tau).apply(&[0, 2], &act),
            Variant::Anti => w.coaction.image(k).apply(&[1], ext.tau).apply(&[2, 0], &act).permute(&[1, 0]),
            Variant::RegularAnti => w.split.as_ref().expect("regular table").image(k).apply(&[1], ext.tau).apply(&[1, 0], &act),
        };
        match iota.solve(&qw.project(&t)) {
            Ok(x) => fcols.push(x),
            Err(_) => return Ok(Some(vec![k])),
        }
    }
    let f = Matrix::from_cols(q.dim(), &fcols);
    let gf = g.mul(&f);
    if let Some(k) = (0..dw).find(|&k| gf.col(k) != unit::<F>(dw, k)) {
        return Ok(Some(vec![k]));
    }
    let fg = f.mul(&g);
    if let Some(k) = (0..q.dim()).find(|&k| fg.col(k) != unit::<F>(q.dim(), k)) {
        return Ok(Some(vec![dw + k]));
    }
    Ok(None)
}

/// The three test modules `F`, `F ⊕ F` and `P` restricted to `F`, acting
/// on the side opposite to `P` in the tensor product.
fn test_modules<F: Field>(p: &MultiModule<F>, f_alg: &crate::algebra::Algebra<F>, var: Variant) -> Result<Vec<MultiModule<F>>> {
    let side = var.p_side();
    let key = ActionKey::new(var.family(), side, false);
    let k = f_alg.dim();
    let regular: Vec<Matrix<F>> = (0..k)
        .map(|i| if side == Side::Left { f_alg.left_matrix(&f_alg.basis(i)) } else { f_alg.right_matrix(&f_alg.basis(i)) })
        .collect();
    let double: Vec<Matrix<F>> = regular
        .iter()
        .map(|m| {
            let z = Matrix::zeros(k, k);
            m.hstack(&z).vstack(&z.hstack(m))
        })
        .collect();
    Ok(vec![
        MultiModule::new("V", k).with_action(key.clone(), regular),
        MultiModule::new("V", 2 * k).with_action(key.clone(), double),
        MultiModule::new("V", p.dim).with_action(key.clone(), p.action(&key)?.to_vec()),
    ])
}

fn run<F: Field>(r: &mut Report, bg: &Bialgebroid<F>, ext: &Ext<F>, f_alg: Result<crate::algebra::Algebra<F>>) {
    let id = ext.variant.id();
    let modules = match f_alg.and_then(|a| test_modules(ext.p, &a, ext.variant)) {
        Ok(m) => m,
        Err(e) => return r.record_error(&format!("{id}-modules"), "test-modules", &e),
    };
    for (k, v) in modules.iter().enumerate() {
        let (ind, hm) = match ext.variant {
            Variant::Left => ("lambda->co(P(x)lambda)", "m->tau(m(-1))m(0)"),
            Variant::Skew => ("lambda->co(lambda(x)P)", "m->m[0]tau(m[1])"),
            Variant::Anti => ("lambda->co(P(x)lambda)", "m->tau-hat(m(1))m(0)"),
            Variant::RegularAnti => ("lambda->co(lambda(x)P)", "m->m[0]tau-hat(m[-1])"),
        };
        r.record_result(&format!("{id}-induction-{}", k + 1), ind, induction(bg, ext, v));
        r.record_result(&format!("{id}-hopf-module-{}", k + 1), hm, hopf_module(bg, ext, v));
    }
}

/// Structure theorems for a left Galois extension, for left `P`-modules and,
/// through the skew regular map, for right `P`-modules.
pub fn verify_structure_theorem<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>) -> Report {
    let mut r = Report::new("galois");
    let alg = &gx.alg;
    for variant in [Variant::Left, Variant::Skew] {
        let ext = Ext { variant, p: alg.carrier(), p_coaction: alg.comodule.coaction(), tau: &gx.tau, unit: alg.one() };
        run(&mut r, bg, &ext, alg.coinvariant_algebra());
    }
    r
}

/// Mirror structure theorems for an anti-right Galois extension.
pub fn verify_anti_structure_theorem<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>) -> Report {
    let mut r = Report::new("galois");
    let alg = &gx.alg;
    for variant in [Variant::Anti, Variant::RegularAnti] {
        let ext = Ext { variant, p: alg.carrier(), p_coaction: alg.comodule.coaction(), tau: &gx.tau, unit: alg.one() };
        run(&mut r, bg, &ext, alg.coinvariant_algebra());
    }
    r
}

/// `P^op` as a right comodule algebra over `η̄ = η` with `p ↦ p₍[0]₎ ◇ p₍[1]₎`.
pub fn opposite_of_skew<F: Field>(bg: &Bialgebroid<F>, alg: &LeftComoduleAlgebra<F>, s: &SkewRegular<F>) -> Result<RightComoduleAlgebra<F>> {
    let d = alg.dim();
    let m = Lin::from_fn(vec![d], vec![d, bg.n()], |p| s.table.image(p).permute(&[1, 0]).into_data()).to_matrix();
    RightComoduleAlgebra::new(bg, alg.algebra.opposite(), &alg.eta.matrix, &m)
}

/// `P^op` as a left comodule algebra over `η = η̄` with `p ↦ p₍[-1]₎ ◇ p₍[0]₎`.
pub fn opposite_of_regular<F: Field>(bg: &Bialgebroid<F>, alg: &RightComoduleAlgebra<F>, s: &Regular<F>) -> Result<LeftComoduleAlgebra<F>> {
    let d = alg.dim();
    let m = Lin::from_fn(vec![d], vec![bg.n(), d], |p| s.table.image(p).permute(&[1, 0]).into_data()).to_matrix();
    LeftComoduleAlgebra::new(bg, alg.algebra.opposite(), &alg.eta.matrix, &m)
}

/// `P^op` of a skew regular left Galois extension is anti-right Galois with
/// `τ̂(X) = X^⟨2⟩ ⊗ X^⟨1⟩`.
pub fn verify_opposite<F: Field>(bg: &Bialgebroid<F>, gx: &GaloisExtension<F>, s: &SkewRegular<F>) -> Report {
    let mut r = Report::new("galois");
    let op = match opposite_of_skew(bg, &gx.alg, s) {
        Ok(op) => op,
        Err(e) => {
            r.record_error("opposite-algebra", "P^op:right-comodule-algebra", &e);
            return r;
        }
    };
    r.record("opposite-algebra", "P^op:right-comodule-algebra", None);
    r.record("opposite-coinvariants", "(P^op)^coL=coL(P)", (op.coinvariants != gx.alg.coinvariants).then(Vec::new));
    match anti_right_galois(bg, &op) {
        Ok(agx) => {
            r.record("opposite-galois", "can-hat(P^op)bijective", None);
            r.check_all("opposite-tau", "tau-hat(X)=X<2>(x)X<1>", (0..bg.n()).map(|x| vec![x]), |t| {
                agx.domain.equal(&agx.tau.image(t[0]), &gx.tau.image(t[0]).permute(&[1, 0]))
            });
        }
        Err(e) => r.record_error("opposite-galois", "can-hat(P^op)bijective", &e),
    }
    r
}

/// `P^op` of a regular anti-right Galois extension is left Galois with
/// `τ(X) = X^[2̂] ⊗ X^[1̂]`.
pub fn verify_opposite_regular<F: Field>(bg: &Bialgebroid<F>, gx: &AntiRightGalois<F>, s: &Regular<F>) -> Report {
    let mut r = Report::new("galois");
    let op = match opposite_of_regular(bg, &gx.alg, s) {
        Ok(op) => op,
        Err(e) => {
            r.record_error("opposite-regular-algebra", "P^op:left-comodule-algebra", &e);
            return r;
        }
    };
    r.record("opposite-regular-algebra", "P^op:left-comodule-algebra", None);
    r.record("opposite-regular-coinvariants", "coL(P^op)=P^coL", (op.coinvariants != gx.alg.coinvariants).then(Vec::new));
    match canonical_map(bg, &op) {
        Ok(lgx) => {
            r.record("opposite-regular-galois", "can(P^op)bijective", None);
            r.check_all("opposite-regular-tau", "tau(X)=X^2(x)X^1", (0..bg.n()).map(|x| vec![x]), |t| {
                lgx.domain.equal(&lgx.tau.image(t[0]), &gx.tau.image(t[0]).permute(&[1, 0]))
            });
        }
        Err(e) => r.record_error("opposite-regular-galois", "can(P^op)bijective", &e),
    }
    r
}
