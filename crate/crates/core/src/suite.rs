//! Verification suites over a model document, one per layer of the theory.
//!
//! Each suite validates the bialgebroid first and then runs its catalog on
//! the data the document carries. When a document has no data for a layer,
//! the suite falls back to the canonical instance: the regular extension
//! `L` over itself, the trivial cocycle, `γ = id`, and the crossed product
//! data extracted from it. The double suite falls back to the trivial
//! pairing of `L` with itself, which exists only over a commutative base;
//! without a pairing over a noncommutative base it runs no checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::bialgebroid::{galois_lambda, galois_mu, verify_anti_left_identities, verify_left_hopf_identities, verify_mixed_identities, AntiLeftHopf, Bialgebroid, LeftHopf};
use crate::cleft::*;
use crate::comodule::*;
use crate::double::{double_bialgebroid, trivial_pairing, verify_cotwist, verify_double, DoubleSpace, SkewPairing};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::model::ModelDocument;
use crate::report::{tuples, Report};
use crate::tensor::Tensor;
use crate::twist::{trivial_cocycle, twist_bialgebroid, verify_cocycle_pair_identities, verify_monoidal_coherence, verify_twist, verify_twisted_extensions, BaseCocycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Bialgebroid,
    Hopf,
    Galois,
    Comodule,
    Twist,
    Double,
    Cleft,
    Crossed,
    Gauge,
}

impl Suite {
    pub const ALL: [Suite; 9] = [Suite::Bialgebroid, Suite::Hopf, Suite::Galois, Suite::Comodule, Suite::Twist, Suite::Double, Suite::Cleft, Suite::Crossed, Suite::Gauge];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bialgebroid => "bialgebroid",
            Suite::Hopf => "hopf",
            Suite::Galois => "galois",
            Suite::Comodule => "comodule",
            Suite::Twist => "twist",
            Suite::Double => "double",
            Suite::Cleft => "cleft",
            Suite::Crossed => "crossed",
            Suite::Gauge => "gauge",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Seed of the gauge element sampled by the gauge suite.
pub const GAUGE_SEED: u64 = 0;

/// Run one suite. The report's suite name is the suite's; the checks keep the
/// ids of the catalogs they come from.
pub fn run<F: Field>(doc: &ModelDocument<F>, suite: Suite) -> Report {
    let mut r = Report::new(suite.name());
    let Some(bg) = validated(doc, &mut r, suite == Suite::Bialgebroid) else {
        return r;
    };
    let res = match suite {
        Suite::Bialgebroid => Ok(()),
        Suite::Hopf => hopf(&bg, &mut r),
        Suite::Galois => galois(doc, &bg, &mut r),
        Suite::Comodule => comodule(doc, &bg, &mut r),
        Suite::Twist => twist(doc, &bg, &mut r),
        Suite::Double => double(doc, &bg, &mut r),
        Suite::Cleft => cleft(doc, &bg, &mut r),
        Suite::Crossed => crossed(doc, &bg, &mut r),
        Suite::Gauge => gauge(doc, &bg, &mut r),
    };
    if let Err(e) = res {
        r.record_error("prerequisite", "inputs-of-suite", &e);
    }
    r.suite = suite.name().to_string();
    r
}

/// Run every suite in order.
pub fn run_all<F: Field>(doc: &ModelDocument<F>) -> Vec<Report> {
    Suite::ALL.into_iter().map(|s| run(doc, s)).collect()
}

fn validated<F: Field>(doc: &ModelDocument<F>, r: &mut Report, full: bool) -> Option<Bialgebroid<F>> {
    let data = match doc.require_bialgebroid() {
        Ok(d) => d.clone(),
        Err(e) => {
            r.record_error("assemble", "L,s,t,Delta,eps", &e);
            return None;
        }
    };
    let (bg, (rep, _)) = Bialgebroid::check(data);
    if full || bg.is_none() {
        r.extend(rep);
    }
    bg
}

/// Record `res` as one check and pass its value on.
fn step<T>(r: &mut Report, id: &str, label: &str, res: Result<T>) -> Result<T> {
    match &res {
        Ok(_) => r.record(id, label, None),
        Err(e) => r.record_error(id, label, e),
    }
    res
}

fn translations<F: Field>(bg: &Bialgebroid<F>, r: &mut Report) -> Result<(LeftHopf<F>, AntiLeftHopf<F>)> {
    let h = step(r, "lambda-bijective", "lambda:L(x)BbarL->L<>L", galois_lambda(bg))?;
    let a = step(r, "mu-bijective", "mu:L(x)BL->L<>L", galois_mu(bg))?;
    Ok((h, a))
}

/// The multiplication table when `L` is a group algebra over `B = k`.
pub fn group_table<F: Field>(bg: &Bialgebroid<F>) -> Option<Vec<Vec<usize>>> {
    if bg.nb() != 1 {
        return None;
    }
    let n = bg.n();
    for x in 0..n {
        let e = bg.e(x);
        if bg.takeuchi.project(&bg.delta().image(x)) != bg.takeuchi.project(&e.outer(&e)) {
            return None;
        }
    }
    let single = |v: &[F]| -> Option<usize> {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
    };
    let l = bg.total();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| single(&l.mul(&l.basis(i), &l.basis(j)))).collect::<Option<_>>()).collect::<Option<_>>()?;
    (single(l.unit()) == Some(0)).then_some(table)
}

fn hopf<F: Field>(bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let lam = galois_lambda(bg);
    let mu = galois_mu(bg);
    let (h, a) = (step(r, "lambda-bijective", "lambda:L(x)BbarL->L<>L", lam), step(r, "mu-bijective", "mu:L(x)BL->L<>L", mu));
    if let Ok(h) = &h {
        r.extend(verify_left_hopf_identities(bg, h));
    }
    if let Ok(a) = &a {
        r.extend(verify_anti_left_identities(bg, a));
    }
    let (h, a) = (h?, a?);
    r.extend(verify_mixed_identities(bg, &h, &a));
    if let Some(table) = group_table(bg) {
        // X₊ ⊗ X₋ = g ⊗ g⁻¹ and X₍₋₎ ⊗ X₍₊₎ = g⁻¹ ⊗ g for a group algebra
        let n = bg.n();
        let inv = |g: usize| (0..n).find(|&k| table[g][k] == 0);
        r.check_all("antipode-pm", "g+(x)g-=g(x)S(g)", tuples(&[n]), |t| inv(t[0]).is_some_and(|gi| h.domain.equal(&h.table.image(t[0]), &Tensor::basis(&[n, n], &[t[0], gi]))));
        r.check_all("antipode-bracket", "g[-](x)g[+]=S(g)(x)g", tuples(&[n]), |t| inv(t[0]).is_some_and(|gi| a.domain.equal(&a.table.image(t[0]), &Tensor::basis(&[n, n], &[gi, t[0]]))));
    }
    Ok(())
}

fn galois<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (h, a) = translations(bg, r)?;
    let gx = step(r, "can-bijective", "can:P(x)NP->L<>P", left_regular(bg).and_then(|p| canonical_map(bg, &p)))?;
    let t = bg.target().matrix.clone();
    let t_image = crate::linalg::Subspace::spanned_by(t.rows(), (0..t.cols()).map(|j| t.col(j)).collect::<Vec<_>>().iter().map(|c| c.as_slice()));
    r.record("coinvariants", "coL(L)=t(Bbar)", (gx.alg.coinvariants != t_image).then(|| vec![gx.alg.coinvariants.dim()]));
    let s = step(r, "skew-regular", "phi:L(x)BP->L<>P", skew_regular(bg, &gx.alg.comodule))?;
    r.extend(verify_skew_regular_identities(bg, &gx.alg.comodule, &s, Some(&h), Some(&a)));
    r.extend(verify_translation_identities(bg, &gx, &h));
    r.extend(verify_skew_translation_identities(bg, &gx, &s, &a));

    let agx = step(r, "anti-can-bijective", "can:P(x)NP->P<>L", right_regular(bg).and_then(|p| anti_right_galois(bg, &p)))?;
    let reg = step(r, "regular", "psi:P(x)BbarL->P<>L", regular(bg, &agx.alg.comodule))?;
    r.extend(verify_regular_identities(bg, &agx.alg.comodule, &reg, Some(&h), Some(&a)));
    r.extend(verify_anti_translation_identities(bg, &agx, &a));
    r.extend(verify_regular_anti_identities(bg, &agx, &reg, &h));

    let n = bg.n();
    let rebuilt = [
        ("reconstruct-pm-can", "X+(x)X-=from-can", hopf_from_galois(bg, &gx), true),
        ("reconstruct-pm-regular", "X+(x)X-=from-anti-can", hopf_from_regular_anti_galois(bg, &agx, &reg), true),
        ("reconstruct-bracket-skew", "X[-](x)X[+]=from-can", anti_hopf_from_skew_galois(bg, &gx, &s), false),
        ("reconstruct-bracket-anti", "X[-](x)X[+]=from-anti-can", anti_hopf_from_anti_galois(bg, &agx), false),
    ];
    for (id, label, table, left) in rebuilt {
        match table {
            Ok(t) => r.check_all(id, label, tuples(&[n]), |x| {
                if left {
                    h.domain.equal(&t.image(x[0]), &h.table.image(x[0]))
                } else {
                    a.domain.equal(&t.image(x[0]), &a.table.image(x[0]))
                }
            }),
            Err(e) => r.record_error(id, label, &e),
        }
    }
    r.extend(verify_structure_theorem(bg, &gx));
    r.extend(verify_anti_structure_theorem(bg, &agx));
    r.extend(verify_opposite(bg, &gx, &s));
    r.extend(verify_opposite_regular(bg, &agx, &reg));

    if let Some(c) = &doc.comodule_algebra {
        let p = step(r, "document-comodule-algebra", "P:left-L-comodule-algebra", LeftComoduleAlgebra::new(bg, c.algebra.clone(), &c.eta, &c.coaction))?;
        let gp = step(r, "document-can-bijective", "can:P(x)NP->L<>P", canonical_map(bg, &p))?;
        r.extend(verify_translation_identities(bg, &gp, &h));
        r.extend(verify_structure_theorem(bg, &gp));
    }
    Ok(())
}

fn comodule<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (_, (rep, _)) = LeftComoduleAlgebra::check(bg, bg.total().clone(), &bg.source().matrix, &bg.delta_matrix());
    r.extend(rep);
    let (_, (rep, _)) = RightComoduleAlgebra::check(bg, bg.total().clone(), &bg.target().matrix, &bg.delta_matrix());
    r.extend(rep);
    if let Some(c) = &doc.comodule_algebra {
        let (_, (rep, _)) = LeftComoduleAlgebra::check(bg, c.algebra.clone(), &c.eta, &c.coaction);
        r.extend(rep);
    }
    Ok(())
}

fn twist<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let trivial = doc.cocycle.is_none();
    let form = doc.cocycle.clone().unwrap_or_else(|| trivial_cocycle(bg));
    let (c, (rep, err)) = BaseCocycle::check(bg, form);
    r.extend(rep);
    let c = c.ok_or_else(|| err.expect("failed validation carries an error"))?;
    r.extend(verify_cocycle_pair_identities(bg, &c));
    r.extend(verify_twist(bg, &c));
    r.extend(verify_twisted_extensions(bg, &c, &left_regular(bg)?, &right_regular(bg)?));
    r.extend(verify_monoidal_coherence(bg, &c, &[left_regular(bg)?.comodule]));
    if trivial {
        let tw = twist_bialgebroid(bg, &c)?;
        let same = tw.total().structure() == bg.total().structure() && tw.delta_matrix() == bg.delta_matrix() && tw.eps_matrix() == bg.eps_matrix();
        r.record("trivial-twist", "L^e=L", (!same).then(Vec::new));
    }
    Ok(())
}

fn double<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (pi, form) = match &doc.pairing {
        Some(p) => {
            let pi = match &p.pi {
                Some(d) => step(r, "pi", "Pi:bialgebroid", Bialgebroid::new(d.clone()))?,
                None => bg.clone(),
            };
            (pi, p.form.clone().ok_or(Error::Schema { field: "pairing.form".into(), message: "a double needs the pairing form".into() })?)
        }
        // the trivial pairing of L with itself is a skew pairing only over a commutative base
        None if bg.base().is_commutative() => (bg.clone(), trivial_pairing(bg, bg)),
        None => return Ok(()),
    };
    let (tau, (rep, err)) = SkewPairing::check(bg, &pi, form);
    r.extend(rep);
    let tau = tau.ok_or_else(|| err.expect("failed validation carries an error"))?;
    let space = DoubleSpace::new(&pi, bg)?;
    let d = step(r, "double", "Pi><_ttL", double_bialgebroid(&space, &tau))?;
    r.extend(verify_double(&d));
    if bg.base().is_commutative() {
        let kappa = SkewPairing::new(bg, &pi, trivial_pairing(bg, &pi))?;
        r.extend(verify_cotwist(&space, &tau, &kappa));
    }
    Ok(())
}

/// The document's cleft extension, or `L` over itself with `γ = id`.
fn cleft_extension<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<CleftExtension<F>> {
    match (&doc.comodule_algebra, &doc.cleaving) {
        (Some(p), Some(cl)) => {
            let alg = LeftComoduleAlgebra::new(bg, p.algebra.clone(), &p.eta, &p.coaction)?;
            let (c, (rep, err)) = check_cleft(bg, &alg, &cl.iota, &cl.gamma);
            r.extend(rep);
            c.ok_or_else(|| err.expect("failed validation carries an error"))
        }
        _ => {
            let p = left_regular(bg)?;
            let (c, (rep, err)) = check_cleft(bg, &p, &bg.target().matrix, &Matrix::identity(bg.n()));
            r.extend(rep);
            c.ok_or_else(|| err.expect("failed validation carries an error"))
        }
    }
}

fn first_table_diff<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Option<Vec<usize>> {
    if a.dim() != b.dim() {
        return Some(vec![a.dim(), b.dim()]);
    }
    tuples(&[a.dim(), a.dim()]).into_iter().find(|t| a.product_of_basis(t[0], t[1]) != b.product_of_basis(t[0], t[1]))
}

fn cleft<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (h, a) = translations(bg, r)?;
    let c = cleft_extension(doc, bg, r)?;
    r.extend(verify_cleaving_identities(bg, &c, &h));
    let (_, rep) = cleft_to_galois(bg, &c)?;
    r.extend(rep);
    let (nb, (rep, _)) = normal_basis_iso(bg, &c);
    r.extend(rep);
    let (meas, coc) = step(r, "extract", "(sigma,>)-from-gamma", extract_from_cleft(bg, &c, &a))?;
    r.extend(verify_extraction(bg, &c, &h, &a));
    let gp = step(r, "gamma-crossed-product", "L#^gN", gamma_crossed_product(bg, &c))?;
    let cp = step(r, "crossed-product", "L#_sN", crossed_product(bg, &c.ring, &meas, &coc, &h))?;
    r.record("crossed-table", "L#_sN=L#^gN", first_table_diff(&cp.algebra, &gp));
    if let Some(nb) = nb {
        r.record("normal-basis-table", "L#^gN=product(phi)", first_table_diff(&nb.product, &gp));
    }
    Ok(())
}

/// The document's crossed product data, or the data extracted from `L`
/// over itself.
fn crossed_data<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, a: &AntiLeftHopf<F>, r: &mut Report) -> Result<(BbarRing<F>, Measuring<F>, RingCocycle<F>)> {
    match (&doc.measuring, &doc.sigma) {
        (Some(m), Some(s)) => {
            let ring = match &doc.ring {
                Some(b) => BbarRing::new(bg, b.algebra.clone(), b.eta.clone())?,
                None => BbarRing::ground(bg)?,
            };
            let (pair, (rep, err)) = check_measuring_cocycle(bg, &ring, m, s);
            r.extend(rep);
            let (meas, coc) = pair.ok_or_else(|| err.expect("failed validation carries an error"))?;
            Ok((ring, meas, coc))
        }
        (None, None) => {
            let p = left_regular(bg)?;
            let c = CleftExtension::new(bg, &p, &bg.target().matrix, &Matrix::identity(bg.n()))?;
            let (meas, coc) = step(r, "extract", "(sigma,>)-from-gamma", extract_from_cleft(bg, &c, a))?;
            let (pair, (rep, err)) = check_measuring_cocycle(bg, &c.ring, &meas.matrix, &coc.sigma);
            r.extend(rep);
            let (meas, coc) = pair.ok_or_else(|| err.expect("failed validation carries an error"))?;
            Ok((c.ring, meas, coc))
        }
        (None, Some(_)) => Err(Error::Schema { field: "measuring".into(), message: "sigma is given without a measuring".into() }),
        (Some(_), None) => Err(Error::Schema { field: "sigma".into(), message: "a measuring is given without sigma".into() }),
    }
}

fn crossed<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (h, a) = translations(bg, r)?;
    let (ring, meas, coc) = crossed_data(doc, bg, &a, r)?;
    r.extend(cocycle_ring_identity(bg, &ring, &meas, &coc, &h));
    let cp = step(r, "crossed-product", "L#_sN", crossed_product(bg, &ring, &meas, &coc, &h))?;
    let (c, rep) = crossed_is_cleft(bg, &cp, &h)?;
    r.extend(rep);
    r.extend(verify_cleaving_identities(bg, &c, &h));
    let (_, (rep, _)) = normal_basis_iso(bg, &c);
    r.extend(rep);
    let gp = step(r, "gamma-crossed-product", "L#^gN", gamma_crossed_product(bg, &c))?;
    r.record("crossed-table", "L#_sN=L#^gN", first_table_diff(&cp.algebra, &gp));
    Ok(())
}

/// A gauge element with entries drawn from `-3..=3` by a seeded generator.
pub fn seeded_gauge<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, seed: u64) -> Result<GaugeElement<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_gauge(bg, ring, || F::from_i64(rng.random_range(-3..=3)))
}

fn gauge<F: Field>(doc: &ModelDocument<F>, bg: &Bialgebroid<F>, r: &mut Report) -> Result<()> {
    let (h, a) = translations(bg, r)?;
    let (ring, meas, coc) = crossed_data(doc, bg, &a, r)?;
    let u = step(r, "sample", "u:random-gauge", seeded_gauge(bg, &ring, GAUGE_SEED))?;
    let (m2, c2) = step(r, "transform", "(sigma',>')=u.(sigma,>)", gauge_transform(bg, &ring, &meas, &coc, &u))?;
    let (_, (rep, _)) = check_measuring_cocycle(bg, &ring, &m2.matrix, &c2.sigma);
    r.extend(rep);
    let cp = crossed_product(bg, &ring, &meas, &coc, &h)?;
    let cp2 = step(r, "crossed-product-transformed", "L#_s'N", crossed_product(bg, &ring, &m2, &c2, &h))?;
    let (phi, (rep, err)) = gauge_iso(&cp, &cp2, &u, &h);
    r.extend(rep);
    let phi = phi.ok_or_else(|| err.expect("failed validation carries an error"))?;
    let gamma2 = phi.inverse()?.mul(&cp2.gamma_matrix(bg));
    let (cl, _) = crossed_is_cleft(bg, &cp, &h)?;
    let (found, _) = step(r, "extract-gauge", "u'(X)=gamma(X[+]X[-]1)gamma'^-1", extract_gauge(bg, &cl, &gamma2, &a))?;
    let (m3, c3) = gauge_transform(bg, &ring, &meas, &coc, &found)?;
    r.record("extract-transform", "u'.(sigma,>)=(sigma',>')", (m3.matrix != m2.matrix || c3.sigma != c2.sigma).then(Vec::new));
    Ok(())
}

/// Points of the affine candidate space enumerated by `compare_gauge`.
pub const GAUGE_SEARCH_LIMIT: u64 = 1 << 16;

/// Decide whether the crossed product data of `b` is a gauge transform of
/// the data of `a`, over the same bialgebroid and ring. With `extract` the
/// documents are two cleavings of one comodule algebra, and `u` is
/// extracted from the pair of cleaving maps rather than searched for.
pub fn compare_gauge<F: Field>(a: &ModelDocument<F>, b: &ModelDocument<F>, extract: bool) -> (Report, Option<GaugeElement<F>>) {
    let mut r = Report::new(Suite::Gauge.name());
    let Some(bg) = validated(a, &mut r, false) else {
        return (r, None);
    };
    let res = (|| -> Result<GaugeElement<F>> {
        let same = b.require_bialgebroid()? == a.require_bialgebroid()?;
        r.record("same-bialgebroid", "L(A)=L(B)", (!same).then(Vec::new));
        if !same {
            return Err(Error::Schema { field: "total_algebra".into(), message: "the documents describe different bialgebroids".into() });
        }
        let (h, an) = translations(&bg, &mut r)?;
        if extract {
            extract_between(a, b, &bg, &an, &mut r)
        } else {
            search_between(a, b, &bg, &h, &an, &mut r)
        }
    })();
    match res {
        Ok(u) => (r, Some(u)),
        Err(e) => {
            r.record_error("gauge-equivalent", "exists-u:u.(sigma,>)=(sigma',>')", &e);
            (r, None)
        }
    }
}

fn search_between<F: Field>(a: &ModelDocument<F>, b: &ModelDocument<F>, bg: &Bialgebroid<F>, h: &LeftHopf<F>, an: &AntiLeftHopf<F>, r: &mut Report) -> Result<GaugeElement<F>> {
    let (ring, m1, c1) = crossed_data(a, bg, an, r)?;
    let (ring2, m2, c2) = crossed_data(b, bg, an, r)?;
    r.record("same-ring", "N(A)=N(B)", (ring != ring2).then(Vec::new));
    if ring != ring2 {
        return Err(Error::Schema { field: "ring".into(), message: "the documents carry different rings".into() });
    }
    let u = search_gauge(bg, &ring, &(m1.clone(), c1.clone()), &(m2.clone(), c2.clone()), GAUGE_SEARCH_LIMIT)?;
    let (m3, c3) = gauge_transform(bg, &ring, &m1, &c1, &u)?;
    r.record("search-transform", "u.(sigma,>)=(sigma',>')", (m3.matrix != m2.matrix || c3.sigma != c2.sigma).then(Vec::new));
    let cp = crossed_product(bg, &ring, &m1, &c1, h)?;
    let cp2 = crossed_product(bg, &ring, &m2, &c2, h)?;
    let (_, (rep, err)) = gauge_iso(&cp, &cp2, &u, h);
    r.extend(rep);
    err.map_or(Ok(u), Err)
}

fn extract_between<F: Field>(a: &ModelDocument<F>, b: &ModelDocument<F>, bg: &Bialgebroid<F>, an: &AntiLeftHopf<F>, r: &mut Report) -> Result<GaugeElement<F>> {
    r.record("same-comodule-algebra", "P(A)=P(B)", (a.comodule_algebra != b.comodule_algebra).then(Vec::new));
    if a.comodule_algebra != b.comodule_algebra {
        return Err(Error::Schema { field: "comodule_algebra".into(), message: "extraction needs one comodule algebra with two cleavings".into() });
    }
    let c = cleft_extension(a, bg, r)?;
    let c2 = cleft_extension(b, bg, r)?;
    let gamma2 = c2.gamma.to_matrix();
    let (u, _) = step(r, "extract-gauge", "u'(X)=gamma(X[+]X[-]1)gamma'^-1", extract_gauge(bg, &c, &gamma2, an))?;
    let (m1, c1) = extract_from_cleft(bg, &c, an)?;
    let (m2, s2) = extract_from_cleft(bg, &c2, an)?;
    let (m3, c3) = gauge_transform(bg, &c.ring, &m1, &c1, &u)?;
    r.record("extract-transform", "u'.(sigma,>)=(sigma',>')", (m3.matrix != m2.matrix || c3.sigma != s2.sigma).then(Vec::new));
    Ok(u)
}
