//! Gauge transformations of crossed product data by convolution invertible
//! maps `u: L → N`, the induced isomorphisms `L#_σN ≅ L#_σ'N`, and the
//! comparison of two cleaving maps on the same extension.

use super::crossed::{bracket_formula, structural_rows, Tables};
use super::{axpy, nonzero, CleftExtension};
use super::{check_measuring_cocycle, convolution_inverse, convolution_unit, convolve, extract_from_cleft, BbarRing, CrossedProduct, Measuring, RingCocycle};
use crate::bialgebroid::{AntiLeftHopf, Bialgebroid, LeftHopf};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::ActionKey;
use crate::report::{tuples, Gate, Report};
use crate::space::descend_map;
use crate::tensor::{Lin, Tensor};

/// A convolution invertible `u: L → N` with `u(t(b)X) = η(b)u(X)`,
/// `u(s(b)X) = u(X)η(b)`, `u(Xs(b)) = u(Xt(b))` and `u(1) = 1`. `u` and
/// `u_inv` are `dim N × n`. `ambiguity` is the dimension of the space of
/// such maps that would serve equally well where `u` was derived from data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeElement<F> {
    pub u: Matrix<F>,
    pub u_inv: Matrix<F>,
    pub ambiguity: usize,
    lin: Lin<F>,
    lin_inv: Lin<F>,
}

fn map_lin<F: Field>(m: &Matrix<F>) -> Lin<F> {
    Lin::from_fn(vec![m.cols()], vec![m.rows()], |c| m.col(c))
}

/// Check the linearity and unit laws of a map `L → N`.
fn gauge_laws<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, u: &Matrix<F>) -> Result<()> {
    let (n, nb, dn) = (bg.n(), bg.nb(), ring.dim());
    if u.rows() != dn || u.cols() != n {
        return Err(Error::DimMismatch(format!("gauge element must be {dn}x{n}")));
    }
    let val = |x: Tensor<F>| u.mul_vec(x.data());
    let eta = |b: usize| ring.eta_of(&bg.base().basis(b));
    let act = |x: usize, key: ActionKey, b: usize| bg.act(&bg.e(x), 0, &key, b);
    let fail = |law: &str, w: Option<Vec<usize>>| w.map_or(Ok(()), |w| Err(Error::NotGauge { law: law.into(), witness: w }));
    let w = tuples(&[nb, n]).into_iter().find(|t| val(act(t[1], ActionKey::left_bbar(), t[0])) != ring.mul(&eta(t[0]), &u.col(t[1])));
    fail("gauge-t", w)?;
    let w = tuples(&[nb, n]).into_iter().find(|t| val(act(t[1], ActionKey::left_b(), t[0])) != ring.mul(&u.col(t[1]), &eta(t[0])));
    fail("gauge-s", w)?;
    let w = tuples(&[nb, n]).into_iter().find(|t| val(act(t[1], ActionKey::right_b(), t[0])) != val(act(t[1], ActionKey::right_bbar(), t[0])));
    fail("gauge-side", w)?;
    fail("gauge-unit", (val(bg.one()) != ring.one()).then(Vec::new))
}

impl<F: Field> GaugeElement<F> {
    /// Validate `u` and solve for its convolution inverse.
    pub fn new(bg: &Bialgebroid<F>, ring: &BbarRing<F>, u: Matrix<F>) -> Result<Self> {
        gauge_laws(bg, ring, &u)?;
        let lin = map_lin(&u);
        let (lin_inv, _) = convolution_inverse(bg, ring, &lin)?;
        Ok(GaugeElement { u_inv: lin_inv.to_matrix(), u, ambiguity: 0, lin, lin_inv })
    }

    /// Validate `u` and certify that `u_inv` is its convolution inverse.
    pub fn with_inverse(bg: &Bialgebroid<F>, ring: &BbarRing<F>, u: Matrix<F>, u_inv: Matrix<F>) -> Result<Self> {
        gauge_laws(bg, ring, &u)?;
        let (lin, lin_inv) = (map_lin(&u), map_lin(&u_inv));
        let unit = convolution_unit(bg, ring, 1);
        for (what, prod) in [("u*v=e", convolve(bg, ring, &lin, &lin_inv)), ("v*u=e", convolve(bg, ring, &lin_inv, &lin))] {
            if let Some(x) = (0..bg.n()).find(|&x| prod.image(x) != unit.image(x)) {
                return Err(Error::NotConvolutionInvertible { what: what.into(), witness: vec![x] });
            }
        }
        Ok(GaugeElement { u, u_inv, ambiguity: 0, lin, lin_inv })
    }

    /// The unit gauge `u(X) = η_N(ε(X))`.
    pub fn identity(bg: &Bialgebroid<F>, ring: &BbarRing<F>) -> Result<Self> {
        Self::new(bg, ring, convolution_unit(bg, ring, 1).to_matrix())
    }

    pub fn lin(&self) -> &Lin<F> {
        &self.lin
    }

    pub fn lin_inv(&self) -> &Lin<F> {
        &self.lin_inv
    }
}

/// `X ▷' n = u(X₍₃₎)(X₍₂₎ ▷ n)u⁻¹(X₍₁₎)` and
/// `σ'(X, Y) = u(X₍₄₎Y₍₃₎)σ(X₍₃₎, Y₍₂₎)(X₍₂₎ ▷ u⁻¹(Y₍₁₎))u⁻¹(X₍₁₎)`,
/// validated as a measuring and cocycle pair.
pub fn gauge_transform<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, meas: &Measuring<F>, coc: &RingCocycle<F>, u: &GaugeElement<F>) -> Result<(Measuring<F>, RingCocycle<F>)> {
    let (n, dn) = (bg.n(), ring.dim());
    let tb = Tables::new(bg, ring, meas.lin(), coc.lin());
    let (uv, vv): (Vec<Vec<F>>, Vec<Vec<F>>) = ((0..n).map(|x| u.u.col(x)).collect(), (0..n).map(|x| u.u_inv.col(x)).collect());
    let uof = |x: &Tensor<F>| u.u.mul_vec(x.data());
    let three: Vec<Vec<(Vec<usize>, F)>> = (0..n).map(|x| nonzero(&bg.tower().image(x))).collect();
    let four: Vec<Vec<(Vec<usize>, F)>> = (0..n).map(|x| nonzero(&bg.tower().image(x).apply(&[2], bg.delta()))).collect();
    let mut act_cols = Vec::with_capacity(n * dn);
    for x in 0..n {
        for a in 0..dn {
            let mut acc = vec![F::zero(); dn];
            for (m, c) in &three[x] {
                let v = ring.mul(&ring.mul(&uv[m[2]], &tb.act_e(m[1], &ring.e(a))), &vv[m[0]]);
                axpy(&mut acc, c, &v);
            }
            act_cols.push(acc);
        }
    }
    let mut sig_cols = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut acc = vec![F::zero(); dn];
            for (mx, cx) in &four[x] {
                for (my, cy) in &three[y] {
                    let lead = uof(&bg.mul_legs(&bg.e(mx[3]).outer(&bg.e(my[2])), 0, 1));
                    let v = ring.mul(&ring.mul(&lead, tb.sig_e(mx[2], my[1])), &ring.mul(&tb.act_e(mx[1], &vv[my[0]]), &vv[mx[0]]));
                    axpy(&mut acc, &cx.mul(cy), &v);
                }
            }
            sig_cols.push(acc);
        }
    }
    match check_measuring_cocycle(bg, ring, &Matrix::from_cols(dn, &act_cols), &Matrix::from_cols(dn, &sig_cols)) {
        (Some(pair), _) => Ok(pair),
        (None, (_, e)) => Err(e.expect("failed validation carries an error")),
    }
}

/// `Φ(X#n) = X₊ #' u(X₋)n` from `L#_σN` to `L#_σ'N`, certified to be a
/// well-defined bijective `L`-colinear unital algebra map. Returns `Φ` as a
/// `dim × dim` matrix.
pub fn gauge_iso<F: Field>(from: &CrossedProduct<F>, to: &CrossedProduct<F>, u: &GaugeElement<F>, h: &LeftHopf<F>) -> (Option<Matrix<F>>, (Report, Option<Error>)) {
    let mut g = Gate::new("gauge");
    let fail = |property: &str, w: Option<Vec<usize>>| w.map(|w| Error::NotIsomorphism { property: property.into(), witness: w });
    let nmul = from.ring.algebra.mul_lin();
    let phi = descend_map(&from.space, &to.space, "gauge isomorphism", |t| h.pm(t, 0).apply(&[1], u.lin()).apply(&[1, 2], &nmul));
    let phi = match phi {
        Ok(m) => m,
        Err(e) => {
            let w = match e {
                Error::NotWellDefined { witness, .. } => witness,
                _ => vec![],
            };
            g.note("well-defined", "X+#'u(X-)n", fail("well-defined", Some(w)));
            return (None, (g.report, g.first));
        }
    };
    g.note("well-defined", "X+#'u(X-)n", None);
    let d = from.dim();
    let w = (phi.rows() != d || phi.cols() != to.dim() || phi.rank() != d).then(|| vec![phi.rank()]);
    g.note("bijective", "Phi bijective", fail("bijective", w));
    if !g.ok() {
        return (None, (g.report, g.first));
    }
    let phi_lin = Lin::from_matrix(&phi);
    let (ca, cb) = (&from.comodule_algebra.comodule, &to.comodule_algebra.comodule);
    let w = (0..d).find(|&k| !cb.diamond.equal(&cb.coact(&Tensor::vector(&phi.col(k)), 0), &ca.coaction().image(k).apply(&[1], &phi_lin))).map(|k| vec![k]);
    g.note("colinear", "delta'Phi=(id(x)Phi)delta", fail("colinear", w));
    let (pa, pb) = (&from.algebra, &to.algebra);
    let w = (phi.mul_vec(pa.unit()) != pb.unit()).then(Vec::new);
    g.note("unit", "Phi(1)=1", fail("unit", w));
    let w = tuples(&[d, d]).into_iter().find(|t| phi.mul_vec(&pa.mul(&pa.basis(t[0]), &pa.basis(t[1]))) != pb.mul(&phi.col(t[0]), &phi.col(t[1])));
    g.note("multiplicative", "Phi(pq)=Phi(p)Phi(q)", fail("multiplicative", w));
    if g.ok() {
        (Some(phi), (g.report, None))
    } else {
        (None, (g.report, g.first))
    }
}

/// Homogeneous equations on `u: L → N` (unknown `x·dN + c`): the linearity
/// laws, `u(1) = 0`, and `(X₍₂₎ ▷' n)u(X₍₁₎) = u(X₍₂₎)(X₍₁₎ ▷ n)` when both
/// measurings are given. The affine system has right-hand side `1` on the
/// unit rows.
fn gauge_system<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, intertwine: Option<(&Measuring<F>, &Measuring<F>)>) -> (Vec<Vec<F>>, Vec<F>) {
    let (n, dn) = (bg.n(), ring.dim());
    let mut rows = structural_rows(bg, ring, 1);
    let mut rhs = vec![F::zero(); rows.len()];
    let one_l = bg.one();
    let one_n = ring.one();
    for r in 0..dn {
        let mut row = vec![F::zero(); n * dn];
        for (x, c) in one_l.data().iter().enumerate() {
            row[x * dn + r] = c.clone();
        }
        rows.push(row);
        rhs.push(one_n[r].clone());
    }
    if let Some((m1, m2)) = intertwine {
        for x in 0..n {
            let d = nonzero(&bg.delta().image(x));
            for a in 0..dn {
                let ea = ring.e(a);
                let mut block = vec![vec![F::zero(); n * dn]; dn];
                for (m, c) in &d {
                    let lm = ring.algebra.left_matrix(&m2.act(&bg.e(m[1]).into_data(), &ea));
                    let rm = ring.algebra.right_matrix(&m1.act(&bg.e(m[0]).into_data(), &ea));
                    let minus = c.neg();
                    for (r, row) in block.iter_mut().enumerate() {
                        for k in 0..dn {
                            row[m[0] * dn + k].add_mul(c, &lm[(r, k)]);
                            row[m[1] * dn + k].add_mul(&minus, &rm[(r, k)]);
                        }
                    }
                }
                rhs.extend(std::iter::repeat(F::zero()).take(dn));
                rows.extend(block);
            }
        }
    }
    (rows, rhs)
}

/// Particular solution and null basis of the affine gauge system.
fn affine_solutions<F: Field>(rows: Vec<Vec<F>>, rhs: &[F]) -> Result<(Vec<F>, Vec<Vec<F>>)> {
    let m = Matrix::from_rows(rows)?;
    let part = m.solve(rhs)?;
    Ok((part, m.null_vectors()))
}

fn to_matrix<F: Field>(v: &[F], n: usize, dn: usize) -> Matrix<F> {
    Matrix::from_fn(dn, n, |r, x| v[x * dn + r].clone())
}

fn same_pair<F: Field>(a: &(Measuring<F>, RingCocycle<F>), b: &(Measuring<F>, RingCocycle<F>)) -> bool {
    a.0.matrix == b.0.matrix && a.1.sigma == b.1.sigma
}

/// From two cleaving maps `γ` (of `c`) and `γ'` on the same extension,
/// `u(X) = X[+]X[-]₍₁₎^α' ⊗ X[-]₍₁₎^β' γ(X[-]₍₂₎)` with the table of `γ'`
/// and `u⁻¹` with the roles exchanged, certified to carry the extracted
/// pair of `γ` to that of `γ'`.
pub fn extract_gauge<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>, gamma2: &Matrix<F>, a: &AntiLeftHopf<F>) -> Result<(GaugeElement<F>, CleftExtension<F>)> {
    let c2 = CleftExtension::new(bg, &c.alg, &c.iota_matrix(), gamma2)?;
    let (n, dn) = (bg.n(), c.ring.dim());
    let one = c.alg.one();
    let values = |split: &CleftExtension<F>, gamma: &Lin<F>, what: &str| -> Result<Matrix<F>> {
        let cols = (0..n)
            .map(|x| split.collapse(&bracket_formula(bg, a, split, gamma, x, &one)).ok_or(Error::NotGauge { law: format!("{what} lands in N"), witness: vec![x] }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(dn, &cols))
    };
    let u = values(&c2, &c.gamma, "u")?;
    let u_inv = values(c, &c2.gamma, "u^-1")?;
    let mut g = GaugeElement::with_inverse(bg, &c.ring, u, u_inv)?;
    let p1 = extract_from_cleft(bg, c, a)?;
    let p2 = extract_from_cleft(bg, &c2, a)?;
    let moved = gauge_transform(bg, &c.ring, &p1.0, &p1.1, &g)?;
    if !same_pair(&moved, &p2) {
        return Err(Error::NotEquivalent { what: "u does not carry (sigma,|>) to (sigma',|>')".into(), witness: Vec::new() });
    }
    let (rows, _) = gauge_system(bg, &c.ring, Some((&p1.0, &p2.0)));
    g.ambiguity = n * dn - Matrix::from_rows(rows)?.rank();
    Ok((g, c2))
}

/// Search for `u` with `gauge_transform(σ, ▷, u) = (σ', ▷')` among the
/// solutions of the linear part of the problem. Over `F_p` the affine
/// solution space is enumerated when it has at most `limit` points;
/// otherwise, and over `Q` with a positive-dimensional space, the result is
/// `Undecided`.
pub fn search_gauge<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, first: &(Measuring<F>, RingCocycle<F>), second: &(Measuring<F>, RingCocycle<F>), limit: u64) -> Result<GaugeElement<F>> {
    let (n, dn) = (bg.n(), ring.dim());
    let (rows, rhs) = gauge_system(bg, ring, Some((&first.0, &second.0)));
    let (part, null) = match affine_solutions(rows.clone(), &rhs) {
        Ok(v) => v,
        Err(Error::NoSolution) => {
            let m = Matrix::from_rows(rows)?;
            let aug = m.hstack(&Matrix::from_cols(rhs.len(), std::slice::from_ref(&rhs)));
            return Err(Error::NotEquivalent { what: "no linear intertwiner u (ranks of system, augmented)".into(), witness: vec![m.rank(), aug.rank()] });
        }
        Err(e) => return Err(e),
    };
    let dim = null.len() as u32;
    let p = F::characteristic();
    if dim > 0 && (p == 0 || p.checked_pow(dim).map_or(true, |c| c > limit)) {
        return Err(Error::Undecided(format!("{dim}-dimensional family of candidates over {}", F::name())));
    }
    let count = if dim == 0 { 1 } else { p.pow(dim) };
    for k in 0..count {
        let mut v = part.clone();
        let mut rest = k;
        for z in &null {
            let coeff = F::from_i64((rest % p.max(1)) as i64);
            rest /= p.max(1);
            axpy(&mut v, &coeff, z);
        }
        let Ok(mut g) = GaugeElement::new(bg, ring, to_matrix(&v, n, dn)) else { continue };
        if gauge_transform(bg, ring, &first.0, &first.1, &g).is_ok_and(|moved| same_pair(&moved, second)) {
            g.ambiguity = null.len();
            return Ok(g);
        }
    }
    Err(Error::NotEquivalent { what: "no candidate works (candidates, family dimension)".into(), witness: vec![count as usize, null.len()] })
}

/// A gauge element with random coordinates on the affine space of maps
/// satisfying the linearity and unit laws, retried until invertible.
pub fn random_gauge<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, mut sample: impl FnMut() -> F) -> Result<GaugeElement<F>> {
    let (n, dn) = (bg.n(), ring.dim());
    let (rows, rhs) = gauge_system(bg, ring, None);
    let (part, null) = affine_solutions(rows, &rhs)?;
    let mut last = Error::NotConvolutionInvertible { what: "no sample drawn".into(), witness: Vec::new() };
    for _ in 0..64 {
        let mut v = part.clone();
        for z in &null {
            axpy(&mut v, &sample(), z);
        }
        match GaugeElement::new(bg, ring, to_matrix(&v, n, dn)) {
            Ok(mut g) => {
                g.ambiguity = null.len();
                return Ok(g);
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}
