//! Measurings and ring-valued 2-cocycles of `L^cop` over a `B̄`-ring `N`,
//! convolution of maps into `N`, the crossed product `L#_σN`, its cleaving
//! map `X ↦ X#1`, and the extraction of `(σ, ▷)` from a cleft extension.

use super::{axpy, check_cleft, gamma_crossed_product, nonzero, ring_on_quotient, CleftExtension, LBAR_N};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::bialgebroid::{identity, AntiLeftHopf, Bialgebroid, LeftHopf};
use crate::comodule::LeftComoduleAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{ActionKey, MultiModule, Side};
use crate::report::{tuples, Gate, Report};
use crate::space::Space;
use crate::tensor::{flatten, unflatten, Lin, Tensor};

/// An algebra `N` with an algebra map `η_N: B̄ → N`. The carrier `module`
/// has `b̄·n = η_N(b)n`, `n·b̄ = nη_N(b)` and the regular actions of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BbarRing<F> {
    pub algebra: Algebra<F>,
    pub eta: AlgebraMorphism<F>,
    pub module: MultiModule<F>,
}

impl<F: Field> BbarRing<F> {
    /// `eta` is `dim N × nB`.
    pub fn new(bg: &Bialgebroid<F>, algebra: Algebra<F>, eta: Matrix<F>) -> Result<Self> {
        let eta = AlgebraMorphism::new("eta_N", &bg.base().opposite(), &algebra, eta)?;
        let images: Vec<Vec<F>> = (0..bg.nb()).map(|b| eta.apply(&bg.base().basis(b))).collect();
        let basis: Vec<Vec<F>> = (0..algebra.dim()).map(|i| algebra.basis(i)).collect();
        let left = |xs: &[Vec<F>]| xs.iter().map(|x| algebra.left_matrix(x)).collect::<Vec<_>>();
        let right = |xs: &[Vec<F>]| xs.iter().map(|x| algebra.right_matrix(x)).collect::<Vec<_>>();
        let module = MultiModule::new("N", algebra.dim())
            .with_action(ActionKey::left_bbar(), left(&images))
            .with_action(ActionKey::right_bbar(), right(&images))
            .with_action(ActionKey::new("N", Side::Left, false), left(&basis))
            .with_action(ActionKey::new("N", Side::Right, false), right(&basis));
        Ok(BbarRing { algebra, eta, module })
    }

    /// `N = k` over the ground field.
    pub fn ground(bg: &Bialgebroid<F>) -> Result<Self> {
        let k = crate::builders::ground::<F>();
        Self::new(bg, k, Matrix::from_fn(1, bg.nb(), |_, _| F::one()))
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn e(&self, i: usize) -> Vec<F> {
        self.algebra.basis(i)
    }

    pub fn one(&self) -> Vec<F> {
        self.algebra.unit().to_vec()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.algebra.mul(a, b)
    }

    /// `η_N` of a base element given by coordinates.
    pub fn eta_of(&self, b: &[F]) -> Vec<F> {
        self.eta.apply(b)
    }
}

/// `▷: L^cop ⊗ N → N` as a `dim N × (n · dim N)` matrix, column `x·dN + m`
/// holding `e_x ▷ e_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measuring<F> {
    pub matrix: Matrix<F>,
    lin: Lin<F>,
}

impl<F: Field> Measuring<F> {
    /// Shape checks only; `check_measuring_cocycle` validates the laws.
    pub fn unchecked(bg: &Bialgebroid<F>, ring: &BbarRing<F>, matrix: Matrix<F>) -> Result<Self> {
        let (n, dn) = (bg.n(), ring.dim());
        if matrix.rows() != dn || matrix.cols() != n * dn {
            return Err(Error::DimMismatch(format!("measuring must be {dn}x{}", n * dn)));
        }
        let lin = Lin::from_fn(vec![n, dn], vec![dn], |c| matrix.col(c));
        Ok(Measuring { matrix, lin })
    }

    pub fn lin(&self) -> &Lin<F> {
        &self.lin
    }

    /// `X ▷ m` for `X ∈ L` and `m ∈ N` given by coordinates.
    pub fn act(&self, x: &[F], m: &[F]) -> Vec<F> {
        Tensor::vector(x).outer(&Tensor::vector(m)).apply(&[0, 1], &self.lin).into_data()
    }
}

/// `σ: L^cop ⊗ L^cop → N` with its convolution inverse, both `dim N × n²`
/// with column `x·n + y` holding the value on `(e_x, e_y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCocycle<F> {
    pub sigma: Matrix<F>,
    pub sigma_inv: Matrix<F>,
    lin: Lin<F>,
    lin_inv: Lin<F>,
}

fn pair_lin<F: Field>(m: &Matrix<F>, n: usize) -> Lin<F> {
    Lin::from_fn(vec![n, n], vec![m.rows()], |c| m.col(c))
}

impl<F: Field> RingCocycle<F> {
    /// Shape checks only. The inverse is solved for when it exists and left
    /// zero otherwise.
    pub fn unchecked(bg: &Bialgebroid<F>, ring: &BbarRing<F>, sigma: Matrix<F>) -> Result<Self> {
        let (n, dn) = (bg.n(), ring.dim());
        if sigma.rows() != dn || sigma.cols() != n * n {
            return Err(Error::DimMismatch(format!("cocycle must be {dn}x{}", n * n)));
        }
        let lin = pair_lin(&sigma, n);
        let lin_inv = convolution_inverse(bg, ring, &lin).map(|(l, _)| l).unwrap_or_else(|_| Lin::from_fn(vec![n, n], vec![dn], |_| vec![F::zero(); dn]));
        Ok(RingCocycle { sigma_inv: lin_inv.to_matrix(), sigma, lin, lin_inv })
    }

    /// Same cocycle with a replaced inverse, for perturbation tests.
    pub fn with_inverse(&self, sigma_inv: Matrix<F>) -> Self {
        let n = self.lin.in_dims[0];
        RingCocycle { lin_inv: pair_lin(&sigma_inv, n), sigma_inv, ..self.clone() }
    }

    pub fn lin(&self) -> &Lin<F> {
        &self.lin
    }

    pub fn lin_inv(&self) -> &Lin<F> {
        &self.lin_inv
    }

    pub fn value(&self, x: &[F], y: &[F]) -> Vec<F> {
        Tensor::vector(x).outer(&Tensor::vector(y)).apply(&[0, 1], &self.lin).into_data()
    }
}

/// `X ▷ n = η_N(ε(X)) n`, a measuring when `η_N(B̄)` is central in `N`.
pub fn trivial_measuring<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>) -> Matrix<F> {
    let dn = ring.dim();
    Matrix::from_fn(dn, bg.n() * dn, |_, _| F::zero()).add(&Matrix::from_cols(
        dn,
        &(0..bg.n() * dn).map(|c| ring.mul(&ring.eta_of(bg.e(c / dn).apply(&[0], bg.eps()).data()), &ring.e(c % dn))).collect::<Vec<_>>(),
    ))
}

/// `σ(X, Y) = η_N(ε(XY))`, also the unit for convolution.
pub fn trivial_ring_cocycle<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>) -> Matrix<F> {
    convolution_unit(bg, ring, 2).to_matrix()
}

/// `(c, first legs, second legs)` over the coproducts of every argument.
fn split_args<F: Field>(bg: &Bialgebroid<F>, args: &[usize]) -> Vec<(F, Vec<usize>, Vec<usize>)> {
    let mut out = vec![(F::one(), Vec::new(), Vec::new())];
    for &x in args {
        let d = nonzero(&bg.delta().image(x));
        let mut next = Vec::with_capacity(out.len() * d.len());
        for (c, f, s) in &out {
            for (m, e) in &d {
                let (mut f, mut s) = (f.clone(), s.clone());
                f.push(m[0]);
                s.push(m[1]);
                next.push((c.mul(e), f, s));
            }
        }
        out = next;
    }
    out
}

/// `η_N ∘ ε` of the product of the arguments: the convolution unit for maps
/// of the given arity.
pub fn convolution_unit<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, arity: usize) -> Lin<F> {
    let n = bg.n();
    let dims = vec![n; arity];
    Lin::from_fn(dims.clone(), vec![ring.dim()], |idx| {
        let prod = unflatten(&dims, idx).iter().fold(bg.one(), |acc, &x| bg.mul_legs(&acc.outer(&bg.e(x)), 0, 1));
        ring.eta_of(prod.apply(&[0], bg.eps()).data())
    })
}

/// `(f ★ g)(X) = f(X₍₂₎) g(X₍₁₎)`, argumentwise for maps of several arguments.
pub fn convolve<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, f: &Lin<F>, g: &Lin<F>) -> Lin<F> {
    let dims = f.in_dims.clone();
    Lin::from_fn(dims.clone(), vec![ring.dim()], |idx| {
        let mut out = vec![F::zero(); ring.dim()];
        for (c, first, second) in split_args(bg, &unflatten(&dims, idx)) {
            let v = ring.mul(f.image(flatten(&dims, &second)).data(), g.image(flatten(&dims, &first)).data());
            axpy(&mut out, &c, &v);
        }
        out
    })
}

/// Linear equations (zero right-hand side) saying that a map of the given
/// arity satisfies `f(t(b)X, …) = η(b)f(X, …)`, `f(s(b)X, …) = f(X, …)η(b)`,
/// `f(…, Ys(b)) = f(…, Yt(b))` and, for two arguments, `f(Xr, Y) = f(X, rY)`.
/// Unknown `idx·dN + c` is coordinate `c` of `f` on the argument tuple `idx`.
pub(crate) fn structural_rows<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, arity: usize) -> Vec<Vec<F>> {
    let (n, nb, dn) = (bg.n(), bg.nb(), ring.dim());
    let dims = vec![n; arity];
    let total = n.pow(arity as u32);
    let unknowns = total * dn;
    let mut rows = Vec::new();
    // f evaluated at an argument tuple whose leg `leg` is the vector `w`
    let value_at = |row: &mut Vec<F>, args: &[usize], leg: usize, w: &Tensor<F>, r: usize, coeff: &F| {
        for (i, v) in w.data().iter().enumerate() {
            if !v.is_zero() {
                let mut a = args.to_vec();
                a[leg] = i;
                row[flatten(&dims, &a) * dn + r].add_mul(v, coeff);
            }
        }
    };
    let act = |x: usize, key: ActionKey, b: usize| bg.act(&bg.e(x), 0, &key, b);
    let minus = F::one().neg();
    for b in 0..nb {
        let eb = ring.eta_of(&bg.base().basis(b));
        let (lm, rm) = (ring.algebra.left_matrix(&eb), ring.algebra.right_matrix(&eb));
        for idx in 0..total {
            let args = unflatten(&dims, idx);
            for (key, m) in [(ActionKey::left_bbar(), &lm), (ActionKey::left_b(), &rm)] {
                let w = act(args[0], key, b);
                for r in 0..dn {
                    let mut row = vec![F::zero(); unknowns];
                    value_at(&mut row, &args, 0, &w, r, &F::one());
                    for c in 0..dn {
                        row[idx * dn + c].add_mul(&m[(r, c)], &minus);
                    }
                    rows.push(row);
                }
            }
            let last = arity - 1;
            let (ws, wt) = (act(args[last], ActionKey::right_b(), b), act(args[last], ActionKey::right_bbar(), b));
            for r in 0..dn {
                let mut row = vec![F::zero(); unknowns];
                value_at(&mut row, &args, last, &ws, r, &F::one());
                value_at(&mut row, &args, last, &wt, r, &minus);
                rows.push(row);
            }
            if arity == 2 {
                for (rk, lk) in [(ActionKey::right_b(), ActionKey::left_b()), (ActionKey::right_bbar(), ActionKey::left_bbar())] {
                    let (xr, ry) = (act(args[0], rk, b), act(args[1], lk, b));
                    for r in 0..dn {
                        let mut row = vec![F::zero(); unknowns];
                        value_at(&mut row, &args, 0, &xr, r, &F::one());
                        value_at(&mut row, &args, 1, &ry, r, &minus);
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows
}

/// Solve `f ★ g = e = g ★ f` for `g`, adding the structural equations on
/// `g` when the convolution equations alone leave it undetermined. Returns
/// `g` and the dimension of the remaining solution space.
pub fn convolution_inverse<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, f: &Lin<F>) -> Result<(Lin<F>, usize)> {
    let dims = f.in_dims.clone();
    let dn = ring.dim();
    let total: usize = dims.iter().product();
    let unknowns = total * dn;
    let unit = convolution_unit(bg, ring, dims.len());
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for idx in 0..total {
        let terms = split_args(bg, &unflatten(&dims, idx));
        let e = unit.image(idx);
        for r in 0..dn {
            let mut row = vec![F::zero(); unknowns];
            let mut row2 = vec![F::zero(); unknowns];
            for (c, first, second) in &terms {
                let (fi, si) = (flatten(&dims, first), flatten(&dims, second));
                // f(second) g(first) and g(second) f(first)
                let lm = ring.algebra.left_matrix(f.image(si).data());
                let rm = ring.algebra.right_matrix(f.image(fi).data());
                for k in 0..dn {
                    row[fi * dn + k].add_mul(c, &lm[(r, k)]);
                    row2[si * dn + k].add_mul(c, &rm[(r, k)]);
                }
            }
            rows.push(row);
            rhs.push(e.data()[r].clone());
            rows.push(row2);
            rhs.push(e.data()[r].clone());
        }
    }
    let m = Matrix::from_rows(rows.clone())?;
    let m = if m.rank() < unknowns {
        let more = structural_rows(bg, ring, dims.len());
        rhs.extend(std::iter::repeat(F::zero()).take(more.len()));
        rows.extend(more);
        Matrix::from_rows(rows)?
    } else {
        m
    };
    let sol = m.solve(&rhs).map_err(|_| Error::inconsistent_convolution("f*g=e=g*f", &m, &rhs))?;
    let free = unknowns - m.rank();
    Ok((Lin::from_fn(dims, vec![dn], |idx| sol[idx * dn..(idx + 1) * dn].to_vec()), free))
}

/// Lookup tables for `▷` and `σ` on basis elements, extended linearly.
pub(crate) struct Tables<'a, F> {
    bg: &'a Bialgebroid<F>,
    ring: &'a BbarRing<F>,
    n: usize,
    dn: usize,
    act: Vec<Vec<F>>,
    sig: Vec<Vec<F>>,
    delta: Vec<Vec<(Vec<usize>, F)>>,
}

impl<'a, F: Field> Tables<'a, F> {
    pub(crate) fn new(bg: &'a Bialgebroid<F>, ring: &'a BbarRing<F>, act: &Lin<F>, sig: &Lin<F>) -> Self {
        let (n, dn) = (bg.n(), ring.dim());
        Tables {
            bg,
            ring,
            n,
            dn,
            act: (0..n * dn).map(|c| act.image(c).into_data()).collect(),
            sig: (0..n * n).map(|c| sig.image(c).into_data()).collect(),
            delta: (0..n).map(|x| nonzero(&bg.delta().image(x))).collect(),
        }
    }

    pub(crate) fn act_e(&self, x: usize, m: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dn];
        for (a, c) in m.iter().enumerate() {
            axpy(&mut out, c, &self.act[x * self.dn + a]);
        }
        out
    }

    pub(crate) fn act(&self, x: &[F], m: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dn];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.act_e(i, m));
            }
        }
        out
    }

    pub(crate) fn sig_e(&self, x: usize, y: usize) -> &[F] {
        &self.sig[x * self.n + y]
    }

    pub(crate) fn sig(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dn];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut out, &a.mul(b), self.sig_e(i, j));
                }
            }
        }
        out
    }

    pub(crate) fn delta(&self, x: usize) -> &[(Vec<usize>, F)] {
        &self.delta[x]
    }

    fn lmul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.bg.total().mul(x, y)
    }

    fn nmul(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.ring.mul(a, b)
    }
}

/// Validate the measuring laws of `▷` and the cocycle laws of `σ` for
/// `L^cop` over `N`, including the twisted module law, and solve for `σ⁻¹`.
/// `action` is `dim N × (n · dim N)`, `sigma` is `dim N × n²`.
#[allow(clippy::type_complexity)]
pub fn check_measuring_cocycle<F: Field>(
    bg: &Bialgebroid<F>,
    ring: &BbarRing<F>,
    action: &Matrix<F>,
    sigma: &Matrix<F>,
) -> (Option<(Measuring<F>, RingCocycle<F>)>, (Report, Option<Error>)) {
    let mut g = Gate::new("crossed");
    let (n, nb, dn) = (bg.n(), bg.nb(), ring.dim());
    let shapes = Measuring::unchecked(bg, ring, action.clone()).and_then(|m| {
        if sigma.rows() != dn || sigma.cols() != n * n {
            return Err(Error::DimMismatch(format!("cocycle must be {dn}x{}", n * n)));
        }
        Ok(m)
    });
    let meas = match shapes {
        Ok(m) => m,
        Err(e) => {
            g.note("assemble", "(|>,sigma)", Some(e));
            return (None, (g.report, g.first));
        }
    };
    let sig_lin = pair_lin(sigma, n);
    let tb = Tables::new(bg, ring, meas.lin(), &sig_lin);
    let e = |x: usize| bg.e(x).into_data();
    let en = |m: usize| ring.e(m);
    let eta = |b: usize| ring.eta_of(&bg.base().basis(b));
    let act_on = |x: usize, key: ActionKey, b: usize| bg.act(&bg.e(x), 0, &key, b).into_data();
    let eps_eta = |x: &[F]| ring.eta_of(Tensor::vector(x).apply(&[0], bg.eps()).data());
    let mf = |law: &str, w: Option<Vec<usize>>| w.map(|w| Error::MeasuringFails { law: law.into(), witness: w });
    let cf = |law: &str, w: Option<Vec<usize>>| w.map(|w| Error::CocycleLawFails { law: law.into(), witness: w });

    let w = tuples(&[nb, n, dn]).into_iter().find(|t| tb.act(&act_on(t[1], ActionKey::left_bbar(), t[0]), &en(t[2])) != tb.nmul(&eta(t[0]), &tb.act_e(t[1], &en(t[2]))));
    g.note("measuring-t", "(t(b)X)|>m=b(X|>m)", mf("measuring-t", w));
    let w = tuples(&[nb, n, dn]).into_iter().find(|t| tb.act(&act_on(t[1], ActionKey::left_b(), t[0]), &en(t[2])) != tb.nmul(&tb.act_e(t[1], &en(t[2])), &eta(t[0])));
    g.note("measuring-s", "(s(b)X)|>m=(X|>m)b", mf("measuring-s", w));
    let w = tuples(&[nb, n, dn]).into_iter().find(|t| tb.act(&act_on(t[1], ActionKey::right_bbar(), t[0]), &en(t[2])) != tb.act_e(t[1], &tb.nmul(&eta(t[0]), &en(t[2]))));
    g.note("measuring-balanced", "(Xt(b))|>m=X|>(bm)", mf("measuring-balanced", w));
    let w = tuples(&[nb, n]).into_iter().find(|t| {
        let v = tb.act_e(t[1], &eta(t[0]));
        v != eps_eta(&act_on(t[1], ActionKey::right_b(), t[0])) || v != eps_eta(&act_on(t[1], ActionKey::right_bbar(), t[0]))
    });
    g.note("measuring-base", "X|>b=eps(Xs(b))=eps(Xt(b))", mf("measuring-base", w));
    let w = tuples(&[n, dn, dn]).into_iter().find(|t| {
        let lhs = tb.act_e(t[0], &tb.nmul(&en(t[1]), &en(t[2])));
        let mut rhs = vec![F::zero(); dn];
        for (m, c) in tb.delta(t[0]) {
            axpy(&mut rhs, c, &tb.nmul(&tb.act_e(m[1], &en(t[1])), &tb.act_e(m[0], &en(t[2]))));
        }
        lhs != rhs
    });
    g.note("measuring-product", "X|>(mn)=(X2|>m)(X1|>n)", mf("measuring-product", w));
    let one = bg.one().into_data();
    let w = (0..dn).find(|&m| tb.act(&one, &en(m)) != en(m)).map(|m| vec![m]);
    g.note("measuring-unit", "1|>m=m", mf("measuring-unit", w));

    let w = tuples(&[nb, n, n]).into_iter().find(|t| {
        let v = tb.sig_e(t[1], t[2]).to_vec();
        tb.sig(&act_on(t[1], ActionKey::left_bbar(), t[0]), &e(t[2])) != tb.nmul(&eta(t[0]), &v)
            || tb.sig(&act_on(t[1], ActionKey::left_b(), t[0]), &e(t[2])) != tb.nmul(&v, &eta(t[0]))
    });
    g.note("cocycle-linear", "s(t(b)s(c)X,Y)=bs(X,Y)c", cf("cocycle-linear", w));
    let w = (0..n).find(|&x| {
        let v = eps_eta(&e(x));
        tb.sig(&e(x), &one) != v || tb.sig(&one, &e(x)) != v
    });
    g.note("cocycle-normalized", "s(X,1)=s(1,X)=eps(X)", cf("cocycle-normalized", w.map(|x| vec![x])));
    let w = tuples(&[nb, n, n]).into_iter().find(|t| tb.sig(&e(t[1]), &act_on(t[2], ActionKey::right_b(), t[0])) != tb.sig(&e(t[1]), &act_on(t[2], ActionKey::right_bbar(), t[0])));
    g.note("cocycle-side", "s(X,Ys(b))=s(X,Yt(b))", cf("cocycle-side", w));
    let w = tuples(&[2, nb, n, n]).into_iter().find(|t| {
        let (rk, lk) = if t[0] == 0 { (ActionKey::right_b(), ActionKey::left_b()) } else { (ActionKey::right_bbar(), ActionKey::left_bbar()) };
        tb.sig(&act_on(t[2], rk, t[1]), &e(t[3])) != tb.sig(&e(t[2]), &act_on(t[3], lk, t[1]))
    });
    g.note("cocycle-balanced", "s(Xr,Y)=s(X,rY)", cf("cocycle-balanced", w));
    let w = tuples(&[n, n, n]).into_iter().find(|t| {
        let mut lhs = vec![F::zero(); dn];
        let mut rhs = vec![F::zero(); dn];
        for (mx, cx) in tb.delta(t[0]) {
            for (my, cy) in tb.delta(t[1]) {
                let cxy = cx.mul(cy);
                for (mz, cz) in tb.delta(t[2]) {
                    let v = tb.nmul(&tb.sig(&e(mx[1]), &tb.lmul(&e(my[1]), &e(mz[1]))), &tb.act_e(mx[0], tb.sig_e(my[0], mz[0])));
                    axpy(&mut lhs, &cxy.mul(cz), &v);
                }
                let v = tb.nmul(&tb.sig(&tb.lmul(&e(mx[1]), &e(my[1])), &e(t[2])), tb.sig_e(mx[0], my[0]));
                axpy(&mut rhs, &cxy, &v);
            }
        }
        lhs != rhs
    });
    g.note("cocycle", "s(X2,Y2Z2)(X1|>s(Y1,Z1))=s(X2Y2,Z)s(X1,Y1)", cf("cocycle", w));
    let w = tuples(&[n, n, dn]).into_iter().find(|t| {
        let mut lhs = vec![F::zero(); dn];
        let mut rhs = vec![F::zero(); dn];
        for (mx, cx) in tb.delta(t[0]) {
            for (my, cy) in tb.delta(t[1]) {
                let c = cx.mul(cy);
                let l = tb.nmul(tb.sig_e(mx[1], my[1]), &tb.act_e(mx[0], &tb.act_e(my[0], &en(t[2]))));
                let r = tb.nmul(&tb.act(&tb.lmul(&e(mx[1]), &e(my[1])), &en(t[2])), tb.sig_e(mx[0], my[0]));
                axpy(&mut lhs, &c, &l);
                axpy(&mut rhs, &c, &r);
            }
        }
        lhs != rhs
    });
    g.note("twisted-module", "s(X2,Y2)(X1|>(Y1|>m))=((X2Y2)|>m)s(X1,Y1)", w.map(|w| Error::TwistedModuleFails { witness: w }));
    if !g.ok() {
        return (None, (g.report, g.first));
    }
    let inv = match convolution_inverse(bg, ring, &sig_lin) {
        Ok((l, _)) => l,
        Err(e) => {
            g.note("invertible", "s*s^-1=e=s^-1*s", Some(e));
            return (None, (g.report, g.first));
        }
    };
    g.note("invertible", "s*s^-1=e=s^-1*s", None);
    let coc = RingCocycle { sigma: sigma.clone(), sigma_inv: inv.to_matrix(), lin: sig_lin, lin_inv: inv };
    (Some((meas, coc)), (g.report, None))
}

/// `σ(X₍₂₎₊, X₍₂₎₋₍₂₎)(X₍₁₎ ▷ σ⁻¹(X₍₂₎₋₍₁₎, X₍₃₎)) = ε(X)` on every basis
/// element, and independence of the value from the representative chosen
/// for `X₍₁₎ ⊗ X₍₂₎ ⊗ X₍₃₎`.
pub fn cocycle_ring_identity<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, meas: &Measuring<F>, coc: &RingCocycle<F>, h: &LeftHopf<F>) -> Report {
    let mut r = Report::new("crossed");
    let (n, dn) = (bg.n(), ring.dim());
    let tb = Tables::new(bg, ring, meas.lin(), coc.lin());
    let sinv: Vec<Vec<F>> = (0..n * n).map(|c| coc.lin_inv().image(c).into_data()).collect();
    let f = |v: &[usize]| tb.nmul(tb.sig_e(v[1], v[3]), &tb.act_e(v[0], &sinv[v[2] * n + v[4]]));
    r.check_all("ring-identity", "s(X2+,X2-2)(X1|>s^-1(X2-1,X3))=eps(X)", tuples(&[n]), |t| {
        let v = h.pm(&bg.tower().image(t[0]), 1).apply(&[2], bg.delta());
        let mut acc = vec![F::zero(); dn];
        for (m, c) in nonzero(&v) {
            axpy(&mut acc, &c, &f(&m));
        }
        acc == ring.eta_of(bg.e(t[0]).apply(&[0], bg.eps()).data())
    });
    let eval = |t: Tensor<F>| -> Vec<F> {
        let mut acc = vec![F::zero(); dn];
        for (m, c) in nonzero(&h.pm(&t, 1).apply(&[2], bg.delta())) {
            axpy(&mut acc, &c, &f(&m));
        }
        acc
    };
    // the canonical triple against both iterated coproducts of representatives
    r.check_all("ring-identity-representatives", "value independent of the representative of X1(x)X2(x)X3", tuples(&[n]), |t| {
        let d = bg.e(t[0]).apply(&[0], bg.delta());
        let v = eval(bg.tower().image(t[0]));
        v == eval(d.apply(&[1], bg.delta())) && v == eval(d.apply(&[0], bg.delta()))
    });
    r
}

/// `L#_σN` on `L ⊗_B̄ N` with `(X#n)(Y#m) = X₊Y₊ # σ(Y₋₍₂₎, X₋)(Y₋₍₁₎▷n)m`,
/// as a left `L`-comodule algebra through `η(b) = s(b)#1` and
/// `δ(X#n) = X₍₁₎ ⊗ X₍₂₎#n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProduct<F> {
    pub ring: BbarRing<F>,
    pub measuring: Measuring<F>,
    pub cocycle: RingCocycle<F>,
    pub space: Space<F>,
    pub algebra: Algebra<F>,
    pub comodule_algebra: LeftComoduleAlgebra<F>,
    /// `b ↦ 1#η_N(b)` as a `dim × nB` matrix
    pub iota: Matrix<F>,
    proj: Lin<F>,
}

impl<F: Field> CrossedProduct<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Class of a raw tensor `[n, dN]`.
    pub fn project(&self, t: &Tensor<F>) -> Tensor<F> {
        t.apply(&[0, 1], &self.proj)
    }

    /// `X # n` for `X ∈ L`, `n ∈ N`.
    pub fn element(&self, x: &Tensor<F>, m: &[F]) -> Vec<F> {
        self.project(&x.outer(&Tensor::vector(m))).into_data()
    }

    /// `X ↦ X#1` as a `dim × n` matrix.
    pub fn gamma_matrix(&self, bg: &Bialgebroid<F>) -> Matrix<F> {
        let one = self.ring.one();
        Matrix::from_cols(self.dim(), &(0..bg.n()).map(|x| self.element(&bg.e(x), &one)).collect::<Vec<_>>())
    }
}

/// Build `L#_σN`, certifying that the product descends to `L ⊗_B̄ N`, is
/// associative and has `1#1` as unit. The data are taken as given, so an
/// invalid pair surfaces here as `NotAssociative` or `NotWellDefined`.
pub fn crossed_product<F: Field>(bg: &Bialgebroid<F>, ring: &BbarRing<F>, meas: &Measuring<F>, coc: &RingCocycle<F>, h: &LeftHopf<F>) -> Result<CrossedProduct<F>> {
    let (n, dn) = (bg.n(), ring.dim());
    let space = Space::build(LBAR_N, &[&bg.l, &ring.module])?;
    let d = space.dim();
    let proj = Lin::from_fn(vec![n, dn], vec![d], |c| space.project(&Tensor::basis(&[n, dn], &[c / dn, c % dn])));
    let tb = Tables::new(bg, ring, meas.lin(), coc.lin());
    let lam: Vec<Vec<(Vec<usize>, F)>> = (0..n).map(|x| nonzero(&h.table.image(x))).collect();
    let lam_d: Vec<Vec<(Vec<usize>, F)>> = (0..n).map(|y| nonzero(&h.table.image(y).apply(&[1], bg.delta()))).collect();
    let unit = bg.one().outer(&Tensor::vector(&ring.one()));
    let algebra = ring_on_quotient(&space, &format!("{}#sigma", bg.total().name()), "crossed product", &unit, |i, j| {
        let (x, a, y, b) = (i / dn, i % dn, j / dn, j % dn);
        let mut acc = vec![F::zero(); d];
        for (mx, cx) in &lam[x] {
            for (my, cy) in &lam_d[y] {
                let first = bg.mul_legs(&bg.e(mx[0]).outer(&bg.e(my[0])), 0, 1);
                let second = ring.mul(&ring.mul(tb.sig_e(my[2], mx[1]), &tb.act_e(my[1], &ring.e(a))), &ring.e(b));
                axpy(&mut acc, &cx.mul(cy), first.outer(&Tensor::vector(&second)).apply(&[0, 1], &proj).data());
            }
        }
        Ok(acc)
    })?;
    let one_n = Tensor::vector(&ring.one());
    let cls = |t: Tensor<F>| t.apply(&[0, 1], &proj).into_data();
    let eta = Matrix::from_cols(d, &(0..bg.nb()).map(|b| cls(bg.e_b(b).apply(&[0], bg.s()).outer(&one_n))).collect::<Vec<_>>());
    let iota = Matrix::from_cols(d, &(0..bg.nb()).map(|b| cls(bg.one().outer(&Tensor::vector(&ring.eta_of(&bg.base().basis(b)))))).collect::<Vec<_>>());
    let coaction = Matrix::from_cols(
        n * d,
        &(0..d)
            .map(|k| {
                let mut v = vec![F::zero(); d];
                v[k] = F::one();
                space.section(&v).apply(&[0], bg.delta()).apply(&[1, 2], &proj).into_data()
            })
            .collect::<Vec<_>>(),
    );
    let comodule_algebra = LeftComoduleAlgebra::new(bg, algebra.clone(), &eta, &coaction)?;
    Ok(CrossedProduct { ring: ring.clone(), measuring: meas.clone(), cocycle: coc.clone(), space, algebra, comodule_algebra, iota, proj })
}

/// `L#_σN` as a cleft extension with `γ(X) = X#1` and `ι(b) = 1#η_N(b)`,
/// with the generic `α β` table compared against
/// `X^α ⊗ X^β = X₊ ⊗ X₋₍₁₎₊ # σ⁻¹(X₋₍₁₎₋, X₋₍₂₎)`.
pub fn crossed_is_cleft<F: Field>(bg: &Bialgebroid<F>, cp: &CrossedProduct<F>, h: &LeftHopf<F>) -> Result<(CleftExtension<F>, Report)> {
    let (c, (mut r, err)) = check_cleft(bg, &cp.comodule_algebra, &cp.iota, &cp.gamma_matrix(bg));
    let c = c.ok_or_else(|| err.expect("failed validation carries an error"))?;
    identity(&mut r, "crossed-alpha-beta", "X^a(x)X^b=X+(x)X-1+#s^-1(X-1-,X-2)", &c.lbar_p, tuples(&[bg.n()]), false, |t| {
        let v = h.pm(&h.pm(&bg.e(t[0]), 0).apply(&[1], bg.delta()), 1);
        let v = v.apply(&[2, 3], cp.cocycle.lin_inv()).apply(&[1, 2], &cp.proj);
        (c.alpha_beta.image(t[0]), v)
    });
    Ok((c, r))
}

/// `X[+] X[-]₍₁₎^α ⊗ X[-]₍₁₎^β q γ'(X[-]₍₂₎)` in `L ⊗_B̄ P`, with `α β` taken
/// from `split` and `γ'` given separately.
pub(crate) fn bracket_formula<F: Field>(bg: &Bialgebroid<F>, a: &AntiLeftHopf<F>, split: &CleftExtension<F>, gamma: &Lin<F>, x: usize, q: &Tensor<F>) -> Vec<F> {
    let alg = &split.alg;
    let mut acc = vec![F::zero(); split.lbar_p.dim()];
    for (m, c) in nonzero(&a.table.image(x).apply(&[0], bg.delta())) {
        let t = bg.mul_legs(&bg.e(m[2]).outer(&split.split(&bg.e(m[0]), 0)), 0, 1);
        let w = alg.mul_legs(&q.outer(&bg.e(m[1]).apply(&[0], gamma)), 0, 1);
        axpy(&mut acc, &c, &split.lbar_p.project(&alg.mul_legs(&t.outer(&w), 1, 2)));
    }
    acc
}

/// `(σ, ▷)` of a cleft extension over its coinvariants:
/// `X ▷ n = X[+]X[-]₍₁₎^α ⊗ X[-]₍₁₎^β n γ(X[-]₍₂₎)` and
/// `σ(X, Y) = X[+]Y[+](Y[-]₍₁₎X[-]₍₁₎)^α ⊗ (Y[-]₍₁₎X[-]₍₁₎)^β γ(Y[-]₍₂₎)γ(X[-]₍₂₎)`,
/// each certified to be of the form `1 ⊗ m` with `m ∈ N` and validated.
pub fn extract_from_cleft<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>, a: &AntiLeftHopf<F>) -> Result<(Measuring<F>, RingCocycle<F>)> {
    let (n, dn) = (bg.n(), c.ring.dim());
    let mut act_cols = Vec::with_capacity(n * dn);
    for x in 0..n {
        for m in 0..dn {
            let v = bracket_formula(bg, a, c, &c.gamma, x, &c.n_elt(&c.ring.e(m)));
            act_cols.push(c.collapse(&v).ok_or(Error::MeasuringFails { law: "lands-in-N".into(), witness: vec![x, m] })?);
        }
    }
    let alg = &c.alg;
    let brackets: Vec<Vec<(Vec<usize>, F)>> = (0..n).map(|x| nonzero(&a.table.image(x).apply(&[0], bg.delta()))).collect();
    let mut sig_cols = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut acc = vec![F::zero(); c.lbar_p.dim()];
            for (mx, cx) in &brackets[x] {
                for (my, cy) in &brackets[y] {
                    let yx = bg.mul_legs(&bg.e(my[0]).outer(&bg.e(mx[0])), 0, 1);
                    let lead = bg.mul_legs(&bg.e(mx[2]).outer(&bg.e(my[2])), 0, 1);
                    let t = bg.mul_legs(&lead.outer(&c.split(&yx, 0)), 0, 1);
                    let w = alg.mul_legs(&bg.e(my[1]).apply(&[0], &c.gamma).outer(&bg.e(mx[1]).apply(&[0], &c.gamma)), 0, 1);
                    axpy(&mut acc, &cx.mul(cy), &c.lbar_p.project(&alg.mul_legs(&t.outer(&w), 1, 2)));
                }
            }
            sig_cols.push(c.collapse(&acc).ok_or(Error::CocycleLawFails { law: "lands-in-N".into(), witness: vec![x, y] })?);
        }
    }
    let action = Matrix::from_cols(dn, &act_cols);
    let sigma = Matrix::from_cols(dn, &sig_cols);
    match check_measuring_cocycle(bg, &c.ring, &action, &sigma) {
        (Some(pair), _) => Ok(pair),
        (None, (_, e)) => Err(e.expect("failed validation carries an error")),
    }
}

/// Extraction followed by its consequences: the ring identity for the
/// extracted pair, and equality of the product tables of `L#_σN` and `L#^γN`.
pub fn verify_extraction<F: Field>(bg: &Bialgebroid<F>, c: &CleftExtension<F>, h: &LeftHopf<F>, a: &AntiLeftHopf<F>) -> Report {
    let mut r = Report::new("crossed");
    let (meas, coc) = match extract_from_cleft(bg, c, a) {
        Ok(p) => p,
        Err(e) => {
            r.record_error("extract", "(s,|>)fromgamma", &e);
            return r;
        }
    };
    r.record("extract", "(s,|>)fromgamma", None);
    r.extend(cocycle_ring_identity(bg, &c.ring, &meas, &coc, h));
    let tables = crossed_product(bg, &c.ring, &meas, &coc, h).and_then(|cp| Ok((cp, gamma_crossed_product(bg, c)?)));
    match tables {
        Ok((cp, gp)) => {
            let w = (cp.algebra.structure() != gp.structure() || cp.algebra.unit() != gp.unit()).then(Vec::new);
            r.record("extract-products", "L#_sN=L#^gN", w);
        }
        Err(e) => r.record_error("extract-products", "L#_sN=L#^gN", &e),
    }
    r
}
