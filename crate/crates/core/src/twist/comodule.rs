use super::BaseCocycle;
use crate::algebra::Algebra;
use crate::bialgebroid::{galois_lambda, galois_mu, Bialgebroid};
use crate::comodule::{anti_right_galois, canonical_map, AntiRightGalois, GaloisExtension, LeftComodule, LeftComoduleAlgebra, RightComoduleAlgebra};
use crate::error::Result;
use crate::field::Field;
use crate::module::ActionKey;
use crate::report::{tuples, Report};
use crate::space::{descend_map, Space};
use crate::tensor::{Lin, Tensor};

/// A partial product of coaction legs: front and back factors in `L`, the
/// carrier indices chosen so far, and the coefficient.
type State<F> = (Vec<F>, Vec<F>, Vec<usize>, F);

fn product_algebra<F: Field>(name: String, d: usize, unit: &[F], mut f: impl FnMut(usize, usize) -> Tensor<F>) -> Result<Algebra<F>> {
    Algebra::from_products(name, d, |i, j| f(i, j).into_data(), unit.to_vec())
}

/// `ΓP`: `p · q = Γ(p₍₋₁₎, q₍₋₁₎) p₍₀₎ q₍₀₎`, a left `L^Γ`-comodule algebra
/// with the same coaction and the same `η`.
pub fn twist_comodule_algebra_left<F: Field>(tw: &Bialgebroid<F>, c: &BaseCocycle<F>, p: &LeftComoduleAlgebra<F>) -> Result<LeftComoduleAlgebra<F>> {
    let act = p.carrier().action_lin(&ActionKey::left_b())?;
    let mul = p.algebra.mul_lin();
    let co = p.comodule.coaction();
    let alg = product_algebra(format!("G{}", p.algebra.name()), p.dim(), p.algebra.unit(), |i, j| {
        let t = co.image(i).outer(&co.image(j)).apply(&[0, 2], c.gamma());
        p_mul_then_act(&t, &mul, &act)
    })?;
    LeftComoduleAlgebra::new(tw, alg, &p.eta.matrix, &p.comodule.coaction_matrix())
}

/// `[b, p, q] ↦ η(b) p q`.
fn p_mul_then_act<F: Field>(t: &Tensor<F>, mul: &Lin<F>, act: &Lin<F>) -> Tensor<F> {
    t.apply(&[1, 2], mul).apply(&[0, 1], act)
}

/// `P_Γ`: `p · q = η̄(Γ⁻¹(p₍₁₎, q₍₁₎)) p₍₀₎ q₍₀₎`, a right `L^Γ`-comodule
/// algebra with the same coaction and the same `η̄`.
pub fn twist_comodule_algebra_right<F: Field>(tw: &Bialgebroid<F>, c: &BaseCocycle<F>, p: &RightComoduleAlgebra<F>) -> Result<RightComoduleAlgebra<F>> {
    let act = p.carrier().action_lin(&ActionKey::left_bbar())?;
    let mul = p.algebra.mul_lin();
    let co = p.comodule.coaction();
    let alg = product_algebra(format!("{}G", p.algebra.name()), p.dim(), p.algebra.unit(), |i, j| {
        // [p0, x, q0, y] → [p0, b, q0] → [pq, b] → η̄(b)pq
        let t = co.image(i).outer(&co.image(j)).apply(&[1, 3], c.gamma_inv());
        t.apply(&[0, 2], &mul).apply(&[1, 0], &act)
    })?;
    RightComoduleAlgebra::new(tw, alg, &p.eta.matrix, &p.comodule.coaction_matrix())
}

/// The closed form `τ^Γ(X) = τ⁽¹⁾(X₍₁₎₊) ⊗_N Γ⁻¹(X₍₁₎₋, X₍₂₎) τ⁽²⁾(X₍₁₎₊)`
/// as a map `L → P ⊗ P` of representatives.
pub fn twisted_translation<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, gx: &GaloisExtension<F>) -> Result<Lin<F>> {
    let h = galois_lambda(bg)?;
    let act = gx.alg.carrier().action_lin(&ActionKey::left_b())?;
    let d = gx.alg.dim();
    Ok(Lin::from_fn(vec![bg.n()], vec![d, d], |x| {
        let t = h.pm(&bg.e(x).apply(&[0], bg.delta()), 0).apply(&[1, 2], c.gamma_inv());
        gx.split(&t, 0).apply(&[2, 1], &act).into_data()
    }))
}

/// The closed form `τ̂^Γ(X) = τ̂⁽¹⁾(X₍₂₎[+]) ⊗_M Γ(X₍₂₎[-], X₍₁₎)‾ τ̂⁽²⁾(X₍₂₎[+])`.
pub fn twisted_anti_translation<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, gx: &AntiRightGalois<F>) -> Result<Lin<F>> {
    let a = galois_mu(bg)?;
    let act = gx.alg.carrier().action_lin(&ActionKey::left_bbar())?;
    let d = gx.alg.dim();
    Ok(Lin::from_fn(vec![bg.n()], vec![d, d], |x| {
        let t = a.bracket(&bg.e(x).apply(&[0], bg.delta()), 1).apply(&[1, 0], c.gamma());
        gx.split(&t, 1).apply(&[0, 2], &act).permute(&[1, 0]).into_data()
    }))
}

/// Twist both regular extensions and compare the twisted translation maps
/// with the inverses of the twisted canonical maps.
pub fn verify_twisted_extensions<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, left: &LeftComoduleAlgebra<F>, right: &RightComoduleAlgebra<F>) -> Report {
    let mut r = Report::new("twist");
    let tw = match super::twist_bialgebroid(bg, c) {
        Ok(t) => t,
        Err(e) => {
            r.record_error("twisted-bialgebroid", "L^G:left-bialgebroid", &e);
            return r;
        }
    };
    let left_side = twist_comodule_algebra_left(&tw, c, left).and_then(|gp| {
        let gx = canonical_map(&tw, &gp)?;
        let closed = twisted_translation(bg, c, &canonical_map(bg, left)?)?;
        Ok((gp, gx, closed))
    });
    match left_side {
        Ok((gp, gx, closed)) => {
            r.record("left-twist-algebra", "GP:L^G-comodule-algebra", None);
            // ΓP has the same coinvariants as P
            r.record("left-twist-coinvariants", "coL^G(GP)=coL(P)", (gp.coinvariants != left.coinvariants).then(Vec::new));
            r.record("left-twist-galois", "N<GP:L^G-Galois", None);
            let w = (0..bg.n()).find(|&x| !gx.domain.equal(&closed.image(x), &gx.tau.image(x))).map(|x| vec![x]);
            r.record("left-twist-translation", "tau^G(X)=tau(X1+)G^-1(X1-,X2)tau(X1+)", w);
        }
        Err(e) => r.record_error("left-twist-galois", "N<GP:L^G-Galois", &e),
    }
    let right_side = twist_comodule_algebra_right(&tw, c, right).and_then(|pg| {
        let gx = anti_right_galois(&tw, &pg)?;
        let closed = twisted_anti_translation(bg, c, &anti_right_galois(bg, right)?)?;
        Ok((pg, gx, closed))
    });
    match right_side {
        Ok((pg, gx, closed)) => {
            r.record("right-twist-algebra", "PG:L^G-comodule-algebra", None);
            r.record("right-twist-coinvariants", "coL^G(PG)=coL(P)", (pg.coinvariants != right.coinvariants).then(Vec::new));
            r.record("right-twist-galois", "M<PG:anti-right-L^G-Galois", None);
            let w = (0..bg.n()).find(|&x| !gx.domain.equal(&closed.image(x), &gx.tau.image(x))).map(|x| vec![x]);
            r.record("right-twist-translation", "tau^G(X)=tau(X2[+])G(X2[-],X1)~tau(X2[+])", w);
        }
        Err(e) => r.record_error("right-twist-galois", "M<PG:anti-right-L^G-Galois", &e),
    }
    r
}

/// `ξ` on a tensor of comodule legs: coact every leg, multiply the `L` legs
/// of `0..split` and of `split..`, pair them with `Γ` and act on leg 0.
/// Evaluated entry by entry over the nonzero terms of each coaction, so the
/// intermediate `L`-legs are never materialized as one dense tensor.
fn xi<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, t: &Tensor<F>, legs: &[&LeftComodule<F>], split: usize) -> Result<Tensor<F>> {
    let dims = t.dims().to_vec();
    let (n, l) = (bg.n(), bg.total());
    let act = legs[0].carrier.action_lin(&ActionKey::left_b())?;
    let terms: Vec<Vec<Vec<(usize, usize, F)>>> = legs
        .iter()
        .map(|m| {
            (0..m.dim())
                .map(|p| {
                    let img = m.coaction().image(p);
                    let d = m.dim();
                    img.data().iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k / d, k % d, v.clone())).collect()
                })
                .collect()
        })
        .collect();
    let mut out = vec![F::zero(); t.data().len()];
    for (i, v) in t.data().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let multi = crate::tensor::unflatten(&dims, i);
        // partial products: (front, back, p indices, coefficient)
        let mut states: Vec<State<F>> = vec![(l.unit().to_vec(), l.unit().to_vec(), Vec::new(), v.clone())];
        for (j, &p) in multi.iter().enumerate() {
            let mut next = Vec::new();
            for (front, back, ps, coef) in &states {
                for (x, q, a) in &terms[j][p] {
                    let ex = l.basis(*x);
                    let (f, b) = if j < split { (l.mul(front, &ex), back.clone()) } else { (front.clone(), l.mul(back, &ex)) };
                    let mut ps = ps.clone();
                    ps.push(*q);
                    next.push((f, b, ps, coef.mul(a)));
                }
            }
            states = next;
        }
        for (front, back, ps, coef) in states {
            let mut g = vec![F::zero(); bg.nb()];
            for (x, fx) in front.iter().enumerate().filter(|(_, f)| !f.is_zero()) {
                for (y, by) in back.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    let w = fx.mul(by);
                    for (b, gb) in g.iter_mut().enumerate() {
                        gb.add_mul(&w, &c.form[(b, x * n + y)]);
                    }
                }
            }
            let d0 = dims[0];
            let rest = crate::tensor::flatten(&dims[1..], &ps[1..]);
            let stride = out.len() / d0;
            for (b, gb) in g.iter().enumerate().filter(|(_, g)| !g.is_zero()) {
                let img = act.image(b * d0 + ps[0]);
                for (p0, a) in img.data().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    out[p0 * stride + rest].add_mul(&coef.mul(gb), a);
                }
            }
        }
    }
    Ok(Tensor::from_vec(&dims, out))
}

fn relabelled<F: Field>(m: &LeftComodule<F>, name: &str, bg: &Bialgebroid<F>) -> Result<LeftComodule<F>> {
    let keys: Vec<(ActionKey, ActionKey)> = [ActionKey::left_b(), ActionKey::right_b(), ActionKey::left_bbar(), ActionKey::right_bbar()]
        .into_iter()
        .filter(|k| m.carrier.has(k))
        .map(|k| (k.clone(), k))
        .collect();
    LeftComodule::new(bg, m.carrier.relabel(name, &keys)?, &m.coaction_matrix())
}

/// `ξ_{V,W}` is a well defined bijection of `V ⊗_B W`, and the two ways of
/// composing it on `U ⊗_B V ⊗_B W` agree, for every triple drawn from
/// `comodules`.
pub fn verify_monoidal_coherence<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, comodules: &[LeftComodule<F>]) -> Report {
    let mut r = Report::new("twist");
    let k = comodules.len();
    for t in tuples(&[k, k]) {
        let id = format!("xi-{}-{}", t[0], t[1]);
        let res = (|| -> Result<Option<Vec<usize>>> {
            let v = relabelled(&comodules[t[0]], "V", bg)?;
            let w = relabelled(&comodules[t[1]], "W", bg)?;
            let s = Space::build("int_b V(b) * (b)W", &[&v.carrier, &w.carrier])?;
            let m = descend_map(&s, &s, "xi", |x| xi(bg, c, x, &[&v, &w], 1).expect("carriers have left B actions"))?;
            Ok((m.rank() < s.dim()).then(|| vec![m.rank(), s.dim()]))
        })();
        r.record_result(&id, "xi:V(x)W->V(x)W bijective", res);
    }
    for t in tuples(&[k, k, k]) {
        let id = format!("coherence-{}-{}-{}", t[0], t[1], t[2]);
        let res = (|| -> Result<Option<Vec<usize>>> {
            let u = relabelled(&comodules[t[0]], "U", bg)?;
            let v = relabelled(&comodules[t[1]], "V", bg)?;
            let w = relabelled(&comodules[t[2]], "W", bg)?;
            let legs = [&u, &v, &w];
            let s = Space::build("int_{a,b} U(a) * (a)V(b) * (b)W", &[&u.carrier, &v.carrier, &w.carrier])?;
            for idx in 0..s.raw_dim() {
                let x = s.raw_basis(idx);
                // ξ_{U⊗V,W} ∘ (ξ_{U,V} ⊗ id)
                let lhs = xi(bg, c, &xi_front(bg, c, &x, &[&u, &v])?, &legs, 2)?;
                // ξ_{U,V⊗W} ∘ (id ⊗ ξ_{V,W})
                let rhs = xi(bg, c, &xi_back(bg, c, &x, &[&v, &w])?, &legs, 1)?;
                if !s.equal(&lhs, &rhs) {
                    return Ok(Some(crate::tensor::unflatten(x.dims(), idx)));
                }
            }
            Ok(None)
        })();
        r.record_result(&id, "xi(UV,W)(xi(U,V)x1)=xi(U,VW)(1xxi(V,W))", res);
    }
    r
}

/// `ξ_{U,V} ⊗ id` on a three-leg tensor.
fn xi_front<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, x: &Tensor<F>, legs: &[&LeftComodule<F>; 2]) -> Result<Tensor<F>> {
    let dims = x.dims().to_vec();
    let mut out = Tensor::zeros(&dims);
    for (i, v) in x.data().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let m = crate::tensor::unflatten(&dims, i);
        let uv = xi(bg, c, &Tensor::basis(&dims[..2], &m[..2]), legs, 1)?;
        out = out.add(&uv.outer(&Tensor::e(dims[2], m[2])).scale(v));
    }
    Ok(out)
}

/// `id ⊗ ξ_{V,W}` on a three-leg tensor.
fn xi_back<F: Field>(bg: &Bialgebroid<F>, c: &BaseCocycle<F>, x: &Tensor<F>, legs: &[&LeftComodule<F>; 2]) -> Result<Tensor<F>> {
    let dims = x.dims().to_vec();
    let mut out = Tensor::zeros(&dims);
    for (i, v) in x.data().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let m = crate::tensor::unflatten(&dims, i);
        let vw = xi(bg, c, &Tensor::basis(&dims[1..], &m[1..]), legs, 1)?;
        out = out.add(&Tensor::e(dims[0], m[0]).outer(&vw).scale(v));
    }
    Ok(out)
}
