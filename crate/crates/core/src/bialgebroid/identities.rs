//! The λ- and μ-families of translation-map identities and the three mixed
//! identities, each compared in the space where it is stated.

use super::hopf::{AntiLeftHopf, LeftHopf, COTENSOR_B, DIAMOND, TENSOR_BBAR};
use super::Bialgebroid;
use crate::field::Field;
use crate::module::ActionKey;
use crate::report::{tuples, Report};
use crate::space::Space;
use crate::tensor::Tensor;

/// Compare `lhs` and `rhs` in `space` for every tuple; with `member`, both
/// sides must also lie in the cut.
pub(crate) fn identity<F: Field>(
    r: &mut Report,
    id: &str,
    label: &str,
    space: &Space<F>,
    cases: Vec<Vec<usize>>,
    member: bool,
    f: impl Fn(&[usize]) -> (Tensor<F>, Tensor<F>),
) {
    r.check_all(id, label, cases, |t| {
        let (lhs, rhs) = f(t);
        space.equal(&lhs, &rhs) && (!member || (space.contains(&lhs) && space.contains(&rhs)))
    });
}

fn space_or_fail<F: Field>(r: &mut Report, bg: &Bialgebroid<F>, id: &str, label: &str, expr: &str, legs: usize) -> Option<Space<F>> {
    match bg.space(expr, legs) {
        Ok(s) => Some(s),
        Err(e) => {
            r.record_error(id, label, &e);
            None
        }
    }
}

/// `s(a)t(a')·X·s(b)t(b')` on leg 0 of `x`.
fn sandwich<F: Field>(bg: &Bialgebroid<F>, x: &Tensor<F>, leg: usize, a: usize, a2: usize, b: usize, b2: usize) -> Tensor<F> {
    let y = bg.act(x, leg, &ActionKey::left_b(), a);
    let y = bg.act(&y, leg, &ActionKey::left_bbar(), a2);
    let y = bg.act(&y, leg, &ActionKey::right_b(), b);
    bg.act(&y, leg, &ActionKey::right_bbar(), b2)
}

pub fn verify_left_hopf_identities<F: Field>(bg: &Bialgebroid<F>, h: &LeftHopf<F>) -> Report {
    let mut r = Report::new("hopf");
    let (n, nb) = (bg.n(), bg.nb());
    let xs = || tuples(&[n]);
    let one = bg.one();
    let Some(tbb) = space_or_fail(&mut r, bg, "pm", "L(x)_Bbar L", TENSOR_BBAR, 2) else { return r };
    let Some(dia) = space_or_fail(&mut r, bg, "pm", "L<>L", DIAMOND, 2) else { return r };
    let pm = |x: usize| h.table.image(x);

    identity(&mut r, "pm-1", "X+1<>X+2X- = X<>1", &dia, xs(), false, |t| {
        let v = pm(t[0]).apply(&[0], bg.delta());
        (bg.mul_legs(&v, 1, 2), bg.e(t[0]).outer(&one))
    });
    identity(&mut r, "pm-2", "X1+ (x)Bbar X1-X2 = X (x)Bbar 1", &tbb, xs(), false, |t| {
        let v = h.pm(&bg.delta().image(t[0]), 0);
        (bg.mul_legs(&v, 1, 2), bg.e(t[0]).outer(&one))
    });
    identity(&mut r, "pm-3", "(XY)+ (x)Bbar (XY)- = X+Y+ (x)Bbar Y-X-", &tbb, tuples(&[n, n]), false, |t| {
        let xy = bg.mul_legs(&bg.e(t[0]).outer(&bg.e(t[1])), 0, 1);
        let lhs = h.pm(&xy, 0);
        let v = pm(t[0]).outer(&pm(t[1]));
        let v = bg.mul_legs(&v, 0, 2);
        (lhs, bg.mul_legs(&v, 2, 1))
    });
    identity(&mut r, "pm-4", "1+ (x)Bbar 1- = 1 (x)Bbar 1", &tbb, vec![vec![]], false, |_| (h.pm(&one, 0), one.outer(&one)));
    if let Some(sp) = space_or_fail(&mut r, bg, "pm-5", "L<>L(x)Bbar L", "int_{b,c} (b~)L * (b)L(c~) * (c~)L", 3) {
        identity(&mut r, "pm-5", "X+1<>X+2 (x)Bbar X- = X1<>X2+ (x)Bbar X2-", &sp, xs(), false, |t| {
            (pm(t[0]).apply(&[0], bg.delta()), h.pm(&bg.delta().image(t[0]), 1))
        });
    }
    if let Some(sp) = space_or_fail(&mut r, bg, "pm-6", "X+(x)X-1(x)X-2", "int^{a,b} int_{c,d} (a~)L(c~) * (d~)L(b~) * (c~,d)L(b,a~)", 3) {
        identity(&mut r, "pm-6", "X+ (x) X-1 (x) X-2 = X++ (x) X- (x) X+-", &sp, xs(), true, |t| {
            let lhs = pm(t[0]).apply(&[1], bg.delta());
            let rhs = h.pm(&pm(t[0]), 0).permute(&[0, 2, 1]);
            (lhs, rhs)
        });
    }
    let plain = Space::plain("L", &[n]);
    identity(&mut r, "pm-7", "X = X+ t(eps(X-))", &plain, xs(), false, |t| {
        let v = pm(t[0]).apply(&[1], bg.eps()).apply(&[1], bg.t());
        (bg.e(t[0]), bg.mul_legs(&v, 0, 1))
    });
    identity(&mut r, "pm-8", "X+X- = s(eps(X))", &plain, xs(), false, |t| {
        (bg.mul_legs(&pm(t[0]), 0, 1), bg.e(t[0]).apply(&[0], bg.eps()).apply(&[0], bg.s()))
    });
    identity(&mut r, "pm-9", "(s(a)t(a')Xs(b)t(b'))+- = s(a)X+s(b) (x)Bbar s(b')X-s(a')", &tbb, tuples(&[nb, nb, nb, nb, n]), false, |t| {
        let (a, a2, b, b2, x) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = h.pm(&sandwich(bg, &bg.e(x), 0, a, a2, b, b2), 0);
        let v = bg.act(&bg.act(&pm(x), 0, &ActionKey::left_b(), a), 0, &ActionKey::right_b(), b);
        let v = bg.act(&bg.act(&v, 1, &ActionKey::left_b(), b2), 1, &ActionKey::right_b(), a2);
        (lhs, v)
    });
    identity(&mut r, "pm-10", "t(b)X+ (x)Bbar X- = X+ (x)Bbar X-t(b)", &tbb, tuples(&[nb, n]), false, |t| {
        let v = pm(t[1]);
        (bg.act(&v, 0, &ActionKey::left_bbar(), t[0]), bg.act(&v, 1, &ActionKey::right_bbar(), t[0]))
    });
    r
}

pub fn verify_anti_left_identities<F: Field>(bg: &Bialgebroid<F>, h: &AntiLeftHopf<F>) -> Report {
    let mut r = Report::new("hopf");
    let (n, nb) = (bg.n(), bg.nb());
    let xs = || tuples(&[n]);
    let one = bg.one();
    let Some(cb) = space_or_fail(&mut r, bg, "bracket", "L(x)^B L", COTENSOR_B, 2) else { return r };
    let Some(dia) = space_or_fail(&mut r, bg, "bracket", "L<>L", DIAMOND, 2) else { return r };
    let bk = |x: usize| h.table.image(x);

    identity(&mut r, "bracket-1", "X[+]1X[-]<>X[+]2 = 1<>X", &dia, xs(), false, |t| {
        let v = bk(t[0]).apply(&[1], bg.delta());
        (bg.mul_legs(&v, 1, 0), one.outer(&bg.e(t[0])))
    });
    identity(&mut r, "bracket-2", "X2[-]X1 (x)^B X2[+] = 1 (x)^B X", &cb, xs(), false, |t| {
        let v = h.bracket(&bg.delta().image(t[0]), 1);
        (bg.mul_legs(&v, 1, 0), one.outer(&bg.e(t[0])))
    });
    identity(&mut r, "bracket-3", "(XY)[-] (x)^B (XY)[+] = Y[-]X[-] (x)^B X[+]Y[+]", &cb, tuples(&[n, n]), false, |t| {
        let xy = bg.mul_legs(&bg.e(t[0]).outer(&bg.e(t[1])), 0, 1);
        let lhs = h.bracket(&xy, 0);
        let v = bk(t[0]).outer(&bk(t[1]));
        let v = bg.mul_legs(&v, 2, 0);
        (lhs, bg.mul_legs(&v, 1, 2))
    });
    identity(&mut r, "bracket-4", "1[-] (x)^B 1[+] = 1 (x)^B 1", &cb, vec![vec![]], false, |_| (h.bracket(&one, 0), one.outer(&one)));
    if let Some(sp) = space_or_fail(&mut r, bg, "bracket-5", "L(x)^B L<>L", "int_{b,c} (b)L * (c~)L(b) * (c)L", 3) {
        identity(&mut r, "bracket-5", "X[-] (x)^B X[+]1<>X[+]2 = X1[-] (x)^B X1[+]<>X2", &sp, xs(), false, |t| {
            (bk(t[0]).apply(&[1], bg.delta()), h.bracket(&bg.delta().image(t[0]), 0))
        });
    }
    if let Some(sp) = space_or_fail(&mut r, bg, "bracket-6", "X[-]1(x)X[-]2(x)X[+]", "int^{a,b} int_{c,d} (c,d~)L(a,b~) * (d)L(b) * (a)L(c)", 3) {
        identity(&mut r, "bracket-6", "X[-]1 (x) X[-]2 (x) X[+] = X[+][-] (x) X[-] (x) X[+][+]", &sp, xs(), true, |t| {
            let lhs = bk(t[0]).apply(&[0], bg.delta());
            let rhs = h.bracket(&bk(t[0]), 1).permute(&[1, 0, 2]);
            (lhs, rhs)
        });
    }
    let plain = Space::plain("L", &[n]);
    identity(&mut r, "bracket-7", "X = X[+] s(eps(X[-]))", &plain, xs(), false, |t| {
        let v = bk(t[0]).apply(&[0], bg.eps()).apply(&[0], bg.s());
        (bg.e(t[0]), bg.mul_legs(&v, 1, 0))
    });
    identity(&mut r, "bracket-8", "X[+]X[-] = t(eps(X))", &plain, xs(), false, |t| {
        (bg.mul_legs(&bk(t[0]), 1, 0), bg.e(t[0]).apply(&[0], bg.eps()).apply(&[0], bg.t()))
    });
    identity(&mut r, "bracket-9", "(s(a)t(a')Xs(b)t(b'))[-+] = t(b)X[-]t(a) (x)^B t(a')X[+]t(b')", &cb, tuples(&[nb, nb, nb, nb, n]), false, |t| {
        let (a, a2, b, b2, x) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = h.bracket(&sandwich(bg, &bg.e(x), 0, a, a2, b, b2), 0);
        let v = bg.act(&bg.act(&bk(x), 0, &ActionKey::left_bbar(), b), 0, &ActionKey::right_bbar(), a);
        let v = bg.act(&bg.act(&v, 1, &ActionKey::left_bbar(), a2), 1, &ActionKey::right_bbar(), b2);
        (lhs, v)
    });
    identity(&mut r, "bracket-10", "X[-]s(b) (x)^B X[+] = X[-] (x)^B s(b)X[+]", &cb, tuples(&[nb, n]), false, |t| {
        let v = bk(t[1]);
        (bg.act(&v, 0, &ActionKey::right_b(), t[0]), bg.act(&v, 1, &ActionKey::left_b(), t[0]))
    });
    r
}

pub fn verify_mixed_identities<F: Field>(bg: &Bialgebroid<F>, h: &LeftHopf<F>, a: &AntiLeftHopf<F>) -> Report {
    let mut r = Report::new("hopf");
    let xs = || tuples(&[bg.n()]);
    if let Some(sp) = space_or_fail(&mut r, bg, "mixed-1", "L(x)_B L(x)_Bbar L", "int_{b,c} L(b) * (b)L(c~) * (c~)L", 3) {
        identity(&mut r, "mixed-1", "X[+] (x) X[-]+ (x) X[-]- = X2[+] (x) X2[-] (x) X1", &sp, xs(), false, |t| {
            let lhs = h.pm(&a.table.image(t[0]), 0).permute(&[2, 0, 1]);
            let rhs = a.bracket(&bg.delta().image(t[0]), 1).permute(&[2, 1, 0]);
            (lhs, rhs)
        });
    }
    if let Some(sp) = space_or_fail(&mut r, bg, "mixed-2", "L(x)_Bbar L(x)_B L", "int_{b,c} L(b~) * (b~)L(c) * (c)L", 3) {
        identity(&mut r, "mixed-2", "X+ (x) X-[+] (x) X-[-] = X1+ (x) X1- (x) X2", &sp, xs(), false, |t| {
            let lhs = a.bracket(&h.table.image(t[0]), 1).permute(&[0, 2, 1]);
            (lhs, h.pm(&bg.delta().image(t[0]), 0))
        });
    }
    if let Some(sp) = space_or_fail(&mut r, bg, "mixed-3", "X[+]+(x)X[-](x)X[+]-", "int^{c,d} int_{a,b} (c,d~)L(a~,b) * (b)L(c) * (a~)L(d~)", 3) {
        identity(&mut r, "mixed-3", "X[+]+ (x) X[-] (x) X[+]- = X+[+] (x) X+[-] (x) X-", &sp, xs(), true, |t| {
            let lhs = h.pm(&a.table.image(t[0]), 1).permute(&[1, 0, 2]);
            let rhs = a.bracket(&h.table.image(t[0]), 0).permute(&[1, 0, 2]);
            (lhs, rhs)
        });
    }
    r
}
