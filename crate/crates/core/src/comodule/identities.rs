//! Identities of the maps `p ↦ p₍[1]₎ ⊗ p₍[0]₎` and `p ↦ p₍[0]₎ ⊗ p₍[-1]₎`.

use super::{regular_from_left, skew_from_anti_left, LeftComodule, Regular, RightComodule, SkewRegular};
use crate::bialgebroid::{identity, AntiLeftHopf, Bialgebroid, LeftHopf};
use crate::field::Field;
use crate::module::ActionKey;
use crate::report::{tuples, Report};
use crate::space::Space;

pub(crate) fn build_or_fail<F: Field>(r: &mut Report, id: &str, label: &str, expr: &str, legs: &[&crate::module::MultiModule<F>]) -> Option<Space<F>> {
    match Space::build(expr, legs) {
        Ok(s) => Some(s),
        Err(e) => {
            r.record_error(id, label, &e);
            None
        }
    }
}

/// Skew regular catalog. The identities that need the translation maps of
/// `L` run only when those are supplied.
pub fn verify_skew_regular_identities<F: Field>(
    bg: &Bialgebroid<F>,
    g: &LeftComodule<F>,
    s: &SkewRegular<F>,
    hopf: Option<&LeftHopf<F>>,
    anti: Option<&AntiLeftHopf<F>>,
) -> Report {
    let mut r = Report::new("comodule");
    let (nb, d) = (bg.nb(), g.dim());
    let ps = || tuples(&[d]);
    let name = g.name();
    let (l, c) = (&bg.l, &g.carrier);
    let one = bg.one();

    identity(&mut r, "skew-1", "p[0](-1)p[1]<>p[0](0) = 1<>p", &g.diamond, ps(), false, |t| {
        let v = g.coact(&s.table.image(t[0]), 1);
        (bg.mul_legs(&v, 1, 0), one.outer(&g.e(t[0])))
    });
    identity(&mut r, "skew-2", "p(0)[1]p(-1) (x)^B p(0)[0] = 1 (x)^B p", &s.domain, ps(), false, |t| {
        let v = s.split(&g.coaction.image(t[0]), 1);
        (bg.mul_legs(&v, 1, 0), one.outer(&g.e(t[0])))
    });
    identity(&mut r, "skew-3", "(bpb')[1] (x)^B (bpb')[0] = t(b')p[1]t(b) (x)^B p[0]", &s.domain, tuples(&[nb, nb, d]), false, |t| {
        let (b, b2, p) = (t[0], t[1], t[2]);
        let x = g.act(&g.act(&g.e(p), 0, &ActionKey::left_b(), b), 0, &ActionKey::right_b(), b2);
        let v = s.table.image(p);
        let v = bg.act(&bg.act(&v, 0, &ActionKey::left_bbar(), b2), 0, &ActionKey::right_bbar(), b);
        (s.split(&x, 0), v)
    });
    identity(&mut r, "skew-4", "p[1]s(b) (x)^B p[0] = p[1] (x)^B bp[0]", &s.domain, tuples(&[nb, d]), false, |t| {
        let v = s.table.image(t[1]);
        (bg.act(&v, 0, &ActionKey::right_b(), t[0]), g.act(&v, 1, &ActionKey::left_b(), t[0]))
    });
    let label = "p[1]1 (x) p[1]2 (x) p[0] = p[0][1] (x) p[1] (x) p[0][0]";
    if let Some(sp) = build_or_fail(&mut r, "skew-5", label, &format!("int_{{a,b}} (a,b~)L * (b)L * {name}(a)"), &[l, l, c]) {
        identity(&mut r, "skew-5", label, &sp, ps(), false, |t| {
            let v = s.table.image(t[0]);
            (v.apply(&[0], bg.delta()), s.split(&v, 1).permute(&[1, 0, 2]))
        });
    }
    match s.right_comodule(bg, g) {
        Ok(_) => r.record("skew-6", "p->p[0]<>p[1]:right-comodule", None),
        Err(e) => r.record_error("skew-6", "p->p[0]<>p[1]:right-comodule", &e),
    }
    if let Some(a) = anti {
        let label = "p[1] (x)^B p[0](-1)<>p[0](0) = p(-1)[-] (x)^B p(-1)[+]<>p(0)";
        if let Some(sp) = build_or_fail(&mut r, "skew-7", label, &format!("int^{{a,d}} int_{{b,c}} (b)L(a) * (a,c~)L(b,d~) * (c){name}(d)"), &[l, l, c]) {
            identity(&mut r, "skew-7", label, &sp, ps(), true, |t| (g.coact(&s.table.image(t[0]), 1), a.bracket(&g.coaction.image(t[0]), 0)));
        }
        match skew_from_anti_left(bg, a, g, s) {
            Ok(closed) => r.check_all("skew-closed", "p[1](x)p[0]=p(-1)[-](x)eps(p(-1)[+])p(0)", ps(), |t| {
                s.domain.equal(&closed.image(t[0]), &s.table.image(t[0]))
            }),
            Err(e) => r.record_error("skew-closed", "p[1](x)p[0]=p(-1)[-](x)eps(p(-1)[+])p(0)", &e),
        }
    }
    if let Some(h) = hopf {
        let label = "p(-1) (x) p(0)[1] (x) p(0)[0] = p[1]- (x) p[1]+ (x) p[0]";
        if let Some(sp) = build_or_fail(&mut r, "skew-8", label, &format!("int^{{a,b}} int_{{c,d}} (c~)L(a~) * (a~,d)L(b,c~) * (b){name}(d)"), &[l, l, c]) {
            identity(&mut r, "skew-8", label, &sp, ps(), true, |t| {
                let lhs = s.split(&g.coaction.image(t[0]), 1);
                let rhs = h.pm(&s.table.image(t[0]), 0).permute(&[1, 0, 2]);
                (lhs, rhs)
            });
        }
    }
    r
}

/// Regular catalog for a right comodule.
pub fn verify_regular_identities<F: Field>(
    bg: &Bialgebroid<F>,
    g: &RightComodule<F>,
    s: &Regular<F>,
    hopf: Option<&LeftHopf<F>>,
    anti: Option<&AntiLeftHopf<F>>,
) -> Report {
    let mut r = Report::new("comodule");
    let (nb, d) = (bg.nb(), g.dim());
    let ps = || tuples(&[d]);
    let name = g.name();
    let (l, c) = (&bg.l, &g.carrier);
    let one = bg.one();

    identity(&mut r, "regular-1", "p[0](0)<>p[0](1)p[-1] = p<>1", &g.diamond, ps(), false, |t| {
        let v = g.coact(&s.table.image(t[0]), 0);
        (bg.mul_legs(&v, 1, 2), g.e(t[0]).outer(&one))
    });
    identity(&mut r, "regular-2", "p(0)[0] (x)Bbar p(0)[-1]p(1) = p (x)Bbar 1", &s.domain, ps(), false, |t| {
        let v = s.split(&g.coaction.image(t[0]), 0);
        (bg.mul_legs(&v, 1, 2), g.e(t[0]).outer(&one))
    });
    identity(&mut r, "regular-3", "(b'~pb~)[0] (x)Bbar (b'~pb~)[-1] = p[0] (x)Bbar s(b)p[-1]s(b')", &s.domain, tuples(&[nb, nb, d]), false, |t| {
        let (b2, b, p) = (t[0], t[1], t[2]);
        let x = g.act(&g.act(&g.e(p), 0, &ActionKey::left_bbar(), b2), 0, &ActionKey::right_bbar(), b);
        let v = s.table.image(p);
        let v = bg.act(&bg.act(&v, 1, &ActionKey::left_b(), b), 1, &ActionKey::right_b(), b2);
        (s.split(&x, 0), v)
    });
    identity(&mut r, "regular-4", "b~p[0] (x)Bbar p[-1] = p[0] (x)Bbar p[-1]t(b)", &s.domain, tuples(&[nb, d]), false, |t| {
        let v = s.table.image(t[1]);
        (g.act(&v, 0, &ActionKey::left_bbar(), t[0]), bg.act(&v, 1, &ActionKey::right_bbar(), t[0]))
    });
    let label = "p[0] (x) p[-1]1 (x) p[-1]2 = p[0][0] (x) p[-1] (x) p[0][-1]";
    if let Some(sp) = build_or_fail(&mut r, "regular-5", label, &format!("int_{{b,c}} {name}(b~) * (c~)L * (b~,c)L"), &[c, l, l]) {
        identity(&mut r, "regular-5", label, &sp, ps(), false, |t| {
            let v = s.table.image(t[0]);
            (v.apply(&[1], bg.delta()), s.split(&v, 0).permute(&[0, 2, 1]))
        });
    }
    match s.left_comodule(bg, g) {
        Ok(_) => r.record("regular-6", "p->p[-1]<>p[0]:left-comodule", None),
        Err(e) => r.record_error("regular-6", "p->p[-1]<>p[0]:left-comodule", &e),
    }
    if let Some(h) = hopf {
        let label = "p[0](0) (x) p[0](1) (x) p[-1] = p(0) (x) p(1)+ (x) p(1)-";
        if let Some(sp) = build_or_fail(&mut r, "regular-7", label, &format!("int_{{a,b}} (a~){name} * (a)L(b~) * (b~)L"), &[c, l, l]) {
            identity(&mut r, "regular-7", label, &sp, ps(), false, |t| (g.coact(&s.table.image(t[0]), 0), h.pm(&g.coaction.image(t[0]), 1)));
        }
        match regular_from_left(bg, h, g, s) {
            Ok(closed) => r.check_all("regular-closed", "p[0](x)p[-1]=eps(p(1)+)~p(0)(x)p(1)-", ps(), |t| {
                s.domain.equal(&closed.image(t[0]), &s.table.image(t[0]))
            }),
            Err(e) => r.record_error("regular-closed", "p[0](x)p[-1]=eps(p(1)+)~p(0)(x)p(1)-", &e),
        }
    }
    if let Some(a) = anti {
        let label = "p(0)[0] (x) p(0)[-1] (x) p(1) = p[0] (x) p[-1][+] (x) p[-1][-]";
        if let Some(sp) = build_or_fail(&mut r, "regular-8", label, &format!("int_{{a,b}} {name}(a~) * (a~)L(b) * (b)L"), &[c, l, l]) {
            identity(&mut r, "regular-8", label, &sp, ps(), false, |t| {
                let lhs = s.split(&g.coaction.image(t[0]), 0);
                let rhs = a.bracket(&s.table.image(t[0]), 1).permute(&[0, 2, 1]);
                (lhs, rhs)
            });
        }
    }
    r
}
