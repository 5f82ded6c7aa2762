use hgx_core::builders::*;
use hgx_core::comodule::{left_regular, right_regular};
use hgx_core::twist::*;
use hgx_core::{Bialgebroid, Field, Report, Tensor, Q};

fn corpus() -> Vec<Bialgebroid<Q>> {
    vec![
        group_bialgebroid("QZ2", &cyclic_table(2)).unwrap(),
        group_bialgebroid("QZ3", &cyclic_table(3)).unwrap(),
        group_bialgebroid("QZ2xZ2", &klein_table()).unwrap(),
        enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap(),
        enveloping_bialgebroid(&upper_triangular2::<Q>()).unwrap(),
    ]
}

fn assert_pass(r: &Report, what: &str) {
    assert!(r.pass(), "{what}\n{}", r.lines());
    assert!(!r.checks.is_empty(), "{what}: empty report");
}

fn klein() -> (Bialgebroid<Q>, BaseCocycle<Q>) {
    let bg = group_bialgebroid::<Q>("QZ2xZ2", &klein_table()).unwrap();
    let c = BaseCocycle::new(&bg, klein_cocycle()).unwrap();
    (bg, c)
}

fn regular_comodules(bg: &Bialgebroid<Q>) -> Vec<hgx_core::comodule::LeftComodule<Q>> {
    vec![left_regular(bg).unwrap().comodule]
}

#[test]
fn trivial_cocycle_changes_nothing() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let c = BaseCocycle::new(&bg, trivial_cocycle(&bg)).unwrap();
        assert!(c.normalized);
        assert_eq!(c.inverse_form, c.form, "{name}");
        let tw = twist_bialgebroid(&bg, &c).unwrap();
        assert_eq!(tw.total().structure(), bg.total().structure(), "{name}");
        assert_eq!(tw.delta_matrix(), bg.delta_matrix());
        assert_pass(&verify_cocycle_pair_identities(&bg, &c), &name);
        assert_pass(&verify_twist(&bg, &c), &name);
        assert_pass(&verify_twisted_extensions(&bg, &c, &left_regular(&bg).unwrap(), &right_regular(&bg).unwrap()), &name);
    }
}

#[test]
fn trivial_cocycle_is_coherent() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let c = BaseCocycle::new(&bg, trivial_cocycle(&bg)).unwrap();
        assert_pass(&verify_monoidal_coherence(&bg, &c, &regular_comodules(&bg)), &name);
    }
}

#[test]
fn klein_cocycle_is_its_own_inverse() {
    let (_, c) = klein();
    // a ±1-valued bicharacter: the convolution inverse is the pointwise inverse
    assert_eq!(c.inverse_form, c.form);
    assert!(c.normalized);
}

#[test]
fn klein_cocycle_passes_every_suite() {
    let (bg, c) = klein();
    assert_pass(&verify_cocycle_pair_identities(&bg, &c), "pair");
    assert_pass(&verify_twist(&bg, &c), "twist");
    assert_pass(&verify_twisted_extensions(&bg, &c, &left_regular(&bg).unwrap(), &right_regular(&bg).unwrap()), "extensions");
}

#[test]
fn klein_twist_of_a_cocommutative_algebra_is_trivial() {
    // s(Γ(g, h)) t(Γ⁻¹(g, h)) gh = gh for group-like g, h
    let (bg, c) = klein();
    let tw = twist_bialgebroid(&bg, &c).unwrap();
    assert_eq!(tw.total().structure(), bg.total().structure());
}

#[test]
fn klein_one_sided_twist_anticommutes() {
    let (bg, c) = klein();
    let tw = twist_bialgebroid(&bg, &c).unwrap();
    let gp = twist_comodule_algebra_left(&tw, &c, &left_regular(&bg).unwrap()).unwrap();
    let (g, h) = (gp.algebra.basis(1), gp.algebra.basis(2));
    let gh = gp.algebra.mul(&g, &h);
    let hg = gp.algebra.mul(&h, &g);
    assert_eq!(gh, gp.algebra.basis(3));
    assert_eq!(hg, gh.iter().map(Field::neg).collect::<Vec<_>>());
    assert_eq!(gp.coinvariants.dim(), 1);
    let pg = twist_comodule_algebra_right(&tw, &c, &right_regular(&bg).unwrap()).unwrap();
    assert_eq!(pg.algebra.mul(&h, &g), pg.algebra.basis(3).iter().map(Field::neg).collect::<Vec<_>>());
}

#[test]
fn klein_cocycle_is_coherent_on_group_likes() {
    let (bg, c) = klein();
    let mut comodules = regular_comodules(&bg);
    comodules.extend((0..4).map(|g| group_like_comodule(&bg, g).unwrap()));
    let r = verify_monoidal_coherence(&bg, &c, &comodules);
    assert_pass(&r, "coherence");
    assert_eq!(r.checks.len(), 25 + 125);
}

#[test]
fn closed_forms_match_canonical_inverses_for_klein() {
    let (bg, c) = klein();
    let r = verify_twisted_extensions(&bg, &c, &left_regular(&bg).unwrap(), &right_regular(&bg).unwrap());
    for id in ["left-twist-translation", "right-twist-translation"] {
        assert!(r.get(id).unwrap().pass, "{}", r.lines());
    }
}

#[test]
fn untwisting_returns_the_original() {
    let (bg, c) = klein();
    let tw = twist_bialgebroid(&bg, &c).unwrap();
    let back = twist_bialgebroid(&tw, &BaseCocycle::new(&tw, c.inverse_form.clone()).unwrap()).unwrap();
    assert_eq!(back.total().structure(), bg.total().structure());
}

#[test]
fn non_cocycle_is_rejected_with_witness() {
    // normalised on Z3 with Γ(g, g) = 2: fails at (g, g, g²)
    let bg = group_bialgebroid::<Q>("QZ3", &cyclic_table(3)).unwrap();
    let form = group_cocycle(3, |x, y| if x == 1 && y == 1 { Q::from_i64(2) } else { Q::one() });
    let (c, (report, err)) = BaseCocycle::check(&bg, form);
    assert!(c.is_none());
    let err = err.unwrap();
    assert_eq!(err.class(), "CocycleLawFails");
    let check = report.get("cocycle").unwrap();
    assert!(!check.pass);
    let w = &check.witness;
    let lhs = |x: usize, y: usize| if x == 1 && y == 1 { 2 } else { 1 };
    assert_ne!(lhs(w[1], w[2]) * lhs(w[0], (w[1] + w[2]) % 3), lhs(w[0], w[1]) * lhs((w[0] + w[1]) % 3, w[2]));
}

#[test]
fn unnormalised_form_is_rejected() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let form = group_cocycle(2, |x, y| if x == 0 && y == 0 { Q::from_i64(2) } else { Q::one() });
    assert_eq!(BaseCocycle::new(&bg, form).unwrap_err().class(), "NotNormalized");
}

#[test]
fn degenerate_form_is_not_invertible() {
    // Γ(h, h) = 0 is normalised and a cocycle on Z2 but has no convolution inverse
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let form = group_cocycle(2, |x, y| if x == 1 && y == 1 { Q::zero() } else { Q::one() });
    assert_eq!(BaseCocycle::new(&bg, form).unwrap_err().class(), "NotConvolutionInvertible");
}

#[test]
fn perturbed_inverse_breaks_the_pair_identities() {
    let (bg, c) = klein();
    let mut bad = c.inverse_form.clone();
    bad[(0, 6)] = Q::from_i64(3);
    let r = verify_cocycle_pair_identities(&bg, &c.with_inverse(bad));
    assert!(!r.pass());
}

#[test]
fn trivial_cocycle_is_counit_of_product() {
    for bg in corpus() {
        let c = BaseCocycle::new(&bg, trivial_cocycle(&bg)).unwrap();
        for x in 0..bg.n() {
            for y in 0..bg.n() {
                let t = Tensor::<Q>::basis(&[bg.n(), bg.n()], &[x, y]);
                assert_eq!(t.apply(&[0, 1], c.gamma()), t.apply(&[0, 1], bg.mul()).apply(&[0], bg.eps()));
            }
        }
    }
}

#[test]
fn klein_sign_is_a_group_cocycle_by_brute_force() {
    // independent oracle: integer signs over all 4³ triples, product is XOR
    let sign = |x: usize, y: usize| if (x >> 1) & y & 1 == 1 { -1i64 } else { 1 };
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                assert_eq!(sign(x, y) * sign(x ^ y, z), sign(y, z) * sign(x, y ^ z));
            }
        }
    }
    let form = klein_cocycle::<Q>();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(form[(0, x * 4 + y)], Q::from_i64(sign(x, y)));
        }
    }
}
