use hgx_core::builders::*;
use hgx_core::double::*;
use hgx_core::{Bialgebroid, Field, Report, Tensor, Q};

fn z2() -> Bialgebroid<Q> {
    group_bialgebroid("QZ2", &cyclic_table(2)).unwrap()
}

fn sign_pairing() -> hgx_core::Matrix<Q> {
    group_pairing(2, 2, |x, a| if x == 1 && a == 1 { Q::from_i64(-1) } else { Q::one() })
}

fn assert_pass(r: &Report, what: &str) {
    assert!(r.pass(), "{what}\n{}", r.lines());
    assert!(!r.checks.is_empty(), "{what}: empty report");
}

#[test]
fn sign_pairing_is_a_bicharacter_by_brute_force() {
    // independent oracle: on group-likes the axioms reduce to bimultiplicativity
    let s = |x: usize, a: usize| if x == 1 && a == 1 { -1i64 } else { 1 };
    for x in 0..2 {
        for y in 0..2 {
            for a in 0..2 {
                assert_eq!(s(x, a) * s(y, a), s((x + y) % 2, a));
                assert_eq!(s(a, x) * s(a, y), s(a, (x + y) % 2));
            }
        }
    }
    let bg = z2();
    let p = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    for x in 0..2 {
        assert_eq!(p.value(&bg.e(x), &bg.one()), bg.e(x).apply(&[0], bg.eps()));
    }
}

#[test]
fn trivial_pairings_are_valid_over_commutative_bases() {
    for bg in [
        z2(),
        group_bialgebroid("QZ3", &cyclic_table(3)).unwrap(),
        enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap(),
    ] {
        let name = bg.total().name().to_string();
        let (_, (report, err)) = SkewPairing::check(&bg, &bg, trivial_pairing(&bg, &bg));
        assert!(err.is_none(), "{name}\n{}", report.lines());
    }
}

#[test]
fn trivial_pairing_needs_a_commutative_base() {
    // the bimodule law at X = 1 forces τ[t(k) | s(g)t(h)] = g k h, while the
    // counit form gives ε(t(k) s(gh)) = g h k
    let bg = enveloping_bialgebroid(&upper_triangular2::<Q>()).unwrap();
    let (p, (report, err)) = SkewPairing::check(&bg, &bg, trivial_pairing(&bg, &bg));
    assert!(p.is_none());
    assert_eq!(err.unwrap().class(), "AxiomFails");
    assert!(!report.get("bimodule").unwrap().pass);
    let b = bg.base();
    let (g, k, h) = (b.basis(0), b.basis(1), b.basis(2));
    let ghk = b.mul(&b.mul(&g, &h), &k);
    let gkh = b.mul(&b.mul(&g, &k), &h);
    assert_ne!(ghk, gkh);
}

#[test]
fn broken_pairings_are_rejected() {
    let bg = z2();
    let unnormalised = group_pairing(2, 2, |x, a| if x == 0 && a == 1 { Q::from_i64(2) } else { Q::one() });
    let e = SkewPairing::new(&bg, &bg, unnormalised).unwrap_err();
    assert_eq!(e.class(), "AxiomFails");
    // τ[g|g] = 2 is normalised but not multiplicative
    let (_, (report, err)) = SkewPairing::check(&bg, &bg, group_pairing(2, 2, |x, a| if x == 1 && a == 1 { Q::from_i64(2) } else { Q::one() }));
    assert_eq!(err.unwrap().class(), "AxiomFails");
    assert!(!report.get("comultiplicative-pi").unwrap().pass);
    assert!(report.get("unit-pi").unwrap().pass);
}

#[test]
fn group_double_products_match_the_closed_formula() {
    // on group-likes (α⋈X)(β⋈Y) = τ[X|β] κ[X|β⁻¹] αβ ⋈ XY
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    assert_eq!(sp.dim(), 4);
    let s = |x: usize, a: usize| if x == 1 && a == 1 { -1i64 } else { 1 };
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    for (t, k, ts, ks) in [(&tau, &triv, true, false), (&triv, &tau, false, true), (&tau, &tau, true, true), (&triv, &triv, false, false)] {
        let ring = double_ring(&sp, t, k).unwrap();
        let cls = |a: usize, x: usize| sp.project(&Tensor::basis(&[2, 2], &[a, x]));
        for (a, x, b, y) in (0..16).map(|i| (i >> 3, (i >> 2) & 1, (i >> 1) & 1, i & 1)) {
            let lhs = ring.algebra.mul(cls(a, x).data(), cls(b, y).data());
            let c = (if ts { s(x, b) } else { 1 }) * (if ks { s(x, b) } else { 1 });
            let rhs = cls((a + b) % 2, (x + y) % 2).scale(&Q::from_i64(c));
            assert_eq!(lhs, rhs.into_data(), "({a},{x})({b},{y})");
        }
    }
}

#[test]
fn sign_double_is_a_hopf_algebroid() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let d = double_bialgebroid(&sp, &tau).unwrap();
    assert_eq!(d.bg.n(), 4);
    assert_pass(&verify_double(&d), "sign double");
}

#[test]
fn trivial_double_is_the_tensor_product() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    let d = double_bialgebroid(&sp, &triv).unwrap();
    assert!(d.bg.total().is_commutative());
    assert_pass(&verify_double(&d), "trivial double");
}

#[test]
fn enveloping_trivial_double_passes() {
    let bg = enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    let d = double_bialgebroid(&sp, &triv).unwrap();
    assert_pass(&verify_double(&d), "enveloping double");
    assert_pass(&verify_cotwist(&sp, &triv, &triv), "enveloping cotwist");
}

#[test]
fn mixed_comultiplication_is_multiplicative() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    for (a, b, c) in [(&triv, &triv, &triv), (&tau, &triv, &tau), (&tau, &tau, &triv), (&triv, &tau, &tau)] {
        assert_pass(&mixed_comultiplication_check(&sp, a, b, c), "mixed");
    }
}

#[test]
fn corrupted_product_breaks_comultiplication() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    let tk = double_ring(&sp, &tau, &triv).unwrap();
    let good = double_ring(&sp, &tau, &tau).unwrap();
    assert_eq!(comultiplication_failure(&tk, &good.algebra, &tk.algebra).unwrap(), None);
    // negate the product of the last basis element with itself
    let mut c = tk.algebra.structure();
    let last = c.len() - 1;
    for v in c[last][last].iter_mut() {
        *v = v.neg();
    }
    let bad = hgx_core::Algebra::unchecked("bad", &c, tk.algebra.unit().to_vec()).unwrap();
    assert_eq!(comultiplication_failure(&tk, &good.algebra, &bad).unwrap(), Some(vec![last, last]));
}

#[test]
fn cotwist_of_sign_double() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let triv = SkewPairing::new(&bg, &bg, trivial_pairing(&bg, &bg)).unwrap();
    let r = verify_cotwist(&sp, &tau, &triv);
    assert_pass(&r, "cotwist");
    let pc = cocycle_from_pairings(&sp, &tau, &triv).unwrap();
    // Γ(α⋈X, β⋈Y) = τ[X|β] on group-likes: nontrivial
    assert!(pc.cocycle.form.data().iter().any(|x| *x == Q::from_i64(-1)));
    assert!(!pc.tk.algebra.is_commutative());
}

#[test]
fn equal_pairings_give_the_trivial_cocycle() {
    let bg = z2();
    let sp = DoubleSpace::new(&bg, &bg).unwrap();
    let tau = SkewPairing::new(&bg, &bg, sign_pairing()).unwrap();
    let pc = cocycle_from_pairings(&sp, &tau, &tau).unwrap();
    assert_eq!(pc.cocycle.form, hgx_core::twist::trivial_cocycle(&pc.kk.bg));
    assert_pass(&verify_cotwist(&sp, &tau, &tau), "tau tau");
}
