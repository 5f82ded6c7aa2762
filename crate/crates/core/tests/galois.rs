use hgx_core::bialgebroid::{galois_lambda, galois_mu};
use hgx_core::builders::*;
use hgx_core::comodule::*;
use hgx_core::{Bialgebroid, Field, Subspace, Tensor, Q};

fn corpus() -> Vec<Bialgebroid<Q>> {
    vec![
        group_bialgebroid("QZ2", &cyclic_table(2)).unwrap(),
        group_bialgebroid("QZ3", &cyclic_table(3)).unwrap(),
        group_bialgebroid("QZ2xZ2", &klein_table()).unwrap(),
        enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap(),
        enveloping_bialgebroid(&upper_triangular2::<Q>()).unwrap(),
    ]
}

fn image_of(m: &hgx_core::Matrix<Q>) -> Subspace<Q> {
    let cols: Vec<Vec<Q>> = (0..m.cols()).map(|j| m.col(j)).collect();
    Subspace::spanned_by(m.rows(), cols.iter().map(|c| c.as_slice()))
}

fn assert_pass(r: &hgx_core::Report, what: &str) {
    assert!(r.pass(), "{what}\n{}", r.lines());
    assert!(!r.checks.is_empty(), "{what}: empty report");
}

#[test]
fn regular_extensions_have_expected_coinvariants() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let left = left_regular(&bg).unwrap();
        assert_eq!(left.coinvariants, image_of(&bg.target().matrix), "{name}");
        assert_eq!(left.coinvariants.dim(), bg.nb(), "{name}");
        let right = right_regular(&bg).unwrap();
        assert_eq!(right.coinvariants, image_of(&bg.source().matrix), "{name}");
    }
}

#[test]
fn canonical_maps_of_regular_extensions_are_bijective() {
    for bg in corpus() {
        let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
        assert!(gx.can.mul(&gx.can_inv).is_identity() && gx.can_inv.mul(&gx.can).is_identity());
        let agx = anti_right_galois(&bg, &right_regular(&bg).unwrap()).unwrap();
        assert!(agx.can.mul(&agx.can_inv).is_identity() && agx.can_inv.mul(&agx.can).is_identity());
    }
}

#[test]
fn catalogs_hold_on_regular_extensions() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
        let s = skew_regular(&bg, &gx.alg.comodule).unwrap();
        assert_pass(&verify_skew_regular_identities(&bg, &gx.alg.comodule, &s, Some(&h), Some(&a)), &name);
        assert_pass(&verify_translation_identities(&bg, &gx, &h), &name);
        assert_pass(&verify_skew_translation_identities(&bg, &gx, &s, &a), &name);

        let agx = anti_right_galois(&bg, &right_regular(&bg).unwrap()).unwrap();
        let r = regular(&bg, &agx.alg.comodule).unwrap();
        assert_pass(&verify_regular_identities(&bg, &agx.alg.comodule, &r, Some(&h), Some(&a)), &name);
        assert_pass(&verify_anti_translation_identities(&bg, &agx, &a), &name);
        assert_pass(&verify_regular_anti_identities(&bg, &agx, &r, &h), &name);
    }
}

#[test]
fn translation_maps_are_recovered_from_extensions() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
        let s = skew_regular(&bg, &gx.alg.comodule).unwrap();
        let agx = anti_right_galois(&bg, &right_regular(&bg).unwrap()).unwrap();
        let r = regular(&bg, &agx.alg.comodule).unwrap();

        let pm1 = hopf_from_galois(&bg, &gx).unwrap();
        let pm2 = hopf_from_regular_anti_galois(&bg, &agx, &r).unwrap();
        let br1 = anti_hopf_from_skew_galois(&bg, &gx, &s).unwrap();
        let br2 = anti_hopf_from_anti_galois(&bg, &agx).unwrap();
        for x in 0..bg.n() {
            assert!(h.domain.equal(&pm1.image(x), &h.table.image(x)), "{name} pm from can, X={x}");
            assert!(h.domain.equal(&pm2.image(x), &h.table.image(x)), "{name} pm from regular, X={x}");
            assert!(a.domain.equal(&br1.image(x), &a.table.image(x)), "{name} bracket from skew, X={x}");
            assert!(a.domain.equal(&br2.image(x), &a.table.image(x)), "{name} bracket from anti, X={x}");
        }
    }
}

#[test]
fn group_skew_table_uses_the_inverse() {
    // for a group algebra P = L, g ↦ g⁻¹ ⊗ g under p ↦ p₍[1]₎ ⊗ p₍[0]₎
    let table = cyclic_table(3);
    let bg = group_bialgebroid::<Q>("QZ3", &table).unwrap();
    let alg = left_regular(&bg).unwrap();
    let s = skew_regular(&bg, &alg.comodule).unwrap();
    for (g, row) in table.iter().enumerate() {
        let gi = row.iter().position(|&z| z == 0).unwrap();
        assert!(s.domain.equal(&s.table.image(g), &Tensor::basis(&[3, 3], &[gi, g])));
    }
}

#[test]
fn structure_theorems_hold() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
        let r = verify_structure_theorem(&bg, &gx);
        assert_pass(&r, &name);
        assert!(r.checks.len() >= 12, "{name}: {}", r.checks.len());
        let agx = anti_right_galois(&bg, &right_regular(&bg).unwrap()).unwrap();
        let r = verify_anti_structure_theorem(&bg, &agx);
        assert_pass(&r, &name);
        assert!(r.checks.len() >= 12, "{name}: {}", r.checks.len());
    }
}

#[test]
fn opposites_exchange_the_sides() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
        let s = skew_regular(&bg, &gx.alg.comodule).unwrap();
        assert_pass(&verify_opposite(&bg, &gx, &s), &name);
        let agx = anti_right_galois(&bg, &right_regular(&bg).unwrap()).unwrap();
        let r = regular(&bg, &agx.alg.comodule).unwrap();
        assert_pass(&verify_opposite_regular(&bg, &agx, &r), &name);
    }
}

#[test]
fn perturbed_translation_is_caught() {
    let bg = group_bialgebroid::<Q>("QZ3", &cyclic_table(3)).unwrap();
    let h = galois_lambda(&bg).unwrap();
    let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
    let bad = gx.with_entry(1, Tensor::basis(&[3, 3], &[1, 1]));
    let r = verify_translation_identities(&bg, &bad, &h);
    assert!(!r.pass());
    assert!(r.failures().all(|c| c.witness.first() == Some(&1) || c.witness.is_empty()), "{}", r.lines());
}

#[test]
fn perturbed_skew_table_is_caught() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let alg = left_regular(&bg).unwrap();
    let s = skew_regular(&bg, &alg.comodule).unwrap();
    let bad = s.with_entry(1, Tensor::basis(&[2, 2], &[0, 1]));
    let r = verify_skew_regular_identities(&bg, &alg.comodule, &bad, None, None);
    let c = r.get("skew-1").unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness, vec![1]);
}

#[test]
fn perturbed_regular_table_is_caught() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let alg = right_regular(&bg).unwrap();
    let s = regular(&bg, &alg.comodule).unwrap();
    let bad = s.with_entry(1, Tensor::basis(&[2, 2], &[1, 0]));
    let r = verify_regular_identities(&bg, &alg.comodule, &bad, None, None);
    let c = r.get("regular-1").unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness, vec![1]);
}

#[test]
fn trivial_coaction_is_not_galois() {
    // P = L with p ↦ 1 ◇ p: coinvariants are all of P and `can` is not onto
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let m = hgx_core::Matrix::from_fn(4, 2, |r, c| if r == c { Q::one() } else { Q::zero() });
    let alg = LeftComoduleAlgebra::new(&bg, bg.total().clone(), &bg.source().matrix, &m).unwrap();
    assert_eq!(alg.coinvariants.dim(), 2);
    assert_eq!(canonical_map(&bg, &alg).unwrap_err().class(), "NotGalois");
}

#[test]
fn perturbed_translation_breaks_round_trip() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let gx = canonical_map(&bg, &left_regular(&bg).unwrap()).unwrap();
    let bad = gx.with_entry(1, Tensor::basis(&[2, 2], &[0, 0]));
    let r = verify_structure_theorem(&bg, &bad);
    assert!(!r.get("left-hopf-module-1").unwrap().pass, "{}", r.lines());
    assert!(r.get("left-induction-1").unwrap().pass);
}
