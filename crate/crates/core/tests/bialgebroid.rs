use hgx_core::bialgebroid::{galois_lambda, galois_mu, verify_anti_left_identities, verify_left_hopf_identities, verify_mixed_identities};
use hgx_core::builders::*;
use hgx_core::{Algebra, Bialgebroid, Field, Matrix, Tensor, Q};

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn corpus() -> Vec<Bialgebroid<Q>> {
    vec![
        group_bialgebroid("QZ2", &cyclic_table(2)).unwrap(),
        group_bialgebroid("QZ3", &cyclic_table(3)).unwrap(),
        group_bialgebroid("QZ2xZ2", &klein_table()).unwrap(),
        enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap(),
        enveloping_bialgebroid(&upper_triangular2::<Q>()).unwrap(),
    ]
}

fn inverse_in(table: &[Vec<usize>], g: usize) -> usize {
    (0..table.len()).find(|&h| table[g][h] == 0).unwrap()
}

#[test]
fn group_algebra_axioms() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    assert_eq!(bg.triple.cut_dim(), 8);
    let (a, a2) = bg.alpha_maps().unwrap();
    assert!(a.to_matrix().is_identity() && a2.to_matrix().is_identity());
}

#[test]
fn zero_counit_breaks_counit_law() {
    let mut data = monoid_bialgebra_data::<Q>("QZ2", &cyclic_table(2)).unwrap();
    data.eps = Matrix::from_rows(vec![vec![q(1), q(0)]]).unwrap();
    let err = Bialgebroid::new(data).unwrap_err();
    assert_eq!(err.class(), "CounitLawFails");
    assert_eq!(err.witness(), vec![1]);
}

#[test]
fn coproduct_outside_takeuchi_is_rejected() {
    // Δ(b⊗b̄') = (b⊗b̄')◇1 is not in L×L for T2
    let base = upper_triangular2::<Q>();
    let mut data = enveloping_data(&base).unwrap();
    let n = 9;
    let one = base.enveloping().unit().to_vec();
    data.delta = Matrix::from_fn(n * n, n, |r, c| if one[r % n].is_zero() { Q::zero() } else if r / n == c { one[r % n].clone() } else { Q::zero() });
    let err = Bialgebroid::new(data).unwrap_err();
    assert_eq!(err.class(), "CoproductNotInTakeuchi");
}

#[test]
fn non_coassociative_is_rejected() {
    // Δ(z) = z⊗1 on the idempotent monoid {1, z}
    let mut data = monoid_bialgebra_data::<Q>("idem", &[vec![0, 1], vec![1, 1]]).unwrap();
    data.delta = Matrix::from_cols(4, &[vec![q(1), q(0), q(0), q(0)], vec![q(0), q(0), q(1), q(0)]]);
    let err = Bialgebroid::new(data).unwrap_err();
    assert!(["NotCoassociative", "CounitLawFails", "NotAlgebraMap"].contains(&err.class()), "{err}");
}

#[test]
fn enveloping_algebroids_are_valid() {
    for base in [diagonal::<Q>("QxQ", 2), upper_triangular2::<Q>()] {
        let bg = enveloping_bialgebroid(&base).unwrap();
        let (a, a2) = bg.alpha_maps().unwrap();
        assert_eq!(a.to_matrix().rank(), bg.triple.cut_dim());
        assert_eq!(a2.to_matrix().rank(), bg.triple.cut_dim());
    }
    // commutative base: the Takeuchi condition is automatic
    let bg = enveloping_bialgebroid(&diagonal::<Q>("QxQ", 2)).unwrap();
    assert_eq!((bg.takeuchi.dim(), bg.takeuchi.cut_dim()), (8, 8));
    let bg = enveloping_bialgebroid(&upper_triangular2::<Q>()).unwrap();
    assert_eq!((bg.takeuchi.dim(), bg.takeuchi.cut_dim()), (27, 9));
}

#[test]
fn cop_is_an_involution() {
    for bg in corpus() {
        let c = bg.cop().unwrap();
        assert_eq!(c.base().dim(), bg.base().dim());
        assert_eq!(c.cop().unwrap(), bg);
    }
    let z2 = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let c = z2.cop().unwrap();
    assert_eq!(c.delta_matrix(), z2.delta_matrix());
    assert_eq!(c.eps_matrix(), z2.eps_matrix());
}

#[test]
fn cop_exchanges_hopf_conditions() {
    let mut all = corpus();
    all.push(Bialgebroid::new(monoid_bialgebra_data::<Q>("idem", &[vec![0, 1], vec![1, 1]]).unwrap()).unwrap());
    for bg in all {
        let c = bg.cop().unwrap();
        assert_eq!(galois_lambda(&c).is_ok(), galois_mu(&bg).is_ok(), "{}", bg.total().name());
        assert_eq!(galois_mu(&c).is_ok(), galois_lambda(&bg).is_ok(), "{}", bg.total().name());
    }
}

#[test]
fn group_translation_tables_match_antipode() {
    for (name, table) in [("QZ2", cyclic_table(2)), ("QZ3", cyclic_table(3)), ("QZ2xZ2", klein_table())] {
        let bg = group_bialgebroid::<Q>(name, &table).unwrap();
        let n = table.len();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        for g in 0..n {
            let gi = inverse_in(&table, g);
            assert_eq!(h.table.image(g), Tensor::basis(&[n, n], &[g, gi]), "{name} pm {g}");
            assert_eq!(a.table.image(g), Tensor::basis(&[n, n], &[gi, g]), "{name} bracket {g}");
        }
    }
}

#[test]
fn enveloping_translation_tables_match_closed_form() {
    for base in [diagonal::<Q>("QxQ", 2), upper_triangular2::<Q>()] {
        let m = base.dim();
        let bg = enveloping_bialgebroid(&base).unwrap();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        let n = bg.n();
        let elt = |x: &[Q], y: &[Q]| -> Tensor<Q> {
            let mut v = vec![Q::zero(); n];
            for (i, p) in x.iter().enumerate() {
                for (j, r) in y.iter().enumerate() {
                    v[i * m + j] = p.mul(r);
                }
            }
            Tensor::vector(&v)
        };
        let one = base.unit().to_vec();
        for x in 0..n {
            let (i, j) = (x / m, x % m);
            let (bi, bj) = (base.basis(i), base.basis(j));
            // (b⊗b̄')₊ ⊗ (b⊗b̄')₋ = (b⊗1) ⊗ (b'⊗1)
            let pm = elt(&bi, &one).outer(&elt(&bj, &one));
            assert!(h.domain.equal(&h.table.image(x), &pm), "{} pm {x}", base.name());
            // (b⊗b̄')₍₋₎ ⊗ (b⊗b̄')₍₊₎ = (1⊗b̄) ⊗ (1⊗b̄')
            let bk = elt(&one, &bi).outer(&elt(&one, &bj));
            assert!(a.domain.equal(&a.table.image(x), &bk), "{} bracket {x}", base.name());
        }
    }
}

#[test]
fn units_of_translation_maps() {
    for bg in corpus() {
        let one = bg.one();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        assert!(h.domain.equal(&h.pm(&one, 0), &one.outer(&one)));
        assert!(a.domain.equal(&a.bracket(&one, 0), &one.outer(&one)));
    }
}

#[test]
fn identity_suites_hold_on_corpus() {
    for bg in corpus() {
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        for r in [verify_left_hopf_identities(&bg, &h), verify_anti_left_identities(&bg, &a), verify_mixed_identities(&bg, &h, &a)] {
            assert!(r.pass(), "{}\n{}", bg.total().name(), r.lines());
            assert!(!r.checks.is_empty());
        }
    }
}

#[test]
fn perturbed_tables_are_caught() {
    let bg = group_bialgebroid::<Q>("QZ3", &cyclic_table(3)).unwrap();
    let h = galois_lambda(&bg).unwrap();
    let bad = h.with_entry(1, Tensor::basis(&[3, 3], &[1, 1]));
    let r = verify_left_hopf_identities(&bg, &bad);
    let c = r.get("pm-1").unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness, vec![1]);

    let a = galois_mu(&bg).unwrap();
    let bad = a.with_entry(2, Tensor::basis(&[3, 3], &[2, 2]));
    let c = verify_anti_left_identities(&bg, &bad).get("bracket-1").cloned().unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness, vec![2]);
}

#[test]
fn idempotent_monoid_is_not_hopf() {
    let bg = Bialgebroid::new(monoid_bialgebra_data::<Q>("idem", &[vec![0, 1], vec![1, 1]]).unwrap()).unwrap();
    assert_eq!(galois_lambda(&bg).unwrap_err().class(), "NotLeftHopf");
    assert_eq!(galois_mu(&bg).unwrap_err().class(), "NotAntiLeftHopf");
}

#[test]
fn lambda_is_inverted_both_ways() {
    for bg in corpus() {
        let h = galois_lambda(&bg).unwrap();
        assert!(h.lambda.mul(&h.lambda_inv).is_identity() && h.lambda_inv.mul(&h.lambda).is_identity());
        let a = galois_mu(&bg).unwrap();
        assert!(a.mu.mul(&a.mu_inv).is_identity() && a.mu_inv.mul(&a.mu).is_identity());
    }
}

#[test]
fn base_algebra_fixtures() {
    let t2: Algebra<Q> = upper_triangular2();
    assert!(!t2.is_commutative());
    assert!(diagonal::<Q>("QxQ", 2).is_commutative());
}
