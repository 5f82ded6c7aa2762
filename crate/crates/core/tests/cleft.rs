use hgx_core::bialgebroid::{galois_lambda, galois_mu};
use hgx_core::builders::*;
use hgx_core::cleft::*;
use hgx_core::comodule::left_regular;
use hgx_core::field::F5;
use hgx_core::twist::group_cocycle;
use hgx_core::{Bialgebroid, Field, Matrix, Report, Tensor, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

fn q(x: i64) -> Q {
    Q::from_i64(x)
}

fn regular(bg: &Bialgebroid<Q>) -> CleftExtension<Q> {
    let p = left_regular(bg).unwrap();
    CleftExtension::new(bg, &p, &bg.target().matrix, &Matrix::identity(bg.n())).unwrap()
}

/// A group algebra `k[G]` acting on `k^d` by permuting idempotents.
struct GroupData {
    bg: Bialgebroid<Q>,
    ring: BbarRing<Q>,
    /// `perm[x][i]`: index of `x ▷ e_i`
    perm: Vec<Vec<usize>>,
    /// `σ(x, y)` as integers
    sigma: Vec<Vec<i64>>,
    inv: Vec<usize>,
    table: Vec<Vec<usize>>,
}

impl GroupData {
    fn new(name: &str, table: Vec<Vec<usize>>, d: usize, perm: Vec<Vec<usize>>, sigma: Vec<Vec<i64>>) -> Self {
        let bg = group_bialgebroid::<Q>(name, &table).unwrap();
        let ring = if d == 1 { BbarRing::ground(&bg).unwrap() } else { BbarRing::new(&bg, diagonal("k^d", d), Matrix::from_fn(d, 1, |_, _| Q::one())).unwrap() };
        let n = table.len();
        let inv = (0..n).map(|x| (0..n).find(|&y| table[x][y] == 0).unwrap()).collect();
        GroupData { bg, ring, perm, sigma, inv, table }
    }

    fn action(&self) -> Matrix<Q> {
        let d = self.ring.dim();
        Matrix::from_fn(d, self.bg.n() * d, |r, c| if self.perm[c / d][c % d] == r { Q::one() } else { Q::zero() })
    }

    fn cocycle(&self) -> Matrix<Q> {
        // η_N(σ(x, y)) = σ(x, y)·1
        let n = self.bg.n();
        Matrix::from_fn(self.ring.dim(), n * n, |_, c| q(self.sigma[c / n][c % n]))
    }

    fn validated(&self) -> (Measuring<Q>, RingCocycle<Q>) {
        let (pair, (r, e)) = check_measuring_cocycle(&self.bg, &self.ring, &self.action(), &self.cocycle());
        assert!(r.pass(), "{e:?}\n{}", r.lines());
        pair.unwrap()
    }

    /// `(x#e_a)(y#e_b) = xy # σ(y⁻¹, x⁻¹)(y⁻¹ ▷ e_a)e_b`, with the product of
    /// idempotents written out.
    fn oracle(&self, x: usize, a: usize, y: usize, b: usize) -> (usize, Vec<Q>) {
        let d = self.ring.dim();
        let yi = self.inv[y];
        let mut v = vec![Q::zero(); d];
        if self.perm[yi][a] == b {
            v[b] = q(self.sigma[yi][self.inv[x]]);
        }
        (self.table[x][y], v)
    }
}

fn z2_scalar(c: i64) -> GroupData {
    GroupData::new("QZ2", cyclic_table(2), 1, vec![vec![0]; 2], vec![vec![1, 1], vec![1, c]])
}

fn z2_swap() -> GroupData {
    GroupData::new("QZ2", cyclic_table(2), 2, vec![vec![0, 1], vec![1, 0]], vec![vec![1; 2]; 2])
}

fn z3_shift() -> GroupData {
    let perm = (0..3).map(|x| (0..3).map(|i| (i + x) % 3).collect()).collect();
    GroupData::new("QZ3", cyclic_table(3), 3, perm, vec![vec![1; 3]; 3])
}

fn klein_sign() -> GroupData {
    let sigma = (0..4).map(|x| (0..4).map(|y| if (x >> 1) & y & 1 == 1 { -1 } else { 1 }).collect()).collect();
    GroupData::new("QZ2xZ2", klein_table(), 1, vec![vec![0]; 4], sigma)
}

fn group_fixtures() -> Vec<(&'static str, GroupData)> {
    vec![("scalar 3", z2_scalar(3)), ("swap", z2_swap()), ("shift", z3_shift()), ("sign", klein_sign())]
}

fn crossed(g: &GroupData) -> CrossedProduct<Q> {
    let (m, c) = g.validated();
    crossed_product(&g.bg, &g.ring, &m, &c, &galois_lambda(&g.bg).unwrap()).unwrap()
}

#[test]
fn regular_extensions_are_cleft_with_identity() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let h = galois_lambda(&bg).unwrap();
        let c = regular(&bg);
        assert_pass(&verify_cleaving_identities(&bg, &c, &h), &name);
        let (_, r) = cleft_to_galois(&bg, &c).unwrap();
        assert_pass(&r, &name);
        let (nb, (r, e)) = normal_basis_iso(&bg, &c);
        assert!(nb.is_some(), "{name} {e:?}\n{}", r.lines());
        assert_eq!(c.ring.dim(), bg.nb(), "{name}");
    }
}

#[test]
fn identity_cleaving_of_a_group_splits_as_g_and_g_inverse() {
    // j(g ⊗ g⁻¹) = g ⊗ g·g⁻¹ = g ◇ 1
    for (name, table) in [("QZ2", cyclic_table(2)), ("QZ3", cyclic_table(3)), ("QZ2xZ2", klein_table())] {
        let bg = group_bialgebroid::<Q>(name, &table).unwrap();
        let c = regular(&bg);
        let n = bg.n();
        for (x, row) in table.iter().enumerate() {
            let xi = row.iter().position(|&z| z == 0).unwrap();
            assert!(c.lbar_p.equal(&c.alpha_beta.image(x), &Tensor::basis(&[n, n], &[x, xi])), "{name} {x}");
        }
    }
}

#[test]
fn enveloping_extensions_round_trip_through_normal_basis() {
    for bg in corpus().into_iter().skip(3) {
        let c = regular(&bg);
        let (nb, _) = normal_basis_iso(&bg, &c);
        let nb = nb.unwrap();
        let (c2, r) = cleft_from_normal_basis(&bg, &c.alg, &c.iota_matrix(), &nb.phi_inv).unwrap();
        assert_pass(&r, bg.total().name());
        assert_eq!(c2.gamma_matrix(), c.gamma_matrix());
        assert_eq!(c2.alpha_beta, c.alpha_beta);
    }
}

#[test]
fn coinvariant_factorization_of_one() {
    for bg in corpus() {
        let c = regular(&bg);
        let v = coinvariant_factorization(&c, &c.alg.one()).unwrap();
        let expected = c.lbar_n.project(&bg.one().outer(&Tensor::vector(&c.ring.one())));
        assert_eq!(v, expected, "{}", bg.total().name());
    }
}

#[test]
fn extraction_from_regular_extensions_is_trivial() {
    for bg in corpus() {
        let name = bg.total().name().to_string();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        let c = regular(&bg);
        let (meas, coc) = extract_from_cleft(&bg, &c, &a).unwrap();
        if bg.nb() == 1 {
            assert_eq!(meas.matrix, trivial_measuring(&bg, &c.ring), "{name}");
        }
        assert_eq!(coc.sigma, trivial_ring_cocycle(&bg, &c.ring), "{name}");
        assert_pass(&cocycle_ring_identity(&bg, &c.ring, &meas, &coc, &h), &name);
        assert_pass(&verify_extraction(&bg, &c, &h, &a), &name);
    }
}

#[test]
fn enveloping_extraction_acts_by_the_base_on_both_sides() {
    // s(a)t(b) ▷ m = η(b) m η(a) for L = B ⊗ B̄
    for bg in corpus().into_iter().skip(3) {
        let name = bg.total().name().to_string();
        let c = regular(&bg);
        let (meas, _) = extract_from_cleft(&bg, &c, &galois_mu(&bg).unwrap()).unwrap();
        let (nb, dn) = (bg.nb(), c.ring.dim());
        let eta = |b: usize| c.ring.eta_of(&bg.base().basis(b));
        for (a, b, m) in (0..nb).flat_map(|a| (0..nb).flat_map(move |b| (0..dn).map(move |m| (a, b, m)))) {
            let x = bg.act(&bg.act(&bg.one(), 0, &hgx_core::ActionKey::left_b(), a), 0, &hgx_core::ActionKey::left_bbar(), b);
            let expected = c.ring.mul(&c.ring.mul(&eta(b), &c.ring.e(m)), &eta(a));
            assert_eq!(meas.act(x.data(), &c.ring.e(m)), expected, "{name} {a} {b} {m}");
        }
    }
}

#[test]
fn group_crossed_products_match_the_closed_product() {
    for (name, g) in group_fixtures() {
        let cp = crossed(&g);
        let (n, d) = (g.bg.n(), g.ring.dim());
        assert_eq!(cp.dim(), n * d, "{name}");
        for (x, a, y, b) in (0..n).flat_map(|x| (0..d).flat_map(move |a| (0..n).flat_map(move |y| (0..d).map(move |b| (x, a, y, b))))) {
            let lhs = cp.algebra.mul(&cp.element(&g.bg.e(x), &g.ring.e(a)), &cp.element(&g.bg.e(y), &g.ring.e(b)));
            let (z, v) = g.oracle(x, a, y, b);
            assert_eq!(lhs, cp.element(&g.bg.e(z), &v), "{name} {x} {a} {y} {b}");
        }
    }
}

#[test]
fn scalar_cocycle_squares_the_generator() {
    let g = z2_scalar(3);
    let cp = crossed(&g);
    let x = cp.element(&g.bg.e(1), &g.ring.one());
    let one = cp.element(&g.bg.e(0), &g.ring.one());
    assert_eq!(cp.algebra.mul(&x, &x), one.iter().map(|v| v.mul(&q(3))).collect::<Vec<_>>());
}

#[test]
fn swap_crossed_product_is_two_by_two_matrices() {
    // e_1 ↦ E11, e_2 ↦ E22, g ↦ E12 + E21
    let g = z2_swap();
    let cp = crossed(&g);
    let rep = |x: usize, a: usize| -> [[i64; 2]; 2] {
        let idem = if a == 0 { [[1, 0], [0, 0]] } else { [[0, 0], [0, 1]] };
        let gm = if x == 0 { [[1, 0], [0, 1]] } else { [[0, 1], [1, 0]] };
        // X # n ↦ ρ(X)ρ(n)
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..2).map(|k| gm[i][k] * idem[k][j]).sum();
            }
        }
        out
    };
    let basis: Vec<(usize, usize)> = (0..2).flat_map(|x| (0..2).map(move |a| (x, a))).collect();
    let coords = Matrix::from_cols(4, &basis.iter().map(|&(x, a)| cp.element(&g.bg.e(x), &g.ring.e(a))).collect::<Vec<_>>());
    let to_basis = coords.inverse().unwrap();
    let mats: Vec<[[i64; 2]; 2]> = basis.iter().map(|&(x, a)| rep(x, a)).collect();
    // the representation is bijective onto M2
    let flat = Matrix::from_cols(4, &mats.iter().map(|m| m.iter().flatten().map(|&v| q(v)).collect()).collect::<Vec<_>>());
    assert_eq!(flat.rank(), 4);
    for (i, &(x, a)) in basis.iter().enumerate() {
        for (j, &(y, b)) in basis.iter().enumerate() {
            let prod = to_basis.mul_vec(&cp.algebra.mul(&cp.element(&g.bg.e(x), &g.ring.e(a)), &cp.element(&g.bg.e(y), &g.ring.e(b))));
            let mut expected = [[0i64; 2]; 2];
            for (r, row) in expected.iter_mut().enumerate() {
                for (c, e) in row.iter_mut().enumerate() {
                    *e = (0..2).map(|k| mats[i][r][k] * mats[j][k][c]).sum();
                }
            }
            let got: Vec<Q> = (0..2).flat_map(|r| (0..2).map(move |c| (r, c))).map(|(r, c)| (0..4).fold(Q::zero(), |acc, k| acc.add(&prod[k].mul(&q(mats[k][r][c]))))).collect();
            assert_eq!(got, expected.iter().flatten().map(|&v| q(v)).collect::<Vec<_>>());
        }
    }
}

#[test]
fn crossed_products_are_cleft_with_the_closed_table() {
    for (name, g) in group_fixtures() {
        let h = galois_lambda(&g.bg).unwrap();
        let cp = crossed(&g);
        let (c, r) = crossed_is_cleft(&g.bg, &cp, &h).unwrap();
        assert_pass(&r, name);
        assert!(r.get("crossed-alpha-beta").unwrap().pass);
        assert_pass(&verify_cleaving_identities(&g.bg, &c, &h), name);
        let (nb, (r, e)) = normal_basis_iso(&g.bg, &c);
        assert!(nb.is_some(), "{name} {e:?}\n{}", r.lines());
    }
}

#[test]
fn extraction_recovers_the_crossed_product_data() {
    for (name, g) in group_fixtures() {
        let h = galois_lambda(&g.bg).unwrap();
        let a = galois_mu(&g.bg).unwrap();
        let cp = crossed(&g);
        let (c, _) = crossed_is_cleft(&g.bg, &cp, &h).unwrap();
        let (meas, coc) = extract_from_cleft(&g.bg, &c, &a).unwrap();
        // 1#m in the coinvariant basis of L#_σN
        let (n, d) = (g.bg.n(), g.ring.dim());
        let cols: Vec<Vec<Q>> = (0..d).map(|m| c.alg.coinvariants.coords(&cp.element(&g.bg.one(), &g.ring.e(m))).unwrap()).collect();
        let e = Matrix::from_cols(d, &cols);
        for (x, m) in (0..n).flat_map(|x| (0..d).map(move |m| (x, m))) {
            let orig = cp.measuring.act(g.bg.e(x).data(), &g.ring.e(m));
            assert_eq!(meas.act(g.bg.e(x).data(), &e.col(m)), e.mul_vec(&orig), "{name} {x} {m}");
        }
        for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))) {
            assert_eq!(coc.sigma.col(x * n + y), e.mul_vec(&cp.cocycle.sigma.col(x * n + y)), "{name} {x} {y}");
        }
        assert_pass(&cocycle_ring_identity(&g.bg, &c.ring, &meas, &coc, &h), name);
        assert_pass(&verify_extraction(&g.bg, &c, &h, &a), name);
        let again = crossed_product(&g.bg, &c.ring, &meas, &coc, &h).unwrap();
        assert_eq!(again.algebra.dim(), cp.algebra.dim());
    }
}

#[test]
fn ring_identity_holds_for_valid_pairs() {
    for (name, g) in group_fixtures() {
        let (m, c) = g.validated();
        assert_pass(&cocycle_ring_identity(&g.bg, &g.ring, &m, &c, &galois_lambda(&g.bg).unwrap()), name);
    }
}

#[test]
fn convolution_inverse_of_a_scalar_cocycle() {
    // σ⁻¹(g, g) = 1/c for a group-like pair
    let g = z2_scalar(3);
    let (_, c) = g.validated();
    assert_eq!(c.sigma_inv[(0, 3)], Q::one().div(&q(3)).unwrap());
    let l = convolve(&g.bg, &g.ring, c.lin(), c.lin_inv());
    assert_eq!(l, convolution_unit(&g.bg, &g.ring, 2));
}

#[test]
fn gauge_transform_by_the_unit_changes_nothing() {
    for (name, g) in group_fixtures() {
        let (m, c) = g.validated();
        let u = GaugeElement::identity(&g.bg, &g.ring).unwrap();
        let (m2, c2) = gauge_transform(&g.bg, &g.ring, &m, &c, &u).unwrap();
        assert_eq!(m2.matrix, m.matrix, "{name}");
        assert_eq!(c2.sigma, c.sigma, "{name}");
    }
}

#[test]
fn scalar_gauge_rescales_the_cocycle() {
    // σ'(g, g) = u(g)² σ(g, g) u(g)⁻²  ·  u(1)... with u(g) = 2 on Z2 over k:
    // σ'(g, g) = u(g·g)σ(g, g)u⁻¹(g)u⁻¹(g) = 3/4
    let g = z2_scalar(3);
    let (m, c) = g.validated();
    let u = GaugeElement::new(&g.bg, &g.ring, Matrix::from_rows(vec![vec![q(1), q(2)]]).unwrap()).unwrap();
    assert_eq!(u.u_inv, Matrix::from_rows(vec![vec![q(1), Q::one().div(&q(2)).unwrap()]]).unwrap());
    let (_, c2) = gauge_transform(&g.bg, &g.ring, &m, &c, &u).unwrap();
    assert_eq!(c2.sigma[(0, 3)], q(3).div(&q(4)).unwrap());
}

fn random_u(g: &GroupData, seed: u64) -> GaugeElement<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_gauge(&g.bg, &g.ring, || q(rng.random_range(-3..=3))).unwrap()
}

#[test]
fn random_gauges_give_isomorphic_crossed_products() {
    for (name, g) in group_fixtures() {
        let h = galois_lambda(&g.bg).unwrap();
        let (m, c) = g.validated();
        let u = random_u(&g, 11);
        let (m2, c2) = gauge_transform(&g.bg, &g.ring, &m, &c, &u).unwrap();
        let cp = crossed_product(&g.bg, &g.ring, &m, &c, &h).unwrap();
        let cp2 = crossed_product(&g.bg, &g.ring, &m2, &c2, &h).unwrap();
        let (phi, (r, e)) = gauge_iso(&cp, &cp2, &u, &h);
        assert!(phi.is_some(), "{name} {e:?}\n{}", r.lines());
        assert_pass(&r, name);
    }
}

#[test]
fn gauge_is_recovered_from_two_cleaving_maps() {
    for (name, g) in group_fixtures() {
        let h = galois_lambda(&g.bg).unwrap();
        let a = galois_mu(&g.bg).unwrap();
        let (m, c) = g.validated();
        let u = random_u(&g, 5);
        let (m2, c2) = gauge_transform(&g.bg, &g.ring, &m, &c, &u).unwrap();
        let cp = crossed_product(&g.bg, &g.ring, &m, &c, &h).unwrap();
        let cp2 = crossed_product(&g.bg, &g.ring, &m2, &c2, &h).unwrap();
        let phi = gauge_iso(&cp, &cp2, &u, &h).0.unwrap();
        let gamma2 = phi.inverse().unwrap().mul(&cp2.gamma_matrix(&g.bg));
        let (cl, _) = crossed_is_cleft(&g.bg, &cp, &h).unwrap();
        let (found, _) = extract_gauge(&g.bg, &cl, &gamma2, &a).unwrap();
        assert_eq!(found.u, u.u, "{name}");
        assert_eq!(found.u_inv, u.u_inv, "{name}");
    }
}

#[test]
fn enveloping_random_gauges_pass() {
    for bg in corpus().into_iter().skip(3) {
        let name = bg.total().name().to_string();
        let h = galois_lambda(&bg).unwrap();
        let a = galois_mu(&bg).unwrap();
        let c = regular(&bg);
        let (m, s) = extract_from_cleft(&bg, &c, &a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = random_gauge(&bg, &c.ring, || q(rng.random_range(-3..=3))).unwrap();
        let (m2, s2) = gauge_transform(&bg, &c.ring, &m, &s, &u).unwrap();
        let cp = crossed_product(&bg, &c.ring, &m, &s, &h).unwrap();
        let cp2 = crossed_product(&bg, &c.ring, &m2, &s2, &h).unwrap();
        let (phi, (r, e)) = gauge_iso(&cp, &cp2, &u, &h);
        assert!(phi.is_some(), "{name} {e:?}\n{}", r.lines());
    }
}

#[test]
fn search_finds_a_square_root_over_f5() {
    // σ(g, g) = 4 against 1 needs u(g)² = 4: u(g) ∈ {2, 3}
    let bg = group_bialgebroid::<F5>("F5Z2", &cyclic_table(2)).unwrap();
    let ring = BbarRing::ground(&bg).unwrap();
    let pair = |c: i64| match check_measuring_cocycle(&bg, &ring, &trivial_measuring(&bg, &ring), &group_cocycle(2, |x, y| if x * y == 1 { F5::from_i64(c) } else { F5::one() })) {
        (Some(p), _) => p,
        (None, (r, _)) => panic!("{}", r.lines()),
    };
    let u = search_gauge(&bg, &ring, &pair(4), &pair(1), 1000).unwrap();
    assert!([F5::from_i64(2), F5::from_i64(3)].contains(&u.u[(0, 1)]));
    assert_eq!(u.ambiguity, 1);
}

#[test]
fn search_rejects_a_non_square_over_f5() {
    let squares: Vec<i64> = (1..5).map(|x| x * x % 5).collect();
    assert!(!squares.contains(&2));
    let bg = group_bialgebroid::<F5>("F5Z2", &cyclic_table(2)).unwrap();
    let ring = BbarRing::ground(&bg).unwrap();
    let pair = |c: i64| check_measuring_cocycle(&bg, &ring, &trivial_measuring(&bg, &ring), &group_cocycle(2, |x, y| if x * y == 1 { F5::from_i64(c) } else { F5::one() })).0.unwrap();
    let err = search_gauge(&bg, &ring, &pair(2), &pair(1), 1000).unwrap_err();
    assert_eq!(err.class(), "NotEquivalent");
}

#[test]
fn search_over_q_with_freedom_is_undecided() {
    let g = z2_scalar(3);
    let (m, c) = g.validated();
    let err = search_gauge(&g.bg, &g.ring, &(m.clone(), c.clone()), &(m, c), 1000).unwrap_err();
    assert_eq!(err.class(), "Undecided");
}

#[test]
fn unit_violating_cleaving_map_is_rejected() {
    let bg = group_bialgebroid::<Q>("QZ2", &cyclic_table(2)).unwrap();
    let p = left_regular(&bg).unwrap();
    let gamma = Matrix::from_fn(2, 2, |i, j| if i == j { q(2) } else { Q::zero() });
    let (c, (r, e)) = check_cleft(&bg, &p, &bg.target().matrix, &gamma);
    assert!(c.is_none());
    assert_eq!(e.unwrap().class(), "GammaNotColinear");
    assert!(!r.get("unit").unwrap().pass);
}

#[test]
fn perturbed_table_breaks_the_cleaving_identities() {
    let bg = group_bialgebroid::<Q>("QZ3", &cyclic_table(3)).unwrap();
    let h = galois_lambda(&bg).unwrap();
    let c = regular(&bg);
    let bad = c.with_entry(1, Tensor::basis(&[3, 3], &[1, 1]));
    let r = verify_cleaving_identities(&bg, &bad, &h);
    assert!(!r.pass());
    assert!(!r.get("cleaving-1").unwrap().pass);
}

#[test]
fn non_cocycle_gives_a_non_associative_crossed_product() {
    // Z3 over k with σ(g, g) = 2 and 1 elsewhere
    let g = GroupData::new("QZ3", cyclic_table(3), 1, vec![vec![0]; 3], vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 1]]);
    let (pair, (r, e)) = check_measuring_cocycle(&g.bg, &g.ring, &g.action(), &g.cocycle());
    assert!(pair.is_none());
    assert_eq!(e.unwrap().class(), "CocycleLawFails");
    assert!(!r.get("cocycle").unwrap().pass);
    let m = Measuring::unchecked(&g.bg, &g.ring, g.action()).unwrap();
    let c = RingCocycle::unchecked(&g.bg, &g.ring, g.cocycle()).unwrap();
    let err = crossed_product(&g.bg, &g.ring, &m, &c, &galois_lambda(&g.bg).unwrap()).unwrap_err();
    assert_eq!(err.class(), "NotAssociative");
}

#[test]
fn degenerate_cocycle_is_not_invertible() {
    let g = z2_scalar(0);
    let (pair, (_, e)) = check_measuring_cocycle(&g.bg, &g.ring, &g.action(), &g.cocycle());
    assert!(pair.is_none());
    assert_eq!(e.unwrap().class(), "NotConvolutionInvertible");
}

#[test]
fn non_multiplicative_action_fails_the_measuring_laws() {
    // g ▷ e_i = e_1 for both idempotents is not multiplicative on e_1 e_2 = 0
    let g = GroupData::new("QZ2", cyclic_table(2), 2, vec![vec![0, 1], vec![0, 0]], vec![vec![1; 2]; 2]);
    let (pair, (r, e)) = check_measuring_cocycle(&g.bg, &g.ring, &g.action(), &g.cocycle());
    assert!(pair.is_none());
    assert_eq!(e.unwrap().class(), "MeasuringFails");
    assert!(!r.get("measuring-product").unwrap().pass);
}

#[test]
fn gauge_laws_are_enforced() {
    let g = z2_scalar(3);
    let err = GaugeElement::new(&g.bg, &g.ring, Matrix::from_rows(vec![vec![q(2), q(1)]]).unwrap()).unwrap_err();
    assert_eq!(err.class(), "NotGauge");
    let err = GaugeElement::new(&g.bg, &g.ring, Matrix::from_rows(vec![vec![q(1), q(0)]]).unwrap()).unwrap_err();
    assert_eq!(err.class(), "NotConvolutionInvertible");
}
