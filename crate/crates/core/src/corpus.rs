//! The example models shipped in `corpus/`, generated from the builders, and
//! the deliberately broken fixtures with the error class each must raise.

use serde_json::Value;

use crate::algebra::Algebra;
use crate::bialgebroid::BialgebroidData;
use crate::builders::*;
use crate::double::group_pairing;
use crate::field::{Field, F5, Q};
use crate::linalg::Matrix;
use crate::model::{canonical_text, serialize, ComoduleAlgebraBlock, CleavingBlock, ModelDocument, PairingBlock, RingBlock};
use crate::twist::group_cocycle;

/// One file of the corpus, as a path relative to the corpus directory.
#[derive(Clone, Debug)]
pub struct CorpusFile {
    pub path: &'static str,
    pub text: String,
}

/// A broken fixture: running `args` (with `{}` standing for the fixture path
/// and `{dir}` for the corpus directory) must fail with `class`.
#[derive(Clone, Debug)]
pub struct Broken {
    pub path: &'static str,
    pub text: String,
    pub class: &'static str,
    pub args: &'static [&'static str],
}

fn q(x: i64) -> Q {
    Q::from_i64(x)
}

fn group<F: Field>(name: &str, table: &[Vec<usize>]) -> BialgebroidData<F> {
    monoid_bialgebra_data(name, table).expect("group tables are valid")
}

pub fn z2() -> ModelDocument<Q> {
    ModelDocument::with_bialgebroid("QZ2", group("QZ2", &cyclic_table(2)))
}

pub fn z3() -> ModelDocument<Q> {
    ModelDocument::with_bialgebroid("QZ3", group("QZ3", &cyclic_table(3)))
}

pub fn z2z2() -> ModelDocument<Q> {
    ModelDocument::with_bialgebroid("QZ2xZ2", group("QZ2xZ2", &klein_table()))
}

pub fn qxq() -> ModelDocument<Q> {
    ModelDocument::with_bialgebroid("(QxQ)^e", enveloping_data(&diagonal::<Q>("QxQ", 2)).expect("QxQ is an algebra"))
}

pub fn t2() -> ModelDocument<Q> {
    ModelDocument::with_bialgebroid("T2^e", enveloping_data(&upper_triangular2::<Q>()).expect("T2 is an algebra"))
}

/// `(-1)^{jk}` on `Z2 × Z2`.
pub fn minus() -> ModelDocument<Q> {
    ModelDocument { cocycle: Some(klein_cocycle()), ..ModelDocument::new("minus") }
}

fn sign_form() -> Matrix<Q> {
    group_pairing(2, 2, |x, a| if x == 1 && a == 1 { q(-1) } else { q(1) })
}

/// `τ[g | g] = -1` on `Z2`.
pub fn sign_pairing() -> ModelDocument<Q> {
    ModelDocument { pairing: Some(PairingBlock { pi: None, form: Some(sign_form()) }), ..ModelDocument::new("sign") }
}

/// `τ[x | α] = 1` on `Z2`.
pub fn trivial_pairing_z2() -> ModelDocument<Q> {
    ModelDocument { pairing: Some(PairingBlock { pi: None, form: Some(group_pairing(2, 2, |_, _| q(1))) }), ..ModelDocument::new("trivial") }
}

/// `L = Π = QZ2` with the sign pairing between them.
pub fn z2_double() -> ModelDocument<Q> {
    ModelDocument { pairing: Some(PairingBlock { pi: Some(group("QZ2", &cyclic_table(2))), form: Some(sign_form()) }), ..z2() }
}

fn swap_ring() -> RingBlock<Q> {
    RingBlock { algebra: diagonal("k^2", 2), eta: Matrix::from_fn(2, 1, |_, _| q(1)) }
}

/// `g` swaps the idempotents of `k²`: column `x·2 + i` holds `x ▷ e_i`.
fn swap_action() -> Matrix<Q> {
    let perm = [[0, 1], [1, 0]];
    Matrix::from_fn(2, 4, |r, c| if perm[c / 2][c % 2] == r { q(1) } else { q(0) })
}

fn unit_sigma(d: usize, n: usize) -> Matrix<Q> {
    Matrix::from_fn(d, n * n, |_, _| q(1))
}

/// `QZ2` acting on `k²` by swapping the idempotents, with trivial `σ`.
pub fn crossed_swap() -> ModelDocument<Q> {
    ModelDocument { ring: Some(swap_ring()), measuring: Some(swap_action()), sigma: Some(unit_sigma(2, 2)), ..z2() }
}

pub fn crossed_swap_ring() -> ModelDocument<Q> {
    ModelDocument { ring: Some(swap_ring()), ..z2() }
}

pub fn swap_sigma() -> ModelDocument<Q> {
    ModelDocument { sigma: Some(unit_sigma(2, 2)), ..ModelDocument::new("swap-sigma") }
}

pub fn swap_measuring() -> ModelDocument<Q> {
    ModelDocument { measuring: Some(swap_action()), ..ModelDocument::new("swap-measuring") }
}

/// `Z2` over `F5` with trivial action and `σ(g, g) = c`.
pub fn gauge_f5(c: i64) -> ModelDocument<F5> {
    let bg = group::<F5>("F5Z2", &cyclic_table(2));
    ModelDocument {
        measuring: Some(Matrix::from_fn(1, 2, |_, _| F5::one())),
        sigma: Some(group_cocycle(2, |x, y| if x * y == 1 { F5::from_i64(c) } else { F5::one() })),
        ..ModelDocument::with_bialgebroid(format!("F5Z2 sigma(g,g)={c}"), bg)
    }
}

/// `QZ2` over itself with the cleaving `γ(1) = 1`, `γ(g) = c·g`.
pub fn z2_cleft(c: i64) -> ModelDocument<Q> {
    let d = group::<Q>("QZ2", &cyclic_table(2));
    ModelDocument {
        name: format!("QZ2 cleaving gamma(g)={c}g"),
        comodule_algebra: Some(ComoduleAlgebraBlock { algebra: d.ring.total.clone(), eta: d.ring.s.matrix.clone(), coaction: d.delta.clone() }),
        cleaving: Some(CleavingBlock { iota: d.ring.t.matrix.clone(), gamma: Matrix::from_fn(2, 2, |r, k| if r != k { q(0) } else if r == 0 { q(1) } else { q(c) }) }),
        ..ModelDocument::with_bialgebroid("QZ2", d)
    }
}

pub fn files() -> Vec<CorpusFile> {
    let f = |path, text| CorpusFile { path, text };
    vec![
        f("z2.json", serialize(&z2())),
        f("z3.json", serialize(&z3())),
        f("z2z2.json", serialize(&z2z2())),
        f("qxq.json", serialize(&qxq())),
        f("t2.json", serialize(&t2())),
        f("minus.json", serialize(&minus())),
        f("sign.json", serialize(&sign_pairing())),
        f("trivial_pairing.json", serialize(&trivial_pairing_z2())),
        f("z2_double.json", serialize(&z2_double())),
        f("crossed_swap.json", serialize(&crossed_swap())),
        f("crossed_swap_ring.json", serialize(&crossed_swap_ring())),
        f("swap_sigma.json", serialize(&swap_sigma())),
        f("swap_measuring.json", serialize(&swap_measuring())),
        f("gauge_f5_4.json", serialize(&gauge_f5(4))),
        f("gauge_f5_1.json", serialize(&gauge_f5(1))),
        f("z2_cleft.json", serialize(&z2_cleft(1))),
        f("z2_cleft_sign.json", serialize(&z2_cleft(-1))),
    ]
}

fn edit(doc: &ModelDocument<Q>, f: impl FnOnce(&mut Value)) -> String {
    let mut v: Value = serde_json::from_str(&serialize(doc)).expect("serialized documents are JSON");
    f(&mut v);
    canonical_text(&v)
}

/// The magma on `{1, a, b}` with every product of non-units equal to `1`.
/// Its function algebra with `Δ(δ_z) = Σ_{xy = z} δ_x ⊗ δ_y` is a counital
/// algebra map that is not coassociative, since `(aa)b ≠ a(ab)`.
fn magma_coalgebra() -> ModelDocument<Q> {
    let m = |x: usize, y: usize| if x == 0 { y } else if y == 0 { x } else { 0 };
    let total = diagonal::<Q>("k^3", 3);
    let k = ground::<Q>();
    let unit = Matrix::from_cols(3, &[total.unit().to_vec()]);
    let ring = crate::bering::BeRing::new(k, total, unit.clone(), unit).expect("unit maps are central");
    let delta = Matrix::from_fn(9, 3, |r, z| if m(r / 3, r % 3) == z { q(1) } else { q(0) });
    let eps = Matrix::from_fn(1, 3, |_, z| if z == 0 { q(1) } else { q(0) });
    ModelDocument::with_bialgebroid("magma", BialgebroidData { ring, delta, eps })
}

/// `M2` over `Q × Q` with `t` sending the idempotents to `e11 + e12`, `e22 - e12`.
fn noncommuting() -> String {
    let m2 = Algebra::<Q>::from_products(
        "M2",
        4,
        |a, b| {
            let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
            let mut v = vec![q(0); 4];
            if j == k {
                v[i * 2 + l] = q(1);
            }
            v
        },
        vec![q(1), q(0), q(0), q(1)],
    )
    .expect("M2 is an algebra");
    let base = diagonal::<Q>("QxQ", 2);
    let s = Matrix::from_fn(4, 2, |r, c| if (r == 0 && c == 0) || (r == 3 && c == 1) { q(1) } else { q(0) });
    let t = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(1), q(-1)], vec![q(0), q(0)], vec![q(0), q(1)]]).expect("rectangular");
    // a valid document with s = t, then t replaced
    let ring = crate::bering::BeRing::new(base, m2, s.clone(), s).expect("s = t commute here");
    let doc = ModelDocument::with_bialgebroid("M2", BialgebroidData { ring, delta: Matrix::from_fn(16, 4, |_, _| q(0)), eps: Matrix::from_fn(2, 4, |_, _| q(0)) });
    let rows: Vec<Value> = (0..4).map(|r| Value::Array(t.row(r).iter().map(|x| Value::String(x.to_string())).collect())).collect();
    edit(&doc, |v| v["morphisms"]["t"] = Value::Array(rows))
}

fn with_z2_action(perm: [[usize; 2]; 2], sigma: [i64; 4]) -> ModelDocument<Q> {
    let action = Matrix::from_fn(2, 4, |r, c| if perm[c / 2][c % 2] == r { q(1) } else { q(0) });
    ModelDocument { ring: Some(swap_ring()), measuring: Some(action), sigma: Some(Matrix::from_fn(2, 4, |_, c| q(sigma[c]))), ..z2() }
}

fn with_z2_scalar(c: i64) -> ModelDocument<Q> {
    ModelDocument { measuring: Some(Matrix::from_fn(1, 2, |_, _| q(1))), sigma: Some(group_cocycle(2, |x, y| if x * y == 1 { q(c) } else { q(1) })), ..z2() }
}

fn with_z3_sigma(c: i64) -> ModelDocument<Q> {
    ModelDocument {
        measuring: Some(Matrix::from_fn(1, 3, |_, _| q(1))),
        sigma: Some(group_cocycle(3, |x, y| if x == 1 && y == 1 { q(c) } else { q(1) })),
        ..z3()
    }
}

const CHECK: &[&str] = &["check", "{}"];

pub fn broken() -> Vec<Broken> {
    let z2 = z2();
    let regular_z2 = |gamma: Matrix<Q>, coaction: Option<Matrix<Q>>| {
        let d = group::<Q>("QZ2", &cyclic_table(2));
        let coaction = coaction.unwrap_or_else(|| d.delta.clone());
        ModelDocument {
            comodule_algebra: Some(ComoduleAlgebraBlock { algebra: d.ring.total.clone(), eta: d.ring.s.matrix.clone(), coaction }),
            cleaving: Some(CleavingBlock { iota: d.ring.t.matrix.clone(), gamma }),
            ..z2.clone()
        }
    };
    let b = |path, text, class, args| Broken { path, text, class, args };
    let mut truncated = serialize(&z2);
    truncated.truncate(truncated.len() / 2);
    let mut not_hopf = ModelDocument::with_bialgebroid("idempotent", group::<Q>("idempotent", &[vec![0, 1], vec![1, 1]]));
    not_hopf.name = "idempotent monoid".into();
    let mut counit = group::<Q>("QZ2", &cyclic_table(2));
    counit.eps = Matrix::from_rows(vec![vec![q(1), q(0)]]).expect("one row");
    let t2data = enveloping_data(&upper_triangular2::<Q>()).expect("T2 is an algebra");
    let one = t2data.ring.total.unit().to_vec();
    let mut takeuchi = t2data.clone();
    takeuchi.delta = Matrix::from_fn(81, 9, |r, c| if one[r % 9].is_zero() || r / 9 != c { q(0) } else { one[r % 9].clone() });
    let trivial_coaction = Matrix::from_fn(4, 2, |r, c| if r == c { q(1) } else { q(0) });
    vec![
        b("broken/syntax.json", truncated, "SyntaxError", CHECK),
        b("broken/missing_counit.json", edit(&z2, |v| drop(v["morphisms"].as_object_mut().map(|m| m.shift_remove("counit")))), "SchemaError", CHECK),
        b("broken/zero_denominator.json", edit(&z2, |v| v["morphisms"]["counit"][0][1] = Value::String("1/0".into())), "SchemaError", CHECK),
        b("broken/nonassociative.json", edit(&z3(), |v| v["total_algebra"]["products"][1][1] = serde_json::json!(["1", "0", "0"])), "AlgebraAxiom", CHECK),
        b("broken/noncommuting.json", noncommuting(), "NonCommutingImages", CHECK),
        b("broken/counit_law.json", serialize(&ModelDocument::with_bialgebroid("QZ2", counit)), "CounitLawFails", CHECK),
        b("broken/not_takeuchi.json", serialize(&ModelDocument::with_bialgebroid("T2^e", takeuchi)), "CoproductNotInTakeuchi", CHECK),
        b("broken/not_coassociative.json", serialize(&magma_coalgebra()), "NotCoassociative", CHECK),
        b("broken/not_hopf.json", serialize(&not_hopf), "NotLeftHopf", &["check", "{}", "--suite", "hopf"]),
        b("broken/not_cocycle.json", serialize(&ModelDocument { cocycle: Some(group_cocycle(3, |x, y| if x == 1 && y == 1 { q(2) } else { q(1) })), ..z3() }), "CocycleLawFails", &["check", "{}", "--suite", "twist"]),
        b("broken/unnormalized.json", serialize(&ModelDocument { cocycle: Some(group_cocycle(2, |x, y| if x == 0 && y == 0 { q(2) } else { q(1) })), ..z2.clone() }), "NotNormalized", &["check", "{}", "--suite", "twist"]),
        b("broken/bad_pairing.json", serialize(&ModelDocument { pairing: Some(PairingBlock { pi: None, form: Some(group_pairing(2, 2, |x, a| if x == 1 && a == 1 { q(2) } else { q(1) })) }), ..z2.clone() }), "AxiomFails", &["check", "{}", "--suite", "double"]),
        b("broken/not_galois.json", serialize(&regular_z2(Matrix::identity(2), Some(trivial_coaction))), "NotGalois", &["check", "{}", "--suite", "galois"]),
        b("broken/bad_cleaving.json", serialize(&regular_z2(Matrix::from_fn(2, 2, |r, c| if r == c { q(2) } else { q(0) }), None)), "GammaNotColinear", &["check", "{}", "--suite", "cleft"]),
        b("broken/bad_measuring.json", serialize(&with_z2_action([[0, 1], [0, 0]], [1; 4])), "MeasuringFails", &["check", "{}", "--suite", "crossed"]),
        b("broken/bad_ring_cocycle.json", serialize(&with_z3_sigma(2)), "CocycleLawFails", &["check", "{}", "--suite", "crossed"]),
        b("broken/singular_sigma.json", serialize(&with_z2_scalar(0)), "NotConvolutionInvertible", &["check", "{}", "--suite", "crossed"]),
        b("broken/gauge_f5_2.json", serialize(&gauge_f5(2)), "NotEquivalent", &["gauge", "{}", "{dir}/gauge_f5_1.json"]),
    ]
}
