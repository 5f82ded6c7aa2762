use hgx_core::corpus;
use hgx_core::field::{F5, F7};
use hgx_core::model::{self, FieldMode, ModelDocument};
use hgx_core::{with_field, Error, Field, Matrix, Q};
use proptest::prelude::*;

fn text(path: &str) -> String {
    corpus::files().into_iter().find(|f| f.path == path).unwrap().text
}

#[test]
fn corpus_documents_round_trip_byte_for_byte() {
    for f in corpus::files() {
        let mode = model::declared_field_mode(&f.text).unwrap();
        let again = with_field!(mode, F => model::serialize(&model::parse::<F>(&f.text).unwrap()));
        assert_eq!(again, f.text, "{}", f.path);
    }
}

#[test]
fn parsed_documents_keep_their_blocks() {
    let doc = model::parse::<Q>(&text("crossed_swap.json")).unwrap();
    assert_eq!(doc, corpus::crossed_swap());
    let doc = model::parse::<Q>(&text("z2_double.json")).unwrap();
    assert_eq!(doc, corpus::z2_double());
    let doc = model::parse::<F5>(&text("gauge_f5_4.json")).unwrap();
    assert_eq!(doc, corpus::gauge_f5(4));
}

#[test]
fn field_mode_is_declared_and_checked() {
    assert_eq!(model::declared_field_mode(&text("z2.json")).unwrap(), FieldMode::Rationals);
    assert_eq!(model::declared_field_mode(&text("gauge_f5_1.json")).unwrap(), FieldMode::Prime(5));
    // parse reads the scalars over the requested field, which is how the override works
    let doc = model::parse::<Q>(&text("gauge_f5_1.json")).unwrap();
    assert_eq!(model::declared_field_mode(&model::serialize(&doc)).unwrap(), FieldMode::Rationals);
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["field_mode"] = serde_json::json!({ "prime": 4 });
    let e = model::parse::<Q>(&model::canonical_text(&v)).unwrap_err();
    assert!(matches!(&e, Error::Schema { field, .. } if field == "field_mode"), "{e}");
}

#[test]
fn field_override_parses_primes_and_rationals() {
    assert_eq!(FieldMode::parse("rationals").unwrap(), FieldMode::Rationals);
    assert_eq!(FieldMode::parse("0").unwrap(), FieldMode::Rationals);
    assert_eq!(FieldMode::parse("7").unwrap(), FieldMode::Prime(7));
    assert_eq!(FieldMode::parse("4").unwrap_err().class(), "SchemaError");
    assert_eq!(FieldMode::parse("q").unwrap_err().class(), "SchemaError");
}

#[test]
fn rational_documents_read_mod_p() {
    let doc = model::parse::<F7>(&text("z2z2.json")).unwrap();
    let data = doc.bialgebroid.unwrap();
    assert_eq!(data.ring.total.dim(), 4);
    // the serialized form records the field it was read over
    assert_eq!(model::declared_field_mode(&model::serialize(&model::parse::<F7>(&text("z2.json")).unwrap())).unwrap(), FieldMode::Prime(7));
}

#[test]
fn zero_denominator_is_a_schema_error_at_the_scalar() {
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["morphisms"]["counit"][0][1] = serde_json::json!("1/0");
    let e = model::parse::<Q>(&model::canonical_text(&v)).unwrap_err();
    assert!(matches!(&e, Error::Schema { field, .. } if field == "morphisms.counit[0][1]"), "{e}");
}

#[test]
fn decimal_scalars_are_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["morphisms"]["counit"][0][1] = serde_json::json!("0.5");
    assert_eq!(model::parse::<Q>(&model::canonical_text(&v)).unwrap_err().class(), "SchemaError");
    v["morphisms"]["counit"][0][1] = serde_json::json!(1);
    assert_eq!(model::parse::<Q>(&model::canonical_text(&v)).unwrap_err().class(), "SchemaError");
}

#[test]
fn missing_counit_names_the_field() {
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["morphisms"].as_object_mut().unwrap().remove("counit");
    let e = model::parse::<Q>(&model::canonical_text(&v)).unwrap_err();
    assert!(matches!(&e, Error::Schema { field, .. } if field == "morphisms.counit"), "{e}");
}

#[test]
fn unknown_keys_and_versions_are_rejected() {
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["extra"] = serde_json::json!(1);
    assert_eq!(model::parse::<Q>(&model::canonical_text(&v)).unwrap_err().class(), "SchemaError");
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["schema_version"] = serde_json::json!("2");
    assert_eq!(model::parse::<Q>(&model::canonical_text(&v)).unwrap_err().class(), "SchemaError");
}

#[test]
fn shape_errors_are_schema_errors() {
    let mut v: serde_json::Value = serde_json::from_str(&text("z2.json")).unwrap();
    v["coproduct"].as_array_mut().unwrap().pop();
    assert_eq!(model::parse::<Q>(&model::canonical_text(&v)).unwrap_err().class(), "SchemaError");
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let e = model::parse::<Q>("{\n  \"name\": \"x\",\n  oops\n}\n").unwrap_err();
    assert_eq!(e.class(), "SyntaxError");
    assert_eq!(e.witness(), vec![3, 3]);
}

#[test]
fn validation_errors_come_from_the_eager_constructors() {
    let b = corpus::broken().into_iter().find(|b| b.path == "broken/nonassociative.json").unwrap();
    assert_eq!(model::parse::<Q>(&b.text).unwrap_err().class(), "AlgebraAxiom");
}

#[test]
fn serialization_is_deterministic() {
    let doc = corpus::t2();
    assert_eq!(model::serialize(&doc), model::serialize(&doc.clone()));
    assert!(model::serialize(&doc).ends_with("}\n"));
}

fn small_q() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Q::new(n, d))
}

proptest! {
    #[test]
    fn cocycle_blocks_round_trip(entries in prop::collection::vec(small_q(), 4)) {
        let form = Matrix::from_fn(1, 4, |_, c| entries[c].clone());
        let doc = ModelDocument { cocycle: Some(form), ..corpus::z2() };
        let text = model::serialize(&doc);
        let back = model::parse::<Q>(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(model::serialize(&back), text);
    }

    #[test]
    fn scalars_print_in_lowest_terms(n in -1000i64..1000, d in 1i64..1000) {
        let q = Q::new(n, d);
        prop_assert_eq!(Q::parse(&q.to_string()).unwrap(), q.clone());
        prop_assert_eq!(Q::parse(&format!("{}/{}", 3 * n, 3 * d)).unwrap(), q);
    }

    #[test]
    fn rational_field_laws(a in small_q(), b in small_q(), c in small_q()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), Q::zero());
        if let Some(i) = a.inv() {
            prop_assert_eq!(a.mul(&i), Q::one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn prime_field_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let (a, b, c) = (F7::from_i64(a), F7::from_i64(b), F7::from_i64(c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), F7::zero());
        if let Some(i) = a.inv() {
            prop_assert_eq!(a.mul(&i), F7::one());
        }
        prop_assert_eq!(F7::parse(&a.to_string()).unwrap(), a);
    }
}
