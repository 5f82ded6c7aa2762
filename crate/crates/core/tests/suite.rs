use hgx_core::corpus::{self, Broken};
use hgx_core::model::{self, FieldMode};
use hgx_core::suite::{compare_gauge, run, run_all, Suite};
use hgx_core::with_field;
use hgx_core::Field;

fn mode(text: &str) -> FieldMode {
    model::declared_field_mode(text).expect("corpus documents declare a field mode")
}

#[test]
fn every_corpus_document_passes_every_suite() {
    for f in corpus::files() {
        with_field!(mode(&f.text), F => {
            let doc = model::parse::<F>(&f.text).unwrap_or_else(|e| panic!("{}: {e}", f.path));
            // cocycle, pairing and crossed-product inputs carry no bialgebroid of their own
            if doc.bialgebroid.is_none() {
                continue;
            }
            for r in run_all(&doc) {
                assert!(r.pass(), "{} {}:\n{}", f.path, r.suite, r.lines());
                let canonical_instance = r.suite != "double" || doc.pairing.is_some() || doc.require_bialgebroid().unwrap().ring.base.is_commutative();
                assert!(!r.checks.is_empty() || !canonical_instance, "{} {} ran no checks", f.path, r.suite);
            }
        })
    }
}

fn suite_of(b: &Broken) -> Suite {
    b.args.iter().position(|a| *a == "--suite").map_or(Suite::Bialgebroid, |i| Suite::parse(b.args[i + 1]).expect("known suite"))
}

/// The class and witness a broken fixture fails with at the library level.
/// Schema errors are located by a field path rather than by indices.
fn failure(b: &Broken) -> (String, String) {
    let mode = model::declared_field_mode(&b.text).unwrap_or(FieldMode::Rationals);
    with_field!(mode, F => match model::parse::<F>(&b.text) {
        Err(hgx_core::Error::Schema { field, .. }) => ("SchemaError".to_string(), field),
        Err(e) => (e.class().to_string(), format!("{:?}", e.witness())),
        Ok(doc) if b.args[0] == "gauge" => {
            let other = corpus::files().into_iter().find(|f| b.args[2].ends_with(f.path)).expect("companion in corpus");
            let (r, u) = compare_gauge(&doc, &model::parse::<F>(&other.text).expect("valid companion"), false);
            assert!(u.is_none());
            let c = r.failures().next().expect("a failing check");
            (c.error.clone().unwrap_or_default(), format!("{:?}", c.witness))
        }
        Ok(doc) => {
            let r = run(&doc, suite_of(b));
            let c = r.failures().next().unwrap_or_else(|| panic!("{} passes", b.path));
            (c.error.clone().unwrap_or_default(), format!("{:?}", c.witness))
        }
    })
}

#[test]
fn broken_fixtures_fail_with_their_class_and_a_witness() {
    for b in corpus::broken() {
        let (class, witness) = failure(&b);
        assert_eq!(class, b.class, "{}", b.path);
        assert!(!witness.is_empty() && witness != "[]", "{} has no witness", b.path);
    }
}

#[test]
fn schema_errors_name_the_field() {
    let by_path = |p: &str| corpus::broken().into_iter().find(|b| b.path == p).unwrap();
    let e = model::parse::<hgx_core::Q>(&by_path("broken/missing_counit.json").text).unwrap_err();
    assert!(matches!(&e, hgx_core::Error::Schema { field, .. } if field == "morphisms.counit"), "{e}");
    let e = model::parse::<hgx_core::Q>(&by_path("broken/zero_denominator.json").text).unwrap_err();
    assert!(matches!(&e, hgx_core::Error::Schema { field, .. } if field == "morphisms.counit[0][1]"), "{e}");
}

#[test]
fn syntax_errors_carry_a_position() {
    let b = corpus::broken().into_iter().find(|b| b.class == "SyntaxError").unwrap();
    let e = model::parse::<hgx_core::Q>(&b.text).unwrap_err();
    let lines = b.text.lines().count();
    assert_eq!(e.witness().len(), 2);
    assert!(e.witness()[0] >= lines, "{e} on {lines} lines");
}

#[test]
fn gauge_comparison_finds_u_between_equivalent_cocycles() {
    let files = corpus::files();
    let text = |p: &str| &files.iter().find(|f| f.path == p).unwrap().text;
    let a = model::parse::<hgx_core::field::F5>(text("gauge_f5_4.json")).unwrap();
    let b = model::parse::<hgx_core::field::F5>(text("gauge_f5_1.json")).unwrap();
    let (r, u) = compare_gauge(&a, &b, false);
    assert!(r.pass(), "{}", r.lines());
    // u(g)^2 = 4 in F_5: u(g) is 2 or 3
    let g = u.unwrap().u.col(1)[0].to_string();
    assert!(g == "2" || g == "3", "{g}");
}

#[test]
fn gauge_extraction_between_two_cleavings() {
    // γ'(g) = -g is a second cleaving of QZ2 over itself; u(g) = -1 carries γ to γ'
    let (r, u) = compare_gauge(&corpus::z2_cleft(1), &corpus::z2_cleft(-1), true);
    assert!(r.pass(), "{}", r.lines());
    let u = u.unwrap();
    assert_eq!(u.u.col(0)[0], hgx_core::Q::from_i64(1));
    assert_eq!(u.u.col(1)[0], hgx_core::Q::from_i64(-1));
}

#[test]
fn gauge_extraction_needs_one_comodule_algebra() {
    let (r, u) = compare_gauge(&corpus::z2_cleft(1), &corpus::z2(), true);
    assert!(u.is_none());
    assert_eq!(r.failures().next().unwrap().id, "same-comodule-algebra");
}

#[test]
fn field_override_runs_the_rational_corpus_mod_p() {
    let f = corpus::files().into_iter().find(|f| f.path == "z2z2.json").unwrap();
    let doc = model::parse::<hgx_core::field::F7>(&f.text).unwrap();
    for r in run_all(&doc) {
        assert!(r.pass(), "{}", r.lines());
    }
}
