use std::path::{Path, PathBuf};
use std::process::Command;

use hgx_core::model;
use hgx_core::Q;

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hgx_env(args: &[&str], field: Option<&str>) -> Out {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hgx"));
    cmd.args(args).env_remove("HGX_FIELD");
    if let Some(f) = field {
        cmd.env("HGX_FIELD", f);
    }
    let out = cmd.output().expect("hgx runs");
    Out {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn hgx(args: &[&str]) -> Out {
    hgx_env(args, None)
}

#[test]
fn check_prints_text_and_lines_by_default() {
    let o = hgx(&["check", &corpus("z2.json"), "--suite", "hopf"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.starts_with("suite hopf: "), "{}", o.stdout);
    assert!(o.stdout.contains("CHECK hopf lambda-bijective lambda:L(x)BbarL->L<>L PASS\n"));
}

#[test]
fn lines_format_is_machine_readable_only() {
    let o = hgx(&["check", &corpus("t2.json"), "--suite", "bialgebroid", "--format", "lines"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.lines().all(|l| l.starts_with("CHECK bialgebroid ") && l.ends_with(" PASS") && l.split(' ').count() == 5), "{}", o.stdout);
    let t = hgx(&["check", &corpus("t2.json"), "--suite", "bialgebroid", "--format", "text"]);
    assert!(!t.stdout.contains("CHECK "));
}

#[test]
fn check_all_passes_on_the_group_algebra() {
    let o = hgx(&["check", &corpus("z2.json"), "--suite", "all", "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    for s in ["bialgebroid", "hopf", "galois", "comodule", "twist", "double", "cleft", "crossed", "gauge"] {
        assert!(o.stdout.contains(&format!("CHECK {s} ")), "suite {s} missing");
    }
}

#[test]
fn output_is_deterministic() {
    let a = hgx(&["check", &corpus("qxq.json")]);
    let b = hgx(&["check", &corpus("qxq.json")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failing_check_exits_one_with_the_class_and_witness() {
    let o = hgx(&["check", &corpus("broken/not_hopf.json"), "--suite", "hopf", "--format", "lines"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("CHECK hopf lambda-bijective lambda:L(x)BbarL->L<>L FAIL error=NotLeftHopf witness=[3,4]"), "{}", o.stdout);
}

#[test]
fn malformed_documents_exit_one_with_a_position_or_field() {
    let o = hgx(&["check", &corpus("broken/syntax.json")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("ERROR SyntaxError witness=["), "{}", o.stdout);
    let o = hgx(&["check", &corpus("broken/zero_denominator.json")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("ERROR SchemaError field=morphisms.counit[0][1] "), "{}", o.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hgx(&["check", &corpus("z2.json"), "--suite", "nope"]).code, 2);
    assert_eq!(hgx(&["frobnicate"]).code, 2);
    assert_eq!(hgx(&["twist", &corpus("z2.json")]).code, 2);
    let o = hgx(&["check", "/nonexistent/model.json"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cannot read"), "{}", o.stderr);
}

#[test]
fn field_override_from_the_environment() {
    let o = hgx_env(&["check", &corpus("z2z2.json"), "--suite", "hopf", "--format", "lines"], Some("7"));
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = hgx_env(&["check", &corpus("z2.json")], Some("4"));
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("HGX_FIELD"));
}

#[test]
fn group_algebra_stays_hopf_in_characteristic_two() {
    let o = hgx_env(&["check", &corpus("z2.json"), "--suite", "hopf", "--format", "lines"], Some("2"));
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn gauge_documents_must_share_a_field_without_override() {
    let o = hgx(&["gauge", &corpus("gauge_f5_4.json"), &corpus("crossed_swap.json")]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("ERROR SchemaError field=field_mode"), "{}", o.stdout);
}

#[test]
fn twist_then_check_hopf() {
    let out = scratch("klein_twist.json");
    let o = hgx(&["twist", &corpus("z2z2.json"), "--cocycle", &corpus("minus.json"), "-o", out.to_str().unwrap(), "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("CHECK twist cocycle "));
    let o = hgx(&["check", out.to_str().unwrap(), "--suite", "hopf"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = model::parse::<Q>(&text).unwrap();
    assert_eq!(model::serialize(&doc), text);
}

#[test]
fn twist_rejects_a_non_cocycle() {
    let out = scratch("bad_twist.json");
    let o = hgx(&["twist", &corpus("z3.json"), "--cocycle", &corpus("broken/not_cocycle.json"), "-o", out.to_str().unwrap(), "--format", "lines"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("ERROR CocycleLawFails"), "{}", o.stdout);
}

#[test]
fn twist_needs_a_cocycle_block() {
    let out = scratch("no_cocycle.json");
    let o = hgx(&["twist", &corpus("z2.json"), "--cocycle", &corpus("z2.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("ERROR SchemaError field=cocycle"), "{}", o.stdout);
}

#[test]
fn twisting_the_kappa_double_gives_the_tau_double() {
    let tt = scratch("tt.json");
    let kk = scratch("kk.json");
    let back = scratch("kk_twisted.json");
    assert_eq!(hgx(&["double", &corpus("z2_double.json"), "--tau", &corpus("sign.json"), "-o", tt.to_str().unwrap()]).code, 0);
    let o = hgx(&["double", &corpus("z2_double.json"), "--tau", &corpus("sign.json"), "--kappa", &corpus("trivial_pairing.json"), "-o", kk.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert_eq!(hgx(&["check", kk.to_str().unwrap(), "--suite", "twist"]).code, 0);
    assert_eq!(hgx(&["twist", kk.to_str().unwrap(), "--cocycle", kk.to_str().unwrap(), "-o", back.to_str().unwrap()]).code, 0);
    let a = model::parse::<Q>(&std::fs::read_to_string(&tt).unwrap()).unwrap();
    let b = model::parse::<Q>(&std::fs::read_to_string(&back).unwrap()).unwrap();
    let (a, b) = (a.bialgebroid.unwrap(), b.bialgebroid.unwrap());
    assert_eq!(b.ring.total.name(), "QZ2><QZ2^G");
    assert_eq!(a.ring.total.structure(), b.ring.total.structure());
    assert_eq!(a.ring.total.unit(), b.ring.total.unit());
    assert_eq!((&a.ring.s.matrix, &a.ring.t.matrix, &a.delta, &a.eps), (&b.ring.s.matrix, &b.ring.t.matrix, &b.delta, &b.eps));
    assert_eq!(hgx(&["check", tt.to_str().unwrap(), "--suite", "all"]).code, 0);
}

#[test]
fn double_rejects_a_bad_pairing() {
    let out = scratch("bad_double.json");
    let o = hgx(&["double", &corpus("z2.json"), "--tau", &corpus("broken/bad_pairing.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("ERROR AxiomFails"), "{}", o.stdout);
}

#[test]
fn crossed_product_is_a_cleft_extension() {
    let out = scratch("swap_crossed.json");
    let o = hgx(&[
        "crossed",
        &corpus("crossed_swap_ring.json"),
        "--sigma",
        &corpus("swap_sigma.json"),
        "--measuring",
        &corpus("swap_measuring.json"),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = hgx(&["check", out.to_str().unwrap(), "--suite", "cleft", "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = hgx(&["check", out.to_str().unwrap(), "--suite", "galois", "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("CHECK galois document-can-bijective "));
}

#[test]
fn gauge_search_reports_u() {
    let o = hgx(&["gauge", &corpus("gauge_f5_4.json"), &corpus("gauge_f5_1.json"), "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let u = o.stdout.lines().find(|l| l.starts_with("GAUGE u=")).unwrap();
    assert!(u == "GAUGE u=[[1,2]] ambiguity=1" || u == "GAUGE u=[[1,3]] ambiguity=1", "{u}");
}

#[test]
fn gauge_extraction_between_cleavings() {
    let o = hgx(&["gauge", &corpus("z2_cleft.json"), &corpus("z2_cleft_sign.json"), "--extract", "--format", "lines"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("GAUGE u=[[1,-1]] "), "{}", o.stdout);
}

#[test]
fn inequivalent_cocycles_exit_one() {
    let o = hgx(&["gauge", &corpus("broken/gauge_f5_2.json"), &corpus("gauge_f5_1.json"), "--format", "lines"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("FAIL error=NotEquivalent witness=["), "{}", o.stdout);
    assert!(!o.stdout.contains("GAUGE u="));
}
