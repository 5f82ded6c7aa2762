//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Each criterion requires its checks to be present and passing;
//! a missing check id counts as a failure.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hgx_core::bialgebroid::Bialgebroid;
use hgx_core::corpus;
use hgx_core::double::{double_bialgebroid, DoubleSpace, SkewPairing};
use hgx_core::field::F5;
use hgx_core::model::{self, ModelDocument};
use hgx_core::suite::{self, Suite};
use hgx_core::twist::{twist_bialgebroid, BaseCocycle};
use hgx_core::{Field, Report, Q};

const CORPUS_MODELS: [&str; 5] = ["z2", "z3", "z2z2", "qxq", "t2"];
const GROUP_MODELS: [&str; 3] = ["z2", "z3", "z2z2"];
const BUDGET: Duration = Duration::from_secs(10);

type Criterion = fn() -> Result<String, String>;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load<F: Field>(name: &str) -> ModelDocument<F> {
    let path = corpus_dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    model::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Reports gathered for one criterion, each tagged with its model.
#[derive(Default)]
struct Runs {
    reports: Vec<(String, Report)>,
}

impl Runs {
    fn run<F: Field>(&mut self, tag: &str, doc: &ModelDocument<F>, suites: &[Suite]) {
        for &s in suites {
            self.reports.push((tag.to_string(), suite::run(doc, s)));
        }
    }

    fn add(&mut self, tag: &str, r: Report) {
        self.reports.push((tag.to_string(), r));
    }

    fn checks(&self) -> usize {
        self.reports.iter().map(|(_, r)| r.checks.len()).sum()
    }

    /// The first failing check over all reports.
    fn failure(&self) -> Option<String> {
        self.reports.iter().find_map(|(tag, r)| {
            r.failures().next().map(|c| format!("{tag}: {} {} {} witness={:?}", r.suite, c.id, c.error.as_deref().unwrap_or("unequal"), c.witness))
        })
    }

    /// Number of checks in the reports of `tag` whose id is `id` or `id-<k>`.
    fn count(&self, tag: &str, id: &str) -> usize {
        self.reports
            .iter()
            .filter(|(t, _)| t == tag)
            .flat_map(|(_, r)| &r.checks)
            .filter(|c| c.id == id || c.id.strip_prefix(id).and_then(|rest| rest.strip_prefix('-')).is_some_and(|k| k.parse::<usize>().is_ok()))
            .count()
    }

    fn require(&self, tags: &[&str], ids: &[&str], at_least: usize) -> Result<(), String> {
        for tag in tags {
            for id in ids {
                let n = self.count(tag, id);
                if n < at_least {
                    return Err(format!("{tag}: {id} ran {n} times, expected at least {at_least}"));
                }
            }
        }
        Ok(())
    }

    fn verdict(&self) -> Result<String, String> {
        match self.failure() {
            Some(f) => Err(f),
            None => Ok(format!("{} checks", self.checks())),
        }
    }
}

fn within_budget(start: Instant, summary: String) -> Result<String, String> {
    let t = start.elapsed();
    if t < BUDGET {
        Ok(format!("{summary} in {:.2}s", t.as_secs_f64()))
    } else {
        Err(format!("{summary} took {:.2}s, budget {}s", t.as_secs_f64(), BUDGET.as_secs()))
    }
}

fn axiom_suites() -> Result<String, String> {
    let start = Instant::now();
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        let doc = load::<Q>(m);
        runs.run(m, &doc, &[Suite::Bialgebroid]);
        let bg = Bialgebroid::new(doc.bialgebroid.clone().unwrap()).map_err(|e| format!("{m}: {e}"))?;
        let mut r = Report::new("hopf");
        r.record_result("lambda-bijective", "lambda", hgx_core::bialgebroid::galois_lambda(&bg).map(|_| None));
        r.record_result("mu-bijective", "mu", hgx_core::bialgebroid::galois_mu(&bg).map(|_| None));
        runs.add(m, r);
    }
    runs.require(&CORPUS_MODELS, &["takeuchi", "delta-mult", "delta-unit", "coassoc", "counit-left", "counit-right", "eps-character", "lambda-bijective", "mu-bijective"], 1)?;
    let summary = runs.verdict()?;
    within_budget(start, summary)
}

fn identity_catalogs() -> Result<String, String> {
    let start = Instant::now();
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Hopf]);
    }
    runs.require(&CORPUS_MODELS, &["pm", "bracket"], 10)?;
    runs.require(&CORPUS_MODELS, &["mixed"], 1)?;
    let summary = runs.verdict()?;
    within_budget(start, summary)
}

fn galois_layer() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Galois]);
    }
    runs.require(
        &CORPUS_MODELS,
        &["can-bijective", "coinvariants", "translation", "skew-regular", "skew-translation", "regular", "anti-translation", "reconstruct-pm-can", "reconstruct-pm-regular", "reconstruct-bracket-skew", "reconstruct-bracket-anti"],
        1,
    )?;
    runs.verdict()
}

fn structure_theorems() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Galois]);
    }
    let ids = ["left-hopf-module", "left-induction", "skew-hopf-module", "skew-induction", "anti-hopf-module", "anti-induction", "regular-anti-hopf-module", "regular-anti-induction"];
    runs.require(&CORPUS_MODELS, &ids, 3)?;
    runs.verdict()
}

fn twist_layer() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Twist]);
    }
    runs.require(&CORPUS_MODELS, &["trivial-twist"], 1)?;
    let klein = ModelDocument { cocycle: load::<Q>("minus").cocycle, ..load::<Q>("z2z2") };
    runs.run("klein", &klein, &[Suite::Twist]);
    runs.require(&["klein"], &["cocycle", "normalized", "pair", "left-hopf", "anti-left-hopf", "left-twist-translation", "right-twist-translation", "untwist"], 1)?;
    let data = klein.bialgebroid.clone().unwrap();
    let bg = Bialgebroid::new(data).map_err(|e| e.to_string())?;
    let c = BaseCocycle::new(&bg, klein.cocycle.clone().unwrap()).map_err(|e| e.to_string())?;
    let tw = twist_bialgebroid(&bg, &c).map_err(|e| e.to_string())?;
    let twisted = ModelDocument::with_bialgebroid("klein^G", tw.data());
    runs.run("klein^G", &twisted, &[Suite::Bialgebroid, Suite::Hopf]);
    runs.require(&["klein^G"], &["takeuchi", "pm", "bracket", "mixed"], 1)?;
    runs.verdict()
}

fn double_layer() -> Result<String, String> {
    let mut runs = Runs::default();
    let doc = load::<Q>("z2_double");
    runs.run("z2-double", &doc, &[Suite::Double]);
    runs.require(&["z2-double"], &["bimodule", "double", "left-hopf", "anti-left-hopf", "closed-pm", "closed-bracket", "pairing-cocycle", "pairing-cocycle-inverse", "cotwist", "corollary-galois"], 1)?;
    let l = Bialgebroid::new(doc.bialgebroid.clone().unwrap()).map_err(|e| e.to_string())?;
    let p = doc.pairing.clone().unwrap();
    let pi = Bialgebroid::new(p.pi.unwrap()).map_err(|e| e.to_string())?;
    let tau = SkewPairing::new(&l, &pi, p.form.unwrap()).map_err(|e| e.to_string())?;
    let space = DoubleSpace::new(&pi, &l).map_err(|e| e.to_string())?;
    let d = double_bialgebroid(&space, &tau).map_err(|e| e.to_string())?;
    let dd = ModelDocument::with_bialgebroid("double", d.bg.data());
    runs.run("double", &dd, &Suite::ALL);
    runs.require(&["double"], &["takeuchi", "pm", "bracket", "can-bijective", "trivial-twist", "ring-identity"], 1)?;
    runs.verdict()
}

fn cleft_layer() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in GROUP_MODELS {
        let doc = load::<Q>(m);
        runs.run(m, &doc, &[Suite::Cleft, Suite::Crossed]);
    }
    let cleft_ids = ["j-bijective", "extract", "measuring-product", "measuring-unit", "cocycle", "twisted-module", "ring-identity", "extract-products", "crossed-table", "normal-basis-table", "crossed-alpha-beta"];
    runs.require(&GROUP_MODELS, &cleft_ids, 1)?;
    runs.run("crossed-swap", &load::<Q>("crossed_swap"), &[Suite::Crossed]);
    runs.run("gauge-f5-4", &load::<F5>("gauge_f5_4"), &[Suite::Crossed]);
    runs.run("z2-cleft-sign", &load::<Q>("z2_cleft_sign"), &[Suite::Cleft]);
    runs.require(&["crossed-swap", "gauge-f5-4"], &["measuring-product", "ring-identity", "crossed-alpha-beta", "crossed-table"], 1)?;
    runs.require(&["z2-cleft-sign"], &["extract-products", "crossed-table", "normal-basis-table"], 1)?;
    runs.verdict()
}

fn gauge_layer() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in GROUP_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Gauge]);
    }
    runs.run("crossed-swap", &load::<Q>("crossed_swap"), &[Suite::Gauge]);
    runs.run("gauge-f5-4", &load::<F5>("gauge_f5_4"), &[Suite::Gauge]);
    runs.run("gauge-f5-1", &load::<F5>("gauge_f5_1"), &[Suite::Gauge]);
    let tags = ["z2", "z3", "z2z2", "crossed-swap", "gauge-f5-4", "gauge-f5-1"];
    runs.require(&tags, &["sample", "transform", "measuring-product", "cocycle", "bijective", "multiplicative", "extract-gauge", "extract-transform"], 1)?;
    let (r, u) = suite::compare_gauge(&load::<F5>("gauge_f5_4"), &load::<F5>("gauge_f5_1"), false);
    if u.is_none() {
        return Err("gauge_f5_4 vs gauge_f5_1: no gauge element found".into());
    }
    runs.add("search", r);
    let (r, u) = suite::compare_gauge(&load::<Q>("z2_cleft"), &load::<Q>("z2_cleft_sign"), true);
    if u.is_none() {
        return Err("z2_cleft vs z2_cleft_sign: no gauge element extracted".into());
    }
    runs.add("extract", r);
    runs.verdict()
}

fn oracle_discipline() -> Result<String, String> {
    let mut runs = Runs::default();
    for m in CORPUS_MODELS {
        runs.run(m, &load::<Q>(m), &[Suite::Hopf, Suite::Galois, Suite::Twist, Suite::Cleft, Suite::Crossed, Suite::Gauge]);
    }
    let klein = ModelDocument { cocycle: load::<Q>("minus").cocycle, ..load::<Q>("z2z2") };
    runs.run("klein", &klein, &[Suite::Twist]);
    runs.run("z2-double", &load::<Q>("z2_double"), &[Suite::Double]);
    runs.run("crossed-swap", &load::<Q>("crossed_swap"), &[Suite::Crossed]);
    // closed form against generic solve, per formula
    runs.require(&GROUP_MODELS, &["antipode-pm", "antipode-bracket"], 1)?;
    runs.require(&CORPUS_MODELS, &["skew-closed", "regular-closed", "reconstruct-pm-can", "reconstruct-pm-regular", "reconstruct-bracket-skew", "reconstruct-bracket-anti"], 1)?;
    runs.require(&CORPUS_MODELS, &["left-twist-translation", "right-twist-translation", "cleft-translation", "crossed-alpha-beta", "extract-products"], 1)?;
    runs.require(&["klein"], &["left-twist-translation", "right-twist-translation"], 1)?;
    runs.require(&["z2-double"], &["closed-pm", "closed-bracket", "pairing-cocycle-inverse"], 1)?;
    runs.require(&["crossed-swap"], &["crossed-alpha-beta"], 1)?;
    runs.verdict()
}

fn hgx(args: &[String]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hgx")).args(args).env_remove("HGX_FIELD").output().expect("hgx runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

/// The designated class must appear with a concrete witness: a nonempty index
/// list, or the field path for a schema error.
fn has_witness(stdout: &str, class: &str) -> bool {
    stdout.lines().any(|l| {
        let fail = l.starts_with("CHECK ") && l.contains(&format!(" FAIL error={class} ")) && !l.ends_with("witness=[]");
        let error = l.starts_with(&format!("ERROR {class} ")) && (l.contains(" field=") || !l.contains(" witness=[] "));
        fail || error
    })
}

fn negative_fixtures() -> Result<String, String> {
    let dir = corpus_dir();
    let broken = corpus::broken();
    for b in &broken {
        let file = dir.join(b.path);
        let args: Vec<String> = b
            .args
            .iter()
            .map(|a| a.replace("{}", &file.to_string_lossy()).replace("{dir}", &dir.to_string_lossy()))
            .chain(["--format".to_string(), "lines".to_string()])
            .collect();
        let (code, stdout) = hgx(&args);
        if code != 1 {
            return Err(format!("{}: exit {code}, expected 1", b.path));
        }
        if !has_witness(&stdout, b.class) {
            return Err(format!("{}: no {} with a witness in output", b.path, b.class));
        }
    }
    let (code, _) = hgx(&["check".into(), dir.join("z2.json").to_string_lossy().into_owned(), "--suite".into(), "nonsense".into()]);
    if code != 2 {
        return Err(format!("usage error exited {code}, expected 2"));
    }
    Ok(format!("{} fixtures, usage exit 2", broken.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("axiom suites and both Hopf inversions", axiom_suites),
        ("identity catalogs over all basis tuples", identity_catalogs),
        ("Galois layer of the regular extensions", galois_layer),
        ("structure-theorem round trips", structure_theorems),
        ("twist layer", twist_layer),
        ("double layer", double_layer),
        ("cleft and crossed product layer", cleft_layer),
        ("gauge layer", gauge_layer),
        ("closed forms against generic solves", oracle_discipline),
        ("negative fixtures through the CLI", negative_fixtures),
    ];
    let mut ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let res = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match res {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                ok = false;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
