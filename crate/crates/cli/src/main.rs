//! `hgx`: verify serialized Hopf algebroid models and emit derived models.
//!
//! Exit status is 0 when every check passes, 1 when a document is malformed
//! or a check fails, and 2 for usage errors and unreadable files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hgx_core::bialgebroid::galois_lambda;
use hgx_core::cleft::{check_measuring_cocycle, crossed_product, BbarRing};
use hgx_core::double::{cocycle_from_pairings, double_bialgebroid, DoubleSpace, SkewPairing};
use hgx_core::model::{self, CleavingBlock, ComoduleAlgebraBlock, FieldMode, ModelDocument};
use hgx_core::suite::{self, Suite};
use hgx_core::twist::{twist_bialgebroid, BaseCocycle};
use hgx_core::{with_field, Bialgebroid, Error, Field, Matrix, Report};

#[derive(Parser)]
#[command(name = "hgx", version, about = "Exact verification of finite-dimensional Hopf algebroid models")]
struct Cli {
    /// Report format; both are printed when omitted.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Lines,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites on a model.
    Check {
        model: PathBuf,
        /// bialgebroid, hopf, galois, comodule, twist, double, cleft, crossed, gauge or all
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        suite: Suites,
    },
    /// Twist a model by the cocycle in another document.
    Twist {
        model: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the double of a document's pairing partners. With `--kappa` the
    /// output is the kappa-kappa double carrying the cocycle of the two pairings.
    Double {
        #[arg(value_name = "PIL")]
        model: PathBuf,
        #[arg(long)]
        tau: PathBuf,
        #[arg(long)]
        kappa: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the crossed product of a model's ring by a measuring and a cocycle.
    Crossed {
        model: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long)]
        measuring: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide whether two crossed product data are gauge equivalent.
    Gauge {
        #[arg(value_name = "MODEL_A")]
        a: PathBuf,
        #[arg(value_name = "MODEL_B")]
        b: PathBuf,
        /// Extract u from two cleavings of one comodule algebra instead of searching.
        #[arg(long)]
        extract: bool,
    },
}

#[derive(Clone)]
struct Suites(Vec<Suite>);

fn parse_suites(s: &str) -> Result<Suites, String> {
    if s == "all" {
        return Ok(Suites(Suite::ALL.to_vec()));
    }
    Suite::parse(s).map(|x| Suites(vec![x])).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite {s:?}; expected one of {} or all", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Invalid { path: PathBuf, error: Error },
}

type Outcome = Result<bool, Failure>;

struct Printer {
    format: Option<Format>,
    out: String,
}

impl Printer {
    fn report(&mut self, r: &Report) {
        if self.format != Some(Format::Lines) {
            self.out.push_str(&r.text());
        }
        if self.format != Some(Format::Text) {
            self.out.push_str(&r.lines());
        }
    }

    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Parse over `F`. Without an override every document must declare `mode`.
fn load<F: Field>(path: &Path, mode: FieldMode, overridden: bool) -> Result<ModelDocument<F>, Failure> {
    let text = read(path)?;
    let invalid = |error| Failure::Invalid { path: path.to_path_buf(), error };
    if !overridden {
        let declared = model::declared_field_mode(&text).map_err(invalid)?;
        if declared != mode {
            return Err(invalid(Error::Schema { field: "field_mode".into(), message: format!("declares {declared:?} but the run is over {mode:?}") }));
        }
    }
    model::parse::<F>(&text).map_err(invalid)
}

fn write(path: &Path, doc: &ModelDocument<impl Field>) -> Result<(), Failure> {
    std::fs::write(path, model::serialize(doc)).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

struct Run<'a> {
    mode: FieldMode,
    overridden: bool,
    printer: &'a mut Printer,
}

impl Run<'_> {
    fn load<F: Field>(&self, path: &Path) -> Result<ModelDocument<F>, Failure> {
        load(path, self.mode, self.overridden)
    }
}

/// Attach the document path to library errors.
fn at<T>(path: &Path, r: hgx_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|error| Failure::Invalid { path: path.to_path_buf(), error })
}

fn block<T>(path: &Path, v: Option<T>, field: &str) -> Result<T, Failure> {
    at(path, v.ok_or_else(|| Error::Schema { field: field.into(), message: "the document has no such block".into() }))
}

/// Print a validation report and pass on the validated value.
fn gated<T>(p: &mut Printer, path: &Path, (v, (rep, err)): (Option<T>, (Report, Option<Error>))) -> Result<T, Failure> {
    p.report(&rep);
    match v {
        Some(v) => Ok(v),
        None => at(path, Err(err.expect("failed validation carries an error"))),
    }
}

fn bialgebroid<F: Field>(path: &Path, doc: &ModelDocument<F>) -> Result<Bialgebroid<F>, Failure> {
    at(path, doc.require_bialgebroid().and_then(|d| Bialgebroid::new(d.clone())))
}

fn check<F: Field>(run: &mut Run, path: &Path, suites: &[Suite]) -> Outcome {
    let doc = run.load::<F>(path)?;
    let mut pass = true;
    for &s in suites {
        let r = suite::run(&doc, s);
        pass &= r.pass();
        run.printer.report(&r);
    }
    Ok(pass)
}

fn twist<F: Field>(run: &mut Run, path: &Path, cocycle: &Path, output: &Path) -> Outcome {
    let doc = run.load::<F>(path)?;
    let bg = bialgebroid(path, &doc)?;
    let form = block(cocycle, run.load::<F>(cocycle)?.cocycle, "cocycle")?;
    let c = gated(run.printer, cocycle, BaseCocycle::check(&bg, form))?;
    let tw = at(path, twist_bialgebroid(&bg, &c))?;
    write(output, &ModelDocument::with_bialgebroid(format!("{}^G", doc.name), tw.data()))?;
    Ok(true)
}

fn pairing_form<F: Field>(run: &Run, path: &Path) -> Result<Matrix<F>, Failure> {
    let doc = run.load::<F>(path)?;
    block(path, doc.pairing.and_then(|p| p.form), "pairing.form")
}

fn double<F: Field>(run: &mut Run, path: &Path, tau: &Path, kappa: Option<&Path>, output: &Path) -> Outcome {
    let doc = run.load::<F>(path)?;
    let l = bialgebroid(path, &doc)?;
    let pi = match doc.pairing.as_ref().and_then(|p| p.pi.clone()) {
        Some(d) => at(path, Bialgebroid::new(d))?,
        None => l.clone(),
    };
    let form = pairing_form::<F>(run, tau)?;
    let t = gated(run.printer, tau, SkewPairing::check(&l, &pi, form))?;
    let space = at(path, DoubleSpace::new(&pi, &l))?;
    let name = format!("{}><{}", pi.total().name(), l.total().name());
    let out = match kappa {
        None => ModelDocument::with_bialgebroid(name, at(path, double_bialgebroid(&space, &t))?.bg.data()),
        Some(kappa) => {
            let form = pairing_form::<F>(run, kappa)?;
            let k = gated(run.printer, kappa, SkewPairing::check(&l, &pi, form))?;
            let pc = at(path, cocycle_from_pairings(&space, &t, &k))?;
            ModelDocument { cocycle: Some(pc.cocycle.form.clone()), ..ModelDocument::with_bialgebroid(name, pc.kk.bg.data()) }
        }
    };
    write(output, &out)?;
    Ok(true)
}

fn crossed<F: Field>(run: &mut Run, path: &Path, sigma: &Path, measuring: &Path, output: &Path) -> Outcome {
    let doc = run.load::<F>(path)?;
    let bg = bialgebroid(path, &doc)?;
    let s = block(sigma, run.load::<F>(sigma)?.sigma, "sigma")?;
    let m = block(measuring, run.load::<F>(measuring)?.measuring, "measuring")?;
    let ring = at(path, match &doc.ring {
        Some(b) => BbarRing::new(&bg, b.algebra.clone(), b.eta.clone()),
        None => BbarRing::ground(&bg),
    })?;
    let (meas, coc) = gated(run.printer, sigma, check_measuring_cocycle(&bg, &ring, &m, &s))?;
    let h = at(path, galois_lambda(&bg))?;
    let cp = at(path, crossed_product(&bg, &ring, &meas, &coc, &h))?;
    let out = ModelDocument {
        comodule_algebra: Some(ComoduleAlgebraBlock {
            algebra: cp.algebra.clone(),
            eta: cp.comodule_algebra.eta.matrix.clone(),
            coaction: cp.comodule_algebra.comodule.coaction_matrix(),
        }),
        cleaving: Some(CleavingBlock { iota: cp.iota.clone(), gamma: cp.gamma_matrix(&bg) }),
        ..ModelDocument::with_bialgebroid(cp.algebra.name(), bg.data())
    };
    write(output, &out)?;
    Ok(true)
}

fn matrix_text<F: Field>(m: &Matrix<F>) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|r| format!("[{}]", m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn gauge<F: Field>(run: &mut Run, a: &Path, b: &Path, extract: bool) -> Outcome {
    let da = run.load::<F>(a)?;
    let db = run.load::<F>(b)?;
    let (r, u) = suite::compare_gauge(&da, &db, extract);
    run.printer.report(&r);
    if let Some(u) = u {
        let mut s = String::new();
        let _ = write!(s, "GAUGE u={} ambiguity={}", matrix_text(&u.u), u.ambiguity);
        run.printer.line(&s);
    }
    Ok(r.pass())
}

fn primary(c: &Command) -> &Path {
    match c {
        Command::Check { model, .. } | Command::Twist { model, .. } | Command::Double { model, .. } | Command::Crossed { model, .. } => model,
        Command::Gauge { a, .. } => a,
    }
}

fn execute(cli: &Cli, printer: &mut Printer) -> Outcome {
    let forced = match std::env::var("HGX_FIELD") {
        Ok(v) => Some(FieldMode::parse(&v).map_err(|e| Failure::Usage(format!("HGX_FIELD: {e}")))?),
        Err(_) => None,
    };
    let path = primary(&cli.command);
    let mode = match forced {
        Some(m) => m,
        None => at(path, model::declared_field_mode(&read(path)?))?,
    };
    let mut run = Run { mode, overridden: forced.is_some(), printer };
    with_field!(mode, F => match &cli.command {
        Command::Check { model, suite } => check::<F>(&mut run, model, &suite.0),
        Command::Twist { model, cocycle, output } => twist::<F>(&mut run, model, cocycle, output),
        Command::Double { model, tau, kappa, output } => double::<F>(&mut run, model, tau, kappa.as_deref(), output),
        Command::Crossed { model, sigma, measuring, output } => crossed::<F>(&mut run, model, sigma, measuring, output),
        Command::Gauge { a, b, extract } => gauge::<F>(&mut run, a, b, *extract),
    })
}

fn error_line(path: &Path, e: &Error) -> String {
    let at = match e {
        Error::Schema { field, .. } => format!("field={field}"),
        _ => format!("witness=[{}]", e.witness().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")),
    };
    format!("ERROR {} {at} {}: {e}", e.class(), path.display())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut printer = Printer { format: cli.format, out: String::new() };
    let outcome = execute(&cli, &mut printer);
    print!("{}", printer.out);
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Invalid { path, error }) => {
            println!("{}", error_line(&path, &error));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hgx: {msg}");
            ExitCode::from(2)
        }
    }
}
