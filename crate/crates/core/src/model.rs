//! The model document: a versioned JSON file holding one bialgebroid and the
//! optional data built on it (comodule algebras, cocycles, pairings, crossed
//! product data, cleaving maps).
//!
//! Scalars are exact strings (`"3"`, `"-1/2"`), matrices are row-major arrays
//! of rows. Every block except `schema_version` and `field_mode` is optional,
//! so the same format carries full models and single-block side files such as
//! a cocycle. [`serialize`] writes the canonical form: keys in a fixed order,
//! innermost arrays on one line, and `serialize(parse(d)) == d` whenever `d`
//! is canonical.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::bering::BeRing;
use crate::bialgebroid::BialgebroidData;
use crate::error::{Error, Result};
use crate::field::{Field, SUPPORTED_PRIMES};
use crate::linalg::Matrix;

pub const SCHEMA_VERSION: &str = "1";

/// The scalar field a document is read over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Rationals,
    Prime(u64),
}

impl FieldMode {
    pub fn of<F: Field>() -> Self {
        match F::characteristic() {
            0 => FieldMode::Rationals,
            p => FieldMode::Prime(p),
        }
    }

    /// Parse `"rationals"`, `"0"` or a prime, as accepted by `HGX_FIELD`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rationals" || s == "0" {
            return Ok(FieldMode::Rationals);
        }
        let p: u64 = s.parse().map_err(|_| Error::Schema { field: "field_mode".into(), message: format!("expected \"rationals\" or a prime, got {s:?}") })?;
        FieldMode::Prime(p).supported()
    }

    fn supported(self) -> Result<Self> {
        match self {
            FieldMode::Prime(p) if !SUPPORTED_PRIMES.contains(&p) => {
                Err(Error::Schema { field: "field_mode".into(), message: format!("prime {p} is not one of the supported primes {SUPPORTED_PRIMES:?}") })
            }
            m => Ok(m),
        }
    }
}

/// Run `$body` with `$f` bound to the field type of a [`FieldMode`].
#[macro_export]
macro_rules! with_field {
    ($mode:expr, $f:ident => $body:expr) => {
        match $mode {
            $crate::model::FieldMode::Rationals => {
                type $f = $crate::field::Q;
                $body
            }
            $crate::model::FieldMode::Prime(2) => {
                type $f = $crate::field::F2;
                $body
            }
            $crate::model::FieldMode::Prime(3) => {
                type $f = $crate::field::F3;
                $body
            }
            $crate::model::FieldMode::Prime(5) => {
                type $f = $crate::field::F5;
                $body
            }
            $crate::model::FieldMode::Prime(7) => {
                type $f = $crate::field::F7;
                $body
            }
            $crate::model::FieldMode::Prime(11) => {
                type $f = $crate::field::F11;
                $body
            }
            $crate::model::FieldMode::Prime(13) => {
                type $f = $crate::field::F13;
                $body
            }
            $crate::model::FieldMode::Prime(101) => {
                type $f = $crate::field::F101;
                $body
            }
            $crate::model::FieldMode::Prime(65521) => {
                type $f = $crate::field::F65521;
                $body
            }
            $crate::model::FieldMode::Prime(2147483647) => {
                type $f = $crate::field::F2147483647;
                $body
            }
            $crate::model::FieldMode::Prime(p) => panic!("unsupported prime {p}"),
        }
    };
}

/// A left comodule algebra `P` with `η: B → P` and `δ: P → L ◇ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraBlock<F> {
    pub algebra: Algebra<F>,
    pub eta: Matrix<F>,
    pub coaction: Matrix<F>,
}

/// `ι: B̄ → P` and the cleaving map `γ: L → P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleavingBlock<F> {
    pub iota: Matrix<F>,
    pub gamma: Matrix<F>,
}

/// A skew pairing read from a document. `pi` is the second bialgebroid when
/// the document describes a double.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingBlock<F> {
    pub pi: Option<BialgebroidData<F>>,
    pub form: Option<Matrix<F>>,
}

/// A `B̄`-ring `η: B̄ → N` for crossed products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingBlock<F> {
    pub algebra: Algebra<F>,
    pub eta: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelDocument<F> {
    pub name: String,
    pub bialgebroid: Option<BialgebroidData<F>>,
    pub comodule_algebra: Option<ComoduleAlgebraBlock<F>>,
    pub cleaving: Option<CleavingBlock<F>>,
    pub cocycle: Option<Matrix<F>>,
    pub pairing: Option<PairingBlock<F>>,
    pub ring: Option<RingBlock<F>>,
    pub measuring: Option<Matrix<F>>,
    pub sigma: Option<Matrix<F>>,
}

impl<F: Field> ModelDocument<F> {
    pub fn new(name: impl Into<String>) -> Self {
        ModelDocument {
            name: name.into(),
            bialgebroid: None,
            comodule_algebra: None,
            cleaving: None,
            cocycle: None,
            pairing: None,
            ring: None,
            measuring: None,
            sigma: None,
        }
    }

    pub fn with_bialgebroid(name: impl Into<String>, data: BialgebroidData<F>) -> Self {
        ModelDocument { bialgebroid: Some(data), ..Self::new(name) }
    }

    /// The bialgebroid data, or a schema error naming the missing section.
    pub fn require_bialgebroid(&self) -> Result<&BialgebroidData<F>> {
        self.bialgebroid.as_ref().ok_or_else(|| missing("total_algebra"))
    }
}

type RawMatrix = Vec<Vec<String>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    name: String,
    products: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphisms {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counit: Option<RawMatrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBialgebroid {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    total_algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    morphisms: Option<RawMorphisms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coproduct: Option<RawMatrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComoduleAlgebra {
    algebra: RawAlgebra,
    eta: RawMatrix,
    coaction: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCleaving {
    iota: RawMatrix,
    gamma: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPairing {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pi: Option<RawBialgebroid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<RawMatrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    algebra: RawAlgebra,
    eta: RawMatrix,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawFieldMode {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: String,
    field_mode: RawFieldMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    total_algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    morphisms: Option<RawMorphisms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coproduct: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comodule_algebra: Option<RawComoduleAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cleaving: Option<RawCleaving>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cocycle: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairing: Option<RawPairing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ring: Option<RawRing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    measuring: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma: Option<RawMatrix>,
}

fn missing(field: &str) -> Error {
    Error::Schema { field: field.into(), message: "required section is missing".into() }
}

fn shape(field: &str, message: String) -> Error {
    Error::Schema { field: field.into(), message }
}

fn json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Syntax | Category::Eof => Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() },
        Category::Io => Error::Io(e.to_string()),
        Category::Data => Error::Schema { field: "document".into(), message: e.to_string() },
    }
}

fn raw_document(text: &str) -> Result<RawDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(json_error)?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(shape("schema_version", format!("unsupported version {:?}, expected {SCHEMA_VERSION:?}", raw.schema_version)));
    }
    Ok(raw)
}

fn field_mode_of(raw: &RawFieldMode) -> Result<FieldMode> {
    match raw {
        RawFieldMode::Named(s) if s == "rationals" => Ok(FieldMode::Rationals),
        RawFieldMode::Named(s) => Err(shape("field_mode", format!("expected \"rationals\" or {{\"prime\": p}}, got {s:?}"))),
        RawFieldMode::Prime { prime } => FieldMode::Prime(*prime).supported(),
    }
}

/// The field mode a document declares, without reading its scalars.
pub fn declared_field_mode(text: &str) -> Result<FieldMode> {
    field_mode_of(&raw_document(text)?.field_mode)
}

fn scalar<F: Field>(s: &str, field: &str) -> Result<F> {
    F::parse(s).map_err(|e| match e {
        Error::Schema { message, .. } => Error::Schema { field: field.into(), message },
        other => other,
    })
}

fn matrix<F: Field>(raw: &RawMatrix, field: &str, rows: usize, cols: usize) -> Result<Matrix<F>> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        let got = raw.iter().map(|r| r.len()).max().unwrap_or(0);
        return Err(shape(field, format!("expected a {rows}x{cols} matrix, got {} rows of up to {got} entries", raw.len())));
    }
    let rows: Vec<Vec<F>> = raw
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, s)| scalar(s, &format!("{field}[{i}][{j}]"))).collect::<Result<Vec<F>>>())
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Ok(Matrix::from_fn(0, cols, |_, _| F::zero()));
    }
    Matrix::from_rows(rows)
}

fn algebra<F: Field>(raw: &RawAlgebra, field: &str) -> Result<Algebra<F>> {
    let n = raw.unit.len();
    if n == 0 {
        return Err(shape(&format!("{field}.unit"), "an algebra needs a nonempty basis".into()));
    }
    let unit: Vec<F> = raw.unit.iter().enumerate().map(|(i, s)| scalar(s, &format!("{field}.unit[{i}]"))).collect::<Result<_>>()?;
    if raw.products.len() != n || raw.products.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
        return Err(shape(&format!("{field}.products"), format!("expected {n}x{n}x{n} structure constants")));
    }
    let mut c = Vec::with_capacity(n);
    for (i, row) in raw.products.iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (j, v) in row.iter().enumerate() {
            out.push(v.iter().enumerate().map(|(k, s)| scalar(s, &format!("{field}.products[{i}][{j}][{k}]"))).collect::<Result<Vec<F>>>()?);
        }
        c.push(out);
    }
    Algebra::new(raw.name.clone(), &c, unit)
}

fn bialgebroid<F: Field>(raw: &RawBialgebroid, prefix: &str) -> Result<Option<BialgebroidData<F>>> {
    if raw.base_algebra.is_none() && raw.total_algebra.is_none() && raw.morphisms.is_none() && raw.coproduct.is_none() {
        return Ok(None);
    }
    let path = |f: &str| format!("{prefix}{f}");
    let base = algebra::<F>(raw.base_algebra.as_ref().ok_or_else(|| missing(&path("base_algebra")))?, &path("base_algebra"))?;
    let total = algebra::<F>(raw.total_algebra.as_ref().ok_or_else(|| missing(&path("total_algebra")))?, &path("total_algebra"))?;
    let m = raw.morphisms.as_ref().ok_or_else(|| missing(&path("morphisms")))?;
    let (n, nb) = (total.dim(), base.dim());
    let s = matrix(m.s.as_ref().ok_or_else(|| missing(&path("morphisms.s")))?, &path("morphisms.s"), n, nb)?;
    let t = matrix(m.t.as_ref().ok_or_else(|| missing(&path("morphisms.t")))?, &path("morphisms.t"), n, nb)?;
    let eps = matrix(m.counit.as_ref().ok_or_else(|| missing(&path("morphisms.counit")))?, &path("morphisms.counit"), nb, n)?;
    let delta = matrix(raw.coproduct.as_ref().ok_or_else(|| missing(&path("coproduct")))?, &path("coproduct"), n * n, n)?;
    let ring = BeRing::new(base, total, s, t)?;
    Ok(Some(BialgebroidData { ring, delta, eps }))
}

/// Parse a document over `F`, whatever field it declares. Use
/// [`declared_field_mode`] and [`with_field!`] to read it over its own field.
pub fn parse<F: Field>(text: &str) -> Result<ModelDocument<F>> {
    let raw = raw_document(text)?;
    field_mode_of(&raw.field_mode)?;
    let main = RawBialgebroid { base_algebra: raw.base_algebra, total_algebra: raw.total_algebra, morphisms: raw.morphisms, coproduct: raw.coproduct };
    let bg = bialgebroid::<F>(&main, "")?;
    let dims = bg.as_ref().map(|d| (d.ring.n(), d.ring.nb()));
    let need = |field: &str| dims.ok_or_else(|| Error::Schema { field: field.into(), message: "this block needs the bialgebroid sections in the same document".into() });

    let comodule_algebra = match &raw.comodule_algebra {
        None => None,
        Some(c) => {
            let (n, nb) = need("comodule_algebra")?;
            let algebra = algebra::<F>(&c.algebra, "comodule_algebra.algebra")?;
            let d = algebra.dim();
            let eta = matrix(&c.eta, "comodule_algebra.eta", d, nb)?;
            let coaction = matrix(&c.coaction, "comodule_algebra.coaction", n * d, d)?;
            Some(ComoduleAlgebraBlock { algebra, eta, coaction })
        }
    };
    let cleaving = match &raw.cleaving {
        None => None,
        Some(c) => {
            let (n, nb) = need("cleaving")?;
            let d = comodule_algebra.as_ref().map(|c| c.algebra.dim()).ok_or_else(|| missing("comodule_algebra"))?;
            Some(CleavingBlock { iota: matrix(&c.iota, "cleaving.iota", d, nb)?, gamma: matrix(&c.gamma, "cleaving.gamma", d, n)? })
        }
    };
    let cocycle = raw.cocycle.as_ref().map(|m| matrix_any(m, "cocycle")).transpose()?;
    let pairing = match &raw.pairing {
        None => None,
        Some(p) => {
            let pi = match &p.pi {
                Some(pi) => bialgebroid::<F>(pi, "pairing.pi.")?,
                None => None,
            };
            let form = p.form.as_ref().map(|m| matrix_any(m, "pairing.form")).transpose()?;
            Some(PairingBlock { pi, form })
        }
    };
    let ring = match &raw.ring {
        None => None,
        Some(r) => {
            let algebra = algebra::<F>(&r.algebra, "ring.algebra")?;
            let d = algebra.dim();
            let eta = matrix_any(&r.eta, "ring.eta")?;
            if eta.rows() != d {
                return Err(shape("ring.eta", format!("expected {d} rows, got {}", eta.rows())));
            }
            Some(RingBlock { algebra, eta })
        }
    };
    let measuring = raw.measuring.as_ref().map(|m| matrix_any(m, "measuring")).transpose()?;
    let sigma = raw.sigma.as_ref().map(|m| matrix_any(m, "sigma")).transpose()?;
    Ok(ModelDocument { name: raw.name.unwrap_or_default(), bialgebroid: bg, comodule_algebra, cleaving, cocycle, pairing, ring, measuring, sigma })
}

/// A matrix whose shape is checked later against the objects it acts on.
fn matrix_any<F: Field>(raw: &RawMatrix, field: &str) -> Result<Matrix<F>> {
    let cols = raw.first().map(|r| r.len()).unwrap_or(0);
    matrix(raw, field, raw.len(), cols)
}

fn raw_scalar<F: Field>(x: &F) -> String {
    x.to_string()
}

fn raw_matrix<F: Field>(m: &Matrix<F>) -> RawMatrix {
    (0..m.rows()).map(|r| m.row(r).iter().map(raw_scalar).collect()).collect()
}

fn raw_algebra<F: Field>(a: &Algebra<F>) -> RawAlgebra {
    RawAlgebra {
        name: a.name().to_string(),
        products: a.structure().iter().map(|row| row.iter().map(|v| v.iter().map(raw_scalar).collect()).collect()).collect(),
        unit: a.unit().iter().map(raw_scalar).collect(),
    }
}

fn raw_bialgebroid<F: Field>(d: &BialgebroidData<F>) -> RawBialgebroid {
    RawBialgebroid {
        base_algebra: Some(raw_algebra(&d.ring.base)),
        total_algebra: Some(raw_algebra(&d.ring.total)),
        morphisms: Some(RawMorphisms { s: Some(raw_matrix(&d.ring.s.matrix)), t: Some(raw_matrix(&d.ring.t.matrix)), counit: Some(raw_matrix(&d.eps)) }),
        coproduct: Some(raw_matrix(&d.delta)),
    }
}

/// Canonical text of a document over `F`.
pub fn serialize<F: Field>(doc: &ModelDocument<F>) -> String {
    let field_mode = match FieldMode::of::<F>() {
        FieldMode::Rationals => RawFieldMode::Named("rationals".into()),
        FieldMode::Prime(p) => RawFieldMode::Prime { prime: p },
    };
    let main = doc.bialgebroid.as_ref().map(raw_bialgebroid);
    let (base_algebra, total_algebra, morphisms, coproduct) = match main {
        Some(b) => (b.base_algebra, b.total_algebra, b.morphisms, b.coproduct),
        None => (None, None, None, None),
    };
    let raw = RawDocument {
        schema_version: SCHEMA_VERSION.into(),
        field_mode,
        name: (!doc.name.is_empty()).then(|| doc.name.clone()),
        base_algebra,
        total_algebra,
        morphisms,
        coproduct,
        comodule_algebra: doc.comodule_algebra.as_ref().map(|c| RawComoduleAlgebra { algebra: raw_algebra(&c.algebra), eta: raw_matrix(&c.eta), coaction: raw_matrix(&c.coaction) }),
        cleaving: doc.cleaving.as_ref().map(|c| RawCleaving { iota: raw_matrix(&c.iota), gamma: raw_matrix(&c.gamma) }),
        cocycle: doc.cocycle.as_ref().map(raw_matrix),
        pairing: doc.pairing.as_ref().map(|p| RawPairing { pi: p.pi.as_ref().map(raw_bialgebroid), form: p.form.as_ref().map(raw_matrix) }),
        ring: doc.ring.as_ref().map(|r| RawRing { algebra: raw_algebra(&r.algebra), eta: raw_matrix(&r.eta) }),
        measuring: doc.measuring.as_ref().map(raw_matrix),
        sigma: doc.sigma.as_ref().map(raw_matrix),
    };
    canonical_text(&serde_json::to_value(&raw).expect("documents serialize to JSON"))
}

/// A JSON value in the canonical layout of [`serialize`].
pub fn canonical_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

/// Pretty printer that keeps arrays of scalars on one line.
fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, k: usize| out.push_str(&"  ".repeat(k));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_table, monoid_bialgebra_data};
    use crate::field::{F5, Q};

    fn z2() -> ModelDocument<Q> {
        ModelDocument::with_bialgebroid("QZ2", monoid_bialgebra_data("QZ2", &cyclic_table(2)).unwrap())
    }

    #[test]
    fn round_trip() {
        let text = serialize(&z2());
        let doc: ModelDocument<Q> = parse(&text).unwrap();
        assert_eq!(doc, z2());
        assert_eq!(serialize(&doc), text);
    }

    #[test]
    fn inner_arrays_stay_on_one_line() {
        let text = serialize(&z2());
        assert!(text.contains("\"unit\": [\"1\", \"0\"]"), "{text}");
        assert!(text.starts_with("{\n  \"schema_version\": \"1\",\n  \"field_mode\": \"rationals\",\n"));
    }

    #[test]
    fn prime_mode_is_written_as_an_object() {
        let doc = ModelDocument::<F5>::with_bialgebroid("F5Z2", monoid_bialgebra_data("F5Z2", &cyclic_table(2)).unwrap());
        let text = serialize(&doc);
        assert!(text.contains("\"field_mode\": {\n    \"prime\": 5\n  }"), "{text}");
        assert_eq!(declared_field_mode(&text).unwrap(), FieldMode::Prime(5));
    }

    #[test]
    fn field_modes_from_the_environment() {
        assert_eq!(FieldMode::parse("rationals").unwrap(), FieldMode::Rationals);
        assert_eq!(FieldMode::parse("7").unwrap(), FieldMode::Prime(7));
        assert_eq!(FieldMode::parse("9").unwrap_err().class(), "SchemaError");
    }
}
