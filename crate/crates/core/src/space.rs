//! Balanced tensor products, integral subspaces and Takeuchi products,
//! described by a small expression language.
//!
//! ```text
//! int^{a} int_{b} (b~)L(a~) * (b)L(a)
//! ```
//!
//! Legs are separated by `*`. A decoration left of a leg name is a left
//! action, right of it a right action; `~` selects the opposite algebra.
//! Every variable occurs exactly twice. `int_` variables generate the
//! relations `op1(x) - op2(x)` of a quotient; `int^` variables cut out the
//! subspace of that quotient on which the two induced operators agree. A
//! variable acts through the base algebra `B` unless bound to another family
//! with `n@N`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, QuotientSpace, SparseVec, Subspace};
use crate::module::{ActionKey, MultiModule, Side};
use crate::tensor::{unflatten, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Deco {
    var: String,
    bar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct LegSpec {
    name: String,
    left: Vec<Deco>,
    right: Vec<Deco>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Quant {
    upper: bool,
    var: String,
    family: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SpaceSpec {
    quants: Vec<Quant>,
    legs: Vec<LegSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Upper,
    Lower,
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if "{}(),~*@".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else if c.is_alphanumeric() || c == '_' || c == '^' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '\'') {
                i += 1;
            }
            let word: String = cs[st..i].iter().collect();
            if word == "int" && i < cs.len() && (cs[i] == '^' || cs[i] == '_') {
                out.push(if cs[i] == '^' { Tok::Upper } else { Tok::Lower });
                i += 1;
            } else if word.is_empty() {
                return Err(Error::BadSpace(format!("unexpected {c:?} in {s:?}")));
            } else {
                out.push(Tok::Ident(word));
            }
        } else {
            return Err(Error::BadSpace(format!("unexpected {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::BadSpace(format!("{msg} in {:?}", self.src))
    }

    fn sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.toks.get(self.pos) {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn vars(&mut self, upper: bool) -> Result<Vec<Quant>> {
        let braced = self.sym('{');
        let mut out = Vec::new();
        loop {
            let var = self.ident()?;
            let family = if self.sym('@') { self.ident()? } else { "B".into() };
            out.push(Quant { upper, var, family });
            if !braced || !self.sym(',') {
                break;
            }
        }
        if braced && !self.sym('}') {
            return Err(self.err("expected '}'"));
        }
        Ok(out)
    }

    fn decos(&mut self) -> Result<Vec<Deco>> {
        let mut out = Vec::new();
        loop {
            let var = self.ident()?;
            let bar = self.sym('~');
            out.push(Deco { var, bar });
            if !self.sym(',') {
                break;
            }
        }
        if !self.sym(')') {
            return Err(self.err("expected ')'"));
        }
        Ok(out)
    }

    fn parse(mut self) -> Result<SpaceSpec> {
        let mut quants = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Upper) => {
                    self.pos += 1;
                    quants.extend(self.vars(true)?);
                }
                Some(Tok::Lower) => {
                    self.pos += 1;
                    quants.extend(self.vars(false)?);
                }
                _ => break,
            }
        }
        let mut legs = Vec::new();
        loop {
            let left = if self.sym('(') { self.decos()? } else { vec![] };
            let name = self.ident()?;
            let right = if self.sym('(') { self.decos()? } else { vec![] };
            legs.push(LegSpec { name, left, right });
            if !self.sym('*') {
                break;
            }
        }
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(SpaceSpec { quants, legs })
    }
}

fn parse(expr: &str) -> Result<SpaceSpec> {
    Parser { toks: lex(expr)?, pos: 0, src: expr }.parse()
}

/// A raw operator acting on one leg.
#[derive(Clone)]
struct LegOp<F> {
    leg: usize,
    /// sparse columns, one vector per basis element of the acting algebra
    cols: Vec<Vec<SparseVec<F>>>,
    mats: Vec<Matrix<F>>,
}

fn sparse_cols<F: Field>(m: &Matrix<F>) -> Vec<SparseVec<F>> {
    (0..m.cols()).map(|j| crate::linalg::sparse_from_dense(&m.col(j))).collect()
}

fn normalize<F: Field>(mut v: Vec<(usize, F)>) -> SparseVec<F> {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<F> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.add(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// A quotient of a tensor product of modules, optionally cut down to a
/// subspace of its representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space<F> {
    label: String,
    dims: Vec<usize>,
    strides: Vec<usize>,
    quotient: QuotientSpace<F>,
    cut: Option<Subspace<F>>,
}

impl<F: Field> Space<F> {
    /// The plain tensor product with no relations.
    pub fn plain(label: &str, dims: &[usize]) -> Self {
        let raw: usize = dims.iter().product();
        Space { label: label.into(), dims: dims.to_vec(), strides: strides(dims), quotient: QuotientSpace::trivial(raw), cut: None }
    }

    /// Build from an expression; `legs[k]` is the module of the k-th leg and
    /// its name must match the expression.
    pub fn build(expr: &str, legs: &[&MultiModule<F>]) -> Result<Self> {
        let parsed = parse(expr)?;
        if parsed.legs.len() != legs.len() {
            return Err(Error::BadSpace(format!("{expr:?} has {} legs, {} modules given", parsed.legs.len(), legs.len())));
        }
        for (s, m) in parsed.legs.iter().zip(legs) {
            if s.name != m.name {
                return Err(Error::BadSpace(format!("leg {} of {expr:?} given module {}", s.name, m.name)));
            }
        }
        let dims: Vec<usize> = legs.iter().map(|m| m.dim).collect();
        let st = strides(&dims);
        let raw: usize = dims.iter().product();

        let family: BTreeMap<&str, &Quant> = parsed.quants.iter().map(|q| (q.var.as_str(), q)).collect();
        if family.len() != parsed.quants.len() {
            return Err(Error::BadSpace(format!("variable bound twice in {expr:?}")));
        }
        let mut occ: BTreeMap<&str, Vec<LegOp<F>>> = BTreeMap::new();
        for (k, l) in parsed.legs.iter().enumerate() {
            for (side, decos) in [(Side::Left, &l.left), (Side::Right, &l.right)] {
                for d in decos {
                    let q = family.get(d.var.as_str()).ok_or_else(|| Error::BadSpace(format!("unbound variable {} in {expr:?}", d.var)))?;
                    let key = ActionKey::new(&q.family, side, d.bar);
                    let mats = legs[k].action(&key)?.to_vec();
                    let cols = mats.iter().map(sparse_cols).collect();
                    occ.entry(q.var.as_str()).or_default().push(LegOp { leg: k, cols, mats });
                }
            }
        }
        for q in &parsed.quants {
            let n = occ.get(q.var.as_str()).map_or(0, |v| v.len());
            if n != 2 {
                return Err(Error::BadSpace(format!("variable {} occurs {n} times in {expr:?}", q.var)));
            }
            let o = &occ[q.var.as_str()];
            if o[0].cols.len() != o[1].cols.len() {
                return Err(Error::BadSpace(format!("variable {} acts through algebras of different size", q.var)));
            }
        }

        let mut space = Space { label: expr.to_string(), dims: dims.clone(), strides: st, quotient: QuotientSpace::trivial(raw), cut: None };
        let lower: Vec<&Quant> = parsed.quants.iter().filter(|q| !q.upper).collect();
        let upper: Vec<&Quant> = parsed.quants.iter().filter(|q| q.upper).collect();

        let mut rel = Subspace::zero(raw);
        for q in &lower {
            let o = &occ[q.var.as_str()];
            for j in 0..o[0].cols.len() {
                for idx in 0..raw {
                    let v = space.op_diff(&o[0], &o[1], j, idx);
                    if !v.is_empty() {
                        rel.insert(v);
                    }
                }
            }
        }
        rel.finish();
        space.quotient = QuotientSpace::new(rel);

        if !upper.is_empty() {
            let lower_ops: Vec<&LegOp<F>> = lower.iter().flat_map(|q| occ[q.var.as_str()].iter()).collect();
            let d = space.quotient.dim();
            // rows of the induced operators, collected sparsely; the cut is
            // the common kernel, i.e. the annihilator of their span
            let mut span = Subspace::zero(d);
            for q in &upper {
                let o = &occ[q.var.as_str()];
                let commuting = o.iter().all(|u| lower_ops.iter().all(|l| u.leg != l.leg || ops_commute(u, l)));
                for j in 0..o[0].cols.len() {
                    if !commuting {
                        space.check_descends(&o[0], &o[1], j, q)?;
                    }
                    let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); d];
                    for (c, &col) in space.quotient.free_columns().iter().enumerate() {
                        let v = space.op_diff(&o[0], &o[1], j, col);
                        if v.is_empty() {
                            continue;
                        }
                        for (r, x) in space.quotient.project_sparse(&v).into_iter().enumerate() {
                            if !x.is_zero() {
                                rows[r].push((c, x));
                            }
                        }
                    }
                    for row in rows.into_iter().filter(|r| !r.is_empty()) {
                        span.insert(row);
                    }
                }
            }
            span.finish();
            // with no constraints the cut is everything; leave it implicit
            if span.dim() > 0 {
                space.cut = Some(span.annihilator());
            }
        }
        Ok(space)
    }

    /// `(op1_j - op2_j)(e_idx)` on the raw tensor space.
    fn op_diff(&self, a: &LegOp<F>, b: &LegOp<F>, j: usize, idx: usize) -> SparseVec<F> {
        let mut v = Vec::new();
        for (op, neg) in [(a, false), (b, true)] {
            let k = op.leg;
            let ik = (idx / self.strides[k]) % self.dims[k];
            let base = idx - ik * self.strides[k];
            for (r, x) in &op.cols[j][ik] {
                v.push((base + r * self.strides[k], if neg { x.neg() } else { x.clone() }));
            }
        }
        normalize(v)
    }

    fn check_descends(&self, a: &LegOp<F>, b: &LegOp<F>, j: usize, q: &Quant) -> Result<()> {
        for row in self.quotient.relations().rows() {
            let mut v = Vec::new();
            for (idx, x) in row {
                for (i, y) in self.op_diff(a, b, j, *idx) {
                    v.push((i, x.mul(&y)));
                }
            }
            if !self.quotient.project_sparse(&normalize(v)).iter().all(|x| x.is_zero()) {
                return Err(Error::NotWellDefined { context: format!("int^{} on {}", q.var, self.label), witness: vec![j, row[0].0] });
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn raw_dim(&self) -> usize {
        self.quotient.ambient()
    }

    /// Dimension of the quotient (before any cut).
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace<F> {
        &self.quotient
    }

    pub fn cut(&self) -> Option<&Subspace<F>> {
        self.cut.as_ref()
    }

    /// Dimension of the cut subspace, or of the quotient when there is no cut.
    pub fn cut_dim(&self) -> usize {
        self.cut.as_ref().map_or(self.dim(), |c| c.dim())
    }

    pub fn project(&self, t: &Tensor<F>) -> Vec<F> {
        assert_eq!(t.dims(), self.dims.as_slice(), "tensor does not live on {}", self.label);
        self.quotient.project(t.data())
    }

    pub fn equal(&self, a: &Tensor<F>, b: &Tensor<F>) -> bool {
        self.project(&a.sub(b)).iter().all(|x| x.is_zero())
    }

    pub fn is_zero(&self, a: &Tensor<F>) -> bool {
        self.project(a).iter().all(|x| x.is_zero())
    }

    /// Canonical representative of the class of `t`.
    pub fn normalize(&self, t: &Tensor<F>) -> Tensor<F> {
        self.section(&self.project(t))
    }

    pub fn section(&self, reps: &[F]) -> Tensor<F> {
        Tensor::from_vec(&self.dims, self.quotient.section(reps))
    }

    /// Whether the class lies in the cut.
    pub fn in_cut(&self, reps: &[F]) -> bool {
        self.cut.as_ref().map_or(true, |c| c.contains(reps))
    }

    pub fn contains(&self, t: &Tensor<F>) -> bool {
        self.in_cut(&self.project(t))
    }

    /// Coordinates of a class in the echelon basis of the cut.
    pub fn cut_coords(&self, reps: &[F]) -> Option<Vec<F>> {
        match &self.cut {
            Some(c) => c.coords(reps),
            None => Some(reps.to_vec()),
        }
    }

    /// Representatives of the k-th cut basis vector.
    pub fn cut_basis(&self, k: usize) -> Vec<F> {
        match &self.cut {
            Some(c) => crate::linalg::dense_from_sparse(self.dim(), &c.rows()[k]),
            None => {
                let mut v = vec![F::zero(); self.dim()];
                v[k] = F::one();
                v
            }
        }
    }

    /// Raw basis tensor for a flat index.
    pub fn raw_basis(&self, idx: usize) -> Tensor<F> {
        Tensor::basis(&self.dims, &unflatten(&self.dims, idx))
    }

    /// Module on the cut subspace whose actions come from actions on single
    /// legs: `(new key, leg, key on that leg module)`. Fails when an action
    /// leaves the cut or does not descend.
    pub fn induced_module(&self, name: &str, legs: &[&MultiModule<F>], actions: &[(ActionKey, usize, ActionKey)]) -> Result<MultiModule<F>> {
        let d = self.cut_dim();
        let mut m = MultiModule::new(name, d);
        for (new_key, leg, key) in actions {
            let src = legs[*leg].action(key)?;
            let mut mats = Vec::with_capacity(src.len());
            for (j, a) in src.iter().enumerate() {
                let lin = crate::tensor::Lin::from_matrix(a);
                let op = |t: &Tensor<F>| t.apply(&[*leg], &lin);
                for row in self.quotient.relations().rows() {
                    let t = Tensor::from_vec(&self.dims, crate::linalg::dense_from_sparse(self.raw_dim(), row));
                    if !self.is_zero(&op(&t)) {
                        return Err(Error::NotWellDefined { context: format!("{key} on {}", self.label), witness: vec![j, row[0].0] });
                    }
                }
                let mut mat = Matrix::zeros(d, d);
                for k in 0..d {
                    let img = self.project(&op(&self.section(&self.cut_basis(k))));
                    let c = self.cut_coords(&img).ok_or_else(|| Error::NotWellDefined {
                        context: format!("{key} leaves the cut of {}", self.label),
                        witness: vec![j, k],
                    })?;
                    mat.set_col(k, &c);
                }
                mats.push(mat);
            }
            m.set_action(new_key.clone(), mats);
        }
        Ok(m)
    }
}

fn ops_commute<F: Field>(a: &LegOp<F>, b: &LegOp<F>) -> bool {
    a.mats.iter().all(|x| b.mats.iter().all(|y| x.mul(y) == y.mul(x)))
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// The map on representatives induced by `f` on raw tensors, as sparse
/// columns, after checking that `f` sends the relations of `from` into
/// those of `to`.
pub fn descend_columns<F: Field>(from: &Space<F>, to: &Space<F>, context: &str, f: impl Fn(&Tensor<F>) -> Tensor<F>) -> Result<Vec<SparseVec<F>>> {
    let images: Vec<SparseVec<F>> = (0..from.raw_dim()).map(|i| crate::linalg::sparse_from_dense(f(&from.raw_basis(i)).data())).collect();
    let image_of = |v: &SparseVec<F>| -> SparseVec<F> {
        let mut out = Vec::new();
        for (i, x) in v {
            out.extend(images[*i].iter().map(|(j, y)| (*j, x.mul(y))));
        }
        normalize(out)
    };
    for row in from.quotient().relations().rows() {
        let img = to.quotient().project_sparse(&image_of(row));
        if !img.iter().all(|x| x.is_zero()) {
            return Err(Error::NotWellDefined { context: context.into(), witness: vec![row[0].0] });
        }
    }
    Ok(from.quotient().free_columns().iter().map(|&col| crate::linalg::sparse_from_dense(&to.quotient().project_sparse(&images[col]))).collect())
}

/// `descend_map` as a matrix.
pub fn descend_map<F: Field>(from: &Space<F>, to: &Space<F>, context: &str, f: impl Fn(&Tensor<F>) -> Tensor<F>) -> Result<Matrix<F>> {
    let cols = descend_columns(from, to, context, f)?;
    let mut m = Matrix::zeros(to.dim(), from.dim());
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col {
            m[(*r, c)] = x.clone();
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Q;
    use crate::module::regular_bimodule;

    fn qxq() -> Algebra<Q> {
        Algebra::from_products(
            "QxQ",
            2,
            |i, j| {
                let mut v = vec![Q::zero(); 2];
                if i == j {
                    v[i] = Q::one();
                }
                v
            },
            vec![Q::one(), Q::one()],
        )
        .unwrap()
    }

    #[test]
    fn parse_shapes() {
        let s = parse("int^{a} int_{b,n@N} (b~)L(a~) * (b,n)P(a)").unwrap();
        assert_eq!(s.quants.len(), 3);
        assert_eq!(s.quants[2].family, "N");
        assert_eq!(s.legs[1].left.len(), 2);
        assert!(parse("int^ (a)L").is_err());
        assert!(parse("L * ").is_err());
    }

    #[test]
    fn tensor_over_b_of_regular() {
        let b = qxq();
        let m = regular_bimodule("B", &b, "B");
        let s = Space::build("int_b B(b) * (b)B", &[&m, &m]).unwrap();
        assert_eq!(s.dim(), 2);
        // base field: every action is trivial
        let mut l = MultiModule::new("L", 2);
        let one = vec![Matrix::<Q>::identity(2)];
        for key in [ActionKey::left_b(), ActionKey::right_b(), ActionKey::left_bbar(), ActionKey::right_bbar()] {
            l.set_action(key, one.clone());
        }
        let t = Space::build("int^a int_b (b~)L(a~) * (b)L(a)", &[&l, &l]).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.cut_dim(), 4);
    }

    #[test]
    fn unbound_and_repeated_variables() {
        let b = qxq();
        let m = regular_bimodule("B", &b, "B");
        assert!(matches!(Space::build("int_b B(c) * (b)B", &[&m, &m]), Err(Error::BadSpace(_))));
        assert!(matches!(Space::build("int_b B(b) * (b)B(b)", &[&m, &m]), Err(Error::BadSpace(_))));
        assert!(matches!(Space::build("int_b B(b~) * (b)B", &[&m, &m]), Err(Error::MissingAction { .. })));
    }

    #[test]
    fn descend_swap_and_failure() {
        let b = qxq();
        let m = regular_bimodule("B", &b, "B");
        let s = Space::<Q>::plain("BxB", &[2, 2]);
        let swap = |t: &Tensor<Q>| t.permute(&[1, 0]);
        let id = descend_map(&s, &s, "swap", swap).unwrap();
        assert_eq!(id.rank(), 4);
        let q = Space::build("int_b B(b) * (b)B", &[&m, &m]).unwrap();
        let ident = descend_map(&q, &q, "id", |t| t.clone()).unwrap();
        assert!(ident.is_identity());
        // e1 (x) e2 is a relation, but the map e_i (x) e_j -> e_i (x) e_i does not kill it
        let bad = |t: &Tensor<Q>| {
            let mut out = Tensor::zeros(&[2, 2]);
            for i in 0..2 {
                for j in 0..2 {
                    let x = &t.data()[i * 2 + j];
                    if !x.is_zero() {
                        out = out.add(&Tensor::basis(&[2, 2], &[i, i]).scale(x));
                    }
                }
            }
            out
        };
        assert!(matches!(descend_map(&q, &q, "diag", bad), Err(Error::NotWellDefined { .. })));
    }
}
