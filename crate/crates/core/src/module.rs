//! Vector spaces carrying several commuting one-sided actions.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::report::{tuples, Report};
use crate::tensor::Lin;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Which algebra acts, from which side, and whether through its opposite.
///
/// `family` names the acting algebra (`"B"` for the base); `bar` selects the
/// opposite algebra, so a left `B̄` action has `bar = true`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionKey {
    pub family: String,
    pub side: Side,
    pub bar: bool,
}

impl ActionKey {
    pub fn new(family: &str, side: Side, bar: bool) -> Self {
        ActionKey { family: family.into(), side, bar }
    }
    pub fn left_b() -> Self {
        Self::new("B", Side::Left, false)
    }
    pub fn left_bbar() -> Self {
        Self::new("B", Side::Left, true)
    }
    pub fn right_b() -> Self {
        Self::new("B", Side::Right, false)
    }
    pub fn right_bbar() -> Self {
        Self::new("B", Side::Right, true)
    }
}

impl fmt::Display for ActionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(f, "{side}{}{}", self.family, if self.bar { "bar" } else { "" })
    }
}

/// One matrix per basis element of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiModule<F> {
    pub name: String,
    pub dim: usize,
    actions: BTreeMap<ActionKey, Vec<Matrix<F>>>,
}

impl<F: Field> MultiModule<F> {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        MultiModule { name: name.into(), dim, actions: BTreeMap::new() }
    }

    pub fn with_action(mut self, key: ActionKey, mats: Vec<Matrix<F>>) -> Self {
        self.set_action(key, mats);
        self
    }

    pub fn set_action(&mut self, key: ActionKey, mats: Vec<Matrix<F>>) {
        assert!(mats.iter().all(|m| m.rows() == self.dim && m.cols() == self.dim), "action matrices must be {0}x{0}", self.dim);
        self.actions.insert(key, mats);
    }

    pub fn action(&self, key: &ActionKey) -> Result<&[Matrix<F>]> {
        self.actions
            .get(key)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::MissingAction { module: self.name.clone(), action: key.to_string() })
    }

    pub fn has(&self, key: &ActionKey) -> bool {
        self.actions.contains_key(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &ActionKey> {
        self.actions.keys()
    }

    /// The action as a map `A ⊗ M → M`, algebra leg first.
    pub fn action_lin(&self, key: &ActionKey) -> Result<Lin<F>> {
        let mats = self.action(key)?;
        let d = self.dim;
        Ok(Lin::from_fn(vec![mats.len(), d], vec![d], |c| mats[c / d].col(c % d)))
    }

    /// Act by the algebra element with coordinates `a`.
    pub fn act(&self, key: &ActionKey, a: &[F], m: &[F]) -> Result<Vec<F>> {
        let mats = self.action(key)?;
        if a.len() != mats.len() || m.len() != self.dim {
            return Err(Error::DimMismatch(format!("acting on {} by {key}", self.name)));
        }
        let mut out = vec![F::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in mats[i].mul_vec(m).iter().enumerate() {
                out[j].add_mul(x, y);
            }
        }
        Ok(out)
    }

    /// Copy with the actions renamed: each `(from, to)` moves the `from` action
    /// to key `to`; actions not mentioned are dropped.
    pub fn relabel(&self, name: &str, moves: &[(ActionKey, ActionKey)]) -> Result<Self> {
        let mut out = MultiModule::new(name, self.dim);
        for (from, to) in moves {
            out.set_action(to.clone(), self.action(from)?.to_vec());
        }
        Ok(out)
    }

    /// Module axioms for every action and commutation of every pair of actions.
    /// `algebra` resolves a family name to its acting algebra (unbarred).
    pub fn check<'a>(&self, algebra: impl Fn(&str) -> Option<&'a Algebra<F>>) -> Report {
        let mut r = Report::new("module");
        for (key, mats) in &self.actions {
            let id = format!("{}-{key}", self.name);
            let Some(a) = algebra(&key.family) else {
                r.record_error(&id, "known-family", &Error::MissingAction { module: self.name.clone(), action: key.to_string() });
                continue;
            };
            let apply = |x: &[F], v: &[F]| -> Vec<F> {
                let mut out = vec![F::zero(); self.dim];
                for (i, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        for (j, y) in mats[i].mul_vec(v).iter().enumerate() {
                            out[j].add_mul(c, y);
                        }
                    }
                }
                out
            };
            let n = a.dim();
            let d = self.dim;
            r.check_all(&format!("{id}-unit"), "1.m=m", tuples(&[d]), |t| {
                let e = unit_vec::<F>(d, t[0]);
                apply(a.unit(), &e) == e
            });
            // x.(y.m) = (xy).m for a left action by A; left B̄ uses the opposite product.
            r.check_all(&format!("{id}-assoc"), "x.(y.m)=(xy).m", tuples(&[n, n, d]), |t| {
                let e = unit_vec::<F>(d, t[2]);
                let (x, y) = (a.basis(t[0]), a.basis(t[1]));
                let lhs = apply(&x, &apply(&y, &e));
                let prod = match (key.side, key.bar) {
                    (Side::Left, false) | (Side::Right, true) => a.mul(&x, &y),
                    (Side::Left, true) | (Side::Right, false) => a.mul(&y, &x),
                };
                lhs == apply(&prod, &e)
            });
        }
        let keys: Vec<&ActionKey> = self.actions.keys().collect();
        for (p, k1) in keys.iter().enumerate() {
            for k2 in &keys[p + 1..] {
                let (m1, m2) = (&self.actions[*k1], &self.actions[*k2]);
                r.check_all(&format!("{}-{k1}-{k2}-commute", self.name), "x.(m.y)=(x.m).y", tuples(&[m1.len(), m2.len()]), |t| {
                    m1[t[0]].mul(&m2[t[1]]) == m2[t[1]].mul(&m1[t[0]])
                });
            }
        }
        r
    }
}

fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// `A` as a bimodule over itself under the family name `family`.
pub fn regular_bimodule<F: Field>(name: &str, a: &Algebra<F>, family: &str) -> MultiModule<F> {
    let (left, right) = crate::algebra::regular_actions(a);
    MultiModule::new(name, a.dim())
        .with_action(ActionKey::new(family, Side::Left, false), left)
        .with_action(ActionKey::new(family, Side::Right, false), right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::field::Q;

    #[test]
    fn regular_z2() {
        let a = group_algebra::<Q>("QZ2", &[vec![0, 1], vec![1, 0]]).unwrap();
        let m = regular_bimodule("QZ2", &a, "B");
        let g = a.basis(1);
        assert_eq!(m.act(&ActionKey::left_b(), &g, &a.basis(0)).unwrap(), g);
        assert_eq!(m.act(&ActionKey::left_b(), a.unit(), &g).unwrap(), g);
        assert!(m.check(|f| (f == "B").then_some(&a)).pass());
        assert_eq!(m.act(&ActionKey::right_bbar(), &g, &g).unwrap_err().class(), "MissingAction");
    }
}
