use std::fmt::Write as _;

use crate::error::Error;

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// ASCII rendering of the identity; whitespace is dropped in `lines`.
    pub label: String,
    pub pass: bool,
    /// Basis indices of the first failing instance.
    pub witness: Vec<usize>,
    /// Error class when the check failed by raising an error rather than by an unequal pair.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn record(&mut self, id: &str, label: &str, witness: Option<Vec<usize>>) {
        self.checks.push(Check {
            id: id.into(),
            label: label.into(),
            pass: witness.is_none(),
            witness: witness.unwrap_or_default(),
            error: None,
        });
    }

    /// Record the outcome of a fallible check: `Ok(None)` passes, `Ok(Some(w))`
    /// fails with witness `w`, `Err(e)` fails with the error's class and witness.
    pub fn record_result(&mut self, id: &str, label: &str, r: Result<Option<Vec<usize>>, Error>) {
        match r {
            Ok(w) => self.record(id, label, w),
            Err(e) => self.record_error(id, label, &e),
        }
    }

    pub fn record_error(&mut self, id: &str, label: &str, e: &Error) {
        self.checks.push(Check {
            id: id.into(),
            label: label.into(),
            pass: false,
            witness: e.witness(),
            error: Some(e.class().to_string()),
        });
    }

    /// Run `f` on every tuple and record the first tuple where it returns false.
    pub fn check_all<I>(&mut self, id: &str, label: &str, tuples: I, mut f: impl FnMut(&[usize]) -> bool)
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let w = tuples.into_iter().find(|t| !f(t));
        self.record(id, label, w);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Machine-readable lines, one per check.
    pub fn lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let label: String = c.label.chars().filter(|ch| !ch.is_whitespace()).collect();
            let _ = write!(out, "CHECK {} {} {} {}", self.suite, c.id, label, if c.pass { "PASS" } else { "FAIL" });
            if !c.pass {
                if let Some(e) = &c.error {
                    let _ = write!(out, " error={e}");
                }
                let w: Vec<String> = c.witness.iter().map(|i| i.to_string()).collect();
                let _ = write!(out, " witness=[{}]", w.join(","));
            }
            out.push('\n');
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let failed = self.failures().count();
        let _ = writeln!(out, "suite {}: {} checks, {} failed", self.suite, self.checks.len(), failed);
        for c in &self.checks {
            let status = if c.pass { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {status} {:<28} {}", c.id, c.label);
            if !c.pass {
                if let Some(e) = &c.error {
                    let _ = write!(out, "  ({e})");
                }
                let _ = write!(out, "  witness {:?}", c.witness);
            }
            out.push('\n');
        }
        out
    }
}

/// A report that also keeps the first failure as an error, for validators
/// that return the structure only when every law holds.
#[derive(Debug, Default)]
pub struct Gate {
    pub report: Report,
    pub first: Option<Error>,
}

impl Gate {
    pub fn new(suite: &str) -> Self {
        Gate { report: Report::new(suite), first: None }
    }

    pub fn note(&mut self, id: &str, label: &str, e: Option<Error>) {
        match &e {
            None => self.report.record(id, label, None),
            Some(err) => self.report.record_error(id, label, err),
        }
        if self.first.is_none() {
            self.first = e;
        }
    }

    pub fn ok(&self) -> bool {
        self.first.is_none()
    }
}

/// All tuples in `0..n0 × 0..n1 × ...`, lexicographic.
pub fn tuples(ranges: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &n in ranges {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for i in 0..n {
                let mut t = t.clone();
                t.push(i);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let mut r = Report::new("hopf");
        r.record("lambda-1", "X+1<>X+2X-=X<>1", None);
        r.check_all("unit", "1+<x>1-=1<x>1", tuples(&[2, 2]), |t| t != [1, 0]);
        assert_eq!(
            r.lines(),
            "CHECK hopf lambda-1 X+1<>X+2X-=X<>1 PASS\nCHECK hopf unit 1+<x>1-=1<x>1 FAIL witness=[1,0]\n"
        );
        assert!(!r.pass());
    }
}
