use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{int, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactSymbolic,
    ExactSampled,
    Numeric,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::ExactSymbolic => "exact-symbolic",
            Mode::ExactSampled => "exact-sampled",
            Mode::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Mode::ExactSymbolic, Mode::ExactSampled, Mode::Numeric]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown mode {s:?}")))
    }
}

/// What to run and how hard.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckSpec {
    pub id: String,
    pub mode: Mode,
    pub n_max: usize,
    pub order: usize,
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub grammar_hash: Option<String>,
    pub cap: usize,
    pub tol: Option<f64>,
    pub sampling: Option<String>,
}

/// One line of evidence: where, and how far apart the two sides were.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub at: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub at: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check. Timings are deliberately absent so identical inputs give identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub id: String,
    pub mode: Mode,
    pub passed: bool,
    pub summary: String,
    pub spec: CheckSpec,
    pub provenance: Provenance,
    pub residuals: Vec<Residual>,
    pub counterexample: Option<Counterexample>,
}

impl Report {
    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Collects residuals and keeps the first failure.
pub(crate) struct Evidence {
    residuals: Vec<Residual>,
    counterexample: Option<Counterexample>,
    failures: usize,
    checked: usize,
}

impl Evidence {
    pub fn new() -> Self {
        Evidence {
            residuals: Vec::new(),
            counterexample: None,
            failures: 0,
            checked: 0,
        }
    }

    pub fn note(&mut self, at: impl Into<String>, value: impl Into<String>) {
        self.residuals.push(Residual {
            at: at.into(),
            value: value.into(),
        });
    }

    pub fn fail(
        &mut self,
        at: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                at: at.into(),
                expected: expected.into(),
                actual: actual.into(),
            });
        }
    }

    /// Records a boolean comparison; `describe` is only called on failure.
    pub fn expect<F: FnOnce() -> (String, String)>(
        &mut self,
        ok: bool,
        at: impl Into<String>,
        describe: F,
    ) -> bool {
        self.checked += 1;
        if !ok {
            let (e, a) = describe();
            self.fail(at, e, a);
        }
        ok
    }

    /// Compares two polynomials; the residual is the number of differing terms.
    pub fn polys(&mut self, at: &str, expected: &LaurentPoly, actual: &LaurentPoly) -> bool {
        self.checked += 1;
        let diff = match actual.checked_sub(expected) {
            Ok(d) => d,
            Err(e) => {
                self.fail(at, expected.to_string(), format!("{actual} ({e})"));
                self.note(at, "variable sets differ");
                return false;
            }
        };
        self.note(at, format!("{} differing terms", diff.len()));
        if diff.is_zero() {
            return true;
        }
        let (m, _) = diff.terms().next().expect("nonzero");
        let mono = LaurentPoly::term(expected.vars(), m.clone(), int(1));
        self.fail(
            format!("{at}, monomial {mono}"),
            expected.coeff(m).to_string(),
            actual.coeff(m).to_string(),
        );
        false
    }

    /// Absolute-error comparison of floats.
    pub fn close(&mut self, at: &str, expected: f64, actual: f64, tol: f64) -> bool {
        self.checked += 1;
        let err = (expected - actual).abs();
        self.note(at, format!("{err:.3e}"));
        let ok = err <= tol;
        if !ok {
            self.fail(at, format!("{expected:.16e}"), format!("{actual:.16e}"));
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    pub fn finish(self, spec: &CheckSpec, provenance: Provenance, what: &str) -> Report {
        let passed = self.passed();
        let summary = if passed {
            format!("{what}: {} comparisons agree", self.checked)
        } else if self.checked == 0 {
            format!("{what}: nothing was compared")
        } else {
            format!(
                "{what}: {} of {} comparisons disagree",
                self.failures, self.checked
            )
        };
        Report {
            id: spec.id.clone(),
            mode: spec.mode,
            passed,
            summary,
            spec: spec.clone(),
            provenance,
            residuals: self.residuals,
            counterexample: self.counterexample,
        }
    }
}
