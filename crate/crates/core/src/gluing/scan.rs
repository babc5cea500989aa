//! Parameterized families of gluings, verified instance by instance.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{validate_gluing, verify_instance, AnalysisError, VerificationReport};
use crate::hilbert::IntPoly;
use crate::semigroup::{minimal_generators, SemigroupError};

/// `c·x + d` in the family parameter `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearExpr {
    pub coeff: i64,
    pub constant: i64,
}

impl LinearExpr {
    /// Parses sums like `4r + 3`, `6*q+7`, `q`, `8` or `-2r + 19`.
    pub fn parse(text: &str, parameter: &str) -> Result<Self, ScanError> {
        let bad = |why: &str| ScanError::InvalidTemplate(format!("`{text}`: {why}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty expression"));
        }
        let mut expr = LinearExpr {
            coeff: 0,
            constant: 0,
        };
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == s.len() => (1, rest),
                _ => return Err(bad("expected + or -")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(term.len());
            let (num, var) = term.split_at(digits);
            let var = match var.strip_prefix('*') {
                Some("") => return Err(bad("dangling `*`")),
                Some(v) => v,
                None => var,
            };
            let n: i64 = if num.is_empty() {
                if var.is_empty() {
                    return Err(bad("empty term"));
                }
                1
            } else {
                num.parse().map_err(|_| bad("integer out of range"))?
            };
            if var.is_empty() {
                expr.constant += sign * n;
            } else if var == parameter {
                expr.coeff += sign * n;
            } else {
                return Err(bad(&format!("unknown symbol `{var}`")));
            }
        }
        Ok(expr)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeff * x + self.constant
    }
}

impl fmt::Display for LinearExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{:+}", self.coeff, self.constant)
    }
}

/// Declarative family: fixed components, `p` and `q` linear in one parameter
/// running over an inclusive range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanTemplate {
    pub s1: Vec<u64>,
    pub s2: Vec<u64>,
    pub parameter: String,
    pub p: String,
    pub q: String,
    pub range: [i64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

/// Compact verdicts of one verified instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub nice: bool,
    pub glued_generators: Vec<u64>,
    pub c1_cm: bool,
    pub c2_cm: bool,
    pub glued_cm: bool,
    pub c1_nondecreasing: bool,
    pub glued_nondecreasing: bool,
    pub cm_transfer_applicable: bool,
    pub cm_transfer_confirmed: bool,
    pub monotone_transfer_applicable: bool,
    pub monotone_transfer_confirmed: bool,
    pub ideal_agreement: bool,
    pub decomposition_ok: Option<bool>,
    pub factorization_ok: Option<bool>,
    pub gorenstein: bool,
    pub complete_intersection: bool,
    pub decreasing_gorenstein: bool,
    pub h: IntPoly,
    pub multiplicity: i64,
}

impl From<&VerificationReport> for Verdicts {
    fn from(r: &VerificationReport) -> Self {
        Verdicts {
            nice: r.gluing.nice,
            glued_generators: r.glued.generators.clone(),
            c1_cm: r.c1.cohen_macaulay,
            c2_cm: r.c2.cohen_macaulay,
            glued_cm: r.glued.cohen_macaulay,
            c1_nondecreasing: r.c1.nondecreasing,
            glued_nondecreasing: r.glued.nondecreasing,
            cm_transfer_applicable: r.cm_transfer_applicable,
            cm_transfer_confirmed: r.cm_transfer_confirmed,
            monotone_transfer_applicable: r.monotone_transfer_applicable,
            monotone_transfer_confirmed: r.monotone_transfer_confirmed,
            ideal_agreement: r.ideal_agreement,
            decomposition_ok: r.decomposition.as_ref().map(|d| d.ok),
            factorization_ok: r.factorization_ok,
            gorenstein: r.gorenstein,
            complete_intersection: r.complete_intersection,
            decreasing_gorenstein: r.decreasing_gorenstein,
            h: r.glued.h.clone(),
            multiplicity: r.glued.multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ScanOutcome {
    Verified(Verdicts),
    Skipped { code: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub parameter: i64,
    pub p: i64,
    pub q: i64,
    #[serde(flatten)]
    pub outcome: ScanOutcome,
}

impl ScanRecord {
    pub fn verdicts(&self) -> Option<&Verdicts> {
        match &self.outcome {
            ScanOutcome::Verified(v) => Some(v),
            ScanOutcome::Skipped { .. } => None,
        }
    }
}

/// Everything needed to reproduce a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproductionBundle {
    pub parameter: i64,
    pub violations: Vec<String>,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("invalid scan template: {0}")]
    InvalidTemplate(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("instance {parameter} failed: {error}")]
    Analysis {
        parameter: i64,
        error: AnalysisError,
    },
    #[error("instance {} falsified: {}", .0.parameter, .0.violations.join(", "))]
    Falsified(Box<ReproductionBundle>),
    #[error("worker pool: {0}")]
    Pool(String),
}

impl ScanError {
    pub fn code(&self) -> &'static str {
        match self {
            ScanError::InvalidTemplate(_) => "InvalidTemplate",
            ScanError::Semigroup(e) => e.code(),
            ScanError::Analysis { error, .. } => error.code(),
            ScanError::Falsified(_) => "Falsified",
            ScanError::Pool(_) => "Pool",
        }
    }
}

enum Instance {
    Record(ScanRecord),
    Broken(ScanError),
}

/// Verifies every instance of the family, in parameter order. `jobs`
/// bounds the worker pool (default: all cores). The first instance with a
/// failed check, in parameter order, aborts the scan.
pub fn scan_family(
    template: &ScanTemplate,
    jobs: Option<usize>,
) -> Result<Vec<ScanRecord>, ScanError> {
    let s1 = minimal_generators(&template.s1)?;
    let s2 = minimal_generators(&template.s2)?;
    let pe = LinearExpr::parse(&template.p, &template.parameter)?;
    let qe = LinearExpr::parse(&template.q, &template.parameter)?;
    let [lo, hi] = template.range;
    if lo > hi {
        return Err(ScanError::InvalidTemplate(format!(
            "empty range {lo}..={hi}"
        )));
    }

    let run = |x: i64| -> Instance {
        let (p, q) = (pe.eval(x), qe.eval(x));
        let skipped = |code: &str, reason: String| {
            Instance::Record(ScanRecord {
                parameter: x,
                p,
                q,
                outcome: ScanOutcome::Skipped {
                    code: code.to_string(),
                    reason,
                },
            })
        };
        if p <= 0 || q <= 0 {
            return skipped("NonPositive", format!("p = {p}, q = {q} must be positive"));
        }
        let gluing = match validate_gluing(&s1, &s2, p as u64, q as u64) {
            Ok(s) => s,
            Err(e) => return skipped(e.code(), e.to_string()),
        };
        let report = match verify_instance(&gluing) {
            Ok(r) => r,
            Err(error) => {
                return Instance::Broken(ScanError::Analysis {
                    parameter: x,
                    error,
                })
            }
        };
        let violations = report.violations();
        if !violations.is_empty() {
            return Instance::Broken(ScanError::Falsified(Box::new(ReproductionBundle {
                parameter: x,
                violations: violations.into_iter().map(String::from).collect(),
                report,
            })));
        }
        Instance::Record(ScanRecord {
            parameter: x,
            p,
            q,
            outcome: ScanOutcome::Verified(Verdicts::from(&report)),
        })
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| ScanError::Pool(e.to_string()))?;
    let results: Vec<Instance> = pool.install(|| (lo..=hi).into_par_iter().map(run).collect());

    results
        .into_iter()
        .map(|i| match i {
            Instance::Record(r) => Ok(r),
            Instance::Broken(e) => Err(e),
        })
        .collect()
}
