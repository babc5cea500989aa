//! Typed command results. Every `--json` document is an [`Envelope`] around
//! one of these, so it can be read back with serde.

use monoglue::gluing::ScanRecord;
use monoglue::{IntPoly, NumericalSemigroup, Representation, VerificationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: u32,
    pub command: String,
    pub result: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEnvelope {
    pub schema: u32,
    pub command: String,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupOut {
    pub generators: NumericalSemigroup,
    pub embedding_dimension: usize,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub genus: u64,
    pub apery: Vec<u64>,
    pub symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealOut {
    /// Curve generators, absent for `--raw` input.
    pub curve: Option<Vec<u64>>,
    pub variables: Vec<String>,
    pub ideal: Vec<String>,
    pub order: String,
    pub local: bool,
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub minimal_generators: Option<usize>,
    pub complete_intersection: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentConeOut {
    pub curve: Vec<u64>,
    pub variables: Vec<String>,
    pub order: String,
    pub lowest_variable: String,
    pub ideal: Vec<String>,
    pub standard_basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub cone: Vec<String>,
    pub cohen_macaulay: bool,
    pub witness: Option<String>,
    pub witness_leading_monomial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertOut {
    pub curve: Vec<u64>,
    pub order: String,
    pub numerator: IntPoly,
    pub h: IntPoly,
    pub series: String,
    pub hf_prefix: Vec<u64>,
    pub multiplicity: i64,
    pub nondecreasing: bool,
    pub first_violation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueOut {
    pub s1: NumericalSemigroup,
    pub s2: NumericalSemigroup,
    pub p: u64,
    pub q: u64,
    pub nice: bool,
    pub b: Representation,
    pub a: Representation,
    pub glued_generators: Vec<u64>,
    pub variables: Vec<String>,
    pub gluing_generators: Vec<String>,
}

pub type VerifyOut = VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOut {
    pub parameter: String,
    pub range: [i64; 2],
    pub verified: usize,
    pub skipped: usize,
    pub cohen_macaulay: usize,
    pub nondecreasing: usize,
    pub decreasing_gorenstein: Vec<i64>,
    pub output: Option<String>,
    /// Present when no output file was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<ScanRecord>>,
}

/// One line of a scan output file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanLine {
    pub schema: u32,
    #[serde(flatten)]
    pub record: ScanRecord,
}
