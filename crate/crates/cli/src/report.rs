//! Machine-readable reports. Every command emits exactly one JSON
//! document on stdout (or to `--out`); field order is fixed by the struct
//! declarations, so identical invocations produce identical bytes. Human
//! summaries go to stderr, never into the report stream.

use serde::Serialize;

use frobkit::exact::Matrix;
use frobkit::structures::CheckReport;

use crate::format;

#[derive(Serialize)]
pub struct CheckDoc {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    pub input: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    /// Exact witness of failure: the difference matrix of the failed
    /// identity, or a kernel vector for degeneracy.
    pub witness: Option<Vec<Vec<String>>>,
}

impl CheckEntry {
    pub fn bool_only(name: &str, passed: bool) -> Self {
        CheckEntry {
            name: name.to_owned(),
            passed,
            witness: None,
        }
    }

    pub fn with_witness(name: &str, passed: bool, witness: Option<&Matrix>) -> Self {
        CheckEntry {
            name: name.to_owned(),
            passed,
            witness: witness.map(format::matrix_block),
        }
    }
}

pub fn entries_from_report(prefix: &str, report: &CheckReport) -> Vec<CheckEntry> {
    report
        .checks()
        .iter()
        .map(|c| CheckEntry {
            name: format!("{prefix}.{}", c.axiom.replace(' ', "_")),
            passed: c.passed,
            witness: c.difference.as_ref().map(format::matrix_block),
        })
        .collect()
}

#[derive(Serialize)]
pub struct NakayamaDoc {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    pub input: String,
    pub passed: bool,
    pub nakayama_matrix: Vec<Vec<String>>,
    pub is_identity: bool,
    pub is_algebra_morphism: bool,
    pub inner: InnerDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetrized_kappa: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct InnerDoc {
    /// `"witness"`, `"certified_absent"` or `"not_found"`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<String>>,
}

/// Reason document for every nonzero exit that is not a failed check
/// report.
#[derive(Serialize)]
pub struct ErrorDoc {
    pub schema_version: u32,
    pub command: String,
    pub error: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable");
    text.push('\n');
    text
}
