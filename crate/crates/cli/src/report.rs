//! Output documents. Field order is fixed and all lists come out in the
//! checkers' deterministic order, so equal inputs give equal bytes.

use serde::Serialize;

use prealt_core::{CheckReport, Tensor3};

use crate::format::{Entry2, Entry3, MapSection, ScalarJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationJson {
    pub identity: String,
    pub witness: Vec<usize>,
    pub residual: Vec<ScalarJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportFile {
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub violations: Vec<ViolationJson>,
    pub total_violations: usize,
    pub truncated: bool,
    /// Wall-clock seconds; only with `--timing`, since it breaks
    /// byte-stability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<f64>,
}

impl ReportFile {
    pub fn new(command: Vec<String>, report: &CheckReport) -> Self {
        ReportFile {
            command,
            verdict: if report.passed() { Verdict::Pass } else { Verdict::Fail },
            violations: report
                .violations()
                .iter()
                .map(|v| ViolationJson {
                    identity: v.identity.clone(),
                    witness: v.witness.clone(),
                    residual: v.residual.iter().map(ScalarJson::of).collect(),
                })
                .collect(),
            total_violations: report.total_violations(),
            truncated: report.truncated(),
            timing: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualEntry {
    pub id: String,
    pub witness: Vec<usize>,
    pub zero: bool,
    pub entries: Vec<Entry3>,
}

impl ResidualEntry {
    pub fn new(id: &str, witness: Vec<usize>, t: &Tensor3) -> Self {
        ResidualEntry {
            id: id.to_string(),
            witness,
            zero: t.is_zero(),
            entries: t.nonzero().map(|(i, j, k, c)| (i, j, k, ScalarJson::of(c))).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualFile {
    pub command: Vec<String>,
    pub verdict: String,
    pub residuals: Vec<ResidualEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHitJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Entry2>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchFile {
    pub command: Vec<String>,
    pub target: String,
    pub algebra: String,
    pub count: usize,
    pub hits: Vec<SearchHitJson>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}
