use std::fmt::Write as _;

use serde::Serialize;

/// Version of the JSON layout described by `docs/report.schema.json`.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// The literal claim fails and a documented alternative reading passes.
    Discrepancy,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Discrepancy => "discrepancy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Pass,
    Discrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub family: String,
    pub claim: &'static str,
    pub status: Status,
    pub expected: Expected,
    pub unexpected: bool,
    pub witness: Option<String>,
    pub units: Vec<String>,
    pub annotations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

impl VerificationReport {
    pub fn is_unexpected(&self) -> bool {
        self.unexpected
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub discrepancy: usize,
    pub unexpected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub selection: String,
    pub k: u32,
    pub summary: Summary,
    pub cases: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn new(selection: &str, k: u32, cases: Vec<VerificationReport>) -> Self {
        let mut s = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in &cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Error => s.error += 1,
                Status::Discrepancy => s.discrepancy += 1,
            }
            s.unexpected += c.unexpected as usize;
        }
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            selection: selection.to_string(),
            k,
            summary: s,
            cases,
        }
    }

    pub fn all_expected(&self) -> bool {
        self.summary.unexpected == 0
    }

    pub fn case(&self, id: &str) -> Option<&VerificationReport> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table, one row per case, followed by the witnesses and
    /// annotations of every case that did not simply pass.
    pub fn to_table(&self) -> String {
        let idw = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        writeln!(out, "{:<idw$}  {:<24}  {:<11}  {:<11}", "id", "claim", "status", "expected").unwrap();
        for c in &self.cases {
            let flag = if c.unexpected { "  <-- unexpected" } else { "" };
            let expected = match c.expected {
                Expected::Pass => "pass",
                Expected::Discrepancy => "discrepancy",
            };
            writeln!(
                out,
                "{:<idw$}  {:<24}  {:<11}  {:<11}{flag}",
                c.id,
                c.claim,
                c.status.as_str(),
                expected
            )
            .unwrap();
        }
        for c in self.cases.iter().filter(|c| c.status != Status::Pass) {
            writeln!(out, "\n{} ({})", c.id, c.status.as_str()).unwrap();
            if let Some(w) = &c.witness {
                writeln!(out, "  witness: {w}").unwrap();
            }
            for a in &c.annotations {
                writeln!(out, "  note: {a}").unwrap();
            }
        }
        let s = &self.summary;
        writeln!(
            out,
            "\n{} cases: {} pass, {} discrepancy, {} fail, {} error; {} unexpected",
            s.total, s.pass, s.discrepancy, s.fail, s.error, s.unexpected
        )
        .unwrap();
        out
    }
}
