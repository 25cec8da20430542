//! JSONL report records: one JSON object per corpus line plus a trailing
//! summary object. Field order is fixed by struct declaration so identical
//! runs produce byte-identical streams.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::checks::{CheckId, CheckOutcome, Verdict};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub omega: usize,
    pub chi: usize,
    pub delta: usize,
    pub reed_bound: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub class: String,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded_by: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckJson {
    pub id: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl From<CheckOutcome> for CheckJson {
    fn from(outcome: CheckOutcome) -> CheckJson {
        CheckJson {
            id: outcome.id.as_str().to_string(),
            verdict: outcome.verdict.as_str().to_string(),
            detail: outcome.detail,
            witness: outcome.witness,
        }
    }
}

/// One record per successfully decoded corpus graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub input_index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Absent only when the solvers ran out of budget.
    pub invariants: Option<InvariantsJson>,
    pub class_verdicts: Vec<ClassVerdict>,
    pub checks: Vec<CheckJson>,
}

/// One record per line that failed to decode (processing continues).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineError {
    pub input_index: usize,
    pub line_no: usize,
    pub error: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub not_applicable: usize,
    pub budget_exceeded: usize,
}

impl VerdictCounts {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::BudgetExceeded => self.budget_exceeded += 1,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckSummary {
    pub id: String,
    #[serde(flatten)]
    pub counts: VerdictCounts,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub decode_errors: usize,
    pub checks: Vec<CheckSummary>,
    pub exit_code: i32,
}

/// Trailing line of the report stream.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummaryLine {
    pub summary: Summary,
}

impl Summary {
    pub fn new(check_ids: &[CheckId]) -> Summary {
        Summary {
            graphs: 0,
            decode_errors: 0,
            checks: check_ids
                .iter()
                .map(|id| CheckSummary {
                    id: id.as_str().to_string(),
                    counts: VerdictCounts::default(),
                })
                .collect(),
            exit_code: 0,
        }
    }

    pub fn record_check(&mut self, id: CheckId, verdict: Verdict) {
        if let Some(entry) = self.checks.iter_mut().find(|c| c.id == id.as_str()) {
            entry.counts.add(verdict);
        }
    }

    pub fn total_fails(&self) -> usize {
        self.checks.iter().map(|c| c.counts.fail).sum()
    }

    pub fn total_budget_exceeded(&self) -> usize {
        self.checks.iter().map(|c| c.counts.budget_exceeded).sum()
    }
}

/// A parsed report line.
#[derive(Debug)]
pub enum ReportLine {
    Report(Box<CheckReport>),
    Error(LineError),
    Summary(Box<SummaryLine>),
}

/// Dispatch a JSONL line by its distinguishing field.
pub fn parse_report_line(line: &str) -> Result<ReportLine, String> {
    let value: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let obj = value.as_object().ok_or("report line is not an object")?;
    if obj.contains_key("summary") {
        serde_json::from_value(value.clone())
            .map(|s| ReportLine::Summary(Box::new(s)))
            .map_err(|e| e.to_string())
    } else if obj.contains_key("error") {
        serde_json::from_value(value.clone())
            .map(ReportLine::Error)
            .map_err(|e| e.to_string())
    } else {
        serde_json::from_value(value.clone())
            .map(|r| ReportLine::Report(Box::new(r)))
            .map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let report = CheckReport {
            input_index: 3,
            graph6: "Dhc".into(),
            n: 5,
            m: 5,
            invariants: Some(InvariantsJson {
                omega: 2,
                chi: 3,
                delta: 2,
                reed_bound: 3,
            }),
            class_verdicts: vec![],
            checks: vec![],
        };
        let line = serde_json::to_string(&report).unwrap();
        match parse_report_line(&line).unwrap() {
            ReportLine::Report(r) => assert_eq!(r.graph6, "Dhc"),
            other => panic!("wrong line kind: {other:?}"),
        }

        let err = LineError {
            input_index: 0,
            line_no: 1,
            error: "bad".into(),
        };
        let line = serde_json::to_string(&err).unwrap();
        assert!(matches!(
            parse_report_line(&line).unwrap(),
            ReportLine::Error(_)
        ));
    }

    #[test]
    fn summary_counting() {
        let mut s = Summary::new(&[CheckId::Reed]);
        s.record_check(CheckId::Reed, Verdict::Pass);
        s.record_check(CheckId::Reed, Verdict::Fail);
        s.record_check(CheckId::Reed, Verdict::BudgetExceeded);
        assert_eq!(s.checks[0].counts.pass, 1);
        assert_eq!(s.total_fails(), 1);
        assert_eq!(s.total_budget_exceeded(), 1);
    }
}
