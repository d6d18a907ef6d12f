//! Line-delimited verification reports.
//!
//! Suites run long, so results stream as one structured record per checked
//! instance rather than a summary table. Rows are buffered and sorted by
//! `(suite, entry, case)` before emission so the rendered report does not
//! depend on execution order.

use serde::{Deserialize, Serialize};

/// One checked relation instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    /// Suite name (`steinberg`, `kl`, `catalog`, `t`, `kl-vdk`, `roundtrip`,
    /// `form-ideal`).
    pub suite: String,
    /// Relation family or catalog entry, e.g. `S3`, `KL5`, `ppc`.
    pub entry: String,
    /// Draw number within the entry.
    pub case: u64,
    /// Rendered parameter binding.
    pub binding: String,
    /// `pass` or `fail`.
    pub result: String,
    /// `exact` when the instance was additionally certified as a group
    /// equality inside a unipotent radical, `image-level` otherwise.
    /// Absent for suites where the distinction does not apply.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

/// A buffered verification report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    rows: Vec<ReportRow>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(
        &mut self,
        suite: &str,
        entry: &str,
        case: u64,
        binding: String,
        pass: bool,
        exact: Option<&str>,
    ) {
        self.rows.push(ReportRow {
            suite: suite.to_string(),
            entry: entry.to_string(),
            case,
            binding,
            result: if pass { "pass" } else { "fail" }.to_string(),
            exact: exact.map(str::to_string),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn rows(&self) -> &[ReportRow] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.result == "pass")
    }

    pub fn failures(&self) -> Vec<&ReportRow> {
        self.rows.iter().filter(|r| r.result != "pass").collect()
    }

    /// Rows sorted by `(suite, entry, case)`.
    pub fn sorted_rows(&self) -> Vec<&ReportRow> {
        let mut rows: Vec<&ReportRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| (&a.suite, &a.entry, a.case).cmp(&(&b.suite, &b.entry, b.case)));
        rows
    }

    /// The report as line-delimited JSON records, sorted by row key.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for row in self.sorted_rows() {
            out.push_str(&serde_json::to_string(row).expect("report row serializes"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_serialized() {
        let mut rep = Report::new();
        rep.push("s", "B", 1, "y=2".into(), true, None);
        rep.push("s", "A", 0, "x=1".into(), false, Some("exact"));
        assert!(!rep.passed());
        assert_eq!(rep.failures().len(), 1);
        let text = rep.to_jsonl();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("\"entry\":\"A\""));
        assert!(lines[0].contains("\"exact\":\"exact\""));
        assert!(lines[1].contains("\"entry\":\"B\""));
        assert!(!lines[1].contains("exactness"));
    }
}
