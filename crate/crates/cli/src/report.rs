//! Verification run reports.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A known discrepancy in the source values; listed but not a failure.
    Flagged,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub criterion: u8,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    /// Kept out of JSON so that reports are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl RunReport {
    /// Panics on a duplicate check id.
    pub fn new(suite: &str, records: Vec<CheckRecord>) -> Self {
        let mut ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            panic!("duplicate check id {}", w[0]);
        }
        let count = |s| records.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            total: records.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            flagged: count(Status::Flagged),
        };
        RunReport { suite: suite.to_string(), records, summary }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn total_elapsed(&self) -> Duration {
        self.records.iter().map(|r| r.elapsed).sum()
    }

    /// Aligned table with one row per check.
    pub fn human(&self) -> String {
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.status.label().to_string(),
                    r.id.clone(),
                    clip(&r.expected, 48),
                    clip(&r.computed, 48),
                    format!("{:.2}s", r.elapsed.as_secs_f64()),
                ]
            })
            .collect();
        let header = ["status", "check", "expected", "computed", "time"].map(String::from);
        let mut out = align(&header, &rows);
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} checks, {} passed, {} failed, {} flagged in {:.2}s",
            self.suite,
            s.total,
            s.passed,
            s.failed,
            s.flagged,
            self.total_elapsed().as_secs_f64()
        );
        for r in self.records.iter().filter(|r| r.status != Status::Pass) {
            let _ = writeln!(out, "{} {}: {}", r.status.label(), r.id, r.claim);
            let _ = writeln!(out, "  expected: {}", r.expected);
            let _ = writeln!(out, "  computed: {}", r.computed);
        }
        out
    }
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}

/// Left-aligned ASCII columns.
pub fn align<const N: usize>(header: &[String; N], rows: &[[String; N]]) -> String {
    let mut widths = header.each_ref().map(|h| h.chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String; N]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(header);
    line(&widths.map(|w| "-".repeat(w)));
    for row in rows {
        line(row);
    }
    out
}
