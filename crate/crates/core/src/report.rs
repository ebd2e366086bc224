//! Outcome of a verification suite.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

/// Cases checked and violations found by one suite run. A run passes iff
/// `violations` is empty.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub cases: u64,
    pub violations: Vec<String>,
    /// Summary lines such as element and cell counts.
    pub notes: Vec<String>,
    #[serde(rename = "wall_time_secs", serialize_with = "secs")]
    pub wall_time: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1000.0).round() / 1000.0)
}

impl Report {
    pub fn new(suite: &str, n: usize) -> Self {
        Report {
            suite: suite.to_string(),
            n,
            cases: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    /// Runs `body` against a fresh report and records the elapsed time.
    pub fn run(suite: &str, n: usize, body: impl FnOnce(&mut Report)) -> Self {
        let start = Instant::now();
        let mut report = Report::new(suite, n);
        body(&mut report);
        report.wall_time = start.elapsed();
        report
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Counts one case; `describe` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(describe());
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Folds another report's cases, violations and notes into this one.
    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{} n={}: {status} ({} cases, {} violations, {:.3}s)",
            self.suite,
            self.n,
            self.cases,
            self.violations.len(),
            self.wall_time.as_secs_f64()
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}
