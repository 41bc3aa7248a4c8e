use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED-pole")]
    SkippedPole,
    #[serde(rename = "SKIPPED-too-large")]
    SkippedTooLarge,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedPole => "SKIPPED-pole",
            Status::SkippedTooLarge => "SKIPPED-too-large",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Symbolic,
    RationalPoint,
    Series,
    Enumeration,
    Cyclotomic,
}

/// Outcome of one identity or count verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity_id: String,
    pub source: String,
    pub params: BTreeMap<String, String>,
    pub regime: Regime,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    /// Wall time; left out of serialized reports unless timings are requested,
    /// so that reports stay byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(identity_id: &str, source: &str, regime: Regime) -> Self {
        CheckReport {
            identity_id: identity_id.to_string(),
            source: source.to_string(),
            params: BTreeMap::new(),
            regime,
            status: Status::Pass,
            lhs: None,
            rhs: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records a comparison; a mismatch keeps both witnesses.
    pub fn compare<T: PartialEq + fmt::Display>(mut self, lhs: &T, rhs: &T) -> Self {
        if lhs != rhs {
            self.status = Status::Fail;
            self.lhs = Some(digest(&lhs.to_string()));
            self.rhs = Some(digest(&rhs.to_string()));
        }
        self
    }

    /// Records a failure with explicit witnesses.
    pub fn fail(mut self, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        self.status = Status::Fail;
        self.lhs = Some(digest(&lhs.to_string()));
        self.rhs = Some(digest(&rhs.to_string()));
        self
    }

    pub fn with_status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    /// Folds a sub-result into this report: any failure wins.
    pub fn absorb(mut self, other: &CheckReport) -> Self {
        if !other.passed() && self.passed() {
            self.status = other.status;
            self.lhs = other.lhs.clone();
            self.rhs = other.rhs.clone();
            let mut ps: Vec<String> = other.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
            ps.sort();
            self.notes.push(format!("first failure at {} [{}]", other.identity_id, ps.join(", ")));
        }
        self
    }

    pub fn timed<F: FnOnce() -> CheckReport>(f: F) -> CheckReport {
        let start = Instant::now();
        let mut r = f();
        r.elapsed = start.elapsed();
        r
    }

    /// Sort key giving the deterministic report order.
    pub fn key(&self) -> (String, Vec<(String, String)>) {
        (self.identity_id.clone(), self.params.clone().into_iter().collect())
    }
}

const DIGEST_LIMIT: usize = 400;

fn digest(s: &str) -> String {
    if s.len() <= DIGEST_LIMIT {
        s.to_string()
    } else {
        let mut cut = DIGEST_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}... ({} chars)", &s[..cut], s.len())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        write!(f, "{:<18} {} [{}]", self.status.to_string(), self.identity_id, ps.join(", "))?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, "\n    lhs: {}\n    rhs: {}", l, r)?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {}", n)?;
        }
        Ok(())
    }
}

/// Sorts reports into their canonical order.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by_key(|a| a.key());
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed())
}
