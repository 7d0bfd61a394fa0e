use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of failing locations kept in a report.
pub const MAX_WITNESSES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing equation: where it was evaluated and both sides' values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub status: Status,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, range: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            range: range.into(),
            status: Status::Pass,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn for_order(claim: impl Into<String>, n: usize) -> Self {
        Self::new(claim, format!("n = {n}"))
    }

    /// Records one comparison of `expected` against `actual`.
    pub fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        location: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) -> bool {
        let ok = expected == actual;
        self.record(ok, location, || expected.to_string(), || actual.to_string());
        ok
    }

    /// Records one check whose outcome is already known.
    pub fn record(
        &mut self,
        ok: bool,
        location: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if ok {
            return;
        }
        self.status = Status::Fail;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                location: location(),
                expected: expected(),
                actual: actual(),
            });
        }
    }

    /// Records a check that could not be carried out at all.
    pub fn record_error(&mut self, location: impl Into<String>, error: impl fmt::Display) {
        let msg = error.to_string();
        self.record(false, || location.into(), || "a value".into(), || msg);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merges per-order reports of one claim into a single report over `range`.
    pub fn combine(
        claim: impl Into<String>,
        range: impl Into<String>,
        parts: impl IntoIterator<Item = VerificationReport>,
    ) -> Self {
        let mut out = Self::new(claim, range);
        for part in parts {
            out.checked += part.checked;
            out.failures += part.failures;
            if !part.passed() {
                out.status = Status::Fail;
            }
            for mut w in part.witnesses {
                if out.witnesses.len() == MAX_WITNESSES {
                    break;
                }
                if part.range != out.range {
                    w.location = format!("{}: {}", part.range, w.location);
                }
                out.witnesses.push(w);
            }
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{status} {} ({}): {} checks, {} failures",
            self.claim, self.range, self.checked, self.failures
        )?;
        for w in &self.witnesses {
            write!(f, "\n  at {}: expected {}, got {}", w.location, w.expected, w.actual)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_keeps_a_witness() {
        let mut r = VerificationReport::for_order("demo", 3);
        assert!(r.compare(|| "(1, 1)".into(), &1, &1));
        assert!(!r.compare(|| "(1, 2)".into(), &1, &2));
        assert_eq!(r.status, Status::Fail);
        assert_eq!((r.checked, r.failures, r.witnesses.len()), (2, 1, 1));
        assert!(r.to_string().starts_with("FAIL demo (n = 3): 2 checks, 1 failures"));
    }

    #[test]
    fn combine_prefixes_locations_and_caps_witnesses() {
        let parts = (3..=5).map(|n| {
            let mut r = VerificationReport::for_order("demo", n);
            for t in 0..20 {
                r.compare(|| format!("t = {t}"), &0, &(n as i32));
            }
            r
        });
        let all = VerificationReport::combine("demo", "n = 3..=5", parts);
        assert_eq!(all.failures, 60);
        assert_eq!(all.witnesses.len(), MAX_WITNESSES);
        assert_eq!(all.witnesses[0].location, "n = 3: t = 0");
        let ok = VerificationReport::combine("demo", "n = 1", [VerificationReport::for_order("demo", 1)]);
        assert!(ok.passed());
    }

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::for_order("demo", 4);
        r.compare(|| "x".into(), &"a", &"b");
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"status\":\"fail\""));
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
