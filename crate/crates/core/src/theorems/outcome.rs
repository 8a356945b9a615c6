use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CheckStatus {
    Confirmed,
    /// The claimed relation failed; `witness` says how, in terms that can
    /// be re-checked by orbit computations.
    Refuted {
        witness: String,
    },
    /// A precondition did not hold, or a budget ran out.
    Skipped {
        reason: String,
    },
}

impl CheckStatus {
    pub fn is_refuted(&self) -> bool {
        matches!(self, CheckStatus::Refuted { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, CheckStatus::Skipped { .. })
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Confirmed => f.write_str("confirmed"),
            CheckStatus::Refuted { witness } => write!(f, "REFUTED ({witness})"),
            CheckStatus::Skipped { reason } => write!(f, "skipped ({reason})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub instance: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub details: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn is_confirmed(&self) -> bool {
        self.status == CheckStatus::Confirmed
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.check, self.instance, self.status)
    }
}

/// Collects details while a check runs and stamps the elapsed time.
pub(crate) struct Recorder {
    check: &'static str,
    instance: String,
    details: Vec<String>,
    start: Instant,
}

impl Recorder {
    pub fn new(check: &'static str, instance: impl Into<String>) -> Self {
        Recorder {
            check,
            instance: instance.into(),
            details: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn note(&mut self, detail: impl Into<String>) {
        self.details.push(detail.into());
    }

    pub fn finish(self, status: CheckStatus) -> CheckOutcome {
        CheckOutcome {
            check: self.check.to_string(),
            instance: self.instance,
            status,
            details: self.details,
            elapsed: self.start.elapsed(),
        }
    }

    pub fn confirmed(self) -> CheckOutcome {
        self.finish(CheckStatus::Confirmed)
    }

    pub fn refuted(self, witness: impl Into<String>) -> CheckOutcome {
        self.finish(CheckStatus::Refuted {
            witness: witness.into(),
        })
    }

    pub fn skipped(self, reason: impl Into<String>) -> CheckOutcome {
        self.finish(CheckStatus::Skipped {
            reason: reason.into(),
        })
    }

    /// Confirmed when `holds`, otherwise refuted with `witness`.
    pub fn verdict(self, holds: bool, witness: impl FnOnce() -> String) -> CheckOutcome {
        if holds {
            self.confirmed()
        } else {
            self.refuted(witness())
        }
    }
}

/// Totals over a list of outcomes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(outcomes: &[CheckOutcome]) -> Self {
        let mut s = Summary::default();
        for o in outcomes {
            match o.status {
                CheckStatus::Confirmed => s.confirmed += 1,
                CheckStatus::Refuted { .. } => s.refuted += 1,
                CheckStatus::Skipped { .. } => s.skipped += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} confirmed, {} refuted, {} skipped",
            self.confirmed, self.refuted, self.skipped
        )
    }
}
