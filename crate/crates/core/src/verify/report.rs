use serde::{Deserialize, Serialize};

use crate::kernel::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A concrete witness that a checked property does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Counterexample {
    /// `m(x·y) = lhs ≠ rhs = m(x)·m(y)`.
    Homomorphism {
        x: Element,
        y: Element,
        lhs: Element,
        rhs: Element,
    },
    /// `x < y` and both map to `image`.
    Injectivity {
        x: Element,
        y: Element,
        image: Element,
    },
    /// A classifier probe or the final pointwise comparison failed at `x`.
    /// `actual` is the table value after undoing the twist read at stage 1
    /// (stages 3 and 4) or the raw table value (stages 1 and 5).
    Classification {
        stage: u8,
        x: Element,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        expected: Option<Element>,
        actual: Element,
    },
    /// The shifted corner formula disagrees with the conjugated base map.
    Diagram {
        x: Element,
        expected: Element,
        actual: Element,
    },
    /// Any other algebraic law; `witnesses` are the arguments in order.
    Law {
        law: String,
        witnesses: Vec<Element>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        lhs: Option<Element>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        rhs: Option<Element>,
    },
}

/// Outcome of one exhaustive check.
///
/// A failing report always carries the least counterexample in the scan
/// order of the check: elements ascend by `(i, j, f)` and tuples of elements
/// compare lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub verdict: Verdict,
    #[serde(flatten)]
    pub counterexample: Option<Counterexample>,
    pub checks: u64,
    #[serde(skip_serializing_if = "is_zero", default)]
    pub skipped: u64,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

impl Report {
    pub fn pass(checks: u64) -> Self {
        Report {
            verdict: Verdict::Pass,
            counterexample: None,
            checks,
            skipped: 0,
        }
    }

    pub fn fail(counterexample: Counterexample, checks: u64) -> Self {
        Report {
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            checks,
            skipped: 0,
        }
    }

    pub fn from_scan(counterexample: Option<Counterexample>, checks: u64) -> Self {
        match counterexample {
            Some(c) => Report::fail(c, checks),
            None => Report::pass(checks),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Combines reports of a sequence of sub-checks: checks add up and the
    /// first failure in sequence order wins.
    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Report {
        let mut checks = 0;
        let mut skipped = 0;
        let mut failure = None;
        for r in reports {
            checks += r.checks;
            skipped += r.skipped;
            if failure.is_none() && !r.passed() {
                failure = r.counterexample;
            }
        }
        let mut merged = Report::from_scan(failure, checks);
        merged.skipped = skipped;
        merged
    }
}
