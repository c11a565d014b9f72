//! Brute-force verification over finite windows.
//!
//! All scans are deterministic: work may be split across threads, but a
//! failing [`Report`] always carries the least counterexample in scan order.

mod checks;
mod classify;
mod diagram;
pub mod laws;
mod report;
mod suite;
mod table;

use thiserror::Error;

use crate::kernel::{Element, KernelError};

pub use checks::{check_homomorphism, check_homomorphism_with, check_injective, COVERAGE_FLOOR};
pub use classify::{classify, Classified};
pub use diagram::corner_diagram_check;
pub use report::{Counterexample, Report, Verdict};
pub use suite::{
    random_endos, theorem_suite, theorem_suite_with, SubReport, SuiteConfig, SuiteReport,
};
pub use table::MapTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("only {checked} of {total} window pairs have their product in the table's domain")]
    InsufficientDomain { checked: u64, total: u64 },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not canonical at stage {stage}: {x} maps to {actual}")]
    NotCanonical {
        stage: u8,
        x: Element,
        expected: Option<Element>,
        actual: Element,
    },
    #[error("window radius {0} is too small, need at least 2")]
    WindowTooSmall(u32),
    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
