//! Injective endomorphisms of the semigroup over `{[0), [1)}`.
//!
//! Every injective endomorphism is `α_{k,p}` or `β_{k,p}` followed by a power
//! of the automorphism `ã`; [`CanonicalEndo`] stores exactly that pair.

mod aut;
mod base;
mod canonical;

use thiserror::Error;

use crate::kernel::KernelError;
use crate::verify::VerifyError;

pub use aut::{apply_aut, twist_for_origin_image};
pub use base::{BaseFormula, BaseKind, EndoBase};
pub use canonical::{CanonicalEndo, Decomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("{kind}:{k},{p} is outside the injective families")]
    ParamOutOfRange { kind: BaseKind, k: u32, p: u32 },
    #[error("{0} is not an automorphism")]
    NotAnAutomorphism(CanonicalEndo),
    #[error("composite did not normalize: {0}")]
    NormalizationFailed(Box<VerifyError>),
    #[error("window radius {0} is too small, need at least 2")]
    WindowTooSmall(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
