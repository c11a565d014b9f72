//! Exact arithmetic of tails and elements: the product, inverses, the
//! natural partial order and corner subsemigroups.
//!
//! Coordinates are `i64` and tail starts are `u32`. Intermediate terms are
//! evaluated in `i128`; a result that does not fit is an
//! [`KernelError::Overflow`], never a wrapped value.

mod corner;
mod element;
mod family;
mod tail;

use thiserror::Error;

pub use corner::{corner_iso, corner_iso_inv, in_corner};
pub use element::{Element, Window};
pub use family::{Branch, Family, F2};
pub use tail::{tail_shift_intersect, Tail};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("family is not ω-closed: {left} ∩ (−{shift} + {right}) = {result} is not a member")]
    NotOmegaClosed {
        left: Tail,
        right: Tail,
        shift: u32,
        result: Tail,
    },
    #[error("tail index {index} is not in a family of {family_size} tails")]
    FamilyMismatch { index: usize, family_size: usize },
    #[error("product tail {0} is not a member of the family")]
    TailOutsideFamily(Tail),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{element} is not in the corner of offset {offset}")]
    NotInCorner { element: Element, offset: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A semigroup product on [`Element`]s.
///
/// [`Family`] is the real implementation. The verification engine is
/// generic over this trait so that it can be run against deliberately broken
/// products.
pub trait Product: Sync {
    fn product(&self, x: Element, y: Element) -> Result<Element, KernelError>;

    /// `x·x = x`. A product that overflows is not equal to `x`.
    fn is_idempotent(&self, x: Element) -> bool {
        matches!(self.product(x, x), Ok(y) if y == x)
    }

    /// Natural partial order: `x ≼ y` iff `x = (x·x⁻¹)·y`.
    fn nat_leq(&self, x: Element, y: Element) -> bool {
        self.product(x, x.inverse())
            .and_then(|e| self.product(e, y))
            .is_ok_and(|z| z == x)
    }
}
