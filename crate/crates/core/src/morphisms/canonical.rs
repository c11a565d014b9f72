use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{apply_aut, BaseKind, EndoBase, MorphismError};
use crate::kernel::{Element, KernelError};
use crate::verify::{self, MapTable};

/// An injective endomorphism in normal form: the base `α_{k,p}` or
/// `β_{k,p}` followed by `ã^twist`.
///
/// Maps act on the right, so `apply(e, x) = ã^twist(base(x))` and
/// `compose(e1, e2)` means "first `e1`, then `e2`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalEndo {
    pub base: EndoBase,
    pub twist: i64,
}

/// `e = fixing · automorphism`, where `fixing` sends `(0, 0, [0))` to itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub fixing: CanonicalEndo,
    pub automorphism: CanonicalEndo,
}

impl CanonicalEndo {
    pub const IDENTITY: CanonicalEndo = CanonicalEndo {
        base: EndoBase::IDENTITY,
        twist: 0,
    };

    pub const fn new(base: EndoBase, twist: i64) -> Self {
        CanonicalEndo { base, twist }
    }

    /// `ã^t`.
    pub const fn automorphism(twist: i64) -> Self {
        CanonicalEndo {
            base: EndoBase::IDENTITY,
            twist,
        }
    }

    pub fn apply(&self, x: Element) -> Result<Element, KernelError> {
        apply_aut(self.twist, self.base.apply(x)?)
    }

    /// Image of `(0, 0, [0))`: always `(s, s, [q))` with `2s + q = twist`.
    pub fn image_of_origin(&self) -> Element {
        let s = self.twist.div_euclid(2);
        let q = self.twist.rem_euclid(2) as usize;
        Element::new(s, s, q)
    }

    pub fn is_automorphism(&self) -> bool {
        self.base == EndoBase::IDENTITY
    }

    pub fn invert_automorphism(&self) -> Result<CanonicalEndo, MorphismError> {
        if !self.is_automorphism() {
            return Err(MorphismError::NotAnAutomorphism(*self));
        }
        let twist = self
            .twist
            .checked_neg()
            .ok_or(MorphismError::Kernel(KernelError::Overflow))?;
        Ok(CanonicalEndo::automorphism(twist))
    }

    pub fn decompose(&self) -> Decomposition {
        Decomposition {
            fixing: CanonicalEndo::new(self.base, 0),
            automorphism: CanonicalEndo::automorphism(self.twist),
        }
    }

    /// Normal form of "first `self`, then `then`".
    ///
    /// The pointwise composite is tabulated on `Window(n)` and handed to the
    /// classifier, which also checks the result on every window element.
    pub fn compose(&self, then: &CanonicalEndo, n: u32) -> Result<CanonicalEndo, MorphismError> {
        if n < 2 {
            return Err(MorphismError::WindowTooSmall(n));
        }
        let table = MapTable::tabulate(n, |x| then.apply(self.apply(x)?))?;
        verify::classify(&table)
            .map(|c| c.endo)
            .map_err(|e| MorphismError::NormalizationFailed(Box::new(e)))
    }
}

impl Decomposition {
    pub fn recompose(&self, x: Element) -> Result<Element, KernelError> {
        self.automorphism.apply(self.fixing.apply(x)?)
    }
}

impl fmt::Display for CanonicalEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.base, self.twist)
    }
}

impl FromStr for CanonicalEndo {
    type Err = MorphismError;

    /// Parses `alpha:k,p@t` or `beta:k,p@t`; a missing `@t` means `t = 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad =
            || MorphismError::Parse(format!("expected `alpha:k,p@t` or `beta:k,p@t`, got `{s}`"));
        let s = s.trim();
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let kind = match kind {
            "alpha" => BaseKind::Alpha,
            "beta" => BaseKind::Beta,
            _ => return Err(bad()),
        };
        let (params, twist) = match rest.split_once('@') {
            Some((params, twist)) => (params, twist.parse().map_err(|_| bad())?),
            None => (rest, 0),
        };
        let (k, p) = params.split_once(',').ok_or_else(bad)?;
        let k = k.parse().map_err(|_| bad())?;
        let p = p.parse().map_err(|_| bad())?;
        Ok(CanonicalEndo::new(EndoBase::new(kind, k, p)?, twist))
    }
}
