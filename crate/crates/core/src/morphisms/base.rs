use std::fmt;

use serde::{Deserialize, Serialize};

use super::MorphismError;
use crate::kernel::{Element, KernelError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    /// Keeps the `[1)`-part on `[1)`.
    Alpha,
    /// Folds the `[1)`-part into `[0)`.
    Beta,
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseKind::Alpha => "alpha",
            BaseKind::Beta => "beta",
        })
    }
}

/// The two-line formula shared by `α_{k,p}` and `β_{k,p}`, with no range
/// check on `k` and `p`:
///
/// ```text
/// (i, j, [0)) ↦ (k·i, k·j, [0))
/// (i, j, [1)) ↦ (p + k·i, p + k·j, [1))   alpha
/// (i, j, [1)) ↦ (p + k·i, p + k·j, [0))   beta
/// ```
///
/// Out-of-range parameters give maps that are not endomorphisms (or not
/// injective); the verifier uses them as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseFormula {
    pub kind: BaseKind,
    pub k: u32,
    pub p: u32,
}

impl BaseFormula {
    pub fn apply(&self, x: Element) -> Result<Element, KernelError> {
        let k = i128::from(self.k);
        let p = i128::from(self.p);
        let (i, j) = (i128::from(x.i), i128::from(x.j));
        let (i, j, f) = match (x.f, self.kind) {
            (0, _) => (k * i, k * j, 0),
            (1, BaseKind::Alpha) => (p + k * i, p + k * j, 1),
            (1, BaseKind::Beta) => (p + k * i, p + k * j, 0),
            (index, _) => {
                return Err(KernelError::FamilyMismatch {
                    index,
                    family_size: 2,
                })
            }
        };
        let narrow = |v: i128| i64::try_from(v).map_err(|_| KernelError::Overflow);
        Ok(Element::new(narrow(i)?, narrow(j)?, f))
    }

    /// Checks the parameter ranges of the classified injective families:
    /// alpha needs `k ≥ 1, 0 ≤ p < k`; beta needs `k ≥ 2, 1 ≤ p < k`.
    pub fn validate(self) -> Result<EndoBase, MorphismError> {
        let ok = match self.kind {
            BaseKind::Alpha => self.k >= 1 && self.p < self.k,
            BaseKind::Beta => self.k >= 2 && self.p >= 1 && self.p < self.k,
        };
        if ok {
            Ok(EndoBase(self))
        } else {
            Err(MorphismError::ParamOutOfRange {
                kind: self.kind,
                k: self.k,
                p: self.p,
            })
        }
    }
}

/// A validated `α_{k,p}` or `β_{k,p}`: an injective endomorphism fixing
/// `(0, 0, [0))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBase", into = "RawBase")]
pub struct EndoBase(BaseFormula);

#[derive(Serialize, Deserialize)]
struct RawBase {
    kind: BaseKind,
    k: u32,
    p: u32,
}

impl TryFrom<RawBase> for EndoBase {
    type Error = MorphismError;

    fn try_from(raw: RawBase) -> Result<Self, Self::Error> {
        EndoBase::new(raw.kind, raw.k, raw.p)
    }
}

impl From<EndoBase> for RawBase {
    fn from(b: EndoBase) -> Self {
        RawBase {
            kind: b.0.kind,
            k: b.0.k,
            p: b.0.p,
        }
    }
}

impl EndoBase {
    /// `α_{1,0}`, the identity map.
    pub const IDENTITY: EndoBase = EndoBase(BaseFormula {
        kind: BaseKind::Alpha,
        k: 1,
        p: 0,
    });

    pub fn new(kind: BaseKind, k: u32, p: u32) -> Result<Self, MorphismError> {
        BaseFormula { kind, k, p }.validate()
    }

    pub fn alpha(k: u32, p: u32) -> Result<Self, MorphismError> {
        Self::new(BaseKind::Alpha, k, p)
    }

    pub fn beta(k: u32, p: u32) -> Result<Self, MorphismError> {
        Self::new(BaseKind::Beta, k, p)
    }

    pub fn kind(&self) -> BaseKind {
        self.0.kind
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn formula(&self) -> BaseFormula {
        self.0
    }

    pub fn apply(&self, x: Element) -> Result<Element, KernelError> {
        self.0.apply(x)
    }

    /// Every valid base with `k ≤ kmax`, alphas before betas, then by `k`
    /// and `p`.
    pub fn all_up_to(kmax: u32) -> Vec<EndoBase> {
        let alphas = (1..=kmax).flat_map(|k| (0..k).map(move |p| (BaseKind::Alpha, k, p)));
        let betas = (2..=kmax).flat_map(|k| (1..k).map(move |p| (BaseKind::Beta, k, p)));
        alphas
            .chain(betas)
            .map(|(kind, k, p)| EndoBase(BaseFormula { kind, k, p }))
            .collect()
    }
}

impl fmt::Display for EndoBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.0.kind, self.0.k, self.0.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64, j: i64, f: usize) -> Element {
        Element::new(i, j, f)
    }

    #[test]
    fn constructors() {
        assert_eq!(EndoBase::alpha(1, 0).unwrap(), EndoBase::IDENTITY);
        assert!(EndoBase::beta(2, 1).is_ok());
        assert_eq!(
            EndoBase::beta(2, 0),
            Err(MorphismError::ParamOutOfRange {
                kind: BaseKind::Beta,
                k: 2,
                p: 0
            })
        );
        assert!(EndoBase::alpha(2, 2).is_err());
        assert!(EndoBase::alpha(0, 0).is_err());
        assert!(EndoBase::beta(1, 0).is_err());
        assert!(EndoBase::beta(3, 3).is_err());
    }

    #[test]
    fn formulas() {
        let a21 = EndoBase::alpha(2, 1).unwrap();
        assert_eq!(a21.apply(e(-1, 3, 1)).unwrap(), e(-1, 7, 1));
        assert_eq!(a21.apply(e(-1, 3, 0)).unwrap(), e(-2, 6, 0));
        let b21 = EndoBase::beta(2, 1).unwrap();
        assert_eq!(b21.apply(e(0, 0, 1)).unwrap(), e(1, 1, 0));
        for x in [e(3, -2, 0), e(-7, 9, 1)] {
            assert_eq!(EndoBase::IDENTITY.apply(x).unwrap(), x);
        }
    }

    #[test]
    fn overflow_and_foreign_tails() {
        let a = EndoBase::alpha(3, 2).unwrap();
        assert_eq!(a.apply(e(i64::MAX / 2, 0, 0)), Err(KernelError::Overflow));
        assert!(matches!(
            a.apply(e(0, 0, 2)),
            Err(KernelError::FamilyMismatch { index: 2, .. })
        ));
    }

    #[test]
    fn json() {
        let b = EndoBase::alpha(2, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"kind":"alpha","k":2,"p":1}"#
        );
        assert!(serde_json::from_str::<EndoBase>(r#"{"kind":"beta","k":2,"p":0}"#).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // k(k+1)/2 alphas plus (k-1)k/2 betas.
        assert_eq!(EndoBase::all_up_to(1).len(), 1);
        assert_eq!(EndoBase::all_up_to(5).len(), 15 + 10);
    }
}
