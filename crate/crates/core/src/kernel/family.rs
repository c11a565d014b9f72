use std::borrow::Cow;

use serde::{Deserialize, Serialize};

use super::{tail_shift_intersect, Element, KernelError, Product, Tail, Window};

/// A finite ω-closed family of nonempty inductive subsets of ω, stored as
/// strictly increasing tail starts.
///
/// Elements refer to members by index, so the product can check closure on
/// every call.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily")]
pub struct Family {
    starts: Cow<'static, [u32]>,
}

#[derive(Deserialize)]
struct RawFamily {
    starts: Vec<u32>,
}

impl TryFrom<RawFamily> for Family {
    type Error = KernelError;

    fn try_from(raw: RawFamily) -> Result<Self, Self::Error> {
        Family::new(raw.starts)
    }
}

/// The two-element family `{[0), [1)}`; index 0 is `[0)`, index 1 is `[1)`.
pub const F2: Family = Family {
    starts: Cow::Borrowed(&[0, 1]),
};

/// Which line of the two-case product formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `j₁ ≤ i₂`: `(i₁ − j₁ + i₂, j₂, (j₁ − i₂ + F₁) ∩ F₂)`.
    Ascending,
    /// `j₁ ≥ i₂`: `(i₁, j₁ − i₂ + j₂, F₁ ∩ (i₂ − j₁ + F₂))`.
    Descending,
}

impl Family {
    /// Validates `starts` and checks ω-closedness: `F₁ ∩ (−n + F₂)` must be a
    /// member for all members `F₁, F₂` and all `n ≥ 0`.
    ///
    /// Only `n ≤ max(starts)` has to be enumerated. Past that point
    /// `−n + F₂` covers all of ω and the intersection is `F₁` itself.
    pub fn new(starts: Vec<u32>) -> Result<Self, KernelError> {
        if starts.is_empty() {
            return Err(KernelError::Malformed("family must be nonempty".into()));
        }
        if starts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(KernelError::Malformed(format!(
                "family starts must be strictly increasing, got {starts:?}"
            )));
        }
        let family = Family {
            starts: Cow::Owned(starts),
        };
        let max = *family.starts.last().expect("nonempty");
        for left in family.tails() {
            for right in family.tails() {
                for shift in 0..=max {
                    let result = tail_shift_intersect(-i64::from(shift), right, left)?;
                    if family.index_of(result).is_none() {
                        return Err(KernelError::NotOmegaClosed {
                            left,
                            right,
                            shift,
                            result,
                        });
                    }
                }
            }
        }
        Ok(family)
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    pub fn starts(&self) -> &[u32] {
        &self.starts
    }

    pub fn tails(&self) -> impl Iterator<Item = Tail> + '_ {
        self.starts.iter().map(|&s| Tail::new(s))
    }

    pub fn tail(&self, index: usize) -> Option<Tail> {
        self.starts.get(index).map(|&s| Tail::new(s))
    }

    pub fn index_of(&self, tail: Tail) -> Option<usize> {
        self.starts.binary_search(&tail.start()).ok()
    }

    pub fn window(&self, n: u32) -> Window {
        Window::new(n, self.len())
    }

    fn member(&self, x: &Element) -> Result<Tail, KernelError> {
        self.tail(x.f).ok_or(KernelError::FamilyMismatch {
            index: x.f,
            family_size: self.len(),
        })
    }

    /// Evaluates one line of the product formula regardless of whether its
    /// guard holds. Used to check that both lines agree when `j₁ = i₂`.
    pub fn mul_branch(
        &self,
        x: Element,
        y: Element,
        branch: Branch,
    ) -> Result<Element, KernelError> {
        let f1 = self.member(&x)?;
        let f2 = self.member(&y)?;
        let (i1, j1, i2, j2) = (
            i128::from(x.i),
            i128::from(x.j),
            i128::from(y.i),
            i128::from(y.j),
        );
        let (i, j, tail) = match branch {
            Branch::Ascending => (
                i1 - j1 + i2,
                j2,
                tail_shift_intersect(saturate(j1 - i2), f1, f2)?,
            ),
            Branch::Descending => (
                i1,
                j1 - i2 + j2,
                tail_shift_intersect(saturate(i2 - j1), f2, f1)?,
            ),
        };
        let f = self
            .index_of(tail)
            .ok_or(KernelError::TailOutsideFamily(tail))?;
        Ok(Element {
            i: narrow(i)?,
            j: narrow(j)?,
            f,
        })
    }

    /// The semigroup product.
    pub fn mul(&self, x: Element, y: Element) -> Result<Element, KernelError> {
        let branch = if x.j <= y.i {
            Branch::Ascending
        } else {
            Branch::Descending
        };
        self.mul_branch(x, y, branch)
    }
}

impl Product for Family {
    fn product(&self, x: Element, y: Element) -> Result<Element, KernelError> {
        self.mul(x, y)
    }
}

fn saturate(c: i128) -> i64 {
    i64::try_from(c).unwrap_or(if c < 0 { i64::MIN } else { i64::MAX })
}

fn narrow(v: i128) -> Result<i64, KernelError> {
    i64::try_from(v).map_err(|_| KernelError::Overflow)
}
