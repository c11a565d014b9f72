use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::KernelError;

/// A triple `(i, j, F)` where `F` is given by its index into the ambient
/// [`Family`](super::Family).
///
/// The derived order is lexicographic on `(i, j, f)`; verification reports
/// use it to pick least counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64, usize)", into = "(i64, i64, usize)")]
pub struct Element {
    pub i: i64,
    pub j: i64,
    pub f: usize,
}

impl Element {
    pub const fn new(i: i64, j: i64, f: usize) -> Self {
        Element { i, j, f }
    }

    /// `(j, i, f)`; the unique `y` with `xyx = x` and `yxy = y`.
    pub const fn inverse(self) -> Self {
        Element {
            i: self.j,
            j: self.i,
            f: self.f,
        }
    }

    /// Both coordinates shifted by `delta`, tail unchanged.
    pub fn shifted(self, delta: i64) -> Result<Self, KernelError> {
        Ok(Element {
            i: self.i.checked_add(delta).ok_or(KernelError::Overflow)?,
            j: self.j.checked_add(delta).ok_or(KernelError::Overflow)?,
            f: self.f,
        })
    }
}

impl From<(i64, i64, usize)> for Element {
    fn from((i, j, f): (i64, i64, usize)) -> Self {
        Element { i, j, f }
    }
}

impl From<Element> for (i64, i64, usize) {
    fn from(x: Element) -> Self {
        (x.i, x.j, x.f)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.i, self.j, self.f)
    }
}

impl FromStr for Element {
    type Err = KernelError;

    /// Parses the text form `i,j,f`, e.g. `2,-5,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || KernelError::Parse(format!("expected `i,j,f`, got `{s}`"));
        let mut parts = s.trim().split(',');
        let (Some(i), Some(j), Some(f), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        Ok(Element {
            i: i.trim().parse().map_err(|_| bad())?,
            j: j.trim().parse().map_err(|_| bad())?,
            f: f.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// The finite truncation `{(i, j, f) : |i| ≤ n, |j| ≤ n, f < family_len}`.
///
/// Iteration yields elements in ascending [`Element`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    n: u32,
    family_len: usize,
}

impl Window {
    pub const fn new(n: u32, family_len: usize) -> Self {
        Window { n, family_len }
    }

    pub const fn radius(&self) -> u32 {
        self.n
    }

    /// `(2n + 1)² · |family|`.
    pub fn len(&self) -> usize {
        let side = 2 * self.n as usize + 1;
        side * side * self.family_len
    }

    pub fn is_empty(&self) -> bool {
        self.family_len == 0
    }

    pub fn contains(&self, x: &Element) -> bool {
        let n = i64::from(self.n);
        x.i.abs() <= n && x.j.abs() <= n && x.f < self.family_len
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + Clone + '_ {
        let n = i64::from(self.n);
        let fl = self.family_len;
        (-n..=n).flat_map(move |i| {
            (-n..=n).flat_map(move |j| (0..fl).map(move |f| Element { i, j, f }))
        })
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}
