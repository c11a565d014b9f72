use std::fmt;

use serde::{Deserialize, Serialize};

use super::KernelError;

/// A nonempty inductive subset of ω.
///
/// Every such set is a final segment `[a) = {x ∈ ω : x ≥ a}`, so it is stored
/// by its least element alone. Shifts and intersections then reduce to
/// addition and `max` on starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tail(u32);

impl Tail {
    /// `[0) = ω`.
    pub const OMEGA: Tail = Tail(0);

    pub const fn new(start: u32) -> Self {
        Tail(start)
    }

    pub const fn start(self) -> u32 {
        self.0
    }

    /// Membership of an integer in the denoted set.
    pub fn contains(self, x: i64) -> bool {
        x >= i64::from(self.0)
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{})", self.0)
    }
}

/// The tail denoting `(c + a) ∩ b`.
///
/// `c + [s)` is `{c + x : x ≥ s}`; intersecting with `[t) ⊆ ω` leaves
/// `[max(s + c, t))`, which is never negative because `t ≥ 0`.
pub fn tail_shift_intersect(c: i64, a: Tail, b: Tail) -> Result<Tail, KernelError> {
    let shifted = i64::from(a.0).checked_add(c).ok_or(KernelError::Overflow)?;
    let start = shifted.max(i64::from(b.0));
    u32::try_from(start)
        .map(Tail)
        .map_err(|_| KernelError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Explicit finite-set model of (c + A) ∩ B restricted to {0, .., 50}.
    fn least_of_truncated_intersection(c: i64, a: u32, b: u32) -> Option<i64> {
        let shifted: Vec<i64> = (i64::from(a)..=50).map(|x| x + c).collect();
        (0..=50)
            .filter(|x| shifted.contains(x) && *x >= i64::from(b))
            .min()
    }

    #[test]
    fn shift_by_minus_one_into_one() {
        assert_eq!(least_of_truncated_intersection(-1, 0, 1), Some(1));
        assert_eq!(
            tail_shift_intersect(-1, Tail::new(0), Tail::new(1)).unwrap(),
            Tail::new(1)
        );
    }

    #[test]
    fn identity_shift_self_intersection() {
        for a in 0..10 {
            assert_eq!(
                tail_shift_intersect(0, Tail::new(a), Tail::new(a)).unwrap(),
                Tail::new(a)
            );
        }
    }

    #[test]
    fn inductive_sets_are_fixed_by_backward_shift() {
        for a in 0..10 {
            let f = Tail::new(a);
            assert_eq!(tail_shift_intersect(-1, f, f).unwrap(), f);
        }
    }

    #[test]
    fn agrees_with_finite_set_model() {
        for c in -8..=8 {
            for a in 0..8 {
                for b in 0..8 {
                    let expected = least_of_truncated_intersection(c, a, b).unwrap();
                    let got = tail_shift_intersect(c, Tail::new(a), Tail::new(b)).unwrap();
                    assert_eq!(i64::from(got.start()), expected, "c={c} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            tail_shift_intersect(i64::MAX, Tail::new(1), Tail::new(0)),
            Err(KernelError::Overflow)
        );
        assert_eq!(
            tail_shift_intersect(i64::from(u32::MAX), Tail::new(1), Tail::new(0)),
            Err(KernelError::Overflow)
        );
    }
}
