//! Reference implementations used only by the integration tests. Tails are
//! materialized as finite sets of naturals below `HORIZON`, and products follow
//! the textbook `max(j₁, i₂)` form rather than the library's two-branch split.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bicyclic::Element;

pub const HORIZON: i64 = 120;

pub type TailSet = BTreeSet<i64>;

pub fn tail_set(start: u32) -> TailSet {
    (i64::from(start)..HORIZON).collect()
}

fn shift(c: i64, s: &TailSet) -> TailSet {
    s.iter().map(|v| v + c).filter(|v| *v >= 0).collect()
}

/// The least element of `s`, after checking that `s` is an initial segment
/// of a tail as seen through the horizon (coordinates stay far below it).
fn start_of(s: &TailSet) -> u32 {
    let lo = *s.iter().next().expect("empty tail");
    let hi = *s.iter().next_back().unwrap();
    assert_eq!(s.len() as i64, hi - lo + 1, "not a tail: gaps in {s:?}");
    assert!(hi > HORIZON - 40, "tail truncated too far");
    u32::try_from(lo).unwrap()
}

/// `(i₁,j₁,F₁)·(i₂,j₂,F₂)` with `m = max(j₁,i₂)`:
/// `(i₁−j₁+m, j₂−i₂+m, (j₁−m+F₁) ∩ (i₂−m+F₂))`, with tails given as
/// start values and the family as the list of starts.
pub fn oracle_mul(starts: &[u32], x: Element, y: Element) -> Element {
    let m = x.j.max(y.i);
    let f1 = tail_set(starts[x.f]);
    let f2 = tail_set(starts[y.f]);
    let meet: TailSet = shift(x.j - m, &f1)
        .intersection(&shift(y.i - m, &f2))
        .copied()
        .collect();
    let start = start_of(&meet);
    let f = starts
        .iter()
        .position(|s| *s == start)
        .expect("family is not closed under the product");
    Element::new(x.i - x.j + m, y.j - y.i + m, f)
}

pub fn f2_mul(x: Element, y: Element) -> Element {
    oracle_mul(&[0, 1], x, y)
}

/// Brute-force closure: is `F₁ ∩ (−n + F₂)` a member for all members and
/// `n < 32`? Enough for start sets within `{0, .., 16}`. Returns the first failing `(F₁, F₂, n)`.
pub fn closure_witness(starts: &[u32]) -> Option<(u32, u32, u32)> {
    for &a in starts {
        for &b in starts {
            for n in 0..32 {
                let meet: TailSet = tail_set(a)
                    .intersection(&shift(-n, &tail_set(b)))
                    .copied()
                    .collect();
                let s = start_of(&meet);
                if !starts.contains(&s) {
                    return Some((a, b, n as u32));
                }
            }
        }
    }
    None
}

/// All elements with `|i|, |j| ≤ n` over a family of `len` tails.
pub fn window(n: i64, len: usize) -> Vec<Element> {
    let mut v = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            for f in 0..len {
                v.push(Element::new(i, j, f));
            }
        }
    }
    v
}

/// `x ≼ y` by searching for an idempotent `e` in `search` with `x = y·e`.
pub fn leq_by_search(x: Element, y: Element, search: &[Element]) -> bool {
    search
        .iter()
        .filter(|e| e.i == e.j)
        .any(|&e| f2_mul(y, e) == x)
}
