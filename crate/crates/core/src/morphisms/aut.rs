use crate::kernel::{Element, KernelError};

/// Applies `ã^t`, where `ã: (i, j, [q)) ↦ (i + q, j + q, [1 − q))`.
///
/// Since `ã² = h₁` (the shift of both coordinates by one), writing
/// `t = 2s + r` with `r ∈ {0, 1}` gives
///
/// ```text
/// ã^{2s}   : (i, j, [q)) ↦ (i + s,     j + s,     [q))
/// ã^{2s+1} : (i, j, [q)) ↦ (i + s + q, j + s + q, [1 − q))
/// ```
///
/// for every integer `s`, negative included.
pub fn apply_aut(t: i64, x: Element) -> Result<Element, KernelError> {
    if x.f > 1 {
        return Err(KernelError::FamilyMismatch {
            index: x.f,
            family_size: 2,
        });
    }
    let s = t.div_euclid(2);
    if t.rem_euclid(2) == 0 {
        x.shifted(s)
    } else {
        let q = x.f as i64;
        let y = x.shifted(s.checked_add(q).ok_or(KernelError::Overflow)?)?;
        Ok(Element::new(y.i, y.j, 1 - x.f))
    }
}

/// The twist `t = 2s + q` of the automorphism sending `(0, 0, [0))` to the
/// idempotent `(s, s, [q))`. `None` if `x` is not such an idempotent.
pub fn twist_for_origin_image(x: Element) -> Option<i64> {
    if x.i != x.j || x.f > 1 {
        return None;
    }
    x.i.checked_mul(2)?.checked_add(x.f as i64)
}
