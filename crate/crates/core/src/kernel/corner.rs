//! Corner subsemigroups `e·S·e` for the idempotents `e = (−n, −n, [0))` of
//! the semigroup over [`F2`], and the shift isomorphism onto the `n = 0`
//! corner.

use super::{Element, KernelError, Product, F2};

fn corner_idempotent(n: u32) -> Element {
    let k = -i64::from(n);
    Element::new(k, k, 0)
}

/// Whether `x` lies in `(−n, −n, [0)) · S · (−n, −n, [0))`.
///
/// Evaluated as the double product; no closed-form membership rule is used.
pub fn in_corner(x: Element, n: u32) -> Result<bool, KernelError> {
    let e = corner_idempotent(n);
    Ok(F2.product(F2.product(e, x)?, e)? == x)
}

/// Shifts a member of the `n`-th corner by `+n` onto the `0`-th corner.
pub fn corner_iso(x: Element, n: u32) -> Result<Element, KernelError> {
    if !in_corner(x, n)? {
        return Err(KernelError::NotInCorner {
            element: x,
            offset: n,
        });
    }
    x.shifted(i64::from(n))
}

/// Inverse of [`corner_iso`]: shifts a member of the `0`-th corner by `−n`.
pub fn corner_iso_inv(x: Element, n: u32) -> Result<Element, KernelError> {
    if !in_corner(x, 0)? {
        return Err(KernelError::NotInCorner {
            element: x,
            offset: 0,
        });
    }
    x.shifted(-i64::from(n))
}
