use super::{Counterexample, Report, VerifyError};
use crate::kernel::{corner_iso, corner_iso_inv, in_corner, Element, KernelError, F2};
use crate::morphisms::{BaseKind, EndoBase};

/// Conjugates `b` by the corner shift and compares with the closed form
/// on the `n`-th corner:
///
/// ```text
/// (i − n, j − n, [0)) ↦ (k·i − n,     k·j − n,     [0))
/// (i − n, j − n, [1)) ↦ (p + k·i − n, p + k·j − n, [1) for alpha, [0) for beta)
/// ```
///
/// for every element of `Window(w)` that lies in the corner.
pub fn corner_diagram_check(b: EndoBase, n: u32, w: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for x in F2.window(w).iter() {
        if !in_corner(x, n)? {
            continue;
        }
        checks += 1;
        let expected = shifted_formula(b, n, x)?;
        let image = b.apply(corner_iso(x, n)?)?;
        let actual = match corner_iso_inv(image, n) {
            Ok(y) => y,
            Err(KernelError::NotInCorner { .. }) => image.shifted(-i64::from(n))?,
            Err(e) => return Err(e.into()),
        };
        if actual != expected {
            return Ok(Report::fail(
                Counterexample::Diagram {
                    x,
                    expected,
                    actual,
                },
                checks,
            ));
        }
    }
    Ok(Report::pass(checks))
}

fn shifted_formula(b: EndoBase, n: u32, x: Element) -> Result<Element, KernelError> {
    let (k, p, n) = (i128::from(b.k()), i128::from(b.p()), i128::from(n));
    let (i, j) = (i128::from(x.i) + n, i128::from(x.j) + n);
    let (i, j, f) = match (x.f, b.kind()) {
        (0, _) => (k * i - n, k * j - n, 0),
        (_, BaseKind::Alpha) => (p + k * i - n, p + k * j - n, 1),
        (_, BaseKind::Beta) => (p + k * i - n, p + k * j - n, 0),
    };
    let narrow = |v: i128| i64::try_from(v).map_err(|_| KernelError::Overflow);
    Ok(Element::new(narrow(i)?, narrow(j)?, f))
}
