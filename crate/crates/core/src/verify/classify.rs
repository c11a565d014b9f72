use serde::Serialize;

use super::{Counterexample, MapTable, Report, VerifyError};
use crate::kernel::Element;
use crate::morphisms::{apply_aut, twist_for_origin_image, BaseKind, CanonicalEndo, EndoBase};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classified {
    pub endo: CanonicalEndo,
    pub report: Report,
}

const ORIGIN: Element = Element::new(0, 0, 0);
const UNIT_STEP: Element = Element::new(0, 1, 0);
const ONE_TAIL: Element = Element::new(0, 0, 1);

/// Reads off the canonical form of a table by probing, then confirms it on
/// the whole window.
///
/// 1. `m(0,0,[0))` must be an idempotent `(s,s,[q))`; the twist is `2s + q`.
/// 2. `m₀ = m` followed by `ã^{−twist}`.
/// 3. `m₀(0,1,[0))` must be `(0,k,[0))` with `k ≥ 1`.
/// 4. `m₀(0,0,[1))` must be `(p,p,[1))` with `p < k` (alpha) or
///    `(p,p,[0))` with `1 ≤ p < k` (beta).
/// 5. The candidate must agree with `m` on every element of `Window(n)`.
pub fn classify(m: &MapTable) -> Result<Classified, VerifyError> {
    if m.n() < 2 {
        return Err(VerifyError::WindowTooSmall(m.n()));
    }
    let reject = |stage, x, expected, actual| VerifyError::NotCanonical {
        stage,
        x,
        expected,
        actual,
    };

    let origin_image = m.at(&ORIGIN);
    let twist = twist_for_origin_image(origin_image)
        .ok_or_else(|| reject(1, ORIGIN, None, origin_image))?;
    let untwisted = |x: &Element| apply_aut(-twist, m.at(x));

    let step = untwisted(&UNIT_STEP)?;
    let k = match step {
        Element { i: 0, j, f: 0 } if j >= 1 => u32::try_from(j).ok(),
        _ => None,
    }
    .ok_or_else(|| reject(3, UNIT_STEP, None, step))?;

    let tail = untwisted(&ONE_TAIL)?;
    let base = match (tail.i == tail.j, tail.f, u32::try_from(tail.i)) {
        (true, 1, Ok(p)) => EndoBase::new(BaseKind::Alpha, k, p).ok(),
        (true, 0, Ok(p)) => EndoBase::new(BaseKind::Beta, k, p).ok(),
        _ => None,
    }
    .ok_or_else(|| reject(4, ONE_TAIL, None, tail))?;

    let endo = CanonicalEndo::new(base, twist);
    let window = m.window();
    for x in window.iter() {
        let expected = endo.apply(x)?;
        let actual = m.at(&x);
        if expected != actual {
            return Err(reject(5, x, Some(expected), actual));
        }
    }
    Ok(Classified {
        endo,
        report: Report::pass(window.len() as u64),
    })
}

impl VerifyError {
    /// The failing report behind a classification rejection, if any.
    pub fn certificate(&self) -> Option<Report> {
        match *self {
            VerifyError::NotCanonical {
                stage,
                x,
                expected,
                actual,
            } => Some(Report::fail(
                Counterexample::Classification {
                    stage,
                    x,
                    expected,
                    actual,
                },
                1,
            )),
            _ => None,
        }
    }
}
