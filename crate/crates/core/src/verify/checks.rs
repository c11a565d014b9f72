use std::collections::HashMap;

use rayon::prelude::*;

use super::{Counterexample, MapTable, Report, VerifyError};
use crate::kernel::{Element, Product, F2};

/// Minimum fraction of window pairs whose product must lie in the table's
/// domain, as `numerator / denominator`.
pub const COVERAGE_FLOOR: (u64, u64) = (9, 10);

struct Scan {
    checked: u64,
    skipped: u64,
    first: Option<Counterexample>,
}

/// Checks `m(x·y) = m(x)·m(y)` for all `x, y ∈ Window(n)` whose product is in
/// the table's domain; other pairs are skipped and counted.
pub fn check_homomorphism(m: &MapTable) -> Result<Report, VerifyError> {
    check_homomorphism_with(&F2, m)
}

pub fn check_homomorphism_with<P: Product>(p: &P, m: &MapTable) -> Result<Report, VerifyError> {
    let xs = m.window().to_vec();
    // One scan per x; each stops recording at its first violation but keeps
    // counting, so the totals do not depend on how the work is split.
    let scans: Vec<Result<Scan, VerifyError>> = xs
        .par_iter()
        .map(|&x| {
            let mx = m.at(&x);
            let mut scan = Scan {
                checked: 0,
                skipped: 0,
                first: None,
            };
            for &y in &xs {
                let Some(lhs) = m.get(&p.product(x, y)?) else {
                    scan.skipped += 1;
                    continue;
                };
                scan.checked += 1;
                if scan.first.is_some() {
                    continue;
                }
                let my = m.at(&y);
                let rhs = p.product(mx, my)?;
                if lhs != rhs {
                    scan.first = Some(Counterexample::Homomorphism { x, y, lhs, rhs });
                }
            }
            Ok(scan)
        })
        .collect();

    let mut checked = 0;
    let mut skipped = 0;
    let mut first = None;
    for scan in scans {
        let scan = scan?;
        checked += scan.checked;
        skipped += scan.skipped;
        if first.is_none() {
            first = scan.first;
        }
    }
    let total = checked + skipped;
    if checked * COVERAGE_FLOOR.1 < total * COVERAGE_FLOOR.0 {
        return Err(VerifyError::InsufficientDomain { checked, total });
    }
    let mut report = Report::from_scan(first, checked);
    report.skipped = skipped;
    Ok(report)
}

/// Checks that `m` is injective on `Window(n)`; a failure carries the least
/// colliding pair `x < y`.
pub fn check_injective(m: &MapTable) -> Report {
    let mut by_image: HashMap<Element, Vec<Element>> = HashMap::new();
    let window = m.window();
    for x in window.iter() {
        by_image.entry(m.at(&x)).or_default().push(x);
    }
    // The least x with a later partner heads its group, and its least
    // partner is second in that group.
    let least = by_image
        .iter()
        .filter(|(_, xs)| xs.len() > 1)
        .map(|(image, xs)| (xs[0], xs[1], *image))
        .min();
    Report::from_scan(
        least.map(|(x, y, image)| Counterexample::Injectivity { x, y, image }),
        window.len() as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::{BaseFormula, BaseKind, CanonicalEndo, EndoBase};

    fn e(i: i64, j: i64, f: usize) -> Element {
        Element::new(i, j, f)
    }

    fn pseudo(kind: BaseKind, k: u32, p: u32, n: u32) -> MapTable {
        let formula = BaseFormula { kind, k, p };
        MapTable::tabulate(n, |x| formula.apply(x)).unwrap()
    }

    #[test]
    fn valid_alpha_passes() {
        let a = EndoBase::alpha(2, 1).unwrap();
        let t = MapTable::tabulate(4, |x| a.apply(x)).unwrap();
        let r = check_homomorphism(&t).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks, 162 * 162);
        assert_eq!(r.skipped, 0);
        assert!(check_injective(&t).passed());
    }

    #[test]
    fn identity_passes() {
        let t = MapTable::tabulate(3, |x| CanonicalEndo::IDENTITY.apply(x)).unwrap();
        assert!(check_homomorphism(&t).unwrap().passed());
        assert!(check_injective(&t).passed());
    }

    #[test]
    fn pseudo_alpha_fails_on_vague_branch() {
        let r = check_homomorphism(&pseudo(BaseKind::Alpha, 2, 2, 4)).unwrap();
        assert!(!r.passed());
        let Some(Counterexample::Homomorphism { x, y, lhs, rhs }) = r.counterexample else {
            panic!("expected a homomorphism counterexample");
        };
        // Least pair in (i, j, f) order over the signed window.
        assert_eq!((x, y), (e(-4, -4, 1), e(-3, -4, 0)));
        assert_eq!((lhs, rhs), (e(-6, -8, 0), e(-6, -8, 1)));
    }

    #[test]
    fn pseudo_beta_collides() {
        let r = check_injective(&pseudo(BaseKind::Beta, 2, 0, 4));
        assert_eq!(
            r.counterexample,
            Some(Counterexample::Injectivity {
                x: e(-4, -4, 0),
                y: e(-4, -4, 1),
                image: e(-8, -8, 0),
            })
        );
    }

    #[test]
    fn constant_map_collides() {
        let t = MapTable::tabulate(2, |_| Ok(e(0, 0, 0))).unwrap();
        let r = check_injective(&t);
        assert_eq!(
            r.counterexample,
            Some(Counterexample::Injectivity {
                x: e(-2, -2, 0),
                y: e(-2, -2, 1),
                image: e(0, 0, 0),
            })
        );
    }

    #[test]
    fn bare_window_tables_are_insufficient() {
        let t = MapTable::tabulate_on(4, 4, Ok).unwrap();
        match check_homomorphism(&t) {
            Err(VerifyError::InsufficientDomain { checked, total }) => {
                assert_eq!(total, 162 * 162);
                assert!(checked * 10 < total * 9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn report_is_independent_of_thread_count() {
        let t = pseudo(BaseKind::Alpha, 3, 3, 3);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| check_homomorphism(&t).unwrap())
        };
        let one = run(1);
        assert!(!one.passed());
        for threads in [2, 3, 8] {
            assert_eq!(run(threads), one);
        }
    }
}
