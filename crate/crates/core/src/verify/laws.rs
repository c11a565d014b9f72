//! Exhaustive checks of the semigroup laws over finite windows.

use rayon::prelude::*;

use super::{Counterexample, Report, VerifyError};
use crate::kernel::{corner_iso, in_corner, Branch, Element, Family, KernelError, Product, Window};

fn law(
    name: &str,
    witnesses: Vec<Element>,
    lhs: Option<Element>,
    rhs: Option<Element>,
) -> Counterexample {
    Counterexample::Law {
        law: name.to_owned(),
        witnesses,
        lhs,
        rhs,
    }
}

/// Runs `f` on every element in parallel and keeps the counterexample of the
/// least element that produced one.
fn scan<F>(xs: &[Element], f: F) -> Result<Report, VerifyError>
where
    F: Fn(Element) -> Result<(u64, Option<Counterexample>), VerifyError> + Sync,
{
    let parts: Vec<_> = xs.par_iter().map(|&x| f(x)).collect();
    let mut checks = 0;
    let mut first = None;
    for part in parts {
        let (n, c) = part?;
        checks += n;
        if first.is_none() {
            first = c;
        }
    }
    Ok(Report::from_scan(first, checks))
}

/// `(x·y)·z = x·(y·z)` for all triples.
pub fn associativity<P: Product>(p: &P, w: Window) -> Result<Report, VerifyError> {
    let xs = w.to_vec();
    scan(&xs, |x| {
        let mut first = None;
        for &y in &xs {
            let xy = p.product(x, y)?;
            for &z in &xs {
                let lhs = p.product(xy, z)?;
                let rhs = p.product(x, p.product(y, z)?)?;
                if lhs != rhs {
                    first = Some(law("associativity", vec![x, y, z], Some(lhs), Some(rhs)));
                    break;
                }
            }
            if first.is_some() {
                break;
            }
        }
        Ok(((xs.len() * xs.len()) as u64, first))
    })
}

/// Both lines of the product formula agree whenever `x.j = y.i`.
pub fn branch_agreement(family: &Family, w: Window) -> Result<Report, VerifyError> {
    let xs = w.to_vec();
    scan(&xs, |x| {
        let mut checks = 0;
        for y in xs.iter().copied().filter(|y| y.i == x.j) {
            checks += 1;
            let lhs = family.mul_branch(x, y, Branch::Ascending)?;
            let rhs = family.mul_branch(x, y, Branch::Descending)?;
            if lhs != rhs {
                return Ok((
                    checks,
                    Some(law("branch-agreement", vec![x, y], Some(lhs), Some(rhs))),
                ));
            }
        }
        Ok((checks, None))
    })
}

/// `x·x⁻¹·x = x`, `x⁻¹·x·x⁻¹ = x⁻¹`, and no other window element satisfies
/// both identities.
pub fn inverse_laws<P: Product>(p: &P, w: Window) -> Result<Report, VerifyError> {
    let xs = w.to_vec();
    let is_inverse = |x: Element, y: Element| -> Result<bool, KernelError> {
        Ok(p.product(p.product(x, y)?, x)? == x && p.product(p.product(y, x)?, y)? == y)
    };
    scan(&xs, |x| {
        let inv = x.inverse();
        if !is_inverse(x, inv)? {
            return Ok((1, Some(law("inverse", vec![x, inv], None, None))));
        }
        for &y in &xs {
            if y != inv && is_inverse(x, y)? {
                return Ok((
                    xs.len() as u64,
                    Some(law("inverse-uniqueness", vec![x, y], None, None)),
                ));
            }
        }
        Ok((xs.len() as u64, None))
    })
}

/// `x·x = x` exactly on the diagonal `i = j`.
pub fn idempotents<P: Product>(p: &P, w: Window) -> Report {
    let first = w
        .iter()
        .find(|&x| p.is_idempotent(x) != (x.i == x.j))
        .map(|x| law("idempotent", vec![x], None, None));
    Report::from_scan(first, w.len() as u64)
}

/// Every product of window elements lands on a member tail.
pub fn tail_closure(family: &Family, w: Window) -> Result<Report, VerifyError> {
    let xs = w.to_vec();
    scan(&xs, |x| {
        for &y in &xs {
            match family.mul(x, y) {
                Ok(_) => {}
                Err(KernelError::TailOutsideFamily(_)) => {
                    return Ok((
                        xs.len() as u64,
                        Some(law("tail-closure", vec![x, y], None, None)),
                    ))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok((xs.len() as u64, None))
    })
}

/// `nat_leq(x, y)` agrees with a search for an idempotent `e` in `search`
/// such that `x = y·e`.
pub fn order_equivalence<P: Product>(
    p: &P,
    w: Window,
    search: Window,
) -> Result<Report, VerifyError> {
    let xs = w.to_vec();
    let idempotents: Vec<Element> = search.iter().filter(|&e| p.is_idempotent(e)).collect();
    scan(&xs, |x| {
        for &y in &xs {
            let mut witnessed = false;
            for &e in &idempotents {
                if p.product(y, e)? == x {
                    witnessed = true;
                    break;
                }
            }
            if p.nat_leq(x, y) != witnessed {
                return Ok((
                    xs.len() as u64,
                    Some(law("order-equivalence", vec![x, y], None, None)),
                ));
            }
        }
        Ok((xs.len() as u64, None))
    })
}

/// Reflexivity, antisymmetry and transitivity of `nat_leq`.
pub fn partial_order<P: Product>(p: &P, w: Window) -> Report {
    let xs = w.to_vec();
    let n = xs.len();
    let leq: Vec<bool> = (0..n * n)
        .into_par_iter()
        .map(|k| p.nat_leq(xs[k / n], xs[k % n]))
        .collect();
    let at = |a: usize, b: usize| leq[a * n + b];
    let mut checks = 0;
    for (a, &x) in xs.iter().enumerate() {
        checks += 1;
        if !at(a, a) {
            return Report::fail(law("reflexivity", vec![x], None, None), checks);
        }
    }
    for a in 0..n {
        for b in 0..n {
            checks += 1;
            if a != b && at(a, b) && at(b, a) {
                return Report::fail(law("antisymmetry", vec![xs[a], xs[b]], None, None), checks);
            }
        }
    }
    for a in 0..n {
        for b in (0..n).filter(|&b| at(a, b)) {
            for c in (0..n).filter(|&c| at(b, c)) {
                checks += 1;
                if !at(a, c) {
                    return Report::fail(
                        law("transitivity", vec![xs[a], xs[b], xs[c]], None, None),
                        checks,
                    );
                }
            }
        }
    }
    Report::pass(checks)
}

/// The corner shift respects products: for every offset `n ≤ max_offset`
/// and window elements `x, y` in that corner,
/// `iso(x·y) = iso(x)·iso(y)`.
pub fn corner_morphism<P: Product>(
    p: &P,
    w: Window,
    max_offset: u32,
) -> Result<Report, VerifyError> {
    let reports = (0..=max_offset)
        .map(|n| {
            let members: Vec<Element> = w
                .iter()
                .filter_map(|x| {
                    in_corner(x, n)
                        .map(|inside| inside.then_some(x))
                        .transpose()
                })
                .collect::<Result<_, _>>()?;
            scan(&members, |x| {
                for &y in &members {
                    let lhs = corner_iso(p.product(x, y)?, n)?;
                    let rhs = p.product(corner_iso(x, n)?, corner_iso(y, n)?)?;
                    if lhs != rhs {
                        return Ok((
                            members.len() as u64,
                            Some(law("corner-morphism", vec![x, y], Some(lhs), Some(rhs))),
                        ));
                    }
                }
                Ok((members.len() as u64, None))
            })
        })
        .collect::<Result<Vec<_>, VerifyError>>()?;
    Ok(Report::merge(reports))
}
