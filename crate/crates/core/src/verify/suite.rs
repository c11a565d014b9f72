//! The seeded theorem suite: every structural property of the semigroup and
//! of its injective endomorphisms, checked at window scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    check_homomorphism_with, check_injective, classify, corner_diagram_check, laws, Counterexample,
    MapTable, Report, Verdict, VerifyError,
};
use crate::kernel::{tail_shift_intersect, Element, Family, KernelError, Product, Tail, F2};
use crate::morphisms::{apply_aut, BaseFormula, BaseKind, CanonicalEndo, EndoBase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub window: u32,
    pub kmax: u32,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubReport {
    pub name: &'static str,
    #[serde(flatten)]
    pub report: Report,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub verdict: Verdict,
    pub checks: u64,
    pub config: SuiteConfig,
    pub results: Vec<SubReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn get(&self, name: &str) -> Option<&SubReport> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn first_failure(&self) -> Option<&SubReport> {
        self.results.iter().find(|r| !r.report.passed())
    }
}

/// Twist bound for the random endomorphisms used by the decomposition checks.
const MAX_TRIAL_TWIST: i64 = 10;

/// `count` canonical endomorphisms drawn from a ChaCha8 stream seeded with
/// `seed`: the base uniformly among all bases with `k ≤ kmax`
/// (see [`EndoBase::all_up_to`]), then the twist uniformly in
/// `[-max_twist, max_twist]`.
pub fn random_endos(seed: u64, count: usize, kmax: u32, max_twist: i64) -> Vec<CanonicalEndo> {
    let bases = EndoBase::all_up_to(kmax.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let base = bases[rng.gen_range(0..bases.len())];
            let twist = rng.gen_range(-max_twist..=max_twist);
            CanonicalEndo::new(base, twist)
        })
        .collect()
}

type SubCheck<'a> = dyn Fn() -> Result<Report, VerifyError> + 'a;

pub fn theorem_suite(config: SuiteConfig) -> Result<SuiteReport, VerifyError> {
    theorem_suite_with(&F2, config)
}

/// Runs the suite against an arbitrary product. Every sub-check that takes
/// products goes through `p`; tables of the endomorphisms themselves are
/// computed from their formulas.
pub fn theorem_suite_with<P: Product>(
    p: &P,
    config: SuiteConfig,
) -> Result<SuiteReport, VerifyError> {
    let SuiteConfig {
        window: n,
        kmax,
        trials,
        seed,
    } = config;
    if n < 2 {
        return Err(VerifyError::InvalidConfig(format!(
            "window must be at least 2, got {n}"
        )));
    }
    if kmax < 2 {
        return Err(VerifyError::InvalidConfig(format!(
            "kmax must be at least 2, got {kmax}"
        )));
    }
    let w = F2.window(n);
    let small = F2.window(n.min(3));
    let trial_endos = random_endos(seed, trials as usize, kmax, MAX_TRIAL_TWIST);
    let max_classified_twist = 2 * i64::from(n) - 2;
    let classified_endos = random_endos(seed ^ 1, trials as usize, kmax, max_classified_twist);
    let composed_pairs: Vec<_> = random_endos(seed ^ 2, 2 * trials as usize, kmax, MAX_TRIAL_TWIST)
        .chunks(2)
        .map(|c| (c[0], c[1]))
        .collect();

    let checks: Vec<(&'static str, Box<SubCheck<'_>>)> = vec![
        ("associativity", Box::new(|| laws::associativity(p, w))),
        (
            "branch-agreement",
            Box::new(|| laws::branch_agreement(&F2, w)),
        ),
        ("inverse-laws", Box::new(|| laws::inverse_laws(p, w))),
        ("idempotents", Box::new(|| Ok(laws::idempotents(p, w)))),
        ("inductive-tails", Box::new(inductive_tails)),
        ("family-closure", Box::new(|| family_closure(5))),
        ("tail-closure", Box::new(|| tail_closure(n.min(3)))),
        (
            "alpha-endomorphisms",
            Box::new(|| endomorphism_grid(p, BaseKind::Alpha, kmax, n)),
        ),
        (
            "beta-endomorphisms",
            Box::new(|| endomorphism_grid(p, BaseKind::Beta, kmax, n)),
        ),
        (
            "pseudo-alpha-rejected",
            Box::new(|| pseudo_alpha_rejected(p, kmax, n)),
        ),
        (
            "pseudo-beta-rejected",
            Box::new(|| pseudo_beta_rejected(kmax, n)),
        ),
        ("zero-tail-scaling", Box::new(|| zero_tail_scaling(kmax, n))),
        (
            "automorphism-square",
            Box::new(|| automorphism_square(2 * n)),
        ),
        ("twist-additivity", Box::new(|| twist_additivity(n))),
        ("origin-law", Box::new(|| Ok(origin_law(&trial_endos)))),
        ("decomposition", Box::new(|| decomposition(&trial_endos, n))),
        (
            "classification-roundtrip",
            Box::new(|| classification_roundtrip(&classified_endos, n)),
        ),
        (
            "composition-coherence",
            Box::new(|| composition_coherence(&composed_pairs, n)),
        ),
        ("corner-diagram", Box::new(|| corner_diagram(kmax, n))),
        (
            "corner-morphism",
            Box::new(|| laws::corner_morphism(p, w, n)),
        ),
        (
            "order-equivalence",
            Box::new(|| laws::order_equivalence(p, small, F2.window(2 * n.min(3)))),
        ),
        (
            "partial-order",
            Box::new(|| Ok(laws::partial_order(p, small))),
        ),
    ];

    let results: Vec<SubReport> = checks
        .into_iter()
        .map(|(name, check)| SubReport {
            name,
            report: check().unwrap_or_else(|e| Report::fail(failure(&e.to_string(), vec![]), 0)),
        })
        .collect();
    let verdict = if results.iter().all(|r| r.report.passed()) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(SuiteReport {
        verdict,
        checks: results.iter().map(|r| r.report.checks).sum(),
        config,
        results,
    })
}

fn failure(law: &str, witnesses: Vec<Element>) -> Counterexample {
    Counterexample::Law {
        law: law.to_owned(),
        witnesses,
        lhs: None,
        rhs: None,
    }
}

fn inductive_tails() -> Result<Report, VerifyError> {
    for a in 0..10 {
        let f = Tail::new(a);
        if tail_shift_intersect(-1, f, f)? != f {
            return Ok(Report::fail(
                failure(&format!("(-1 + {f}) ∩ {f} ≠ {f}"), vec![]),
                u64::from(a) + 1,
            ));
        }
    }
    Ok(Report::pass(10))
}

fn is_contiguous(starts: &[u32]) -> bool {
    starts.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Every nonempty start set within `{0, .., max}` validates iff it has no
/// gaps, and each rejection names a genuine violation.
fn family_closure(max: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for mask in 1u32..(1 << (max + 1)) {
        let starts: Vec<u32> = (0..=max).filter(|b| mask & (1 << b) != 0).collect();
        checks += 1;
        let ok = match Family::new(starts.clone()) {
            Ok(_) => is_contiguous(&starts),
            Err(KernelError::NotOmegaClosed {
                left,
                right,
                shift,
                result,
            }) => {
                !is_contiguous(&starts)
                    && starts.contains(&left.start())
                    && starts.contains(&right.start())
                    && !starts.contains(&result.start())
                    && tail_shift_intersect(-i64::from(shift), right, left)? == result
            }
            Err(e) => return Err(e.into()),
        };
        if !ok {
            return Ok(Report::fail(
                failure(&format!("family {starts:?}"), vec![]),
                checks,
            ));
        }
    }
    Ok(Report::pass(checks))
}

fn tail_closure(n: u32) -> Result<Report, VerifyError> {
    let mut reports = Vec::new();
    for lo in 0..=3 {
        for hi in lo..=3 {
            let family = Family::new((lo..=hi).collect())?;
            reports.push(laws::tail_closure(&family, family.window(n))?);
        }
    }
    Ok(Report::merge(reports))
}

fn bases_of(kind: BaseKind, kmax: u32) -> impl Iterator<Item = EndoBase> {
    EndoBase::all_up_to(kmax)
        .into_iter()
        .filter(move |b| b.kind() == kind)
}

fn endomorphism_grid<P: Product>(
    p: &P,
    kind: BaseKind,
    kmax: u32,
    n: u32,
) -> Result<Report, VerifyError> {
    let mut reports = Vec::new();
    for base in bases_of(kind, kmax) {
        for twist in -3..=3 {
            let e = CanonicalEndo::new(base, twist);
            let table = MapTable::tabulate(n, |x| e.apply(x))?;
            reports.push(check_homomorphism_with(p, &table)?);
            reports.push(check_injective(&table));
        }
    }
    Ok(Report::merge(reports))
}

fn pseudo_alpha_rejected<P: Product>(p: &P, kmax: u32, n: u32) -> Result<Report, VerifyError> {
    for k in 1..=kmax {
        let f = BaseFormula {
            kind: BaseKind::Alpha,
            k,
            p: k,
        };
        let table = MapTable::tabulate(n, |x| f.apply(x))?;
        if check_homomorphism_with(p, &table)?.passed() {
            return Ok(Report::fail(
                failure(&format!("alpha:{k},{k} accepted"), vec![]),
                u64::from(k),
            ));
        }
    }
    Ok(Report::pass(u64::from(kmax)))
}

fn pseudo_beta_rejected(kmax: u32, n: u32) -> Result<Report, VerifyError> {
    for k in 2..=kmax {
        let f = BaseFormula {
            kind: BaseKind::Beta,
            k,
            p: 0,
        };
        let table = MapTable::tabulate(n, |x| f.apply(x))?;
        if check_injective(&table).passed() {
            return Ok(Report::fail(
                failure(&format!("beta:{k},0 accepted"), vec![]),
                u64::from(k),
            ));
        }
    }
    Ok(Report::pass(u64::from(kmax - 1)))
}

/// On the `[0)`-part every base acts as `(i, j) ↦ (k·i, k·j)`, with `k`
/// read from the image of `(0, 1, [0))`.
fn zero_tail_scaling(kmax: u32, n: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for base in EndoBase::all_up_to(kmax) {
        let table = MapTable::tabulate(n, |x| base.apply(x))?;
        let k = table.at(&Element::new(0, 1, 0)).j;
        for x in table.window().iter().filter(|x| x.f == 0) {
            checks += 1;
            let y = table.at(&x);
            if y != Element::new(k * x.i, k * x.j, 0) {
                return Ok(Report::fail(
                    failure(&format!("{base} scaling"), vec![x, y]),
                    checks,
                ));
            }
        }
    }
    Ok(Report::pass(checks))
}

fn automorphism_square(n: u32) -> Result<Report, VerifyError> {
    let w = F2.window(n);
    for x in w.iter() {
        let y = apply_aut(2, x)?;
        if y != Element::new(x.i + 1, x.j + 1, x.f) {
            return Ok(Report::fail(failure("ã² = h₁", vec![x, y]), w.len() as u64));
        }
    }
    Ok(Report::pass(w.len() as u64))
}

fn twist_additivity(n: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for t1 in -4..=4 {
        for t2 in -4..=4 {
            for x in F2.window(n).iter() {
                checks += 1;
                let lhs = apply_aut(t1, apply_aut(t2, x)?)?;
                let rhs = apply_aut(t1 + t2, x)?;
                if lhs != rhs {
                    return Ok(Report::fail(
                        Counterexample::Law {
                            law: format!("ã^{t1} ã^{t2} = ã^{}", t1 + t2),
                            witnesses: vec![x],
                            lhs: Some(lhs),
                            rhs: Some(rhs),
                        },
                        checks,
                    ));
                }
            }
        }
    }
    Ok(Report::pass(checks))
}

fn origin_law(endos: &[CanonicalEndo]) -> Report {
    for (idx, e) in endos.iter().enumerate() {
        let img = e.image_of_origin();
        let applied = e.apply(Element::new(0, 0, 0)).ok();
        let ok = img.i == img.j
            && img.f <= 1
            && 2 * img.i + img.f as i64 == e.twist
            && applied == Some(img);
        if !ok {
            return Report::fail(
                failure(&format!("origin law for {e}"), vec![img]),
                idx as u64 + 1,
            );
        }
    }
    Report::pass(endos.len() as u64)
}

fn decomposition(endos: &[CanonicalEndo], n: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for e in endos {
        let d = e.decompose();
        if d.fixing.twist != 0
            || !d.automorphism.is_automorphism()
            || d.fixing.image_of_origin() != Element::new(0, 0, 0)
        {
            return Ok(Report::fail(
                failure(&format!("decomposition shape for {e}"), vec![]),
                checks,
            ));
        }
        for x in F2.window(n).iter() {
            checks += 1;
            let lhs = e.apply(x)?;
            let rhs = d.recompose(x)?;
            if lhs != rhs {
                return Ok(Report::fail(
                    Counterexample::Law {
                        law: format!("recomposition of {e}"),
                        witnesses: vec![x],
                        lhs: Some(lhs),
                        rhs: Some(rhs),
                    },
                    checks,
                ));
            }
        }
    }
    Ok(Report::pass(checks))
}

fn classification_roundtrip(endos: &[CanonicalEndo], n: u32) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for e in endos {
        let table = MapTable::tabulate_on(n, n, |x| e.apply(x))?;
        let got = classify(&table)?;
        checks += got.report.checks;
        if got.endo != *e {
            return Ok(Report::fail(
                failure(&format!("{e} classified as {}", got.endo), vec![]),
                checks,
            ));
        }
    }
    Ok(Report::pass(checks))
}

fn composition_coherence(
    pairs: &[(CanonicalEndo, CanonicalEndo)],
    n: u32,
) -> Result<Report, VerifyError> {
    let mut checks = 0;
    for (e1, e2) in pairs {
        let c = e1
            .compose(e2, n)
            .map_err(|e| VerifyError::InvalidConfig(e.to_string()))?;
        for x in F2.window(n).iter() {
            checks += 1;
            let lhs = c.apply(x)?;
            let rhs = e2.apply(e1.apply(x)?)?;
            if lhs != rhs {
                return Ok(Report::fail(
                    Counterexample::Law {
                        law: format!("{e1} then {e2} = {c}"),
                        witnesses: vec![x],
                        lhs: Some(lhs),
                        rhs: Some(rhs),
                    },
                    checks,
                ));
            }
        }
    }
    Ok(Report::pass(checks))
}

fn corner_diagram(kmax: u32, n: u32) -> Result<Report, VerifyError> {
    let mut reports = Vec::new();
    for base in EndoBase::all_up_to(kmax) {
        for offset in 0..=n {
            reports.push(corner_diagram_check(base, offset, n)?);
        }
    }
    Ok(Report::merge(reports))
}
