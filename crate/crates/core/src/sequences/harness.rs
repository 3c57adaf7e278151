//! Per-triple verification of the dimension inequalities.
//!
//! Each function checks its hypotheses first and returns
//! [`Error::Precondition`] when one fails, so a report is only produced for
//! inputs where the inequality is claimed to hold.

use alloc::vec::Vec;

use super::{decide_extension, extension_candidates, kernel_candidates, slope_gap, SlopeWindow};
use crate::bundle::{Bundle, Cut};
use crate::degree::hom_degree;
use crate::error::{Error, Hypothesis};
use crate::polygon::HnPolygon;

/// One candidate's value against the bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InequalityRow {
    pub candidate: Bundle,
    pub lhs: i64,
    pub bound: i64,
    /// `lhs == bound`.
    pub equality: bool,
    /// Whether this candidate is the one that should attain equality.
    pub expected_equality: bool,
    pub pass: bool,
}

impl InequalityRow {
    fn new(candidate: Bundle, lhs: i64, bound: i64, expected_equality: bool) -> Self {
        let equality = lhs == bound;
        InequalityRow {
            candidate,
            lhs,
            bound,
            equality,
            expected_equality,
            pass: lhs <= bound && equality == expected_equality,
        }
    }
}

/// Rows in enumeration order of the candidates.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
}

impl InequalityReport {
    pub fn violations(&self) -> impl Iterator<Item = &InequalityRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn equality_count(&self) -> usize {
        self.rows.iter().filter(|r| r.equality).count()
    }
}

fn require(ok: bool, h: Hypothesis) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(h))
    }
}

/// For `D` semistable and `(D, E, F)` satisfying the existence conditions
/// with `mu_max(D) < mu_min(F)`: every kernel candidate `K` of `E -> F` with
/// `HN(E) <= HN(F + K)` has
/// `hom(K, E) - hom(K, F) - hom(K, K) <= 0`, with equality exactly at `K = D`.
pub fn verify_key_inequality_kernel(
    d: &Bundle,
    e: &Bundle,
    f: &Bundle,
) -> Result<InequalityReport, Error> {
    require(d.is_semistable(), Hypothesis::SemistableKernel)?;
    require(slope_gap(d, f), Hypothesis::SlopeGap)?;
    require(
        decide_extension(d, e, f).conditions_hold(),
        Hypothesis::MainConditions,
    )?;

    let pe = HnPolygon::of(e);
    let rows = kernel_candidates(e, f)
        .into_iter()
        .filter(|k| pe.lies_on_or_below(&HnPolygon::of(&f.direct_sum(k))))
        .map(|k| {
            let lhs = hom_degree(&k, e) - hom_degree(&k, f) - hom_degree(&k, &k);
            let expected = &k == d;
            InequalityRow::new(k, lhs, 0, expected)
        })
        .collect();
    Ok(InequalityReport { rows })
}

/// For `E` semistable with `rank(E) = rank(D) + rank(F)`,
/// `deg(E) = deg(D) + deg(F)` and `mu_max(D) < mu(E) < mu_min(F)`: every
/// extension candidate `V` has
/// `hom(D, V) + hom(V, F) - hom(D, F) - hom(V, V) <= hom(D, F)`, with
/// equality exactly at `V = E`.
pub fn verify_key_inequality_extension(
    d: &Bundle,
    e: &Bundle,
    f: &Bundle,
    window: Option<&SlopeWindow>,
) -> Result<InequalityReport, Error> {
    require(
        !e.is_zero() && e.is_semistable(),
        Hypothesis::SemistableExtension,
    )?;
    require(
        e.rank() == d.rank() + f.rank() && e.degree() == d.degree() + f.degree(),
        Hypothesis::RankDegreeBalance,
    )?;
    let mu = e.slope()?;
    let below = d.mu_max().map_or(true, |s| s < mu);
    let above = f.mu_min().map_or(true, |s| mu < s);
    require(below && above, Hypothesis::StrictSlopeGap)?;

    let bound = hom_degree(d, f);
    let rows = extension_candidates(d, f, window)
        .into_iter()
        .map(|v| {
            let lhs = hom_degree(d, &v) + hom_degree(&v, f) - bound - hom_degree(&v, &v);
            let expected = &v == e;
            InequalityRow::new(v, lhs, bound, expected)
        })
        .collect();
    Ok(InequalityReport { rows })
}

/// Outcome of comparing `HN(F + D)` and `HN(F + K)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelLemmaReport {
    /// `HN(F + D) <= HN(F + K)`.
    pub below: bool,
    /// The polygons agree exactly on `[0, agreement_end]` ...
    pub agreement_end: i64,
    /// ... which should be `rank(F^{>= mu_max(K)})`.
    pub expected_agreement_end: i64,
    /// `HN(F + K)` is strictly above `HN(F + D)` on
    /// `(agreement_end, rank)`.
    pub strictly_above_after: bool,
    pub pass: bool,
}

/// For `D` semistable, `K` not semistable with the same rank and degree,
/// and `mu_max(D) < mu_min(F)`: `HN(F + D) <= HN(F + K)`, and the two
/// polygons share exactly `HN(F^{>= mu_max(K)})` (besides the right end).
pub fn check_nonsemistable_kernel_lemma(
    d: &Bundle,
    f: &Bundle,
    k: &Bundle,
) -> Result<KernelLemmaReport, Error> {
    require(
        !d.is_zero() && d.is_semistable(),
        Hypothesis::SemistableKernel,
    )?;
    require(!k.is_semistable(), Hypothesis::NonsemistableKernel)?;
    require(slope_gap(d, f), Hypothesis::SlopeGap)?;
    require(
        d.rank() == k.rank() && d.degree() == k.degree(),
        Hypothesis::RankDegreeBalance,
    )?;

    let lower = HnPolygon::of(&f.direct_sum(d));
    let upper = HnPolygon::of(&f.direct_sum(k));
    let below = lower.lies_on_or_below(&upper);

    let mut xs: Vec<i64> = lower
        .vertices()
        .iter()
        .chain(upper.vertices())
        .map(|&(x, _)| x)
        .collect();
    xs.sort_unstable();
    xs.dedup();
    let value = |p: &HnPolygon, x: i64| p.evaluate(x.into()).expect("both polygons share a width");
    let agreement_end = xs
        .iter()
        .copied()
        .take_while(|&x| value(&lower, x) == value(&upper, x))
        .last()
        .unwrap_or(0);
    let width = lower.width();
    let strictly_above_after = xs
        .iter()
        .filter(|&&x| x > agreement_end && x < width)
        .all(|&x| value(&upper, x) > value(&lower, x));

    let mu_max_k = k.mu_max()?;
    let expected_agreement_end = f.truncate(mu_max_k, Cut::AtLeast).rank();
    Ok(KernelLemmaReport {
        below,
        agreement_end,
        expected_agreement_end,
        strictly_above_after,
        pass: below && strictly_above_after && agreement_end == expected_agreement_end,
    })
}
