//! Exhaustive sweeps over every triple in a slope window.
//!
//! "Rank at most `n`" always bounds the rank of the middle term
//! `E` (equivalently `rank(D) + rank(F)`). Triples are produced in a fixed
//! order so that reports are reproducible.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::harness::{
    check_nonsemistable_kernel_lemma, verify_key_inequality_extension,
    verify_key_inequality_kernel, InequalityRow,
};
use super::{decide_extension, enumerate_all, enumerate_bundles, slope_gap, SlopeWindow, Verdict};
use crate::bundle::Bundle;
use crate::moduli::{
    canonical_resolution, dim_ext_stratum, dim_ext_total, dim_hom, dim_surj_stratum,
};
use crate::rational::{gcd, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Check {
    CanonicalFamily,
    KeyInequalityKernel,
    KeyInequalityExtension,
    SurjStratum,
    ExtStratum,
    KernelLemma,
    Duality,
    Necessity,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::CanonicalFamily => "canonical-family",
            Check::KeyInequalityKernel => "step1",
            Check::KeyInequalityExtension => "step2",
            Check::SurjStratum => "surj-stratum",
            Check::ExtStratum => "ext-stratum",
            Check::KernelLemma => "kernel-lemma",
            Check::Duality => "duality",
            Check::Necessity => "necessity",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    /// The triple (or pair) under test, in the order the check names them.
    pub terms: Vec<Bundle>,
    pub candidate: Option<Bundle>,
    pub detail: &'static str,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepSummary {
    pub check: Check,
    /// Triples (or pairs) examined.
    pub cases: usize,
    /// Candidate rows examined, for checks that have them.
    pub rows: usize,
    pub violations: Vec<Violation>,
}

impl SweepSummary {
    fn new(check: Check) -> Self {
        SweepSummary {
            check,
            cases: 0,
            rows: 0,
            violations: Vec::new(),
        }
    }

    fn flag(&mut self, terms: &[&Bundle], candidate: Option<&Bundle>, detail: &'static str) {
        self.violations.push(Violation {
            terms: terms.iter().map(|&b| b.clone()).collect(),
            candidate: candidate.cloned(),
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Memoized `enumerate_bundles` for one window.
struct Catalog<'w> {
    window: &'w SlopeWindow,
    by_type: BTreeMap<(i64, i64), Vec<Bundle>>,
}

impl<'w> Catalog<'w> {
    fn new(window: &'w SlopeWindow) -> Self {
        Catalog {
            window,
            by_type: BTreeMap::new(),
        }
    }

    fn get(&mut self, rank: i64, degree: i64) -> &[Bundle] {
        let w = self.window;
        self.by_type
            .entry((rank, degree))
            .or_insert_with(|| enumerate_bundles(rank, degree, w))
    }
}

/// `(D, E, F)` with `D` semistable and nonzero, `F` nonzero,
/// `mu_max(D) < mu_min(F)`, and all three existence conditions satisfied.
pub fn kernel_triples(window: &SlopeWindow) -> Vec<[Bundle; 3]> {
    let all = enumerate_all(window);
    let mut catalog = Catalog::new(window);
    let mut out = Vec::new();
    for d in all.iter().filter(|b| b.is_semistable()) {
        for f in &all {
            if d.rank() + f.rank() > window.max_rank || !slope_gap(d, f) {
                continue;
            }
            for e in catalog.get(d.rank() + f.rank(), d.degree() + f.degree()) {
                if decide_extension(d, e, f).conditions_hold() {
                    out.push([d.clone(), e.clone(), f.clone()]);
                }
            }
        }
    }
    out
}

/// `(D, E, F)` with `E` semistable, `D` and `F` nonzero,
/// `mu_max(D) < mu(E) < mu_min(F)`, and all three existence conditions
/// satisfied.
pub fn extension_triples(window: &SlopeWindow) -> Vec<[Bundle; 3]> {
    let all = enumerate_all(window);
    let mut out = Vec::new();
    for d in &all {
        for f in &all {
            let (r, deg) = (d.rank() + f.rank(), d.degree() + f.degree());
            if r > window.max_rank {
                continue;
            }
            let mu = Rational::reduced(deg, r);
            let m = u32::try_from(r / mu.denom()).expect("small rank");
            let e = Bundle::semistable(mu, m);
            let strict = d.mu_max().is_ok_and(|s| s < mu) && f.mu_min().is_ok_and(|s| mu < s);
            if strict && decide_extension(d, &e, f).conditions_hold() {
                out.push([d.clone(), e, f.clone()]);
            }
        }
    }
    out
}

fn row_failure(row: &InequalityRow) -> &'static str {
    if row.lhs > row.bound {
        INEQUALITY_EXCEEDED
    } else if row.equality {
        EQUALITY_AT_OTHER_CANDIDATE
    } else {
        STRICT_AT_EXPECTED_CANDIDATE
    }
}

/// Detail for a row with `lhs > bound`.
pub const INEQUALITY_EXCEEDED: &str = "inequality exceeded";
/// Detail for a row with `lhs == bound` at a candidate other than the expected one.
pub const EQUALITY_AT_OTHER_CANDIDATE: &str = "equality at an unexpected candidate";
/// Detail for the expected candidate with `lhs < bound`.
pub const STRICT_AT_EXPECTED_CANDIDATE: &str = "strict inequality at the expected candidate";

/// Key inequality for kernels over [`kernel_triples`]. Besides row-level
/// failures, flags triples where `K = D` is missing from the candidates.
pub fn sweep_key_inequality_kernel(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::KeyInequalityKernel);
    for [d, e, f] in kernel_triples(window) {
        s.cases += 1;
        match verify_key_inequality_kernel(&d, &e, &f) {
            Err(_) => s.flag(&[&d, &e, &f], None, "screened triple failed the hypotheses"),
            Ok(report) => {
                s.rows += report.rows.len();
                for row in report.violations() {
                    s.flag(&[&d, &e, &f], Some(&row.candidate), row_failure(row));
                }
                if !report.rows.iter().any(|r| r.candidate == d) {
                    s.flag(&[&d, &e, &f], Some(&d), "D missing from kernel candidates");
                }
            }
        }
    }
    s
}

/// Key inequality for extensions over [`extension_triples`].
pub fn sweep_key_inequality_extension(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::KeyInequalityExtension);
    for [d, e, f] in extension_triples(window) {
        s.cases += 1;
        match verify_key_inequality_extension(&d, &e, &f, None) {
            Err(_) => s.flag(&[&d, &e, &f], None, "screened triple failed the hypotheses"),
            Ok(report) => {
                s.rows += report.rows.len();
                for row in report.violations() {
                    s.flag(&[&d, &e, &f], Some(&row.candidate), row_failure(row));
                }
                if !report.rows.iter().any(|r| r.candidate == e) {
                    s.flag(
                        &[&d, &e, &f],
                        Some(&e),
                        "E missing from extension candidates",
                    );
                }
            }
        }
    }
    s
}

/// `dim Surj(E, F)_D = dim Hom(E, F)` over [`kernel_triples`].
pub fn sweep_surj_stratum(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::SurjStratum);
    for [d, e, f] in kernel_triples(window) {
        s.cases += 1;
        if dim_surj_stratum(&e, &f, &d) != Ok(dim_hom(&e, &f)) {
            s.flag(
                &[&d, &e, &f],
                None,
                "dim Surj(E,F)_D differs from dim Hom(E,F)",
            );
        }
    }
    s
}

/// `dim Ext(F, D)_E = dim Ext(F, D)` over [`extension_triples`].
pub fn sweep_ext_stratum(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::ExtStratum);
    for [d, e, f] in extension_triples(window) {
        s.cases += 1;
        let total = dim_ext_total(&f, &d);
        if total.is_err() || dim_ext_stratum(&d, &f, &e).ok() != total.ok() {
            s.flag(
                &[&d, &e, &f],
                None,
                "dim Ext(F,D)_E differs from dim Ext(F,D)",
            );
        }
    }
    s
}

/// Nonsemistable-kernel polygon lemma over `(D, F, K)` with `D` semistable,
/// `K` not semistable of the same rank and degree, `F` possibly zero, and
/// `rank(D) + rank(F) <= max_rank`.
pub fn sweep_kernel_lemma(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::KernelLemma);
    let all = enumerate_all(window);
    let mut catalog = Catalog::new(window);
    let fs: Vec<Bundle> = core::iter::once(Bundle::zero())
        .chain(all.iter().cloned())
        .collect();
    for d in all.iter().filter(|b| b.is_semistable()) {
        let ks: Vec<Bundle> = catalog
            .get(d.rank(), d.degree())
            .iter()
            .filter(|k| !k.is_semistable())
            .cloned()
            .collect();
        for f in &fs {
            if d.rank() + f.rank() > window.max_rank || !slope_gap(d, f) {
                continue;
            }
            for k in &ks {
                s.cases += 1;
                match check_nonsemistable_kernel_lemma(d, f, k) {
                    Ok(r) if r.pass => {}
                    Ok(_) => s.flag(&[d, f, k], None, "polygon comparison fails"),
                    Err(_) => s.flag(&[d, f, k], None, "hypotheses rejected"),
                }
            }
        }
    }
    s
}

/// All `(D, E, F)` with `rank(D) + rank(F) <= max_rank` (either may be
/// zero) and `E` of matching rank and degree in the window.
fn all_triples(window: &SlopeWindow, mut visit: impl FnMut(&Bundle, &Bundle, &Bundle)) {
    let all: Vec<Bundle> = core::iter::once(Bundle::zero())
        .chain(enumerate_all(window))
        .collect();
    let mut catalog = Catalog::new(window);
    for d in &all {
        for f in &all {
            let r = d.rank() + f.rank();
            if r == 0 || r > window.max_rank {
                continue;
            }
            for e in catalog.get(r, d.degree() + f.degree()) {
                visit(d, e, f);
            }
        }
    }
}

/// `verdict(D, E, F) = verdict(F^dual, E^dual, D^dual)` over every triple.
pub fn sweep_duality(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::Duality);
    all_triples(window, |d, e, f| {
        s.cases += 1;
        let lhs = decide_extension(d, e, f).verdict;
        let rhs = decide_extension(&f.dual(), &e.dual(), &d.dual()).verdict;
        if lhs != rhs {
            s.flag(&[d, e, f], None, "verdict changes under duality");
        }
    });
    s
}

/// Split triples `(D, D + F, F)` with `mu_max(D) < mu_min(F)` satisfy all
/// conditions, and are decided `Exists` whenever a term is semistable.
pub fn sweep_necessity(window: &SlopeWindow) -> SweepSummary {
    let mut s = SweepSummary::new(Check::Necessity);
    let all: Vec<Bundle> = core::iter::once(Bundle::zero())
        .chain(enumerate_all(window))
        .collect();
    for d in &all {
        for f in &all {
            if d.rank() + f.rank() > window.max_rank || !slope_gap(d, f) {
                continue;
            }
            s.cases += 1;
            let e = d.direct_sum(f);
            let dec = decide_extension(d, &e, f);
            let expected = if dec.hypothesis_semistable.is_some() {
                Verdict::Exists
            } else {
                Verdict::Unknown
            };
            if !dec.conditions_hold() || dec.verdict != expected {
                s.flag(&[d, &e, f], None, "split sequence not recognized");
            }
        }
    }
    s
}

/// `decide(O(-s/r)^m, O^(mr + ms), O(1)^(ms)) = Exists` for coprime
/// `1 <= r <= max_r`, `1 <= s <= max_s`, `1 <= m <= max_m`.
pub fn sweep_canonical_family(max_r: i64, max_s: i64, max_m: u32) -> SweepSummary {
    let mut s = SweepSummary::new(Check::CanonicalFamily);
    for r in 1..=max_r {
        for sn in 1..=max_s {
            if gcd(sn, r) != 1 {
                continue;
            }
            for m in 1..=max_m {
                s.cases += 1;
                let slope = Rational::reduced(-sn, r);
                let d = Bundle::semistable(slope, m);
                let (middle, quotient) = canonical_resolution(slope, m).expect("negative slope");
                let balanced = middle.rank() - d.rank() == quotient.rank()
                    && middle.degree() - d.degree() == quotient.degree();
                if !balanced {
                    s.flag(
                        &[&d, &middle, &quotient],
                        None,
                        "ranks or degrees do not balance",
                    );
                }
                if decide_extension(&d, &middle, &quotient).verdict != Verdict::Exists {
                    s.flag(
                        &[&d, &middle, &quotient],
                        None,
                        "resolution not decided Exists",
                    );
                }
            }
        }
    }
    s
}
