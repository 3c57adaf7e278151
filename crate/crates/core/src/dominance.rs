//! Slopewise and strong slopewise dominance.
//!
//! `E` slopewise dominates `F` when `rank(E^{>=mu}) >= rank(F^{>=mu})` for
//! every rational `mu`. It dominates strongly when, in addition, every `mu`
//! with equal ranks has `E^{>=mu} = F^{>=mu}`.
//!
//! Two deciders are provided. The truncation route checks `mu` at every
//! slope of either bundle, since truncation ranks are step functions of `mu`
//! that only change at slopes. The polygon route compares slopes of the HN
//! polygons on unit intervals plus a condition at common integer vertices.
//! They are independent and the test suites check that they agree.

use alloc::vec::Vec;

use crate::bundle::{Bundle, Cut};
use crate::polygon::HnPolygon;
use crate::rational::{Rational, Slope};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TruncationFailure {
    /// `rank(E^{>=mu}) < rank(F^{>=mu})`.
    RankDeficit { mu: Slope, rank_e: i64, rank_f: i64 },
    /// Equal ranks at `mu` but `E^{>=mu}` and `F^{>=mu}` differ.
    UnequalTruncations { mu: Slope, rank: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolygonFailure {
    /// `HN(F)` extends past the end of `HN(E)`.
    TooShort { rank_e: i64, rank_f: i64 },
    /// On `[i - 1, i]` the slope of `HN(F)` exceeds that of `HN(E)`.
    UnitInterval {
        i: i64,
        slope_e: Rational,
        slope_f: Rational,
    },
    /// Both polygons have a vertex at `j`, they differ on `[0, j]`, and the
    /// slope of `HN(F)` on `[j - 1, j]` exceeds the slope of `HN(E)` on
    /// `[j, j + 1]` (`None` when `HN(E)` ends at `j`).
    Vertex {
        j: i64,
        slope_f: Rational,
        next_slope_e: Option<Rational>,
    },
}

/// Candidate thresholds: every slope of either bundle, descending, followed
/// by a sentinel above both where both truncations vanish.
fn thresholds(e: &Bundle, f: &Bundle) -> Vec<Slope> {
    let mut mus: Vec<Slope> = e.slopes().chain(f.slopes()).collect();
    mus.sort_unstable_by(|a, b| b.cmp(a));
    mus.dedup();
    if let Some(&top) = mus.first() {
        mus.insert(0, top + Rational::ONE);
    }
    mus
}

pub fn check_dominance(e: &Bundle, f: &Bundle, strong: bool) -> Result<(), TruncationFailure> {
    for mu in thresholds(e, f) {
        let (rank_e, rank_f) = (e.rank_at_least(mu), f.rank_at_least(mu));
        if rank_e < rank_f {
            return Err(TruncationFailure::RankDeficit { mu, rank_e, rank_f });
        }
        if strong
            && rank_e == rank_f
            && e.truncate(mu, Cut::AtLeast) != f.truncate(mu, Cut::AtLeast)
        {
            return Err(TruncationFailure::UnequalTruncations { mu, rank: rank_e });
        }
    }
    Ok(())
}

pub fn slopewise_dominates(e: &Bundle, f: &Bundle) -> bool {
    check_dominance(e, f, false).is_ok()
}

pub fn strongly_slopewise_dominates(e: &Bundle, f: &Bundle) -> bool {
    check_dominance(e, f, true).is_ok()
}

pub fn check_dominance_via_polygons(
    e: &Bundle,
    f: &Bundle,
    strong: bool,
) -> Result<(), PolygonFailure> {
    let (pe, pf) = (HnPolygon::of(e), HnPolygon::of(f));
    let (rank_e, rank_f) = (pe.width(), pf.width());
    if rank_f > rank_e {
        return Err(PolygonFailure::TooShort { rank_e, rank_f });
    }
    let slope = |p: &HnPolygon, i| p.slope_on_unit_interval(i).expect("inside the polygon");
    for i in 1..=rank_f {
        let (slope_e, slope_f) = (slope(&pe, i), slope(&pf, i));
        if slope_f > slope_e {
            return Err(PolygonFailure::UnitInterval {
                i,
                slope_e,
                slope_f,
            });
        }
    }
    if strong {
        for j in 1..=rank_f {
            if !(pe.has_vertex_at(j) && pf.has_vertex_at(j)) {
                continue;
            }
            // Past its right end HN(E) behaves as if its slope were -infinity.
            let next_slope_e = (j < rank_e).then(|| slope(&pe, j + 1));
            let slope_f = slope(&pf, j);
            let holds = next_slope_e.is_some_and(|s| slope_f <= s);
            if !holds && !pe.agrees_up_to(&pf, j) {
                return Err(PolygonFailure::Vertex {
                    j,
                    slope_f,
                    next_slope_e,
                });
            }
        }
    }
    Ok(())
}

pub fn dominates_via_polygons(e: &Bundle, f: &Bundle, strong: bool) -> bool {
    check_dominance_via_polygons(e, f, strong).is_ok()
}

/// Whether a surjection `E -> F` exists: `E^dual` strongly dominates `F^dual`.
pub fn surj_exists(e: &Bundle, f: &Bundle) -> bool {
    strongly_slopewise_dominates(&e.dual(), &f.dual())
}

/// Whether an injection `E -> F` exists: `F` slopewise dominates `E`.
pub fn inj_exists(e: &Bundle, f: &Bundle) -> bool {
    slopewise_dominates(f, e)
}
