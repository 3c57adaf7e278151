//! Existence of short exact sequences `0 -> D -> E -> F -> 0`.
//!
//! [`decide_extension`] evaluates the three conditions that are necessary
//! for such a sequence:
//!
//! 1. `E` strongly slopewise dominates `D`,
//! 2. `E^dual` strongly slopewise dominates `F^dual`,
//! 3. `HN(E) <= HN(D + F)` with the same endpoints.
//!
//! They are also sufficient when `mu_max(D) < mu_min(F)` and one of `D`,
//! `E`, `F` is semistable. Outside that range the verdict is
//! [`Verdict::Unknown`].
//!
//! The harnesses in [`harness`] and [`sweep`] check the dimension
//! inequalities that drive sufficiency, by enumerating the finite sets of
//! candidate kernels and candidate middle terms.

mod enumerate;
pub mod harness;
pub mod sweep;

use alloc::vec::Vec;

pub use enumerate::{enumerate_all, enumerate_bundles, enumerate_semistable, SlopeWindow};

use crate::bundle::Bundle;
use crate::dominance::{strongly_slopewise_dominates, surj_exists};
use crate::polygon::HnPolygon;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Exists,
    NotExists,
    Unknown,
}

/// Which term of the sequence is semistable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    D,
    E,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    /// `E` strongly slopewise dominates `D`.
    pub cond_dominance_kernel: bool,
    /// `E^dual` strongly slopewise dominates `F^dual`.
    pub cond_dominance_image: bool,
    /// `HN(E) <= HN(D + F)` and the endpoints agree.
    pub cond_polygon: bool,
    /// Reported separately so a rank/degree mismatch is distinguishable
    /// from a polygon that rises too high.
    pub endpoints_match: bool,
    /// First semistable term among `D`, `E`, `F`, if any.
    pub hypothesis_semistable: Option<Term>,
    /// `mu_max(D) < mu_min(F)`, vacuous when `D` or `F` is zero.
    pub slope_gap_ok: bool,
}

impl Decision {
    pub fn conditions_hold(&self) -> bool {
        self.cond_dominance_kernel && self.cond_dominance_image && self.cond_polygon
    }
}

pub(crate) fn slope_gap(d: &Bundle, f: &Bundle) -> bool {
    match (d.mu_max(), f.mu_min()) {
        (Ok(a), Ok(b)) => a < b,
        _ => true,
    }
}

pub fn decide_extension(d: &Bundle, e: &Bundle, f: &Bundle) -> Decision {
    let pe = HnPolygon::of(e);
    let pdf = HnPolygon::of(&d.direct_sum(f));
    let endpoints_match = pe.same_endpoints(&pdf);
    let cond_dominance_kernel = strongly_slopewise_dominates(e, d);
    let cond_dominance_image = strongly_slopewise_dominates(&e.dual(), &f.dual());
    let cond_polygon = endpoints_match && pe.lies_on_or_below(&pdf);
    let hypothesis_semistable = [(Term::D, d), (Term::E, e), (Term::F, f)]
        .into_iter()
        .find(|(_, v)| v.is_semistable())
        .map(|(t, _)| t);
    let slope_gap_ok = slope_gap(d, f);

    let mut decision = Decision {
        verdict: Verdict::Unknown,
        cond_dominance_kernel,
        cond_dominance_image,
        cond_polygon,
        endpoints_match,
        hypothesis_semistable,
        slope_gap_ok,
    };
    decision.verdict = if !decision.conditions_hold() {
        Verdict::NotExists
    } else if hypothesis_semistable.is_some() && slope_gap_ok {
        Verdict::Exists
    } else {
        Verdict::Unknown
    };
    decision
}

/// HN types `K` with `rank(K) = rank(E) - rank(F)`, `deg(K) = deg(E) - deg(F)`
/// that occur as subbundles of `E`.
///
/// `K` is a subbundle of `E` exactly when `E^dual` surjects onto `K^dual`,
/// i.e. when `E` strongly slopewise dominates `K`. Mere existence of an
/// injection ([`crate::dominance::inj_exists`]) is weaker: it admits maps whose cokernel has
/// torsion.
///
/// Slopes of such `K` are at most `mu_max(E)`; the lowest slope is bounded
/// below by `deg(K) - mu_max(E) (rank(K) - 1)` since every other unit of
/// rank contributes at most `mu_max(E)` to the degree.
pub fn kernel_candidates(e: &Bundle, f: &Bundle) -> Vec<Bundle> {
    let (k, d) = (e.rank() - f.rank(), e.degree() - f.degree());
    if k < 0 {
        return Vec::new();
    }
    if k == 0 {
        return if d == 0 {
            alloc::vec![Bundle::zero()]
        } else {
            Vec::new()
        };
    }
    let hi = e.mu_max().expect("rank(E) > rank(F) >= 0");
    let lo = Rational::integer(d) - hi.mul_int(k - 1);
    if lo > hi {
        return Vec::new();
    }
    let window = SlopeWindow {
        lo,
        hi,
        max_rank: k,
    };
    enumerate_bundles(k, d, &window)
        .into_iter()
        .filter(|cand| surj_exists(&e.dual(), &cand.dual()))
        .collect()
}

/// The window `[mu_min(D + F), mu_max(D + F)]`, outside of which no middle
/// term of an extension of `F` by `D` can have slopes.
pub fn default_extension_window(d: &Bundle, f: &Bundle) -> Option<SlopeWindow> {
    let sum = d.direct_sum(f);
    Some(SlopeWindow {
        lo: sum.mu_min().ok()?,
        hi: sum.mu_max().ok()?,
        max_rank: sum.rank(),
    })
}

/// HN types `V` of rank `rank(D) + rank(F)` and degree `deg(D) + deg(F)` in
/// the window that pass the necessary conditions for
/// `0 -> D -> V -> F -> 0`. Uses [`default_extension_window`] when `window`
/// is `None`.
pub fn extension_candidates(d: &Bundle, f: &Bundle, window: Option<&SlopeWindow>) -> Vec<Bundle> {
    let sum = d.direct_sum(f);
    let Some(w) = window.copied().or_else(|| default_extension_window(d, f)) else {
        return alloc::vec![Bundle::zero()];
    };
    let target = HnPolygon::of(&sum);
    enumerate_bundles(sum.rank(), sum.degree(), &w)
        .into_iter()
        .filter(|v| {
            let pv = HnPolygon::of(v);
            strongly_slopewise_dominates(v, d)
                && strongly_slopewise_dominates(&v.dual(), &f.dual())
                && pv.same_endpoints(&target)
                && pv.lies_on_or_below(&target)
        })
        .collect()
}
