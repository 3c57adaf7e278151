use alloc::vec::Vec;

use crate::bundle::Bundle;
use crate::error::Error;
use crate::polygon::HnPolygon;
use crate::rational::{gcd, Rational, Slope};

/// Slope bounds (inclusive) and a rank bound for exhaustive enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SlopeWindow {
    pub lo: Slope,
    pub hi: Slope,
    pub max_rank: i64,
}

impl SlopeWindow {
    pub fn new(lo: Slope, hi: Slope, max_rank: i64) -> Result<Self, Error> {
        if lo > hi || max_rank < 1 {
            return Err(Error::OutOfRange);
        }
        Ok(SlopeWindow { lo, hi, max_rank })
    }

    /// `[lo, hi]` with integer bounds.
    pub fn integers(lo: i64, hi: i64, max_rank: i64) -> Self {
        Self::new(Rational::integer(lo), Rational::integer(hi), max_rank).expect("valid window")
    }

    pub fn contains(&self, s: Slope) -> bool {
        self.lo <= s && s <= self.hi
    }

    pub fn contains_bundle(&self, v: &Bundle) -> bool {
        v.slopes().all(|s| self.contains(s))
    }

    pub fn with_max_rank(self, max_rank: i64) -> Self {
        SlopeWindow { max_rank, ..self }
    }
}

/// All HN types of the given rank and degree whose slopes lie in the window,
/// ordered lexicographically by polygon vertex list. Rank zero yields the
/// zero bundle alone (when `degree == 0`).
pub fn enumerate_bundles(rank: i64, degree: i64, window: &SlopeWindow) -> Vec<Bundle> {
    let mut out = Vec::new();
    if rank < 0 {
        return out;
    }
    let mut stack = Vec::new();
    extend(rank, degree, None, window, &mut stack, &mut out);
    let mut keyed: Vec<(HnPolygon, Bundle)> =
        out.into_iter().map(|b| (HnPolygon::of(&b), b)).collect();
    keyed.sort_by(|a, b| a.0.vertices().cmp(b.0.vertices()));
    keyed.into_iter().map(|(_, b)| b).collect()
}

fn extend(
    rank: i64,
    degree: i64,
    below: Option<Slope>,
    w: &SlopeWindow,
    stack: &mut Vec<(Slope, u32)>,
    out: &mut Vec<Bundle>,
) {
    if rank == 0 {
        if degree == 0 {
            out.push(Bundle::from_summands(stack.iter().copied()));
        }
        return;
    }
    for b in 1..=rank {
        for a in w.lo.mul_int(b).ceil()..=w.hi.mul_int(b).floor() {
            if gcd(a, b) != 1 {
                continue;
            }
            let s = Rational::reduced(a, b);
            if below.is_some_and(|u| s >= u) {
                continue;
            }
            for m in 1..=rank / b {
                let (r, d) = (rank - m * b, degree - m * a);
                // Every later segment has slope in [lo, s).
                let feasible = if r == 0 {
                    d == 0
                } else {
                    w.lo.mul_int(r) <= Rational::integer(d) && Rational::integer(d) < s.mul_int(r)
                };
                if !feasible {
                    continue;
                }
                stack.push((s, m as u32));
                extend(r, d, Some(s), w, stack, out);
                stack.pop();
            }
        }
    }
}

/// Every nonzero bundle of rank `1..=max_rank` with slopes in the window.
pub fn enumerate_all(window: &SlopeWindow) -> Vec<Bundle> {
    let mut out = Vec::new();
    for r in 1..=window.max_rank {
        for d in window.lo.mul_int(r).ceil()..=window.hi.mul_int(r).floor() {
            out.extend(enumerate_bundles(r, d, window));
        }
    }
    out
}

/// Every nonzero semistable bundle of rank `1..=max_rank` in the window.
pub fn enumerate_semistable(window: &SlopeWindow) -> Vec<Bundle> {
    enumerate_all(window)
        .into_iter()
        .filter(Bundle::is_semistable)
        .collect()
}
