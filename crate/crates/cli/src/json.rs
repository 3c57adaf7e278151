//! JSON encodings. Rationals are strings (`"1/2"`, `"-3"`), never floats.
//! `serde_json` maps keep keys sorted, so output is byte-stable.

use serde_json::{json, Value};

use hncalc_core::dominance::{PolygonFailure, TruncationFailure};
use hncalc_core::sequences::harness::{InequalityReport, KernelLemmaReport};
use hncalc_core::sequences::sweep::{SweepSummary, Violation};
use hncalc_core::{Bundle, Decision, HnPolygon, Rational, Term, Verdict};

pub fn rational(r: Rational) -> Value {
    Value::String(r.to_string())
}

fn optional_rational<E>(r: Result<Rational, E>) -> Value {
    r.map_or(Value::Null, rational)
}

pub fn bundle(b: &Bundle) -> Value {
    let summands: Vec<Value> = b
        .summands()
        .iter()
        .map(|s| json!({ "slope": rational(s.slope), "multiplicity": s.multiplicity }))
        .collect();
    json!({
        "text": b.to_string(),
        "rank": b.rank(),
        "degree": b.degree(),
        "summands": summands,
    })
}

pub fn polygon(p: &HnPolygon) -> Value {
    p.vertices().iter().map(|&(x, y)| json!([x, y])).collect()
}

pub fn info(b: &Bundle) -> Value {
    let vectors: Vec<Value> = b
        .hn_vectors()
        .iter()
        .map(|v| json!({ "rank": v.rank, "degree": v.degree, "slope": rational(v.slope()) }))
        .collect();
    json!({
        "bundle": b.to_string(),
        "rank": b.rank(),
        "degree": b.degree(),
        "slope": optional_rational(b.slope()),
        "mu_max": optional_rational(b.mu_max()),
        "mu_min": optional_rational(b.mu_min()),
        "semistable": b.is_semistable(),
        "hn_vectors": vectors,
        "polygon": polygon(&HnPolygon::of(b)),
    })
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Exists => "exists",
        Verdict::NotExists => "not-exists",
        Verdict::Unknown => "unknown",
    }
}

fn term(t: Term) -> &'static str {
    match t {
        Term::D => "D",
        Term::E => "E",
        Term::F => "F",
    }
}

pub fn decision(d: &Decision) -> Value {
    json!({
        "verdict": verdict(d.verdict),
        "cond_dominance_kernel": d.cond_dominance_kernel,
        "cond_dominance_image": d.cond_dominance_image,
        "cond_polygon": d.cond_polygon,
        "endpoints_match": d.endpoints_match,
        "hypothesis_semistable": d.hypothesis_semistable.map(term),
        "slope_gap_ok": d.slope_gap_ok,
    })
}

pub fn truncation_failure(f: &TruncationFailure) -> Value {
    match *f {
        TruncationFailure::RankDeficit { mu, rank_e, rank_f } => json!({
            "kind": "rank-deficit",
            "mu": rational(mu),
            "rank_e": rank_e,
            "rank_f": rank_f,
        }),
        TruncationFailure::UnequalTruncations { mu, rank } => json!({
            "kind": "unequal-truncations",
            "mu": rational(mu),
            "rank": rank,
        }),
    }
}

pub fn polygon_failure(f: &PolygonFailure) -> Value {
    match *f {
        PolygonFailure::TooShort { rank_e, rank_f } => json!({
            "kind": "too-short",
            "rank_e": rank_e,
            "rank_f": rank_f,
        }),
        PolygonFailure::UnitInterval {
            i,
            slope_e,
            slope_f,
        } => json!({
            "kind": "unit-interval",
            "interval": [i - 1, i],
            "slope_e": rational(slope_e),
            "slope_f": rational(slope_f),
        }),
        PolygonFailure::Vertex {
            j,
            slope_f,
            next_slope_e,
        } => json!({
            "kind": "vertex",
            "j": j,
            "slope_f": rational(slope_f),
            "next_slope_e": next_slope_e.map(rational),
        }),
    }
}

pub fn inequality_report(r: &InequalityReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "candidate": row.candidate.to_string(),
                "lhs": row.lhs,
                "bound": row.bound,
                "equality": row.equality,
                "expected_equality": row.expected_equality,
                "pass": row.pass,
            })
        })
        .collect();
    json!({
        "rows": rows,
        "violations": r.violations().count(),
        "equality_count": r.equality_count(),
        "pass": r.passed(),
    })
}

pub fn kernel_lemma_report(r: &KernelLemmaReport) -> Value {
    json!({
        "below": r.below,
        "agreement_end": r.agreement_end,
        "expected_agreement_end": r.expected_agreement_end,
        "strictly_above_after": r.strictly_above_after,
        "pass": r.pass,
    })
}

fn violation(v: &Violation) -> Value {
    json!({
        "terms": v.terms.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "candidate": v.candidate.as_ref().map(ToString::to_string),
        "detail": v.detail,
    })
}

/// At most `limit` violations are listed; the count is always complete.
pub fn sweep_summary(s: &SweepSummary, limit: usize) -> Value {
    json!({
        "check": s.check.name(),
        "cases": s.cases,
        "rows": s.rows,
        "violation_count": s.violations.len(),
        "violations": s.violations.iter().take(limit).map(violation).collect::<Vec<_>>(),
        "pass": s.passed(),
    })
}
