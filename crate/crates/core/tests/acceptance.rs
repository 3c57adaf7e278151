//! One line per acceptance criterion: `AC<n> PASS|FAIL <summary>`.
//!
//! Criteria listed in `KNOWN_FAILURES` still print `FAIL`; they do not fail
//! the process, but an unexpected failure or an unexpected pass does.

use std::process::ExitCode;
use std::time::Instant;

use hncalc_core::degree::{
    aut_degree, hom_degree, hom_degree_oracle, parallelogram_degree, stretch_vertically,
    twice_area_above_chord,
};
use hncalc_core::dominance::{
    dominates_via_polygons, slopewise_dominates, strongly_slopewise_dominates,
};
use hncalc_core::sequences::enumerate_all;
use hncalc_core::sequences::sweep::{
    sweep_canonical_family, sweep_duality, sweep_ext_stratum, sweep_kernel_lemma,
    sweep_key_inequality_extension, sweep_key_inequality_kernel, sweep_surj_stratum, SweepSummary,
    EQUALITY_AT_OTHER_CANDIDATE,
};
use hncalc_core::{q, Bundle, SlopeWindow};

/// The uniqueness clause of the kernel inequality fails: subbundles `K != D`
/// that are genuine kernels of `E -> F` also attain equality. The inequality
/// itself holds on every row.
const KNOWN_FAILURES: &[u32] = &[6];

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: String) -> Outcome {
    Outcome { pass, summary }
}

fn sweep_line(s: &SweepSummary) -> String {
    format!(
        "{}: {} cases, {} rows, {} violations",
        s.check.name(),
        s.cases,
        s.rows,
        s.violations.len()
    )
}

fn ac1() -> Outcome {
    let s = sweep_canonical_family(5, 5, 2);
    outcome(s.passed() && s.cases > 0, sweep_line(&s))
}

fn pairs_window() -> Vec<Bundle> {
    enumerate_all(&SlopeWindow::integers(-3, 3, 4))
}

fn ac2() -> Outcome {
    let all = pairs_window();
    let mut bad = 0usize;
    for e in &all {
        for f in &all {
            bad += usize::from(hom_degree(e, f) != hom_degree_oracle(e, f));
        }
    }
    let n = all.len() * all.len();
    outcome(
        bad == 0,
        format!("hom_degree vs oracle: {n} pairs, {bad} mismatches"),
    )
}

fn ac3() -> Outcome {
    let all = pairs_window();
    let area_bad = all
        .iter()
        .filter(|v| aut_degree(v) != twice_area_above_chord(v))
        .count();
    let (mut para, mut para_bad) = (0usize, 0usize);
    for e in &all {
        for f in &all {
            if let Ok(p) = parallelogram_degree(e, f) {
                para += 1;
                para_bad += usize::from(p != hom_degree(e, f));
            }
        }
    }
    outcome(
        area_bad == 0 && para_bad == 0 && para > 0,
        format!(
            "shoelace: {} bundles, {area_bad} mismatches; parallelogram: {para} ordered pairs, {para_bad} mismatches",
            all.len()
        ),
    )
}

fn ac4() -> Outcome {
    let all = pairs_window();
    let lambdas = [
        q(1, 2),
        q(-1, 2),
        q(1, 3),
        q(-1, 3),
        q(2, 3),
        q(-2, 3),
        q(1, 1),
        q(-1, 1),
    ];
    let (mut checks, mut bad) = (0usize, 0usize);
    for lam in lambdas {
        let r2 = lam.denom() * lam.denom();
        let twisted: Vec<Bundle> = all.iter().map(|v| v.twist(lam)).collect();
        for (e, te) in all.iter().zip(&twisted) {
            for (f, tf) in all.iter().zip(&twisted) {
                checks += 1;
                bad += usize::from(hom_degree(te, tf) != r2 * hom_degree(e, f));
            }
        }
    }
    for c in [2u32, 3] {
        let stretched: Vec<Bundle> = all.iter().map(|v| stretch_vertically(v, c)).collect();
        for (e, se) in all.iter().zip(&stretched) {
            for (f, sf) in all.iter().zip(&stretched) {
                checks += 1;
                bad += usize::from(hom_degree(se, sf) != i64::from(c) * hom_degree(e, f));
            }
        }
    }
    outcome(
        bad == 0,
        format!("shear and stretch: {checks} checks, {bad} mismatches"),
    )
}

fn ac5() -> Outcome {
    let all: Vec<Bundle> = std::iter::once(Bundle::zero())
        .chain(enumerate_all(&SlopeWindow::integers(-2, 2, 5)))
        .collect();
    let mut bad = 0usize;
    for e in &all {
        for f in &all {
            bad += usize::from(dominates_via_polygons(e, f, false) != slopewise_dominates(e, f));
            bad += usize::from(
                dominates_via_polygons(e, f, true) != strongly_slopewise_dominates(e, f),
            );
        }
    }
    let n = all.len() * all.len();
    outcome(
        bad == 0,
        format!("dominance characterizations: {n} pairs, {bad} disagreements"),
    )
}

fn window5() -> SlopeWindow {
    SlopeWindow::integers(-2, 2, 5)
}

fn ac6() -> Outcome {
    let k = sweep_key_inequality_kernel(&window5());
    let v = sweep_key_inequality_extension(&window5());
    let uniqueness_only = k
        .violations
        .iter()
        .all(|x| x.detail == EQUALITY_AT_OTHER_CANDIDATE);
    let mut summary = format!("{}; {}", sweep_line(&k), sweep_line(&v));
    if !k.passed() && uniqueness_only {
        summary.push_str(
            " (step1: inequality holds on every row; all violations are equality at K != D)",
        );
    }
    outcome(
        k.passed() && v.passed() && k.cases > 0 && v.cases > 0,
        summary,
    )
}

fn ac7() -> Outcome {
    let s = sweep_surj_stratum(&window5());
    let x = sweep_ext_stratum(&window5());
    outcome(
        s.passed() && x.passed() && s.cases > 0 && x.cases > 0,
        format!("{}; {}", sweep_line(&s), sweep_line(&x)),
    )
}

fn ac8() -> Outcome {
    let s = sweep_duality(&window5());
    outcome(s.passed() && s.cases > 0, sweep_line(&s))
}

fn ac9() -> Outcome {
    let s = sweep_kernel_lemma(&SlopeWindow::integers(-2, 2, 4));
    outcome(s.passed() && s.cases > 0, sweep_line(&s))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, ac1),
        (2, ac2),
        (3, ac3),
        (4, ac4),
        (5, ac5),
        (6, ac6),
        (7, ac7),
        (8, ac8),
        (9, ac9),
    ];
    let mut ok = true;
    for (n, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("AC{n} {verdict} {} [{secs:.2}s]", o.summary);
        let known = KNOWN_FAILURES.contains(&n);
        if o.pass == known {
            ok = false;
            if known {
                println!("AC{n} is listed as a known failure but passed");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
