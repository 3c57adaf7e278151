use hncalc_core::dominance::{
    dominates_via_polygons, inj_exists, slopewise_dominates, strongly_slopewise_dominates,
    surj_exists,
};
use hncalc_core::sequences::{enumerate_all, SlopeWindow};
use hncalc_core::Bundle;

fn with_zero(w: SlopeWindow) -> Vec<Bundle> {
    std::iter::once(Bundle::zero())
        .chain(enumerate_all(&w))
        .collect()
}

#[test]
fn polygon_characterization_matches_truncations() {
    let all = with_zero(SlopeWindow::integers(-2, 2, 5));
    for e in &all {
        for f in &all {
            assert_eq!(
                dominates_via_polygons(e, f, false),
                slopewise_dominates(e, f),
                "E = {e}, F = {f}"
            );
            assert_eq!(
                dominates_via_polygons(e, f, true),
                strongly_slopewise_dominates(e, f),
                "strong, E = {e}, F = {f}"
            );
        }
    }
}

#[test]
fn strong_implies_weak_and_criteria_are_consistent() {
    let all = with_zero(SlopeWindow::integers(-2, 2, 4));
    for e in &all {
        for f in &all {
            if strongly_slopewise_dominates(e, f) {
                assert!(slopewise_dominates(e, f));
            }
            let surj = surj_exists(e, f);
            assert_eq!(surj, strongly_slopewise_dominates(&e.dual(), &f.dual()));
            if surj {
                assert!(e.rank() >= f.rank());
                assert!(slopewise_dominates(&e.dual(), &f.dual()));
            }
            assert_eq!(inj_exists(e, f), slopewise_dominates(f, e));
        }
    }
}

#[test]
fn dominance_is_a_preorder_and_strong_dominance_antisymmetric() {
    let all = with_zero(SlopeWindow::integers(-2, 2, 3));
    for a in &all {
        assert!(slopewise_dominates(a, a) && strongly_slopewise_dominates(a, a));
        for b in &all {
            let ab = slopewise_dominates(a, b);
            let same_type = a.rank() == b.rank() && a.degree() == b.degree();
            if same_type && strongly_slopewise_dominates(a, b) && strongly_slopewise_dominates(b, a)
            {
                assert_eq!(a, b);
            }
            if !ab {
                continue;
            }
            for c in &all {
                if slopewise_dominates(b, c) {
                    assert!(slopewise_dominates(a, c), "{a} >= {b} >= {c}");
                }
            }
        }
    }
}
