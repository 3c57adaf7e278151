use hncalc_core::bundle::Cut;
use hncalc_core::degree::{
    aut_degree, hom_degree, hom_degree_oracle, parallelogram_degree, pos_part_degree,
    stretch_vertically, twice_area_above_chord,
};
use hncalc_core::dominance::slopewise_dominates;
use hncalc_core::sequences::{enumerate_all, SlopeWindow};
use hncalc_core::{q, Bundle, Error, Rational};

fn catalog() -> Vec<Bundle> {
    enumerate_all(&SlopeWindow::integers(-3, 3, 4))
}

fn small_degree() -> Vec<Bundle> {
    catalog()
        .into_iter()
        .filter(|b| b.degree().abs() <= 4)
        .collect()
}

#[test]
fn cross_products_match_tensor_expansion() {
    let all = catalog();
    let mut pairs = 0;
    for e in &all {
        for f in &all {
            assert_eq!(
                hom_degree(e, f),
                hom_degree_oracle(e, f),
                "E = {e}, F = {f}"
            );
            pairs += 1;
        }
    }
    assert!(pairs > 5000);
    let zero = Bundle::zero();
    assert_eq!(hom_degree(&zero, &all[0]), 0);
    assert_eq!(hom_degree_oracle(&all[0], &zero), 0);
}

#[test]
fn aut_degree_is_twice_the_area_above_the_chord() {
    for v in catalog() {
        assert_eq!(aut_degree(&v), twice_area_above_chord(&v), "V = {v}");
        assert_eq!(aut_degree(&v) == 0, v.is_semistable(), "V = {v}");
    }
}

#[test]
fn parallelogram_agrees_under_slope_order() {
    let all = small_degree();
    let mut checked = 0;
    for e in &all {
        for f in &all {
            match parallelogram_degree(e, f) {
                Ok(p) => {
                    assert_eq!(p, hom_degree(e, f), "E = {e}, F = {f}");
                    checked += 1;
                }
                Err(err) => {
                    assert_eq!(err, Error::SlopeOrder);
                    assert!(e.mu_max().unwrap() > f.mu_min().unwrap());
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn relevant_part_only() {
    let all = small_degree();
    for e in &all {
        let lo = e.mu_min().unwrap();
        for f in &all {
            let hi = f.mu_max().unwrap();
            let full = hom_degree(e, f);
            for lam in [lo - Rational::ONE, lo] {
                assert_eq!(
                    full,
                    hom_degree(e, &f.truncate(lam, Cut::Above)),
                    "E = {e}, F = {f}"
                );
            }
            for lam in [hi + Rational::ONE, hi] {
                assert_eq!(
                    full,
                    hom_degree(&e.truncate(lam, Cut::Below), f),
                    "E = {e}, F = {f}"
                );
            }
        }
    }
}

#[test]
fn shear_scales_by_squared_rank() {
    let all = small_degree();
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
    for lam in lambdas {
        let r2 = lam.denom() * lam.denom();
        for e in &all {
            let te = e.twist(lam);
            for f in &all {
                assert_eq!(
                    hom_degree(&te, &f.twist(lam)),
                    r2 * hom_degree(e, f),
                    "lambda = {lam}, E = {e}, F = {f}"
                );
            }
        }
    }
}

#[test]
fn vertical_stretch_scales_by_factor() {
    let all = small_degree();
    for c in [2u32, 3] {
        for e in &all {
            let se = stretch_vertically(e, c);
            assert_eq!(se.rank(), e.rank());
            assert_eq!(se.degree(), i64::from(c) * e.degree());
            for f in &all {
                assert_eq!(
                    hom_degree(&se, &stretch_vertically(f, c)),
                    i64::from(c) * hom_degree(e, f),
                    "C = {c}, E = {e}, F = {f}"
                );
            }
        }
    }
}

#[test]
fn nonnegative_degree_is_monotone_under_dominance() {
    let all = small_degree();
    for e in &all {
        assert!(pos_part_degree(e) >= 0);
        for f in all.iter().filter(|f| f.rank() == e.rank()) {
            if slopewise_dominates(e, f) {
                assert!(pos_part_degree(e) >= pos_part_degree(f), "E = {e}, F = {f}");
            }
        }
    }
}
