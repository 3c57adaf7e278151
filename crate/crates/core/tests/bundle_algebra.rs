use hncalc_core::degree::{hom_degree, hom_degree_oracle};
use hncalc_core::{Bundle, Cut, HnPolygon, Rational};
use proptest::prelude::*;

fn slope() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn bundle() -> impl Strategy<Value = Bundle> {
    prop::collection::vec((slope(), 1u32..=2), 0..4).prop_map(Bundle::from_summands)
}

proptest! {
    #[test]
    fn normal_form_is_sorted_and_merged(v in bundle()) {
        let slopes: Vec<Rational> = v.slopes().collect();
        prop_assert!(slopes.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(Bundle::from_summands(v.summands().iter().map(|s| (s.slope, s.multiplicity))), v.clone());
    }

    #[test]
    fn dual_is_an_involution(v in bundle()) {
        let d = v.dual();
        prop_assert_eq!(d.dual(), v.clone());
        prop_assert_eq!((d.rank(), d.degree()), (v.rank(), -v.degree()));
    }

    #[test]
    fn direct_sum_is_commutative_and_additive(a in bundle(), b in bundle(), c in bundle()) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&b).rank(), a.rank() + b.rank());
        prop_assert_eq!(a.direct_sum(&b).degree(), a.degree() + b.degree());
        prop_assert_eq!(a.direct_sum(&Bundle::zero()), a.clone());
    }

    #[test]
    fn tensor_ranks_and_degrees(a in bundle(), b in bundle()) {
        let t = a.tensor(&b);
        prop_assert_eq!(t.rank(), a.rank() * b.rank());
        prop_assert_eq!(t.degree(), a.degree() * b.rank() + b.degree() * a.rank());
        prop_assert_eq!(t.clone(), b.tensor(&a));
        prop_assert_eq!(t.dual(), a.dual().tensor(&b.dual()));
    }

    #[test]
    fn twist_shifts_slopes(v in bundle(), lam in slope()) {
        let t = v.twist(lam);
        let shifted: Vec<Rational> = v.slopes().map(|s| s + lam).collect();
        prop_assert_eq!(t.slopes().collect::<Vec<_>>(), shifted);
        prop_assert_eq!(t.rank(), v.rank() * lam.denom());
        let n = Rational::integer(lam.floor());
        prop_assert_eq!(v.twist(n).twist(-n), v.clone());
    }

    #[test]
    fn truncations_split_the_bundle(v in bundle(), mu in slope()) {
        prop_assert_eq!(v.truncate(mu, Cut::AtLeast).direct_sum(&v.truncate(mu, Cut::Below)), v.clone());
        prop_assert_eq!(v.truncate(mu, Cut::Above).direct_sum(&v.truncate(mu, Cut::AtMost)), v.clone());
        prop_assert_eq!(v.rank_at_least(mu), v.truncate(mu, Cut::AtLeast).rank());
    }

    #[test]
    fn polygon_round_trip(v in bundle()) {
        prop_assert_eq!(HnPolygon::of(&v).to_bundle(), v);
    }

    #[test]
    fn hom_degree_oracle_on_random_pairs(a in bundle(), b in bundle()) {
        prop_assert_eq!(hom_degree(&a, &b), hom_degree_oracle(&a, &b));
        prop_assert!(hom_degree(&a, &b) >= 0);
    }
}
