//! Degrees of nonnegative parts, `deg(X)^{>=0}`, of tensor expressions.
//!
//! The dimension of every moduli space of bundle maps is such a degree. Two
//! independent routes are provided for `deg(E^dual (x) F)^{>=0}`: the
//! cross-product sum over HN vectors ([`hom_degree`]) and a brute-force
//! expansion of the tensor product ([`hom_degree_oracle`]).

use crate::bundle::{Bundle, Cut};
use crate::error::Error;
use crate::polygon::HnPolygon;
use crate::rational::Rational;

/// Degree of the slope `>= 0` part of `v`.
pub fn pos_part_degree(v: &Bundle) -> i64 {
    v.truncate(Rational::ZERO, Cut::AtLeast).degree()
}

/// `deg(E^dual (x) F)^{>=0}` as the sum of cross products `e_i x f_j` over
/// HN vectors with `slope(e_i) <= slope(f_j)`.
pub fn hom_degree(e: &Bundle, f: &Bundle) -> i64 {
    let fv = f.hn_vectors();
    e.hn_vectors()
        .iter()
        .flat_map(|ei| {
            fv.iter()
                .filter(move |fj| ei.slope() <= fj.slope())
                .map(move |fj| ei.cross(fj))
        })
        .sum()
}

/// `deg(E^dual (x) F)^{>=0}` by expanding the tensor product summand by
/// summand and truncating.
pub fn hom_degree_oracle(e: &Bundle, f: &Bundle) -> i64 {
    pos_part_degree(&e.dual().tensor(f))
}

/// `rank(E) deg(F) - deg(E) rank(F)`, which equals [`hom_degree`] when
/// `mu_max(E) <= mu_min(F)`.
pub fn parallelogram_degree(e: &Bundle, f: &Bundle) -> Result<i64, Error> {
    if e.mu_max()? > f.mu_min()? {
        return Err(Error::SlopeOrder);
    }
    Ok(e.rank() * f.degree() - e.degree() * f.rank())
}

/// `deg(V^dual (x) V)^{>=0}`.
pub fn aut_degree(v: &Bundle) -> i64 {
    hom_degree(v, v)
}

/// Twice the area enclosed by `HN(V)` and the chord joining its endpoints,
/// by the shoelace formula.
pub fn twice_area_above_chord(v: &Bundle) -> i64 {
    let poly = HnPolygon::of(v);
    let pts = poly.vertices();
    let n = pts.len();
    let signed: i64 = (0..n)
        .map(|i| {
            let (x0, y0) = pts[i];
            let (x1, y1) = pts[(i + 1) % n];
            x0 * y1 - x1 * y0
        })
        .sum();
    // Upper convex path then the chord back: clockwise, so nonpositive.
    -signed
}

/// Stretches `HN(V)` vertically by `factor`, sending each HN vector
/// `(r, d)` to `(r, factor * d)`.
pub fn stretch_vertically(v: &Bundle, factor: u32) -> Bundle {
    assert!(factor > 0, "stretch factor must be positive");
    let c = i64::from(factor);
    let mut pts = alloc::vec::Vec::with_capacity(v.summands().len() + 1);
    let (mut x, mut y) = (0, 0);
    pts.push((x, y));
    for hv in v.hn_vectors() {
        x += hv.rank;
        y += c * hv.degree;
        pts.push((x, y));
    }
    HnPolygon::from_vertices(pts)
        .expect("stretching preserves convexity")
        .to_bundle()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn o(n: i64, d: i64) -> Bundle {
        Bundle::stable(q(n, d))
    }

    #[test]
    fn pos_part_examples() {
        assert_eq!(pos_part_degree(&o(1, 1).direct_sum(&o(-1, 1))), 1);
        assert_eq!(pos_part_degree(&o(-1, 3).direct_sum(&o(-2, 1))), 0);
        assert_eq!(pos_part_degree(&Bundle::semistable(q(0, 1), 5)), 0);
    }

    #[test]
    fn hom_degree_examples() {
        assert_eq!(hom_degree(&o(0, 1), &o(1, 1)), 1);
        assert_eq!(hom_degree_oracle(&o(0, 1), &o(1, 1)), 1);
        for v in [o(1, 2), Bundle::semistable(q(-2, 3), 3), o(4, 1)] {
            assert_eq!(hom_degree(&v, &v), 0);
        }
        let v = o(1, 1).direct_sum(&o(0, 1));
        assert_eq!(hom_degree(&v, &v), 1);
        assert_eq!(hom_degree_oracle(&v, &v), 1);
    }

    #[test]
    fn oracle_edge_cases() {
        assert_eq!(hom_degree_oracle(&Bundle::zero(), &o(1, 1)), 0);
        assert_eq!(hom_degree_oracle(&o(1, 1), &Bundle::zero()), 0);
        assert_eq!(hom_degree_oracle(&o(-1, 1), &o(-2, 1)), 0);
        assert_eq!(hom_degree(&o(-1, 1), &o(-2, 1)), 0);
    }

    #[test]
    fn parallelogram_examples() {
        assert_eq!(parallelogram_degree(&o(-1, 1), &o(1, 1)), Ok(2));
        assert_eq!(hom_degree_oracle(&o(-1, 1), &o(1, 1)), 2);
        assert_eq!(
            parallelogram_degree(&Bundle::semistable(q(0, 1), 2), &o(0, 1)),
            Ok(0)
        );
        let f = o(1, 1).direct_sum(&o(1, 2));
        assert_eq!(parallelogram_degree(&o(0, 1), &f), Ok(2));
        assert_eq!(hom_degree_oracle(&o(0, 1), &f), 2);
        assert_eq!(
            parallelogram_degree(&o(1, 1), &o(0, 1)),
            Err(Error::SlopeOrder)
        );
        assert_eq!(
            parallelogram_degree(&Bundle::zero(), &o(0, 1)),
            Err(Error::UndefinedSlope)
        );
    }

    #[test]
    fn aut_degree_examples() {
        let v = o(1, 1).direct_sum(&o(0, 1));
        assert_eq!((aut_degree(&v), twice_area_above_chord(&v)), (1, 1));
        let v = o(1, 1).direct_sum(&o(-1, 1));
        assert_eq!((aut_degree(&v), twice_area_above_chord(&v)), (2, 2));
        let v = Bundle::semistable(q(3, 2), 2);
        assert_eq!((aut_degree(&v), twice_area_above_chord(&v)), (0, 0));
        assert_eq!(twice_area_above_chord(&Bundle::zero()), 0);
    }

    #[test]
    fn stretch_merges_and_splits_segments() {
        // (2,1) stretched by 2 is (2,2): O(1/2) becomes O(1)^2.
        assert_eq!(
            stretch_vertically(&o(1, 2), 2),
            Bundle::semistable(q(1, 1), 2)
        );
        // (1,1) + (1,-1) stretched by 3.
        let v = o(1, 1).direct_sum(&o(-1, 1));
        assert_eq!(stretch_vertically(&v, 3), o(3, 1).direct_sum(&o(-3, 1)));
        assert_eq!(
            hom_degree(&v, &v) * 3,
            aut_degree(&stretch_vertically(&v, 3))
        );
    }
}
