//! HN polygons as convex lattice paths from the origin.

use alloc::vec::Vec;

use crate::bundle::{Bundle, HnVector};
use crate::error::{Error, PolygonDefect};
use crate::rational::Rational;

pub type Point = (i64, i64);

/// Vertices of an HN polygon: starts at `(0, 0)`, x strictly increasing,
/// segment slopes strictly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HnPolygon {
    vertices: Vec<Point>,
}

impl HnPolygon {
    pub fn of(bundle: &Bundle) -> Self {
        let mut vertices = Vec::with_capacity(bundle.summands().len() + 1);
        let (mut x, mut y) = (0, 0);
        vertices.push((x, y));
        for v in bundle.hn_vectors() {
            x += v.rank;
            y += v.degree;
            vertices.push((x, y));
        }
        HnPolygon { vertices }
    }

    /// Validates a vertex list.
    pub fn from_vertices(vertices: Vec<Point>) -> Result<Self, Error> {
        let bad = |d| Err(Error::InvalidPolygon(d));
        match vertices.first() {
            None => return bad(PolygonDefect::Empty),
            Some(&p) if p != (0, 0) => return bad(PolygonDefect::NotAtOrigin),
            _ => {}
        }
        let mut prev_slope: Option<Rational> = None;
        for w in vertices.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            if dx <= 0 {
                return bad(PolygonDefect::NonIncreasingX);
            }
            let slope = Rational::reduced(dy, dx);
            if prev_slope.is_some_and(|p| slope >= p) {
                return bad(PolygonDefect::NotConvex);
            }
            prev_slope = Some(slope);
        }
        Ok(HnPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn segments(&self) -> impl Iterator<Item = HnVector> + '_ {
        self.vertices.windows(2).map(|w| HnVector {
            rank: w[1].0 - w[0].0,
            degree: w[1].1 - w[0].1,
        })
    }

    /// Inverse of [`HnPolygon::of`]: a segment `(R, D)` whose reduced slope
    /// is `s/r` contributes `O(s/r)^(R/r)`.
    pub fn to_bundle(&self) -> Bundle {
        Bundle::from_summands(self.segments().map(|v| {
            let slope = v.slope();
            let m = v.rank / slope.denom();
            (slope, u32::try_from(m).expect("multiplicity overflow"))
        }))
    }

    pub fn right_end(&self) -> Point {
        *self
            .vertices
            .last()
            .expect("polygon has at least the origin")
    }

    pub fn width(&self) -> i64 {
        self.right_end().0
    }

    /// Value of the piecewise-linear function at `x` in `[0, width]`.
    pub fn evaluate(&self, x: Rational) -> Result<Rational, Error> {
        if x < Rational::ZERO || x > Rational::integer(self.width()) {
            return Err(Error::OutOfRange);
        }
        let at = |i: usize| {
            let (px, py) = self.vertices[i];
            (Rational::integer(px), Rational::integer(py))
        };
        // First vertex with abscissa >= x.
        let k = self
            .vertices
            .partition_point(|&(vx, _)| Rational::integer(vx) < x);
        let (kx, ky) = at(k);
        if kx == x {
            return Ok(ky);
        }
        let (jx, jy) = at(k - 1);
        let run = self.vertices[k].0 - self.vertices[k - 1].0;
        let rise = self.vertices[k].1 - self.vertices[k - 1].1;
        Ok(jy + Rational::reduced(rise, run) * (x - jx))
    }

    fn eval_int(&self, x: i64) -> Rational {
        self.evaluate(Rational::integer(x))
            .expect("integer inside the domain")
    }

    /// `self <= other`: every point of `self` lies on or below `other`.
    /// Polygons with different widths are never comparable.
    pub fn lies_on_or_below(&self, other: &HnPolygon) -> bool {
        if self.width() != other.width() {
            return false;
        }
        self.vertices
            .iter()
            .chain(other.vertices.iter())
            .all(|&(x, _)| self.eval_int(x) <= other.eval_int(x))
    }

    pub fn same_endpoints(&self, other: &HnPolygon) -> bool {
        self.right_end() == other.right_end()
    }

    /// Slope on `[i - 1, i]`, for `1 <= i <= width`.
    pub fn slope_on_unit_interval(&self, i: i64) -> Result<Rational, Error> {
        if i < 1 || i > self.width() {
            return Err(Error::OutOfRange);
        }
        Ok(self.eval_int(i) - self.eval_int(i - 1))
    }

    pub fn has_vertex_at(&self, j: i64) -> bool {
        self.vertices.iter().any(|&(x, _)| x == j)
    }

    /// True when the two polygons coincide on `[0, x]`.
    pub fn agrees_up_to(&self, other: &HnPolygon, x: i64) -> bool {
        if x > self.width() || x > other.width() {
            return false;
        }
        self.vertices
            .iter()
            .chain(other.vertices.iter())
            .filter(|&&(vx, _)| vx <= x)
            .map(|&(vx, _)| vx)
            .chain(core::iter::once(x))
            .all(|vx| self.eval_int(vx) == other.eval_int(vx))
    }
}

impl From<&Bundle> for HnPolygon {
    fn from(b: &Bundle) -> Self {
        HnPolygon::of(b)
    }
}
