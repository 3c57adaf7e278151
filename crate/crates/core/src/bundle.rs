//! Vector bundles represented by their HN types.
//!
//! A bundle on the curve is determined up to isomorphism by its HN
//! decomposition `O(l_1)^m_1 + ... + O(l_k)^m_k` with `l_1 > ... > l_k`, so
//! that list is the whole representation. The empty list is the zero bundle.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::rational::{Rational, Slope};

/// `O(slope)^multiplicity`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Summand {
    pub slope: Slope,
    pub multiplicity: u32,
}

impl Summand {
    pub fn rank(&self) -> i64 {
        i64::from(self.multiplicity) * self.slope.denom()
    }

    pub fn degree(&self) -> i64 {
        i64::from(self.multiplicity) * self.slope.numer()
    }

    pub fn hn_vector(&self) -> HnVector {
        HnVector {
            rank: self.rank(),
            degree: self.degree(),
        }
    }
}

/// One segment `(rank, degree)` of an HN polygon.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HnVector {
    pub rank: i64,
    pub degree: i64,
}

impl HnVector {
    pub fn slope(&self) -> Rational {
        Rational::reduced(self.degree, self.rank)
    }

    /// Two-dimensional cross product `self.rank * other.degree - self.degree * other.rank`.
    pub fn cross(&self, other: &HnVector) -> i64 {
        self.rank * other.degree - self.degree * other.rank
    }
}

/// Which summands [`Bundle::truncate`] keeps relative to the threshold.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cut {
    AtLeast,
    Above,
    AtMost,
    Below,
}

impl Cut {
    fn keeps(self, slope: Slope, mu: Slope) -> bool {
        match self {
            Cut::AtLeast => slope >= mu,
            Cut::Above => slope > mu,
            Cut::AtMost => slope <= mu,
            Cut::Below => slope < mu,
        }
    }
}

/// An isomorphism class of vector bundles, stored as its HN decomposition
/// with strictly decreasing slopes and positive multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bundle {
    summands: Vec<Summand>,
}

impl Bundle {
    pub fn zero() -> Self {
        Bundle::default()
    }

    /// The stable bundle `O(slope)`.
    pub fn stable(slope: Slope) -> Self {
        Self::semistable(slope, 1)
    }

    /// `O(slope)^multiplicity`; the zero bundle when `multiplicity == 0`.
    pub fn semistable(slope: Slope, multiplicity: u32) -> Self {
        Self::from_summands([(slope, multiplicity)])
    }

    /// Builds the normal form from arbitrary `(slope, multiplicity)` pairs:
    /// equal slopes are merged, zero multiplicities dropped, and the result
    /// sorted by decreasing slope.
    pub fn from_summands<I>(parts: I) -> Self
    where
        I: IntoIterator<Item = (Slope, u32)>,
    {
        let mut summands: Vec<Summand> = parts
            .into_iter()
            .filter(|&(_, m)| m > 0)
            .map(|(slope, multiplicity)| Summand {
                slope,
                multiplicity,
            })
            .collect();
        summands.sort_by_key(|s| core::cmp::Reverse(s.slope));
        summands.dedup_by(|next, kept| {
            if next.slope == kept.slope {
                kept.multiplicity += next.multiplicity;
                true
            } else {
                false
            }
        });
        Bundle { summands }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn slopes(&self) -> impl DoubleEndedIterator<Item = Slope> + '_ {
        self.summands.iter().map(|s| s.slope)
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn rank(&self) -> i64 {
        self.summands.iter().map(Summand::rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().map(Summand::degree).sum()
    }

    pub fn slope(&self) -> Result<Slope, Error> {
        match self.rank() {
            0 => Err(Error::UndefinedSlope),
            r => Ok(Rational::reduced(self.degree(), r)),
        }
    }

    pub fn mu_max(&self) -> Result<Slope, Error> {
        self.summands
            .first()
            .map(|s| s.slope)
            .ok_or(Error::UndefinedSlope)
    }

    pub fn mu_min(&self) -> Result<Slope, Error> {
        self.summands
            .last()
            .map(|s| s.slope)
            .ok_or(Error::UndefinedSlope)
    }

    /// At most one distinct slope. The zero bundle counts as semistable.
    pub fn is_semistable(&self) -> bool {
        self.summands.len() <= 1
    }

    pub fn dual(&self) -> Self {
        Bundle {
            summands: self
                .summands
                .iter()
                .rev()
                .map(|s| Summand {
                    slope: -s.slope,
                    multiplicity: s.multiplicity,
                })
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Bundle) -> Self {
        let mut out = Vec::with_capacity(self.summands.len() + other.summands.len());
        let (mut a, mut b) = (
            self.summands.iter().peekable(),
            other.summands.iter().peekable(),
        );
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.slope == y.slope => {
                    let merged = Summand {
                        slope: x.slope,
                        multiplicity: x.multiplicity + y.multiplicity,
                    };
                    a.next();
                    b.next();
                    merged
                }
                (Some(x), Some(y)) if x.slope > y.slope => *a.next().unwrap(),
                (_, Some(_)) => *b.next().unwrap(),
                (Some(_), None) => *a.next().unwrap(),
                (None, None) => break,
            };
            out.push(next);
        }
        Bundle { summands: out }
    }

    /// `O(a) (x) O(b) = O(a + b)^(r_a r_b / r_(a+b))`, extended bilinearly.
    pub fn tensor(&self, other: &Bundle) -> Self {
        Self::from_summands(self.summands.iter().flat_map(|x| {
            other.summands.iter().map(move |y| {
                let slope = x.slope + y.slope;
                let copies = x.slope.denom() * y.slope.denom() / slope.denom();
                let m = i64::from(x.multiplicity) * i64::from(y.multiplicity) * copies;
                (slope, u32::try_from(m).expect("multiplicity overflow"))
            })
        }))
    }

    /// `V(slope) = V (x) O(slope)`.
    pub fn twist(&self, slope: Slope) -> Self {
        self.tensor(&Bundle::stable(slope))
    }

    pub fn truncate(&self, mu: Slope, cut: Cut) -> Self {
        Bundle {
            summands: self
                .summands
                .iter()
                .copied()
                .filter(|s| cut.keeps(s.slope, mu))
                .collect(),
        }
    }

    /// `rank(V^{>= mu})`.
    pub fn rank_at_least(&self, mu: Slope) -> i64 {
        self.summands
            .iter()
            .take_while(|s| s.slope >= mu)
            .map(Summand::rank)
            .sum()
    }

    pub fn hn_vectors(&self) -> Vec<HnVector> {
        self.summands.iter().map(Summand::hn_vector).collect()
    }
}

/// Canonical text form, e.g. `O(1/2)^2 + O(-1)`; the zero bundle prints as `0`.
impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "O({})", s.slope)?;
            if s.multiplicity != 1 {
                write!(f, "^{}", s.multiplicity)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bundle[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use alloc::string::ToString;
    use alloc::vec;

    fn o(n: i64, d: i64) -> Bundle {
        Bundle::stable(q(n, d))
    }

    fn oo(n: i64, d: i64, m: u32) -> Bundle {
        Bundle::semistable(q(n, d), m)
    }

    #[test]
    fn stable_bundles() {
        let triv = o(0, 1);
        assert_eq!((triv.rank(), triv.degree()), (1, 0));
        assert_eq!((o(1, 2).rank(), o(1, 2).degree()), (2, 1));
        assert_eq!((o(-2, 3).rank(), o(-2, 3).degree()), (3, -2));
        assert_eq!(o(1, 2).summands()[0].multiplicity, 1);
    }

    #[test]
    fn rank_degree_slope() {
        let v = o(1, 2).direct_sum(&o(-1, 1));
        assert_eq!((v.rank(), v.degree()), (3, 0));
        assert_eq!(v.slope(), Ok(Rational::ZERO));

        let z = Bundle::zero();
        assert_eq!((z.rank(), z.degree()), (0, 0));
        assert_eq!(z.slope(), Err(Error::UndefinedSlope));

        let w = oo(2, 1, 3);
        assert_eq!((w.rank(), w.degree(), w.slope()), (3, 6, Ok(q(2, 1))));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(o(1, 2).dual(), o(-1, 2));
        let v = o(1, 1).direct_sum(&oo(-1, 3, 2));
        assert_eq!(v.dual(), oo(1, 3, 2).direct_sum(&o(-1, 1)));
        assert_eq!(v.dual().summands()[0].slope, q(1, 3));
        assert_eq!(Bundle::zero().dual(), Bundle::zero());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(o(1, 1).direct_sum(&o(1, 1)), oo(1, 1, 2));
        let v = o(1, 1).direct_sum(&o(0, 1)).direct_sum(&o(1, 2));
        let slopes: Vec<_> = v.slopes().collect();
        assert_eq!(slopes, vec![q(1, 1), q(1, 2), q(0, 1)]);
        assert_eq!(v.direct_sum(&Bundle::zero()), v);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(o(1, 2).tensor(&o(1, 3)), o(5, 6));
        assert_eq!(o(-2, 3).tensor(&o(0, 1)), o(-2, 3));
        assert_eq!(o(1, 2).tensor(&o(-1, 2)), oo(0, 1, 4));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(o(0, 1).twist(q(1, 1)), o(1, 1));
        assert_eq!(o(1, 2).twist(q(-1, 2)), oo(0, 1, 4));
        assert_eq!(
            o(1, 1).direct_sum(&o(0, 1)).twist(q(1, 1)),
            o(2, 1).direct_sum(&o(1, 1))
        );
    }

    #[test]
    fn truncate_examples() {
        let v = o(1, 1).direct_sum(&o(0, 1)).direct_sum(&o(-1, 1));
        assert_eq!(
            v.truncate(q(0, 1), Cut::AtLeast),
            o(1, 1).direct_sum(&o(0, 1))
        );
        assert_eq!(o(1, 2).truncate(q(1, 2), Cut::Above), Bundle::zero());
        for mu in [q(-2, 1), q(-1, 1), q(-1, 2), q(0, 1), q(1, 1), q(3, 1)] {
            assert_eq!(
                v.truncate(mu, Cut::AtLeast)
                    .direct_sum(&v.truncate(mu, Cut::Below)),
                v
            );
            assert_eq!(v.rank_at_least(mu), v.truncate(mu, Cut::AtLeast).rank());
        }
    }

    #[test]
    fn mu_max_min() {
        let v = o(1, 1).direct_sum(&o(-1, 2));
        assert_eq!(v.mu_max(), Ok(q(1, 1)));
        assert_eq!(v.mu_min(), Ok(q(-1, 2)));
        assert!(!v.is_semistable());
        let w = oo(3, 1, 5);
        assert_eq!(w.mu_max(), w.mu_min());
        assert!(w.is_semistable());
        assert_eq!(Bundle::zero().mu_max(), Err(Error::UndefinedSlope));
        assert_eq!(Bundle::zero().mu_min(), Err(Error::UndefinedSlope));
    }

    #[test]
    fn hn_vector_examples() {
        let v = oo(1, 2, 2).direct_sum(&o(-1, 1));
        assert_eq!(
            v.hn_vectors(),
            vec![
                HnVector { rank: 4, degree: 2 },
                HnVector {
                    rank: 1,
                    degree: -1
                }
            ]
        );
        assert!(Bundle::zero().hn_vectors().is_empty());
        assert_eq!(
            oo(0, 1, 3).hn_vectors(),
            vec![HnVector { rank: 3, degree: 0 }]
        );
    }

    #[test]
    fn from_summands_normalizes() {
        let v = Bundle::from_summands([(q(0, 1), 1), (q(2, 4), 1), (q(0, 1), 2), (q(5, 1), 0)]);
        assert_eq!(v.to_string(), "O(1/2) + O(0)^3");
    }

    #[test]
    fn display() {
        assert_eq!(
            oo(1, 2, 2).direct_sum(&o(-1, 1)).to_string(),
            "O(1/2)^2 + O(-1)"
        );
        assert_eq!(Bundle::zero().to_string(), "0");
    }
}
