//! Exact rationals in lowest terms.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::Error;

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// An exact rational number `numer / denom` with `denom >= 1` and
/// `gcd(|numer|, denom) = 1`. Zero is always stored as `0/1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i64>);

/// Slopes of stable bundles are rationals; `O(s/r)` has degree `numer` and
/// rank `denom`.
pub type Slope = Rational;

impl Rational {
    pub const ZERO: Rational = Rational::integer(0);
    pub const ONE: Rational = Rational::integer(1);

    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(numer, denom))
    }

    /// Callers guarantee `denom != 0`.
    pub(crate) fn reduced(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub const fn integer(n: i64) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    #[inline]
    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    #[inline]
    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn mul_int(self, k: i64) -> Self {
        Rational(self.0 * k)
    }

    pub fn div_int(self, k: i64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0 / k))
    }

    /// Midpoint of two rationals.
    pub fn midpoint(self, other: Self) -> Self {
        Rational((self.0 + other.0) / 2)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

/// Integer values print without a denominator: `2`, `-1/3`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used throughout the tests: `q(1, 2)` is one half.
///
/// Panics on a zero denominator.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom).expect("nonzero denominator")
}
