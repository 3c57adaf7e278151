//! Dimension formulas for moduli of bundle maps and extensions.
//!
//! Each function returns the closed-form value of a dimension. Whether the
//! corresponding space is nonempty is decided elsewhere (see
//! [`crate::dominance`] and [`crate::sequences`]).

use crate::bundle::Bundle;
use crate::degree::{aut_degree, hom_degree, pos_part_degree};
use crate::error::Error;
use crate::rational::{Rational, Slope};

/// `H^0(V) = 0` iff every HN slope is negative.
pub fn h0_vanishes(v: &Bundle) -> bool {
    v.slopes().all(|s| s < Rational::ZERO)
}

/// `H^1(V) = 0` iff every HN slope is nonnegative.
pub fn h1_vanishes(v: &Bundle) -> bool {
    v.slopes().all(|s| s >= Rational::ZERO)
}

/// Dimension of `Hom(E, F)`.
pub fn dim_hom(e: &Bundle, f: &Bundle) -> i64 {
    hom_degree(e, f)
}

/// Dimension of `Aut(V)`.
pub fn dim_aut(v: &Bundle) -> i64 {
    aut_degree(v)
}

/// Dimension of `H^1(E)` for `mu_max(E) < 0`.
pub fn dim_h1(e: &Bundle) -> Result<i64, Error> {
    if !e.is_zero() && e.mu_max()? >= Rational::ZERO {
        return Err(Error::SlopeOrder);
    }
    Ok(pos_part_degree(&e.dual()))
}

/// For `slope < 0` with `O(slope)^m` of rank `r` and degree `d`, the
/// sequence `0 -> O(slope)^m -> O^(r - d) -> O(1)^(-d) -> 0`. Returns the
/// middle and quotient terms.
pub fn canonical_resolution(slope: Slope, multiplicity: u32) -> Result<(Bundle, Bundle), Error> {
    if slope >= Rational::ZERO {
        return Err(Error::SlopeOrder);
    }
    let sub = Bundle::semistable(slope, multiplicity);
    let (r, d) = (sub.rank(), sub.degree());
    let to_mult = |n: i64| u32::try_from(n).expect("multiplicity overflow");
    let middle = Bundle::semistable(Rational::ZERO, to_mult(r - d));
    let quotient = Bundle::semistable(Rational::ONE, to_mult(-d));
    Ok((middle, quotient))
}

/// Dimension of `Surj(E, F)_K`, the surjections with kernel `K`:
/// `hom(E,F) + hom(K,E) - hom(K,F) - hom(K,K)`.
pub fn dim_surj_stratum(e: &Bundle, f: &Bundle, k: &Bundle) -> Result<i64, Error> {
    if k.rank() != e.rank() - f.rank() || k.degree() != e.degree() - f.degree() {
        return Err(Error::IncompatibleKernel);
    }
    Ok(hom_degree(e, f) + hom_degree(k, e) - hom_degree(k, f) - hom_degree(k, k))
}

/// Dimension of `Ext(F, D)_E`, the extensions of `F` by `D` with middle
/// term `E`: `hom(D,E) + hom(E,F) - hom(D,F) - hom(E,E)`.
pub fn dim_ext_stratum(d: &Bundle, f: &Bundle, e: &Bundle) -> Result<i64, Error> {
    if e.rank() != d.rank() + f.rank() || e.degree() != d.degree() + f.degree() {
        return Err(Error::IncompatibleExtension);
    }
    Ok(hom_degree(d, e) + hom_degree(e, f) - hom_degree(d, f) - hom_degree(e, e))
}

/// Dimension of `Ext(F, D) = H^1(F^dual (x) D)`, valid when
/// `mu_max(D) < mu_min(F)`.
pub fn dim_ext_total(f: &Bundle, d: &Bundle) -> Result<i64, Error> {
    if !d.is_zero() && !f.is_zero() && d.mu_max()? >= f.mu_min()? {
        return Err(Error::SlopeOrder);
    }
    Ok(hom_degree(d, f))
}

/// The ambient dimension, the stratum dimension and their difference.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StratumDims {
    pub total: i64,
    pub stratum: i64,
    pub gap: i64,
}

impl StratumDims {
    fn new(total: i64, stratum: i64) -> Self {
        StratumDims {
            total,
            stratum,
            gap: total - stratum,
        }
    }
}

/// `Surj(E, F)_K` inside `Hom(E, F)`.
pub fn surj_stratum_dims(e: &Bundle, f: &Bundle, k: &Bundle) -> Result<StratumDims, Error> {
    Ok(StratumDims::new(dim_hom(e, f), dim_surj_stratum(e, f, k)?))
}

/// `Ext(F, D)_E` inside `Ext(F, D)`.
pub fn ext_stratum_dims(d: &Bundle, f: &Bundle, e: &Bundle) -> Result<StratumDims, Error> {
    Ok(StratumDims::new(
        dim_ext_total(f, d)?,
        dim_ext_stratum(d, f, e)?,
    ))
}
