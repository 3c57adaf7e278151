//! Exact Harder-Narasimhan calculus for vector bundles on the
//! Fargues-Fontaine curve.
//!
//! Bundles are represented by their HN types ([`Bundle`]); everything else
//! (polygons, degrees of tensor products, dominance, dimensions of moduli of
//! maps and extensions, existence of short exact sequences) is computed from
//! that data in exact integer and rational arithmetic.
//!
//! ```
//! use hncalc_core::{q, Bundle, decide_extension, Verdict};
//!
//! let d = Bundle::stable(q(-1, 1));
//! let e = Bundle::semistable(q(0, 1), 2);
//! let f = Bundle::stable(q(1, 1));
//! assert_eq!(decide_extension(&d, &e, &f).verdict, Verdict::Exists);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bundle;
pub mod degree;
pub mod dominance;
pub mod error;
pub mod moduli;
pub mod polygon;
pub mod rational;
pub mod sequences;

pub use bundle::{Bundle, Cut, HnVector, Summand};
pub use error::{Error, Hypothesis, PolygonDefect};
pub use polygon::HnPolygon;
pub use rational::{q, Rational, Slope};
pub use sequences::{decide_extension, Decision, SlopeWindow, Term, Verdict};
