use core::fmt;

/// Why a polygon vertex list does not describe an HN polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonDefect {
    Empty,
    NotAtOrigin,
    NonIncreasingX,
    NotConvex,
}

/// A hypothesis a harness or formula needs but the input does not satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    SemistableKernel,
    SemistableExtension,
    NonsemistableKernel,
    SlopeGap,
    StrictSlopeGap,
    MainConditions,
    RankDegreeBalance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    ZeroDenominator,
    /// Slope, `mu_max` or `mu_min` of the zero bundle.
    UndefinedSlope,
    InvalidPolygon(PolygonDefect),
    OutOfRange,
    /// A slope-ordering precondition such as `mu_max(E) <= mu_min(F)` failed.
    SlopeOrder,
    IncompatibleKernel,
    IncompatibleExtension,
    Precondition(Hypothesis),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero-denominator",
            Error::UndefinedSlope => "undefined-slope",
            Error::InvalidPolygon(_) => "invalid-polygon",
            Error::OutOfRange => "out-of-range",
            Error::SlopeOrder => "slope-order",
            Error::IncompatibleKernel => "incompatible-kernel",
            Error::IncompatibleExtension => "incompatible-extension",
            Error::Precondition(_) => "precondition",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::UndefinedSlope => f.write_str("the zero bundle has no slope"),
            Error::InvalidPolygon(d) => write!(f, "invalid HN polygon: {d:?}"),
            Error::OutOfRange => f.write_str("argument outside the polygon's domain"),
            Error::SlopeOrder => f.write_str("slope ordering precondition violated"),
            Error::IncompatibleKernel => {
                f.write_str("kernel rank/degree must equal rank/degree of E minus F")
            }
            Error::IncompatibleExtension => {
                f.write_str("extension rank/degree must equal rank/degree of D plus F")
            }
            Error::Precondition(h) => write!(f, "unmet hypothesis: {h:?}"),
        }
    }
}

impl core::error::Error for Error {}
