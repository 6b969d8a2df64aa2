use thiserror::Error;

use crate::approximants::ApproximantId;

/// Errors raised by every fallible operation of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Working precision below the supported minimum.
    #[error("precision too low: work_bits must be at least 64, got {0}")]
    PrecisionTooLow(usize),
    /// An intermediate value became infinite or NaN.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    /// Argument of `tan` too close to a pole.
    #[error("tangent pole")]
    TangentPole,
    /// Side count below 3.
    #[error("degenerate polygon: n = {0} < 3")]
    DegeneratePolygon(u64),
    /// Side count above the supported cap.
    #[error("side count {0} exceeds the cap 2^40")]
    SideCountTooLarge(u64),
    /// Angle at or beyond π/2 where `tan` is undefined.
    #[error("outside tan domain")]
    OutsideTanDomain,
    /// Angle below zero.
    #[error("negative angle")]
    NegativeAngle,
    /// Argument outside the domain on which a series enclosure is proven.
    #[error("lemma domain exceeded")]
    LemmaDomainExceeded,
    /// Argument outside `[0, π/4]` for the `sin x / x` approximants.
    #[error("sinc approximant domain is [0, pi/4]")]
    SincDomain,
    /// A bracket whose lower end exceeds its upper end.
    #[error("inverted bracket")]
    InvertedBracket,
    /// Side count below the theorem's hypothesis.
    #[error("theorem hypothesis n >= 32 violated (n = {0})")]
    TheoremHypothesis(u64),
    /// The denominator of a ratio is not resolvable at this precision.
    #[error("ratio indeterminate at this precision")]
    RatioIndeterminate,
    /// The approximant does not support the requested operation.
    #[error("unsupported approximant {0}")]
    UnsupportedApproximant(ApproximantId),
    /// Continued-fraction depth outside the known partial numerators.
    #[error("continued fraction depth {0} outside 1..=4")]
    ContinuedFractionDepth(usize),
    /// A rational approximant hit a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// Limit extrapolation did not settle.
    #[error("extrapolation failed for {0}")]
    ExtrapolationFailed(ApproximantId),
    /// The value is within rounding noise of π; more working bits are needed.
    #[error("increase precision")]
    IncreasePrecision,
    /// Decimal text could not be parsed.
    #[error("invalid decimal literal")]
    Parse,
    /// Failure reported by the floating-point backend.
    #[error("backend error: {0:?}")]
    Backend(astro_float::Error),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
