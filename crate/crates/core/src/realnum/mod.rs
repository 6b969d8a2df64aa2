//! Extended-precision scalars and the evaluation contract every other module
//! relies on.
//!
//! A [`Real`] is always finite. Arithmetic takes a [`PrecisionContext`] and
//! rounds the result to nearest-even at the context's working precision;
//! any NaN or infinity produced by the backend is turned into an [`Error`]
//! before it can escape.
//!
//! Composite formulas in the other modules evaluate on
//! [`PrecisionContext::guarded`] and round the final value back with
//! [`Real::round_to`].

mod decimal;
mod machin;
mod trig;

use core::cmp::Ordering;
use core::fmt;

use astro_float::{BigFloat, Consts, Exponent, Radix, RoundingMode, Sign};

use crate::error::{Error, Result};

pub use self::machin::reference_pi;
pub use self::trig::{trig, TrigFn};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision and guard policy for an evaluation.
///
/// The backend stores mantissas in whole 64-bit words, so a context with
/// `work_bits = 100` carries 128 bits. Ulps and inflation margins are always
/// measured at the requested `work_bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    work_bits: usize,
    guard_bits: usize,
}

impl PrecisionContext {
    /// Smallest accepted working precision.
    pub const MIN_WORK_BITS: usize = 64;
    /// Working precision used when none is given.
    pub const DEFAULT_WORK_BITS: usize = 256;
    /// Guard bits added for internal evaluation unless overridden.
    pub const DEFAULT_GUARD_BITS: usize = 32;

    /// Context with `work_bits` of precision and the default guard bits.
    pub fn new(work_bits: usize) -> Result<Self> {
        if work_bits < Self::MIN_WORK_BITS {
            return Err(Error::PrecisionTooLow(work_bits));
        }
        Ok(Self {
            work_bits,
            guard_bits: Self::DEFAULT_GUARD_BITS,
        })
    }

    /// Same context with a different number of guard bits.
    #[must_use]
    pub fn with_guard_bits(self, guard_bits: usize) -> Self {
        Self { guard_bits, ..self }
    }

    /// Binary digits of working precision.
    pub fn work_bits(&self) -> usize {
        self.work_bits
    }

    /// Extra binary digits used for internal evaluation.
    pub fn guard_bits(&self) -> usize {
        self.guard_bits
    }

    /// The context used for intermediate values: `work_bits + guard_bits`
    /// of precision, same guard policy.
    pub fn guarded(&self) -> Self {
        Self {
            work_bits: self.work_bits + self.guard_bits,
            guard_bits: self.guard_bits,
        }
    }

    /// Unit in the last place of `x` at this working precision, i.e.
    /// `2^(e − work_bits)` for `x ∈ [2^(e−1), 2^e)`. Zero for zero.
    pub fn ulp(&self, x: &Real) -> Real {
        match x.binary_exponent() {
            Some(e) => Real::pow2(e as i64 - self.work_bits as i64),
            None => Real::zero(),
        }
    }

    /// `k` ulps of `x`.
    pub fn ulps(&self, x: &Real, k: u64) -> Real {
        let u = self.ulp(x);
        if u.is_zero() || k == 0 {
            return Real::zero();
        }
        Real(u.0.mul_full_prec(&BigFloat::from_u64(k, 64)))
    }

    fn p(&self) -> usize {
        self.work_bits
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            work_bits: Self::DEFAULT_WORK_BITS,
            guard_bits: Self::DEFAULT_GUARD_BITS,
        }
    }
}

/// Build a [`PrecisionContext`]; rejects `work_bits < 64`.
pub fn make_context(work_bits: usize) -> Result<PrecisionContext> {
    PrecisionContext::new(work_bits)
}

pub(crate) fn consts() -> Result<Consts> {
    Consts::new().map_err(Error::Backend)
}

/// A finite extended-precision real number.
#[derive(Clone)]
pub struct Real(pub(crate) BigFloat);

impl Real {
    fn checked(v: BigFloat, what: &'static str) -> Result<Self> {
        if v.is_nan() || v.is_inf() {
            return Err(match v.err() {
                Some(e) if !matches!(e, astro_float::Error::ExponentOverflow(_)) => {
                    Error::Backend(e)
                }
                _ => Error::NonFinite(what),
            });
        }
        Ok(Self(v))
    }

    /// Exact zero.
    pub fn zero() -> Self {
        Self(BigFloat::from_u64(0, 64))
    }

    /// Exact one.
    pub fn one() -> Self {
        Self(BigFloat::from_u64(1, 64))
    }

    /// Exact conversion of an unsigned integer.
    pub fn from_u64(v: u64) -> Self {
        Self(BigFloat::from_u64(v, 64))
    }

    /// Exact conversion of a signed integer.
    pub fn from_i64(v: i64) -> Self {
        Self(BigFloat::from_i64(v, 64))
    }

    /// Exact conversion of a 128-bit integer.
    pub fn from_i128(v: i128) -> Self {
        if let Ok(small) = i64::try_from(v) {
            return Self::from_i64(small);
        }
        let mag = v.unsigned_abs();
        let hi = BigFloat::from_u64((mag >> 64) as u64, 128);
        let lo = BigFloat::from_u64(mag as u64, 128);
        let m = hi.mul(&Self::pow2(64).0, 128, RM).add(&lo, 128, RM);
        if v < 0 {
            Self(m.neg())
        } else {
            Self(m)
        }
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(v: f64) -> Result<Self> {
        Self::checked(BigFloat::from_f64(v, 64), "from_f64")
    }

    /// `num / den` rounded at the context precision.
    pub fn ratio(num: i64, den: i64, ctx: &PrecisionContext) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::from_i64(num).div(&Self::from_i64(den), ctx)
    }

    /// Exact power of two.
    pub fn pow2(k: i64) -> Self {
        let mut v = BigFloat::from_u64(1, 64);
        // 1 = 0.1b × 2^1
        v.set_exponent((k + 1) as Exponent);
        Self(v)
    }

    /// Parse a decimal literal such as `"3.14159"` or `"-1.5e-10"`.
    pub fn parse(s: &str, ctx: &PrecisionContext) -> Result<Self> {
        let mut cc = consts()?;
        let v = BigFloat::parse(s, Radix::Dec, ctx.p(), RM, &mut cc);
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse);
        }
        Ok(Self(v))
    }

    /// `self + rhs`.
    pub fn add(&self, rhs: &Self, ctx: &PrecisionContext) -> Result<Self> {
        Self::checked(self.0.add(&rhs.0, ctx.p(), RM), "add")
    }

    /// `self − rhs`.
    pub fn sub(&self, rhs: &Self, ctx: &PrecisionContext) -> Result<Self> {
        Self::checked(self.0.sub(&rhs.0, ctx.p(), RM), "sub")
    }

    /// `self × rhs`.
    pub fn mul(&self, rhs: &Self, ctx: &PrecisionContext) -> Result<Self> {
        Self::checked(self.0.mul(&rhs.0, ctx.p(), RM), "mul")
    }

    /// `self ÷ rhs`; division by zero is an error.
    pub fn div(&self, rhs: &Self, ctx: &PrecisionContext) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::checked(self.0.div(&rhs.0, ctx.p(), RM), "div")
    }

    /// `self × k`.
    pub fn mul_u64(&self, k: u64, ctx: &PrecisionContext) -> Result<Self> {
        self.mul(&Self::from_u64(k), ctx)
    }

    /// `self ÷ k`.
    pub fn div_u64(&self, k: u64, ctx: &PrecisionContext) -> Result<Self> {
        self.div(&Self::from_u64(k), ctx)
    }

    /// Exact sum (the result carries as many bits as needed).
    pub fn add_exact(&self, rhs: &Self) -> Result<Self> {
        // the backend's full-precision ops mishandle zero operands
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        Self::checked(self.0.add_full_prec(&rhs.0), "add_exact")
    }

    /// Exact difference.
    pub fn sub_exact(&self, rhs: &Self) -> Result<Self> {
        self.add_exact(&rhs.neg())
    }

    /// Exact product.
    pub fn mul_exact(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        Self::checked(self.0.mul_full_prec(&rhs.0), "mul_exact")
    }

    /// Square root; negative input is an error.
    pub fn sqrt(&self, ctx: &PrecisionContext) -> Result<Self> {
        Self::checked(self.0.sqrt(ctx.p(), RM), "sqrt")
    }

    /// `self^k` for a small non-negative integer exponent.
    pub fn powi(&self, k: usize, ctx: &PrecisionContext) -> Result<Self> {
        Self::checked(self.0.powi(k, ctx.p(), RM), "powi")
    }

    /// Natural logarithm of a positive value.
    pub fn ln(&self, ctx: &PrecisionContext) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::NonFinite("ln"));
        }
        let mut cc = consts()?;
        Self::checked(self.0.ln(ctx.p(), RM, &mut cc), "ln")
    }

    /// Exponential.
    pub fn exp(&self, ctx: &PrecisionContext) -> Result<Self> {
        let mut cc = consts()?;
        Self::checked(self.0.exp(ctx.p(), RM, &mut cc), "exp")
    }

    /// Nearest integer, ties to even.
    pub fn round_integer(&self) -> Result<Self> {
        Self::checked(self.0.round(0, RM), "round")
    }

    /// Round to the precision of `ctx`.
    pub fn round_to(&self, ctx: &PrecisionContext) -> Result<Self> {
        let mut v = self.0.clone();
        v.set_precision(ctx.p(), RM).map_err(Error::Backend)?;
        Self::checked(v, "round_to")
    }

    /// Negation (exact).
    pub fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    /// Absolute value (exact).
    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// True for ±0.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Strictly positive.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.is_positive()
    }

    /// Strictly negative.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.is_negative()
    }

    /// `e` such that `|self| ∈ [2^(e−1), 2^e)`; `None` for zero.
    pub fn binary_exponent(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            self.0.exponent()
        }
    }

    /// Nearest `f64` (truncated to the top mantissa word before conversion,
    /// which is within one `f64` ulp). Saturates to ±0 / ±∞ outside the
    /// `f64` range.
    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.0.as_raw_parts() else {
            return 0.0;
        };
        let Some(&top) = words.last() else {
            return 0.0;
        };
        if top == 0 {
            return 0.0;
        }
        let mag = ldexp(top as f64, e as i64 - 64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Scientific decimal rendering with exactly `digits` significant digits,
    /// round-half-even, e.g. `3.1416e0`, `-1.25e-35`.
    pub fn to_scientific(&self, digits: usize) -> alloc::string::String {
        decimal::to_scientific(self, digits)
    }

    pub(crate) fn raw(&self) -> &BigFloat {
        &self.0
    }
}

fn ldexp(mut x: f64, mut k: i64) -> f64 {
    const UP: f64 = 1.8446744073709552e19; // 2^64
    const DOWN: f64 = 5.421010862427522e-20; // 2^-64
    while k >= 64 {
        x *= UP;
        k -= 64;
        if x.is_infinite() {
            return x;
        }
    }
    while k <= -64 {
        x *= DOWN;
        k += 64;
        if x == 0.0 {
            return x;
        }
    }
    if k >= 0 {
        x * (1u64 << k) as f64
    } else {
        x / (1u64 << (-k)) as f64
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        // Both sides are finite by construction.
        match self.0.cmp(&other.0) {
            Some(c) if c < 0 => Ordering::Less,
            Some(0) => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.0.precision().map_or(20, |p| p * 30103 / 100000).max(2);
        write!(f, "Real({})", self.to_scientific(digits))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(17).max(1);
        f.write_str(&self.to_scientific(digits))
    }
}
