//! Two ways of counting the accuracy of an approximation `α` of π.
//!
//! * precision `n`: `|α − π| < 10^−n`;
//! * correct significant digits `n`: `|α − π|/π < ½·10^−n`.
//!
//! Both report the largest such integer. Because `1/π < ½`, precision `n`
//! always implies `n` significant digits; the converse can fail by one.
//!
//! The comparisons against powers of ten are done exactly (products of
//! binary floats with exact integers), so boundary cases resolve strictly.

use crate::error::{Error, Result};
use crate::polygon::check_sides;
use crate::realnum::{reference_pi, PrecisionContext, Real};

/// All accuracy metrics of one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccuracyReport {
    /// The approximation α.
    pub value: Real,
    /// `|α − π|`.
    pub abs_error: Real,
    /// `|α − π| / π`.
    pub rel_error: Real,
    /// Largest `n` with `abs_error < 10^−n`.
    pub precision: i64,
    /// Largest `n` with `rel_error < ½·10^−n`.
    pub sig_digits: i64,
    /// `6 log₁₀ n − 1.27`, when a side count was supplied.
    pub digits_estimate: Option<Real>,
}

struct Deviation {
    abs: Real,
    pi: Real,
}

fn deviation(alpha: &Real, ctx: &PrecisionContext) -> Result<Deviation> {
    let pi = reference_pi(&ctx.guarded())?;
    let abs = alpha.sub_exact(&pi)?.abs();
    if abs <= Real::pow2(-(ctx.work_bits() as i64 - 8)) {
        return Err(Error::IncreasePrecision);
    }
    Ok(Deviation { abs, pi })
}

fn pow10(k: u64) -> Real {
    let ten = Real::from_u64(10);
    (0..k).fold(Real::one(), |acc, _| acc.mul_exact(&ten).unwrap_or(acc))
}

/// `scale · 10^k < bound` decided exactly.
fn below(scale: &Real, k: i64, bound: &Real) -> bool {
    let p = pow10(k.unsigned_abs());
    let (lhs, rhs) = if k >= 0 {
        (scale.mul_exact(&p), Ok(bound.clone()))
    } else {
        (Ok(scale.clone()), bound.mul_exact(&p))
    };
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => l < r,
        _ => false,
    }
}

/// Largest `n` with `scale · 10^n < bound`, starting from a bit-length
/// estimate and walking to the exact answer.
fn largest_exponent(scale: &Real, bound: &Real) -> i64 {
    let e = i64::from(scale.binary_exponent().unwrap_or(0))
        - i64::from(bound.binary_exponent().unwrap_or(0));
    let mut n = (-e * 30103).div_euclid(100_000);
    while below(scale, n + 1, bound) {
        n += 1;
    }
    while !below(scale, n, bound) {
        n -= 1;
    }
    n
}

/// Largest integer `n` with `|α − π| < 10^−n`.
pub fn precision_of(alpha: &Real, ctx: &PrecisionContext) -> Result<i64> {
    let d = deviation(alpha, ctx)?;
    Ok(largest_exponent(&d.abs, &Real::one()))
}

/// Largest integer `n` with `|α − π|/π < ½·10^−n`, i.e. `2|α − π|·10^n < π`.
pub fn significant_digits(alpha: &Real, ctx: &PrecisionContext) -> Result<i64> {
    let d = deviation(alpha, ctx)?;
    Ok(largest_exponent(&d.abs.mul_exact(&Real::from_u64(2))?, &d.pi))
}

/// `6 log₁₀ n − 1.27` for `n ≥ 32`.
pub fn digits_estimate(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    check_sides(n)?;
    if n < 32 {
        return Err(Error::TheoremHypothesis(n));
    }
    let g = ctx.guarded();
    let log10 = Real::from_u64(n).ln(&g)?.div(&Real::from_u64(10).ln(&g)?, &g)?;
    log10
        .mul_u64(6, &g)?
        .sub(&Real::ratio(127, 100, &g)?, &g)?
        .round_to(ctx)
}

/// Every metric of `alpha` at once; `digits_estimate` only when a side
/// count is given.
pub fn report(alpha: &Real, n_for_estimate: Option<u64>, ctx: &PrecisionContext) -> Result<AccuracyReport> {
    let d = deviation(alpha, ctx)?;
    let g = ctx.guarded();
    let rel_error = d.abs.div(&d.pi, &g)?.round_to(ctx)?;
    Ok(AccuracyReport {
        value: alpha.clone(),
        abs_error: d.abs.round_to(ctx)?,
        rel_error,
        precision: precision_of(alpha, ctx)?,
        sig_digits: significant_digits(alpha, ctx)?,
        digits_estimate: n_for_estimate.map(|n| digits_estimate(n, ctx)).transpose()?,
    })
}
