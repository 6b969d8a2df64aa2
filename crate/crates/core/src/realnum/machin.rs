//! π from Machin's identity `π = 16·atan(1/5) − 4·atan(1/239)`.
//!
//! This is the oracle every approximant is measured against, so it must not
//! share code with the polygon formulas. Each arctangent is summed until the
//! first omitted term of the alternating series is below
//! `2^−(work_bits + guard_bits + 8)`; that term bounds the tail.

use super::{PrecisionContext, Real};
use crate::error::Result;

/// `atan(1/m)` for an integer `m ≥ 2`, with truncation error below
/// `2^−tail_bits`.
fn atan_inv(m: u64, tail_bits: i64, ctx: &PrecisionContext) -> Result<Real> {
    let m2 = Real::from_u64(m * m);
    // power = 1 / m^(2k+1)
    let mut power = Real::one().div_u64(m, ctx)?;
    let mut sum = Real::zero();
    let mut k: u64 = 0;
    loop {
        let term = power.div_u64(2 * k + 1, ctx)?;
        if term.binary_exponent().is_some_and(|e| i64::from(e) <= -tail_bits) {
            // term < 2^-tail_bits bounds everything not yet added
            break;
        }
        sum = if k.is_multiple_of(2) {
            sum.add(&term, ctx)?
        } else {
            sum.sub(&term, ctx)?
        };
        power = power.div(&m2, ctx)?;
        k += 1;
    }
    Ok(sum)
}

/// π with `|result − π| ≤ 2^−work_bits · π`.
///
/// Evaluated at `work_bits + guard_bits + 16` bits and rounded to the
/// context precision.
pub fn reference_pi(ctx: &PrecisionContext) -> Result<Real> {
    let target = (ctx.work_bits() + ctx.guard_bits()) as i64;
    let inner = PrecisionContext::new(ctx.work_bits() + ctx.guard_bits() + 16)?;
    let tail_bits = target + 8;
    let a5 = atan_inv(5, tail_bits, &inner)?;
    let a239 = atan_inv(239, tail_bits, &inner)?;
    let pi = a5.mul_u64(16, &inner)?.sub(&a239.mul_u64(4, &inner)?, &inner)?;
    pi.round_to(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";

    #[test]
    fn matches_published_digits() {
        let ctx = PrecisionContext::new(256).unwrap();
        let pi = reference_pi(&ctx).unwrap();
        assert!(pi.to_scientific(50).starts_with("3.141592653589793238462643383279502884197169399375"));
        let published = Real::parse(PI_50, &ctx).unwrap();
        let diff = pi.sub(&published, &ctx).unwrap().abs();
        assert!(diff < Real::pow2(-160));
    }

    #[test]
    fn coarse_context_bracket() {
        let ctx = PrecisionContext::new(128).unwrap();
        let pi = reference_pi(&ctx).unwrap();
        assert!(pi > Real::parse("3.14159265", &ctx).unwrap());
        assert!(pi < Real::parse("3.14159266", &ctx).unwrap());
    }

    #[test]
    fn atan_inv_small_case() {
        // atan(1/2) + atan(1/3) = π/4
        let ctx = PrecisionContext::new(192).unwrap();
        let s = atan_inv(2, 200, &ctx)
            .unwrap()
            .add(&atan_inv(3, 200, &ctx).unwrap(), &ctx)
            .unwrap()
            .mul_u64(4, &ctx)
            .unwrap();
        let pi = reference_pi(&ctx).unwrap();
        assert!(s.sub(&pi, &ctx).unwrap().abs() < Real::pow2(-185));
    }
}
