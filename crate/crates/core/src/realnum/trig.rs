use core::fmt;

use super::{consts, reference_pi, PrecisionContext, Real, RM};
use crate::error::{Error, Result};

/// The trigonometric functions exposed by the facade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigFn {
    /// Sine.
    Sin,
    /// Cosine.
    Cos,
    /// Tangent.
    Tan,
}

impl fmt::Display for TrigFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sin => "sin",
            Self::Cos => "cos",
            Self::Tan => "tan",
        })
    }
}

/// Evaluate `sin`, `cos` or `tan` at `x`.
///
/// The backend runs at `work_bits + guard_bits` and the result is rounded
/// once to `work_bits`, which keeps it within 2 ulp of the true value.
/// `tan` refuses arguments within `2^−(work_bits/2)` of a pole.
pub fn trig(f: TrigFn, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    let p = g.work_bits();
    let mut cc = consts()?;
    let v = match f {
        TrigFn::Sin => x.0.sin(p, RM, &mut cc),
        TrigFn::Cos => x.0.cos(p, RM, &mut cc),
        TrigFn::Tan => {
            check_pole(x, ctx)?;
            x.0.tan(p, RM, &mut cc)
        }
    };
    Real::checked(v, "trig")?.round_to(ctx)
}

fn check_pole(x: &Real, ctx: &PrecisionContext) -> Result<()> {
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let half_pi = pi.div_u64(2, &g)?;
    let shifted = x.sub(&half_pi, &g)?;
    let k = shifted.div(&pi, &g)?.round_integer()?;
    let dist = shifted.sub(&k.mul(&pi, &g)?, &g)?.abs();
    if dist < Real::pow2(-((ctx.work_bits() / 2) as i64)) {
        return Err(Error::TangentPole);
    }
    Ok(())
}
