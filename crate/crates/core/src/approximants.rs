//! The approximation formulas for π and for `sin x / x`.
//!
//! Polygon combinations (all with `θ = π/n`, quantities from
//! [`crate::polygon`]):
//!
//! * Chakrabarti–Hudson `Π(n) = (n/30)(32 sin θ + 4 tan θ − 3 sin 2θ)`,
//!   equivalently `f(θ)` with `f(x) = π/(30x)·(32 sin x + 4 tan x − 3 sin 2x)`.
//! * The literal perimeter/area form `(32π_n + 4Π_2n − 6a_n)/30`.
//! * Heron's lower bound `(4π_2n − π_n)/3`.
//! * Snell–Huygens upper bound `(2π_n + Π_n)/3`.
//! * The area combination `(a_n + 2A_n)/3`, whose error against π is 8/3
//!   times the Snell–Huygens error to leading order.
//!
//! Rational functions of `cos x` approximating `sin x / x`:
//!
//! | id            | formula                                   |
//! |---------------|-------------------------------------------|
//! | `CF1`         | `(2 + c)/3`                               |
//! | `CF2`         | `(9 + 6c)/(14 + c)`                       |
//! | `CF3`         | `(51 + 48c + 6c²)/(80 + 25c)`             |
//! | `CH_RATIONAL` | `15c/(2 + 16c − 3c²)`                     |
//!
//! The first three are convergents of the continued fraction
//! `1 − (2/3)s/(1 − (2/15)s/(1 − (12/35)s/(1 − (12/63)s/…)))` with
//! `s = sin²(x/2)`. Error constants are reported as `approx − truth`.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::error_metrics::{self, AccuracyReport};
use crate::polygon::{check_sides, quantities};
use crate::realnum::{reference_pi, trig, PrecisionContext, Real, TrigFn};

/// Catalog of the implemented approximants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ApproximantId {
    /// Chakrabarti–Hudson `Π(n)`.
    Ch,
    /// Heron's lower bound.
    Heron,
    /// Snell–Huygens upper bound.
    SnellHuygens,
    /// Area combination.
    AreaCombo,
    /// First convergent of `sin x / x` (Snell).
    Cf1,
    /// Second convergent (Newton).
    Cf2,
    /// Third convergent.
    Cf3,
    /// Rational form of the Chakrabarti–Hudson approximation.
    ChRational,
}

impl ApproximantId {
    /// Every id, in catalog order.
    pub const ALL: [Self; 8] = [
        Self::Ch,
        Self::Heron,
        Self::SnellHuygens,
        Self::AreaCombo,
        Self::Cf1,
        Self::Cf2,
        Self::Cf3,
        Self::ChRational,
    ];

    /// The ids that approximate `sin x / x`.
    pub const SINC: [Self; 4] = [Self::Cf1, Self::Cf2, Self::Cf3, Self::ChRational];

    /// Upper-case tag used in tables.
    pub fn tag(self) -> &'static str {
        match self {
            Self::Ch => "CH",
            Self::Heron => "HERON",
            Self::SnellHuygens => "SNELL_HUYGENS",
            Self::AreaCombo => "AREA_COMBO",
            Self::Cf1 => "CF1",
            Self::Cf2 => "CF2",
            Self::Cf3 => "CF3",
            Self::ChRational => "CH_RATIONAL",
        }
    }

    /// Whether [`sinc_approx`] accepts this id.
    pub fn is_sinc(self) -> bool {
        Self::SINC.contains(&self)
    }
}

impl fmt::Display for ApproximantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ApproximantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or(Error::Parse)
    }
}

/// One approximant of π evaluated at one side count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport {
    /// Which approximant.
    pub id: ApproximantId,
    /// The side count it was evaluated at.
    pub argument: Real,
    /// Accuracy of the value against the reference π.
    pub accuracy: AccuracyReport,
}

/// `f(x) = π/(30x)·(32 sin x + 4 tan x − 3 sin 2x)` on `[0, π/2)`, with the
/// removable singularity filled in as `f(0) = π`.
pub fn f_eval(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if x.is_negative() {
        return Err(Error::NegativeAngle);
    }
    if x.is_zero() {
        return reference_pi(ctx);
    }
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let pole_gap = Real::pow2(-(ctx.work_bits() as i64 / 2));
    if x.add(&pole_gap, &g)? >= pi.div_u64(2, &g)? {
        return Err(Error::OutsideTanDomain);
    }
    let sin = trig(TrigFn::Sin, x, &g)?;
    let tan = trig(TrigFn::Tan, x, &g)?;
    let sin2 = trig(TrigFn::Sin, &x.mul_u64(2, &g)?, &g)?;
    let bracket = sin
        .mul_u64(32, &g)?
        .add(&tan.mul_u64(4, &g)?, &g)?
        .sub(&sin2.mul_u64(3, &g)?, &g)?;
    pi.mul(&bracket, &g)?
        .div(&x.mul_u64(30, &g)?, &g)?
        .round_to(ctx)
}

/// `Π(n) = f(π/n)`, with `π/n` formed at the working precision so that
/// `f_eval(π/n)` reproduces it bit for bit.
pub fn ch_approx(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    check_sides(n)?;
    let x = reference_pi(ctx)?.div_u64(n, ctx)?;
    f_eval(&x, ctx)
}

/// `(32π_n + 4Π_2n − 6a_n)/30` evaluated literally from polygon quantities.
///
/// This is not the same number as [`ch_approx`]: its error is `−πx²/30`
/// to leading order.
pub fn ch_combination(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    check_sides(n)?;
    let g = ctx.guarded();
    let q = quantities(n, ctx)?;
    let q2 = quantities(2 * n, ctx)?;
    q.inscribed_perimeter
        .mul_u64(32, &g)?
        .add(&q2.circumscribed_perimeter.mul_u64(4, &g)?, &g)?
        .sub(&q.inscribed_area.mul_u64(6, &g)?, &g)?
        .div_u64(30, &g)?
        .round_to(ctx)
}

/// Heron's lower bound `(4π_2n − π_n)/3`.
pub fn heron_lower(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    check_sides(n)?;
    let g = ctx.guarded();
    let q = quantities(n, ctx)?;
    let q2 = quantities(2 * n, ctx)?;
    q2.inscribed_perimeter
        .mul_u64(4, &g)?
        .sub(&q.inscribed_perimeter, &g)?
        .div_u64(3, &g)?
        .round_to(ctx)
}

/// Snell–Huygens upper bound `(2π_n + Π_n)/3`.
pub fn snell_huygens(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    let q = quantities(n, ctx)?;
    let g = ctx.guarded();
    q.inscribed_perimeter
        .mul_u64(2, &g)?
        .add(&q.circumscribed_perimeter, &g)?
        .div_u64(3, &g)?
        .round_to(ctx)
}

/// Area combination `(a_n + 2A_n)/3`.
///
/// With these weights the `x²` terms of the two area errors cancel and the
/// remaining error is `2πx⁴/15`, which is what makes [`ratio_limit`] tend to
/// 3/8. The swapped weighting is [`area_combination_printed`].
pub fn area_combination(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    weighted_areas(n, 1, 2, ctx)
}

/// `(2a_n + A_n)/3`, the weighting as commonly printed. Its error is
/// `−πx²/3` to leading order, so it converges like the raw polygons.
pub fn area_combination_printed(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    weighted_areas(n, 2, 1, ctx)
}

fn weighted_areas(n: u64, w_in: u64, w_out: u64, ctx: &PrecisionContext) -> Result<Real> {
    let q = quantities(n, ctx)?;
    let g = ctx.guarded();
    q.inscribed_area
        .mul_u64(w_in, &g)?
        .add(&q.circumscribed_area.mul_u64(w_out, &g)?, &g)?
        .div_u64(3, &g)?
        .round_to(ctx)
}

/// `(snell_huygens(n) − π)/(area_combination(n) − π)`, which tends to 3/8.
pub fn ratio_limit(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let num = snell_huygens(n, ctx)?.sub(&pi, &g)?;
    let den = area_combination(n, ctx)?.sub(&pi, &g)?;
    if den.abs() < Real::pow2(-(ctx.work_bits() as i64 - 8)) {
        return Err(Error::RatioIndeterminate);
    }
    num.div(&den, &g)?.round_to(ctx)
}

fn check_sinc_domain(x: &Real, ctx: &PrecisionContext) -> Result<()> {
    let quarter = reference_pi(ctx)?.div_u64(4, ctx)?;
    if x.is_negative() || *x > quarter {
        return Err(Error::SincDomain);
    }
    Ok(())
}

/// `sin x / x`, with value 1 at 0.
pub fn sinc(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if x.is_zero() {
        return Ok(Real::one());
    }
    let g = ctx.guarded();
    trig(TrigFn::Sin, x, &g)?.div(x, &g)?.round_to(ctx)
}

/// Rational-in-`cos x` approximation of `sin x / x` for `x ∈ [0, π/4]`.
pub fn sinc_approx(id: ApproximantId, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if !id.is_sinc() {
        return Err(Error::UnsupportedApproximant(id));
    }
    check_sinc_domain(x, ctx)?;
    let g = ctx.guarded();
    let c = trig(TrigFn::Cos, x, &g)?;
    let c2 = c.mul(&c, &g)?;
    let lin = |a: u64, b: u64| -> Result<Real> { Real::from_u64(a).add(&c.mul_u64(b, &g)?, &g) };
    let (num, den) = match id {
        ApproximantId::Cf1 => (lin(2, 1)?, Real::from_u64(3)),
        ApproximantId::Cf2 => (lin(9, 6)?, lin(14, 1)?),
        ApproximantId::Cf3 => (lin(51, 48)?.add(&c2.mul_u64(6, &g)?, &g)?, lin(80, 25)?),
        ApproximantId::ChRational => (
            c.mul_u64(15, &g)?,
            lin(2, 16)?.sub(&c2.mul_u64(3, &g)?, &g)?,
        ),
        _ => unreachable!("checked by is_sinc"),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    num.div(&den, &g)?.round_to(ctx)
}

/// Partial numerators of the continued fraction, as `(num, den)`
/// coefficients of `sin²(x/2)`. Only these four are known.
pub const CF_PARTIAL_NUMERATORS: [(u64, u64); 4] = [(2, 3), (2, 15), (12, 35), (12, 63)];

/// The continued fraction for `sin x / x` cut after `depth` partial
/// numerators (1 ≤ depth ≤ 4), evaluated from the bottom up.
pub fn cf_truncation(depth: usize, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if depth == 0 || depth > CF_PARTIAL_NUMERATORS.len() {
        return Err(Error::ContinuedFractionDepth(depth));
    }
    check_sinc_domain(x, ctx)?;
    let g = ctx.guarded();
    let c = trig(TrigFn::Cos, x, &g)?;
    let s = Real::one().sub(&c, &g)?.div_u64(2, &g)?;
    let mut tail = Real::one();
    for &(a, b) in CF_PARTIAL_NUMERATORS[..depth].iter().rev() {
        let term = s.mul_u64(a, &g)?.div_u64(b, &g)?;
        tail = Real::one().sub(&term.div(&tail, &g)?, &g)?;
    }
    tail.round_to(ctx)
}

/// Leading error term of a `sin x / x` approximant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorConstant {
    /// Power of `x` of the leading term.
    pub order: u32,
    /// Coefficient of `x^order` in `approx − sin x / x`.
    pub constant: Real,
}

const EXTRAPOLATION_LEVELS: usize = 4;

/// Estimate `lim_{x→0} (approx(x) − sin x / x) / x^order` from the dyadic
/// points `x = 2^−k`, `k = 8…16`.
///
/// The order is read off the decay between consecutive points; the limit
/// is then extrapolated with a Richardson table in powers of `x²`.
pub fn sinc_error_constant(id: ApproximantId, ctx: &PrecisionContext) -> Result<ErrorConstant> {
    if !id.is_sinc() {
        return Err(Error::UnsupportedApproximant(id));
    }
    let g = ctx.guarded();
    let fail = || Error::ExtrapolationFailed(id);
    let points: alloc::vec::Vec<(Real, Real)> = (8..=16)
        .map(|k| {
            let x = Real::pow2(-k);
            let d = sinc_approx(id, &x, &g)?.sub(&sinc(&x, &g)?, &g)?;
            Ok((x, d))
        })
        .collect::<Result<_>>()?;

    let order_at = |i: usize| -> Option<u32> {
        let (a, b) = (&points[i].1, &points[i + 1].1);
        if a.is_zero() || b.is_zero() {
            return None;
        }
        let r = a.div(b, &g).ok()?;
        nearest_log2(&r)
    };
    let order = order_at(0).ok_or_else(fail)?;
    if order < 2 || order % 2 != 0 || order_at(points.len() - 2) != Some(order) {
        return Err(fail());
    }

    let mut level: alloc::vec::Vec<Real> = points
        .iter()
        .map(|(x, d)| d.div(&x.powi(order as usize, &g)?, &g))
        .collect::<Result<_>>()?;
    let mut previous = level.last().cloned().ok_or_else(fail)?;
    for j in 1..=EXTRAPOLATION_LEVELS {
        let w = Real::from_u64(1 << (2 * j));
        let wm1 = Real::from_u64((1 << (2 * j)) - 1);
        previous = level.last().cloned().ok_or_else(fail)?;
        level = level
            .windows(2)
            .map(|p| p[1].mul(&w, &g)?.sub(&p[0], &g)?.div(&wm1, &g))
            .collect::<Result<_>>()?;
    }
    let estimate = level.last().cloned().ok_or_else(fail)?;
    // the last two table levels must agree to far better than the
    // first neglected term (~x⁸ relative at x = 2^-16)
    let settle = estimate.sub(&previous, &g)?.abs();
    if estimate.is_zero() || settle > estimate.abs().mul(&Real::pow2(-60), &g)? {
        return Err(fail());
    }
    Ok(ErrorConstant {
        order,
        constant: estimate.round_to(ctx)?,
    })
}

/// Nearest integer to `log2 |r|`, if it is non-negative.
fn nearest_log2(r: &Real) -> Option<u32> {
    let r = r.abs();
    let e = r.binary_exponent()?; // r ∈ [2^(e-1), 2^e)
    let floor = e - 1;
    // round up when r ≥ 2^(floor + 1/2), i.e. r² ≥ 2^(2·floor + 1)
    let sq = r.mul_exact(&r).ok()?;
    let m = if sq >= Real::pow2(2 * i64::from(floor) + 1) {
        floor + 1
    } else {
        floor
    };
    u32::try_from(m).ok()
}

/// Value of approximant `id` as an approximation of π at side count `n`.
///
/// The `sin x / x` approximants `r` become `π_n / r(cos(π/n))`, which for
/// `CH_RATIONAL` is algebraically equal to [`ch_approx`].
pub fn evaluate(id: ApproximantId, n: u64, ctx: &PrecisionContext) -> Result<Real> {
    match id {
        ApproximantId::Ch => ch_approx(n, ctx),
        ApproximantId::Heron => heron_lower(n, ctx),
        ApproximantId::SnellHuygens => snell_huygens(n, ctx),
        ApproximantId::AreaCombo => area_combination(n, ctx),
        ApproximantId::Cf1 | ApproximantId::Cf2 | ApproximantId::Cf3 | ApproximantId::ChRational => {
            check_sides(n)?;
            let g = ctx.guarded();
            let x = reference_pi(&g)?.div_u64(n, &g)?;
            let r = sinc_approx(id, &x, &g)?;
            let inscribed = Real::from_u64(n).mul(&trig(TrigFn::Sin, &x, &g)?, &g)?;
            inscribed.div(&r, &g)?.round_to(ctx)
        }
    }
}

/// [`evaluate`] plus its accuracy metrics.
pub fn approx_report(id: ApproximantId, n: u64, ctx: &PrecisionContext) -> Result<ApproxReport> {
    let value = evaluate(id, n, ctx)?;
    let accuracy = error_metrics::report(&value, None, ctx)?;
    Ok(ApproxReport {
        id,
        argument: Real::from_u64(n),
        accuracy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn close(a: &Real, b: &Real, ulps: u64) -> bool {
        let c = ctx();
        a.sub(b, &c.guarded()).unwrap().abs() <= c.ulps(b, ulps)
    }

    #[test]
    fn f_at_zero_is_pi() {
        let c = ctx();
        assert_eq!(f_eval(&Real::zero(), &c).unwrap(), reference_pi(&c).unwrap());
    }

    #[test]
    fn f_domain_errors() {
        let c = ctx();
        let half = reference_pi(&c).unwrap().div_u64(2, &c).unwrap();
        assert_eq!(f_eval(&half, &c).unwrap_err(), Error::OutsideTanDomain);
        assert_eq!(f_eval(&Real::from_i64(-1), &c).unwrap_err(), Error::NegativeAngle);
        assert_eq!(f_eval(&Real::from_u64(2), &c).unwrap_err(), Error::OutsideTanDomain);
    }

    #[test]
    fn f_matches_ch_approx_bitwise() {
        let c = ctx();
        for n in [32u64, 96, 1000] {
            let x = reference_pi(&c).unwrap().div_u64(n, &c).unwrap();
            assert_eq!(f_eval(&x, &c).unwrap(), ch_approx(n, &c).unwrap());
        }
    }

    #[test]
    fn ch_at_hexagon_uses_exact_angles() {
        // (1/5)(16 + 4/√3 − 3√3/2)
        let c = ctx();
        let s3 = Real::from_u64(3).sqrt(&c).unwrap();
        let expected = Real::from_u64(16)
            .add(&Real::from_u64(4).div(&s3, &c).unwrap(), &c)
            .unwrap()
            .sub(&s3.mul_u64(3, &c).unwrap().div_u64(2, &c).unwrap(), &c)
            .unwrap()
            .div_u64(5, &c)
            .unwrap();
        assert!(close(&ch_approx(6, &c).unwrap(), &expected, 8));
    }

    #[test]
    fn ch_requires_three_sides() {
        assert_eq!(ch_approx(2, &ctx()).unwrap_err(), Error::DegeneratePolygon(2));
    }

    #[test]
    fn snell_huygens_hexagon() {
        // 2 + 2/√3
        let c = ctx();
        let expected = Real::from_u64(2)
            .add(&Real::from_u64(2).div(&Real::from_u64(3).sqrt(&c).unwrap(), &c).unwrap(), &c)
            .unwrap();
        let v = snell_huygens(6, &c).unwrap();
        assert!(close(&v, &expected, 8));
        assert!(v.to_scientific(5) == "3.1547e0");
    }

    #[test]
    fn area_combination_square() {
        // a_4 = 2, A_4 = 4
        let c = ctx();
        let printed = area_combination_printed(4, &c).unwrap();
        assert!(close(&printed, &Real::ratio(8, 3, &c).unwrap(), 8));
        let used = area_combination(4, &c).unwrap();
        assert!(close(&used, &Real::ratio(10, 3, &c).unwrap(), 8));
    }

    #[test]
    fn sinc_values_at_zero() {
        let c = ctx();
        for id in ApproximantId::SINC {
            assert_eq!(sinc_approx(id, &Real::zero(), &c).unwrap(), Real::one(), "{id}");
        }
    }

    #[test]
    fn sinc_rejects_bad_input() {
        let c = ctx();
        assert_eq!(
            sinc_approx(ApproximantId::Heron, &Real::zero(), &c).unwrap_err(),
            Error::UnsupportedApproximant(ApproximantId::Heron)
        );
        assert_eq!(
            sinc_approx(ApproximantId::Cf1, &Real::one(), &c).unwrap_err(),
            Error::SincDomain
        );
        assert!(sinc_error_constant(ApproximantId::Ch, &c).is_err());
    }

    #[test]
    fn cf_truncations_are_the_convergents() {
        let c = ctx();
        let x = Real::parse("0.3", &c).unwrap();
        for (depth, id) in [(1, ApproximantId::Cf1), (2, ApproximantId::Cf2), (3, ApproximantId::Cf3)] {
            let a = cf_truncation(depth, &x, &c).unwrap();
            let b = sinc_approx(id, &x, &c).unwrap();
            assert!(close(&a, &b, 4), "depth {depth}");
        }
        assert!(cf_truncation(0, &x, &c).is_err());
        assert!(cf_truncation(5, &x, &c).is_err());
    }

    #[test]
    fn nearest_log2_rounds() {
        assert_eq!(nearest_log2(&Real::from_u64(64)), Some(6));
        assert_eq!(nearest_log2(&Real::from_u64(90)), Some(6));
        assert_eq!(nearest_log2(&Real::from_u64(91)), Some(7));
        assert_eq!(nearest_log2(&Real::from_f64(0.25).unwrap()), None);
    }

    #[test]
    fn ratio_limit_needs_resolvable_denominator() {
        let c = make_low();
        assert_eq!(ratio_limit(1 << 16, &c).unwrap_err(), Error::RatioIndeterminate);
        assert!(Error::RatioIndeterminate.to_string().contains("ratio indeterminate"));
    }

    fn make_low() -> PrecisionContext {
        PrecisionContext::new(64).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for id in ApproximantId::ALL {
            assert_eq!(id.tag().parse::<ApproximantId>().unwrap(), id);
        }
    }
}
