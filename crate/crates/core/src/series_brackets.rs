//! Series enclosures and the certifier for the relative-error theorem.
//!
//! The three elementary brackets, all for `x ≥ 0`:
//!
//! ```text
//! S₇(x)               ≤ sin x  ≤ S₇(x) + x⁹/9!
//! T₉(x)               ≤ tan x  ≤ T₉(x) + x¹¹/85        (0 ≤ x ≤ π/32)
//! S₉(2x) − (2x)¹¹/11! ≤ sin 2x ≤ S₉(2x)
//! ```
//!
//! `Sₖ` is the alternating Taylor partial sum through degree `k` and `T₉` the
//! tangent series through degree 9. The `x¹¹/85` term comes from the
//! Lagrange remainder: the eleventh derivative of `tan` is increasing on
//! `[0, π/32]` and `11!/R(π/32) ≈ 85.07 > 85`.
//!
//! Composing them with exact rational coefficients gives polynomial bounds on
//! `f(x)/π − 1` whose lowest term is `x⁶/105`. Every comparison made while
//! certifying is strict with a margin of at least 4 ulp on both ends, see
//! [`Bracket::encloses_with_slack`].

use alloc::vec::Vec;

use num_traits::Zero;

use crate::approximants::{ch_approx, f_eval};
use crate::error::{Error, Result};
use crate::polygon::check_sides;
use crate::poly::{q, ratio_to_real, RationalPoly, Q};
use crate::realnum::{reference_pi, trig, PrecisionContext, Real, TrigFn};

/// A closed interval `[lower, upper]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    lower: Real,
    upper: Real,
}

impl Bracket {
    /// `[lower, upper]`; errors if `lower > upper`.
    pub fn new(lower: Real, upper: Real) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvertedBracket);
        }
        Ok(Self { lower, upper })
    }

    /// Lower end.
    pub fn lower(&self) -> &Real {
        &self.lower
    }

    /// Upper end.
    pub fn upper(&self) -> &Real {
        &self.upper
    }

    /// `upper − lower`, exact.
    pub fn width(&self) -> Result<Real> {
        self.upper.sub_exact(&self.lower)
    }

    /// Widen both ends outward by `k` ulps of themselves.
    pub fn inflate(&self, k: u64, ctx: &PrecisionContext) -> Result<Self> {
        Ok(Self {
            lower: self.lower.sub_exact(&ctx.ulps(&self.lower, k))?,
            upper: self.upper.add_exact(&ctx.ulps(&self.upper, k))?,
        })
    }

    /// Strict containment of `v` with 4 ulps of `v` as evaluation slack.
    pub fn encloses(&self, v: &Real, ctx: &PrecisionContext) -> bool {
        self.encloses_with_slack(v, &ctx.ulps(v, 4), ctx)
    }

    /// `lower + 4 ulp(lower) + slack < v < upper − 4 ulp(upper) − slack`.
    ///
    /// `slack` bounds the error in `v` itself; the 4 ulps on each end
    /// account for the rounding of the bracket.
    pub fn encloses_with_slack(&self, v: &Real, slack: &Real, ctx: &PrecisionContext) -> bool {
        let Ok(b) = self.inflate(4, ctx) else {
            return false;
        };
        let lo = b.lower.add_exact(slack);
        let hi = b.upper.sub_exact(slack);
        matches!((lo, hi), (Ok(lo), Ok(hi)) if lo < *v && *v < hi)
    }
}

fn tan_series() -> RationalPoly {
    let mut p = RationalPoly::new(Vec::new());
    for (k, c) in [(1, q(1, 1)), (3, q(1, 3)), (5, q(2, 15)), (7, q(17, 315)), (9, q(62, 2835))] {
        p = p.add(&RationalPoly::monomial(c, k));
    }
    p
}

fn check_nonnegative(x: &Real) -> Result<()> {
    if x.is_negative() {
        return Err(Error::NegativeAngle);
    }
    Ok(())
}

/// Upper end of the lemma domain, `π/32` plus 4 ulps so that `π/32`
/// formed at any precision at or above `ctx` is accepted.
fn lemma_limit(ctx: &PrecisionContext) -> Result<Real> {
    let top = reference_pi(ctx)?.div_u64(32, ctx)?;
    top.add_exact(&ctx.ulps(&top, 4))
}

fn check_lemma_domain(x: &Real, ctx: &PrecisionContext) -> Result<()> {
    if x.is_negative() || *x > lemma_limit(ctx)? {
        return Err(Error::LemmaDomainExceeded);
    }
    Ok(())
}

fn eval(p: &RationalPoly, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    p.eval(x, &ctx.guarded())?.round_to(ctx)
}

fn monomial(c: Q, k: usize, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    x.powi(k, &g)?.mul(&ratio_to_real(c, &g)?, &g)?.round_to(ctx)
}

/// `[S₇(x), S₇(x) + x⁹/9!]`, containing `sin x` for `x ≥ 0`. The width is
/// the rounded `x⁹/9!` exactly.
pub fn sin_bracket(x: &Real, ctx: &PrecisionContext) -> Result<Bracket> {
    check_nonnegative(x)?;
    let lower = eval(&RationalPoly::sin_partial_sum(1, 4), x, ctx)?;
    let top = monomial(q(1, 362_880), 9, x, ctx)?;
    let upper = lower.add_exact(&top)?;
    Bracket::new(lower, upper)
}

/// `[T₉(x), T₉(x) + x¹¹/85]`, containing `tan x` for `0 ≤ x ≤ π/32`.
pub fn tan_bracket(x: &Real, ctx: &PrecisionContext) -> Result<Bracket> {
    check_lemma_domain(x, ctx)?;
    let lower = eval(&tan_series(), x, ctx)?;
    let top = monomial(q(1, 85), 11, x, ctx)?;
    let upper = lower.add_exact(&top)?;
    Bracket::new(lower, upper)
}

/// `[S₉(2x) − (2x)¹¹/11!, S₉(2x)]`, containing `sin 2x` for `x ≥ 0`.
pub fn sin2x_bracket(x: &Real, ctx: &PrecisionContext) -> Result<Bracket> {
    check_nonnegative(x)?;
    let upper = eval(&RationalPoly::sin_partial_sum(2, 5), x, ctx)?;
    let top = monomial(q(2048, 39_916_800), 11, x, ctx)?;
    let lower = upper.sub_exact(&top)?;
    Bracket::new(lower, upper)
}

/// The eleventh derivative of `tan` at `t`, written in `T = tan t`:
/// `256(T² + 1)(155925T¹⁰ + 467775T⁸ + 509355T⁶ + 238425T⁴ + 42306T² + 1382)`.
pub fn tan_deriv11(t: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_lemma_domain(t, ctx)?;
    let g = ctx.guarded();
    let tan = trig(TrigFn::Tan, t, &g)?;
    let t2 = tan.mul(&tan, &g)?;
    let mut acc = Real::zero();
    for c in [155_925u64, 467_775, 509_355, 238_425, 42_306, 1382] {
        acc = acc.mul(&t2, &g)?.add(&Real::from_u64(c), &g)?;
    }
    acc.mul(&t2.add(&Real::one(), &g)?, &g)?
        .mul_u64(256, &g)?
        .round_to(ctx)
}

/// `11!/R(π/32)`, the constant that must exceed 85 for [`tan_bracket`].
pub fn tan_remainder_constant(ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    let r = tan_deriv11(&reference_pi(ctx)?.div_u64(32, ctx)?, &g)?;
    Real::from_u64(39_916_800).div(&r, &g)?.round_to(ctx)
}

/// The composed bound polynomials on `f(x)/π − 1`, lower then upper.
fn relerr_polynomials() -> (RationalPoly, RationalPoly) {
    let sin_lo = RationalPoly::sin_partial_sum(1, 4);
    let sin_hi = RationalPoly::sin_partial_sum(1, 5);
    let tan_lo = tan_series();
    let tan_hi = tan_lo.add(&RationalPoly::monomial(q(1, 85), 11));
    let s2_hi = RationalPoly::sin_partial_sum(2, 5);
    let s2_lo = RationalPoly::sin_partial_sum(2, 6);
    let thirty_x = RationalPoly::monomial(q(30, 1), 1);

    let compose = |s: &RationalPoly, t: &RationalPoly, s2: &RationalPoly| {
        s.scale(q(32, 1))
            .add(&t.scale(q(4, 1)))
            .sub(&s2.scale(q(3, 1)))
            .sub(&thirty_x)
            .shift_down(1)
            .expect("no constant term")
            .scale(q(1, 30))
    };
    let pair = (compose(&sin_lo, &tan_lo, &s2_hi), compose(&sin_hi, &tan_hi, &s2_lo));
    debug_assert_eq!(pair.0.valuation(), Some(6));
    debug_assert_eq!(pair.1.valuation(), Some(6));
    pair
}

/// Nonzero coefficients `(degree, numerator, denominator)` of the lower and
/// upper bound polynomials on `f(x)/π − 1`.
#[allow(clippy::type_complexity)]
pub fn relerr_polynomial_coefficients() -> (Vec<(usize, i128, i128)>, Vec<(usize, i128, i128)>) {
    let list = |p: &RationalPoly| {
        (0..=p.degree())
            .map(|k| (k, p.coeff(k)))
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, *c.numer(), *c.denom()))
            .collect()
    };
    let (lo, hi) = relerr_polynomials();
    (list(&lo), list(&hi))
}

/// Bracket on `f(x)/π − 1` for `0 < x ≤ π/32`.
pub fn relerr_bracket(x: &Real, ctx: &PrecisionContext) -> Result<Bracket> {
    if !x.is_positive() {
        return Err(Error::LemmaDomainExceeded);
    }
    check_lemma_domain(x, ctx)?;
    let (lo, hi) = relerr_polynomials();
    Bracket::new(eval(&lo, x, ctx)?, eval(&hi, x, ctx)?)
}

/// The two degree-10 polynomials as they appear in print, evaluated at `x`
/// as `(claimed lower, claimed upper)`. They do not enclose `f(x)/π − 1`.
pub fn printed_proof_polynomials(x: &Real, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let base = RationalPoly::monomial(q(1, 105), 6).add(&RationalPoly::monomial(q(1, 360), 8));
    let lo = base.add(&RationalPoly::monomial(q(2776, 2_338_875), 10));
    let hi = base.add(&RationalPoly::monomial(q(10_531, 26_507_250), 10));
    Ok((eval(&lo, x, ctx)?, eval(&hi, x, ctx)?))
}

/// `x⁶ / u(x)` at `x = π/32`, where `u` is the upper bound polynomial. Since
/// `u(x)/x⁶` increases with `x`, the theorem holds with any constant below
/// this value.
pub fn certified_upper_constant(ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    let x = reference_pi(&g)?.div_u64(32, &g)?;
    let (_, hi) = relerr_polynomials();
    let reduced = hi.shift_down(6).ok_or(Error::NonFinite("relerr valuation"))?;
    Real::one().div(&reduced.eval(&x, &g)?, &g)?.round_to(ctx)
}

fn check_hypothesis(n: u64) -> Result<()> {
    check_sides(n)?;
    if n < 32 {
        return Err(Error::TheoremHypothesis(n));
    }
    Ok(())
}

/// `((π/n)⁶/105, (π/n)⁶·10/1047)` for `n ≥ 32`.
pub fn theorem_bounds(n: u64, ctx: &PrecisionContext) -> Result<Bracket> {
    check_hypothesis(n)?;
    let g = ctx.guarded();
    let x6 = reference_pi(&g)?.div_u64(n, &g)?.powi(6, &g)?;
    Bracket::new(
        x6.div_u64(105, &g)?.round_to(ctx)?,
        x6.mul_u64(10, &g)?.div_u64(1047, &g)?.round_to(ctx)?,
    )
}

/// Outcome of checking the theorem at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    /// Side count.
    pub n: u64,
    /// `(Π(n) − π)/π`.
    pub rel_error: Real,
    /// `(π/n)⁶/105`.
    pub lower_bound: Real,
    /// `(π/n)⁶/104.7`.
    pub upper_bound: Real,
    /// `rel_error − lower_bound`.
    pub margin_lower: Real,
    /// `upper_bound − rel_error`.
    pub margin_upper: Real,
    /// Strict containment with the certification margins.
    pub passed: bool,
}

fn rel_error(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    ch_approx(n, ctx)?.sub(&pi, &g)?.div(&pi, &g)?.round_to(ctx)
}

/// Check `(π/n)⁶/105 < (Π(n) − π)/π < (π/n)⁶/104.7` for every `n`. All side
/// counts are validated before any work is done.
pub fn certify_theorem(n_values: &[u64], ctx: &PrecisionContext) -> Result<Vec<BoundCheck>> {
    for &n in n_values {
        check_hypothesis(n)?;
    }
    let slack = ctx.ulps(&reference_pi(ctx)?, 4);
    n_values
        .iter()
        .map(|&n| {
            let rel = rel_error(n, ctx)?;
            let b = theorem_bounds(n, ctx)?;
            Ok(BoundCheck {
                n,
                margin_lower: rel.sub_exact(b.lower())?,
                margin_upper: b.upper().sub_exact(&rel)?,
                passed: b.encloses_with_slack(&rel, &slack, ctx),
                lower_bound: b.lower,
                upper_bound: b.upper,
                rel_error: rel,
            })
        })
        .collect()
}

/// `105 · rel_error(n) · (n/π)⁶`, which tends to 1 from above.
pub fn best_constant_probe(n: u64, ctx: &PrecisionContext) -> Result<Real> {
    check_hypothesis(n)?;
    let g = ctx.guarded();
    let scale = Real::from_u64(n).div(&reference_pi(&g)?, &g)?.powi(6, &g)?;
    rel_error(n, ctx)?
        .mul(&scale, &g)?
        .mul_u64(105, &g)?
        .round_to(ctx)
}

/// `points` values from `π/32` down to `π/32 · 2⁻¹²`, equally spaced in
/// `log x`. The first point is `π/32` rounded once.
pub fn geometric_grid(points: usize, ctx: &PrecisionContext) -> Result<Vec<Real>> {
    let top = reference_pi(ctx)?.div_u64(32, ctx)?;
    if points < 2 {
        return Ok(core::iter::repeat_n(top, points).collect());
    }
    let g = ctx.guarded();
    let step = Real::from_u64(2)
        .ln(&g)?
        .mul_u64(12, &g)?
        .div_u64(points as u64 - 1, &g)?;
    (0..points)
        .map(|k| {
            if k == 0 {
                return Ok(top.clone());
            }
            let factor = step.mul_u64(k as u64, &g)?.neg().exp(&g)?;
            top.mul(&factor, &g)?.round_to(ctx)
        })
        .collect()
}

/// Lemma and composition checks at one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCheck {
    /// The argument.
    pub x: Real,
    /// `sin x` inside [`sin_bracket`].
    pub sin_ok: bool,
    /// `tan x` inside [`tan_bracket`].
    pub tan_ok: bool,
    /// `sin 2x` inside [`sin2x_bracket`].
    pub sin2x_ok: bool,
    /// `f(x)/π − 1` inside [`relerr_bracket`].
    pub relerr_ok: bool,
}

impl GridCheck {
    /// All four checks hold.
    pub fn passed(&self) -> bool {
        self.sin_ok && self.tan_ok && self.sin2x_ok && self.relerr_ok
    }
}

/// Compare the trigonometric facade with every bracket at each `x`.
pub fn certify_brackets(grid: &[Real], ctx: &PrecisionContext) -> Result<Vec<GridCheck>> {
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let one_slack = ctx.ulps(&Real::one(), 4);
    grid.iter()
        .map(|x| {
            let sin = trig(TrigFn::Sin, x, ctx)?;
            let tan = trig(TrigFn::Tan, x, ctx)?;
            let sin2 = trig(TrigFn::Sin, &x.mul_u64(2, &g)?, ctx)?;
            let rel = f_eval(x, ctx)?.div(&pi, &g)?.sub(&Real::one(), &g)?.round_to(ctx)?;
            Ok(GridCheck {
                x: x.clone(),
                sin_ok: sin_bracket(x, ctx)?.encloses(&sin, ctx),
                tan_ok: tan_bracket(x, ctx)?.encloses(&tan, ctx),
                sin2x_ok: sin2x_bracket(x, ctx)?.encloses(&sin2, ctx),
                relerr_ok: relerr_bracket(x, ctx)?.encloses_with_slack(&rel, &one_slack, ctx),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn pi_over(n: u64) -> Real {
        let c = ctx();
        reference_pi(&c).unwrap().div_u64(n, &c).unwrap()
    }

    #[test]
    fn bracket_rejects_inversion() {
        assert_eq!(
            Bracket::new(Real::one(), Real::zero()).unwrap_err(),
            Error::InvertedBracket
        );
    }

    #[test]
    fn zero_brackets() {
        let c = ctx();
        for b in [
            sin_bracket(&Real::zero(), &c).unwrap(),
            tan_bracket(&Real::zero(), &c).unwrap(),
            sin2x_bracket(&Real::zero(), &c).unwrap(),
        ] {
            assert!(b.lower().is_zero() && b.upper().is_zero());
        }
    }

    #[test]
    fn negative_and_out_of_domain() {
        let c = ctx();
        let neg = Real::from_i64(-1);
        assert_eq!(sin_bracket(&neg, &c).unwrap_err(), Error::NegativeAngle);
        assert_eq!(sin2x_bracket(&neg, &c).unwrap_err(), Error::NegativeAngle);
        assert_eq!(tan_bracket(&pi_over(31), &c).unwrap_err(), Error::LemmaDomainExceeded);
        assert!(tan_bracket(&neg, &c).unwrap_err().to_string().contains("lemma domain exceeded"));
        assert_eq!(relerr_bracket(&Real::zero(), &c).unwrap_err(), Error::LemmaDomainExceeded);
        assert_eq!(tan_deriv11(&pi_over(16), &c).unwrap_err(), Error::LemmaDomainExceeded);
    }

    #[test]
    fn sin_bracket_width_is_exact() {
        let c = ctx();
        let x = pi_over(32);
        let b = sin_bracket(&x, &c).unwrap();
        assert_eq!(b.width().unwrap(), monomial(q(1, 362_880), 9, &x, &c).unwrap());
        assert!(b.encloses(&trig(TrigFn::Sin, &x, &c).unwrap(), &c));
        let one = Real::one();
        assert!(sin_bracket(&one, &c).unwrap().encloses(&trig(TrigFn::Sin, &one, &c).unwrap(), &c));
    }

    #[test]
    fn tan_and_sin2x_examples() {
        let c = ctx();
        let x = pi_over(32);
        assert!(tan_bracket(&x, &c).unwrap().encloses(&trig(TrigFn::Tan, &x, &c).unwrap(), &c));
        let sin16 = trig(TrigFn::Sin, &pi_over(16), &c).unwrap();
        assert!(sin2x_bracket(&x, &c).unwrap().encloses(&sin16, &c));

        let y = pi_over(64);
        let b = tan_bracket(&y, &c).unwrap();
        assert_eq!(b.width().unwrap(), monomial(q(1, 85), 11, &y, &c).unwrap());
        assert!(b.encloses(&trig(TrigFn::Tan, &y, &c).unwrap(), &c));

        let z = pi_over(96);
        let b = sin2x_bracket(&z, &c).unwrap();
        assert_eq!(b.width().unwrap(), monomial(q(2048, 39_916_800), 11, &z, &c).unwrap());
        assert!(b.encloses(&trig(TrigFn::Sin, &pi_over(48), &c).unwrap(), &c));
    }

    #[test]
    fn remainder_values() {
        let c = ctx();
        assert_eq!(tan_deriv11(&Real::zero(), &c).unwrap(), Real::from_u64(353_792));
        let r = tan_deriv11(&pi_over(32), &c).unwrap().to_f64();
        assert!((r - 469_223.994_118_912).abs() < 1e-6);
        let mid = tan_deriv11(&pi_over(64), &c).unwrap();
        assert!(mid > Real::from_u64(353_792) && mid < Real::from_u64(469_224));
        let k = tan_remainder_constant(&c).unwrap().to_f64();
        assert!(k > 85.0 && (k - 85.0698).abs() < 1e-3);
    }

    #[test]
    fn composed_coefficients() {
        let (lo, hi) = relerr_polynomial_coefficients();
        assert_eq!(lo, [(6, 1, 105), (8, 118, 42_525)]);
        assert_eq!(hi, [(6, 1, 105), (8, 1, 360), (10, 20_858, 13_253_625)]);
    }

    #[test]
    fn relerr_examples() {
        let c = ctx();
        let x = pi_over(32);
        let f = f_eval(&x, &c).unwrap();
        let rel = f.div(&reference_pi(&c).unwrap(), &c).unwrap().sub(&Real::one(), &c).unwrap();
        assert!(relerr_bracket(&x, &c).unwrap().encloses_with_slack(&rel, &c.ulps(&Real::one(), 4), &c));

        let y = pi_over(96);
        let base = y.powi(6, &c).unwrap().div_u64(105, &c).unwrap();
        assert!(*relerr_bracket(&y, &c).unwrap().lower() > base);

        let z = pi_over(1024);
        let base = z.powi(6, &c).unwrap().div_u64(105, &c).unwrap();
        let b = relerr_bracket(&z, &c).unwrap();
        for end in [b.lower(), b.upper()] {
            let r = end.sub(&base, &c).unwrap().div(&base, &c).unwrap().to_f64();
            assert!(r.abs() < 1e-3);
        }
    }

    #[test]
    fn printed_polynomials_do_not_enclose() {
        let c = ctx();
        let x = pi_over(1024);
        let (lo, hi) = printed_proof_polynomials(&x, &c).unwrap();
        assert!(lo > hi);
    }

    #[test]
    fn upper_constant_exceeds_printed_one() {
        let k = certified_upper_constant(&ctx()).unwrap().to_f64();
        assert!(k > 104.7 && (k - 104.704_05).abs() < 1e-4);
    }

    #[test]
    fn theorem_bound_examples() {
        let c = ctx();
        let b = theorem_bounds(32, &c).unwrap();
        assert!((b.lower().to_f64() - 8.5e-9).abs() < 0.1e-9);
        let b = theorem_bounds(96, &c).unwrap();
        let r = b.lower().div(b.upper(), &c).unwrap().to_f64();
        assert!((r - 104.7 / 105.0).abs() < 1e-12);
        assert_eq!(theorem_bounds(31, &c).unwrap_err(), Error::TheoremHypothesis(31));
    }

    #[test]
    fn certify_examples() {
        let c = ctx();
        let checks = certify_theorem(&[32, 48, 96, 1024, 1_000_000], &c).unwrap();
        assert!(checks.iter().all(|b| b.passed));
        assert!(certify_theorem(&[], &c).unwrap().is_empty());
        assert_eq!(certify_theorem(&[64, 31], &c).unwrap_err(), Error::TheoremHypothesis(31));

        let x = pi_over(32).to_f64();
        let predicted = x.powi(6) / 105.0 * (1.0 + 7.0 / 24.0 * x * x);
        let got = checks[0].rel_error.to_f64();
        assert!(((got - predicted) / predicted).abs() < 3e-3);
    }

    #[test]
    fn probe_examples() {
        let c = ctx();
        let p32 = best_constant_probe(32, &c).unwrap();
        let p64 = best_constant_probe(64, &c).unwrap();
        let pm = best_constant_probe(1_000_000, &c).unwrap();
        assert!(p32 > Real::one());
        assert!(p32 > p64 && p64 > pm);
        assert!((pm.to_f64() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn grid_shape() {
        let c = ctx();
        let g = geometric_grid(64, &c).unwrap();
        assert_eq!(g.len(), 64);
        assert_eq!(g[0], pi_over(32));
        let last = g[63].div(&pi_over(32), &c).unwrap().to_f64();
        assert!((last - 2f64.powi(-12)).abs() < 1e-15);
        assert!(g.windows(2).all(|w| w[0] > w[1]));
        assert!(geometric_grid(0, &c).unwrap().is_empty());
    }

    #[test]
    fn brackets_hold_on_small_grid() {
        let c = ctx();
        let checks = certify_brackets(&geometric_grid(8, &c).unwrap(), &c).unwrap();
        assert!(checks.iter().all(GridCheck::passed));
    }
}
