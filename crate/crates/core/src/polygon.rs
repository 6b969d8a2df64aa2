//! Perimeters and areas of regular polygons.
//!
//! Normalisations: perimeters are taken in the circle of perimeter π
//! (radius 1/2), areas in the circle of area π (radius 1). With `θ = π/n`:
//!
//! | quantity | meaning                    | closed form      |
//! |----------|----------------------------|------------------|
//! | `π_n`    | inscribed perimeter        | `n sin θ`        |
//! | `Π_n`    | circumscribed perimeter    | `n tan θ`        |
//! | `a_n`    | inscribed area             | `(n/2) sin 2θ`   |
//! | `A_n`    | circumscribed area         | `n sin θ / cos θ`|
//!
//! `A_n` and `Π_n` are the same number; `A_n` is evaluated through sine and
//! cosine so that the identity checks the trigonometric facade.
//!
//! [`double`] implements the Archimedean recurrences
//! `Π_2n = 2 π_n Π_n / (π_n + Π_n)`, `π_2n = √(π_n Π_2n)` and is only used as
//! a cross-check of the closed forms.

use crate::error::{Error, Result};
use crate::realnum::{reference_pi, trig, PrecisionContext, Real, TrigFn};
use crate::series_brackets::Bracket;

/// Largest supported side count.
pub const MAX_SIDES: u64 = 1 << 40;

/// The four polygon quantities for one side count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonQuantities {
    /// Side count.
    pub n: u64,
    /// `π_n`, inscribed perimeter.
    pub inscribed_perimeter: Real,
    /// `Π_n`, circumscribed perimeter.
    pub circumscribed_perimeter: Real,
    /// `a_n`, inscribed area.
    pub inscribed_area: Real,
    /// `A_n`, circumscribed area.
    pub circumscribed_area: Real,
}

pub(crate) fn check_sides(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::DegeneratePolygon(n));
    }
    if n > MAX_SIDES {
        return Err(Error::SideCountTooLarge(n));
    }
    Ok(())
}

/// Closed-form quantities for the regular `n`-gon.
pub fn quantities(n: u64, ctx: &PrecisionContext) -> Result<PolygonQuantities> {
    check_sides(n)?;
    let g = ctx.guarded();
    let nn = Real::from_u64(n);
    let theta = reference_pi(&g)?.div(&nn, &g)?;
    let sin = trig(TrigFn::Sin, &theta, &g)?;
    let cos = trig(TrigFn::Cos, &theta, &g)?;
    let tan = trig(TrigFn::Tan, &theta, &g)?;
    let sin2 = trig(TrigFn::Sin, &theta.mul_u64(2, &g)?, &g)?;

    Ok(PolygonQuantities {
        n,
        inscribed_perimeter: nn.mul(&sin, &g)?.round_to(ctx)?,
        circumscribed_perimeter: nn.mul(&tan, &g)?.round_to(ctx)?,
        inscribed_area: nn.mul(&sin2, &g)?.div_u64(2, &g)?.round_to(ctx)?,
        circumscribed_area: nn.mul(&sin, &g)?.div(&cos, &g)?.round_to(ctx)?,
    })
}

/// Quantities for `2n` from those for `n` by the Archimedean recurrences.
///
/// Areas need no trigonometry either: `a_2n = π_n` and `A_2n = Π_2n` under
/// the normalisations above.
pub fn double(q: &PolygonQuantities, ctx: &PrecisionContext) -> Result<PolygonQuantities> {
    let n2 = q.n.checked_mul(2).ok_or(Error::SideCountTooLarge(q.n))?;
    check_sides(n2)?;
    let g = ctx.guarded();
    let p = &q.inscribed_perimeter;
    let big_p = &q.circumscribed_perimeter;
    let big_p2 = p
        .mul(big_p, &g)?
        .mul_u64(2, &g)?
        .div(&p.add(big_p, &g)?, &g)?;
    let p2 = p.mul(&big_p2, &g)?.sqrt(&g)?;
    let big_p2 = big_p2.round_to(ctx)?;
    Ok(PolygonQuantities {
        n: n2,
        inscribed_perimeter: p2.round_to(ctx)?,
        circumscribed_perimeter: big_p2.clone(),
        inscribed_area: p.round_to(ctx)?,
        circumscribed_area: big_p2,
    })
}

/// The bracket `(π_n, Π_n)` which contains π.
pub fn sandwich(n: u64, ctx: &PrecisionContext) -> Result<Bracket> {
    let q = quantities(n, ctx)?;
    Bracket::new(q.inscribed_perimeter, q.circumscribed_perimeter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn rel_diff(a: &Real, b: &Real, c: &PrecisionContext) -> Real {
        a.sub(b, c).unwrap().abs().div(&b.abs(), c).unwrap()
    }

    #[test]
    fn hexagon_perimeter_is_three() {
        let q = quantities(6, &ctx()).unwrap();
        let err = q.inscribed_perimeter.sub(&Real::from_u64(3), &ctx()).unwrap().abs();
        assert!(err <= ctx().ulps(&Real::from_u64(3), 4));
    }

    #[test]
    fn square_values() {
        let c = ctx();
        let q = quantities(4, &c).unwrap();
        let four = Real::from_u64(4);
        let two = Real::from_u64(2);
        assert!(q.circumscribed_perimeter.sub(&four, &c).unwrap().abs() <= c.ulps(&four, 4));
        assert!(q.inscribed_area.sub(&two, &c).unwrap().abs() <= c.ulps(&two, 4));
    }

    #[test]
    fn degenerate_and_oversized() {
        assert_eq!(quantities(2, &ctx()).unwrap_err(), Error::DegeneratePolygon(2));
        assert!(quantities(2, &ctx()).unwrap_err().to_string().contains("degenerate polygon"));
        assert_eq!(
            quantities(MAX_SIDES + 1, &ctx()).unwrap_err(),
            Error::SideCountTooLarge(MAX_SIDES + 1)
        );
    }

    #[test]
    fn doubling_matches_closed_form() {
        let c = ctx();
        let tol = Real::pow2(-(c.work_bits() as i64 - 8));
        for n in [6u64, 48] {
            let d = double(&quantities(n, &c).unwrap(), &c).unwrap();
            let q = quantities(2 * n, &c).unwrap();
            assert_eq!(d.n, 2 * n);
            assert!(rel_diff(&d.inscribed_perimeter, &q.inscribed_perimeter, &c) <= tol);
            assert!(rel_diff(&d.circumscribed_perimeter, &q.circumscribed_perimeter, &c) <= tol);
            assert!(rel_diff(&d.inscribed_area, &q.inscribed_area, &c) <= tol);
            assert!(rel_diff(&d.circumscribed_area, &q.circumscribed_area, &c) <= tol);
        }
    }

    #[test]
    fn doubled_hexagon_is_between_three_and_pi() {
        let c = ctx();
        let d = double(&quantities(6, &c).unwrap(), &c).unwrap();
        assert!(d.inscribed_perimeter > Real::from_u64(3));
        assert!(d.inscribed_perimeter < reference_pi(&c).unwrap());
    }

    #[test]
    fn hexagon_sandwich() {
        let c = ctx();
        let b = sandwich(6, &c).unwrap();
        let two_sqrt3 = Real::from_u64(12).sqrt(&c).unwrap();
        assert!(b.upper().sub(&two_sqrt3, &c).unwrap().abs() <= c.ulps(&two_sqrt3, 4));
        assert!(b.encloses(&reference_pi(&c).unwrap(), &c));
    }

    #[test]
    fn triangle_sandwich() {
        let c = ctx();
        let b = sandwich(3, &c).unwrap();
        // π_3 = 3·sin 60° = 3√3/2, Π_3 = 3√3
        let s27 = Real::from_u64(27).sqrt(&c).unwrap();
        assert!(b.lower().sub(&s27.div_u64(2, &c).unwrap(), &c).unwrap().abs() < Real::pow2(-240));
        assert!(b.upper().sub(&s27, &c).unwrap().abs() < Real::pow2(-240));
        assert!(b.encloses(&reference_pi(&c).unwrap(), &c));
    }
}
