//! Polynomials with exact rational coefficients.
//!
//! Used to build the series enclosures and to compose them symbolically, so
//! the terms of `32 sin x + 4 tan x − 3 sin 2x` that cancel against `30x`
//! are removed exactly instead of by floating-point subtraction.

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::realnum::{PrecisionContext, Real};

pub(crate) type Q = Ratio<i128>;

/// `Σ coeffs[k] · x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RationalPoly {
    coeffs: Vec<Q>,
}

pub(crate) fn q(num: i128, den: i128) -> Q {
    Ratio::new(num, den)
}

fn factorial(k: u32) -> i128 {
    (1..=i128::from(k)).product()
}

impl RationalPoly {
    pub(crate) fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub(crate) fn monomial(c: Q, degree: usize) -> Self {
        let mut coeffs = alloc::vec![Q::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `Σ_{j<terms} (−1)^j (s·x)^(2j+1) / (2j+1)!`, the alternating partial
    /// sum of `sin(s·x)`.
    pub(crate) fn sin_partial_sum(scale: i128, terms: usize) -> Self {
        let mut p = Self::new(Vec::new());
        for j in 0..terms {
            let k = 2 * j as u32 + 1;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            p = p.add(&Self::monomial(q(sign * scale.pow(k), factorial(k)), k as usize));
        }
        p
    }

    pub(crate) fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).copied().unwrap_or_else(Q::zero)
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-Q::one()))
    }

    pub(crate) fn scale(&self, c: Q) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divide by `x^k`; `None` unless the low `k` coefficients vanish.
    pub(crate) fn shift_down(&self, k: usize) -> Option<Self> {
        if (0..k).any(|i| !self.coeff(i).is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).copied().collect()))
    }

    /// Lowest degree with a nonzero coefficient.
    pub(crate) fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation at `x`; each coefficient is rounded once.
    pub(crate) fn eval(&self, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
        let mut acc = Real::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x, ctx)?.add(&ratio_to_real(*c, ctx)?, ctx)?;
        }
        Ok(acc)
    }
}

pub(crate) fn ratio_to_real(c: Q, ctx: &PrecisionContext) -> Result<Real> {
    let num = Real::from_i128(*c.numer());
    let den = Real::from_i128(*c.denom());
    num.div(&den, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_partial_sum_coefficients() {
        let s = RationalPoly::sin_partial_sum(1, 3);
        assert_eq!(s.coeff(1), q(1, 1));
        assert_eq!(s.coeff(3), q(-1, 6));
        assert_eq!(s.coeff(5), q(1, 120));
        assert_eq!(s.degree(), 5);
        let s2 = RationalPoly::sin_partial_sum(2, 2);
        assert_eq!(s2.coeff(3), q(-8, 6));
    }

    #[test]
    fn shift_requires_divisibility() {
        let p = RationalPoly::new(alloc::vec![q(0, 1), q(0, 1), q(3, 2)]);
        assert_eq!(p.shift_down(2).unwrap().coeff(0), q(3, 2));
        assert!(RationalPoly::new(alloc::vec![q(1, 1)]).shift_down(1).is_none());
        assert_eq!(p.valuation(), Some(2));
    }

    #[test]
    fn horner_matches_direct() {
        let ctx = PrecisionContext::default();
        let p = RationalPoly::new(alloc::vec![q(1, 1), q(-1, 2), q(1, 3)]);
        let v = p.eval(&Real::from_u64(3), &ctx).unwrap();
        // 1 - 3/2 + 3 = 5/2
        assert_eq!(v, Real::ratio(5, 2, &ctx).unwrap());
    }
}
