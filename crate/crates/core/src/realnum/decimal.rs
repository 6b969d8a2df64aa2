//! Exact binary-to-decimal conversion.
//!
//! The value `M · 2^E` is scaled by a power of ten and rounded half-even
//! with big-integer arithmetic, so the printed digits never depend on the
//! working precision of any intermediate.

use alloc::format;
use alloc::string::{String, ToString};

use astro_float::Sign;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Real;

fn mantissa_and_exponent(x: &Real) -> Option<(BigUint, i64, bool)> {
    let (words, _, sign, e, _) = x.raw().as_raw_parts()?;
    let mut m = BigUint::zero();
    for &w in words.iter().rev() {
        m = (m << 64u32) + BigUint::from(w);
    }
    if m.is_zero() {
        return None;
    }
    let e2 = i64::from(e) - 64 * words.len() as i64;
    Some((m, e2, sign == Sign::Neg))
}

fn pow10(k: u32) -> BigUint {
    BigUint::from(10u32).pow(k)
}

/// `round_half_even(m · 2^e2 · 10^s)`.
fn scaled(m: &BigUint, e2: i64, s: i64) -> BigUint {
    let mut num = m.clone();
    let mut den = BigUint::one();
    if e2 >= 0 {
        num <<= e2 as u64;
    } else {
        den <<= (-e2) as u64;
    }
    if s >= 0 {
        num *= pow10(s as u32);
    } else {
        den *= pow10((-s) as u32);
    }
    let (q, r) = num.div_rem(&den);
    let twice = r << 1u32;
    if twice > den || (twice == den && q.is_odd()) {
        q + 1u32
    } else {
        q
    }
}

pub(super) fn to_scientific(x: &Real, digits: usize) -> String {
    let digits = digits.max(1);
    let Some((m, e2, neg)) = mantissa_and_exponent(x) else {
        let mut s = String::from("0");
        if digits > 1 {
            s.push('.');
            s.extend(core::iter::repeat_n('0', digits - 1));
        }
        s.push_str("e0");
        return s;
    };
    // floor(log10 |x|) estimate from the bit length; corrected below
    let bits = m.bits() as i64 + e2 - 1;
    let mut q = (bits * 30103).div_euclid(100_000);
    let lo = pow10(digits as u32 - 1);
    let hi = pow10(digits as u32);
    let n = loop {
        let n = scaled(&m, e2, digits as i64 - 1 - q);
        if n >= hi {
            q += 1;
        } else if n < lo {
            q -= 1;
        } else {
            break n;
        }
    };
    let d = n.to_string();
    let (head, tail) = d.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{q}")
    } else {
        format!("{sign}{head}.{tail}e{q}")
    }
}
