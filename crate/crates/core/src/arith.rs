//! Small exact-integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Floor square root of a nonnegative integer, `None` for negatives.
pub fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        None
    } else {
        Some(n.sqrt())
    }
}

/// Exact square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = isqrt(n)?;
    (&r * &r == *n).then_some(r)
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

pub fn is_square_u128(n: u128) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// Natural logarithm of `|n|`, usable far beyond the f64 range.
pub fn ln_abs(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return num_traits::ToPrimitive::to_f64(&n.abs()).unwrap().ln();
    }
    let shift = bits - 64;
    let top = (n.abs() >> shift as usize).to_u64_digits().1[0] as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(e^a + e^b)` without overflow.
pub fn ln_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}
