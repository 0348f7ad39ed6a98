//! Sums of two squares and the form `c^2 + 3d^2`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest argument accepted by the representation searches.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn bounded(n: &BigInt, limit: u64) -> Result<Option<u64>> {
    if n.is_negative() {
        return Ok(None);
    }
    match n.to_u64() {
        Some(v) if v <= limit => Ok(Some(v)),
        _ => Err(Error::FactorizationTooLarge(n.clone())),
    }
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let r = (n as u128).isqrt();
    (r * r == n as u128).then_some(r as u64)
}

/// `(a, b)` with `a^2 + b^2 = n`: the smallest `a >= 1` with `a <= b`, or
/// `(0, sqrt n)` when no such `a` exists. `None` when `n` is not a sum of
/// two squares.
pub fn two_square_rep(n: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    let Some(n) = bounded(n, FACTOR_LIMIT)? else { return Ok(None) };
    let criterion = factorize(n).iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0);
    let mut found = None;
    let mut a = 1u64;
    while 2 * a * a <= n {
        if let Some(b) = isqrt_exact(n - a * a) {
            found = Some((a, b));
            break;
        }
        a += 1;
    }
    if found.is_none() {
        found = isqrt_exact(n).map(|r| (0, r));
    }
    if found.is_some() != criterion {
        return Err(Error::OracleDisagreement(format!(
            "two-square search and factorization disagree at {n}"
        )));
    }
    Ok(found.map(|(a, b)| (BigInt::from(a), BigInt::from(b))))
}

/// `(c, d)` with `c^2 + 3d^2 = n`: the smallest `d >= 1`, or `(sqrt n, 0)`.
/// `None` when `n` has no such representation.
pub fn rep_c2_plus_3d2(n: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    let Some(n) = bounded(n, 4 * FACTOR_LIMIT)? else { return Ok(None) };
    if n.is_zero() {
        return Ok(Some((BigInt::zero(), BigInt::zero())));
    }
    let criterion = factorize(n).iter().all(|&(p, e)| p % 3 != 2 || e % 2 == 0);
    let mut found = None;
    let mut d = 1u64;
    while 3 * d * d <= n {
        if let Some(c) = isqrt_exact(n - 3 * d * d) {
            found = Some((c, d));
            break;
        }
        d += 1;
    }
    if found.is_none() {
        found = isqrt_exact(n).map(|r| (r, 0));
    }
    if found.is_some() != criterion {
        return Err(Error::OracleDisagreement(format!(
            "c^2 + 3d^2 search and factorization disagree at {n}"
        )));
    }
    Ok(found.map(|(c, d)| (BigInt::from(c), BigInt::from(d))))
}
