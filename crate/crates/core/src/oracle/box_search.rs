use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::parallel::{split_map, Workers};
use super::ScanReport;
use crate::arith::exact_sqrt;
use crate::conic::{Conic, IntPoint};
use crate::error::{Error, Result};

/// All integral points of `c` with `|x|, |y| <= bound`.
///
/// For each `x` the conic is a quadratic in `y` with discriminant
/// `(p^2 - 4) x^2 + 4q`; a column has integral points exactly when that
/// discriminant is a square `s^2` with `p*x = s (mod 2)`, and then
/// `y = (p*x +- s) / 2`.
pub fn box_search(c: &Conic, bound: u64, workers: Workers) -> Result<ScanReport<IntPoint>> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let b = i64::try_from(bound).map_err(|_| Error::InvalidBound)?;
    let small = small_coefficients(c, bound);
    let mut hits = split_map(-b, b, workers, |lo, hi| match small {
        Some((p, q)) => columns_i128(p, q, b, lo, hi),
        None => columns_big(c, b, lo, hi),
    });
    hits.sort();
    hits.dedup();
    Ok(ScanReport {
        parameters: vec![
            ("p".into(), c.p().to_string()),
            ("q".into(), c.q().to_string()),
            ("bound".into(), bound.to_string()),
        ],
        hits,
        counterexamples: Vec::new(),
        exhaustiveness: format!(
            "every column |x| <= {bound} solved exactly through the discriminant (p^2 - 4)x^2 + 4q"
        ),
    })
}

fn small_coefficients(c: &Conic, bound: u64) -> Option<(i128, i128)> {
    let p = c.p().to_i64()?;
    let q = c.q().to_i64()?;
    (p.unsigned_abs() < 1 << 31 && q.unsigned_abs() < 1 << 62 && bound < 1 << 31).then_some((p as i128, q as i128))
}

fn columns_i128(p: i128, q: i128, b: i64, lo: i64, hi: i64) -> Vec<IntPoint> {
    let b = b as i128;
    let mut out = Vec::new();
    for x in lo..=hi {
        let x = x as i128;
        let disc = (p * p - 4) * x * x + 4 * q;
        if disc < 0 {
            continue;
        }
        let s = (disc as u128).isqrt() as i128;
        if s * s != disc || (p * x - s).rem_euclid(2) != 0 {
            continue;
        }
        for y in [(p * x - s) / 2, (p * x + s) / 2] {
            if y.abs() <= b {
                out.push(IntPoint::new(x as i64, y as i64));
            }
            if s == 0 {
                break;
            }
        }
    }
    out
}

fn columns_big(c: &Conic, b: i64, lo: i64, hi: i64) -> Vec<IntPoint> {
    let p = c.p();
    let b = BigInt::from(b);
    let mut out = Vec::new();
    for x in lo..=hi {
        let x = BigInt::from(x);
        let disc = (p * p - 4) * &x * &x + c.q() * 4;
        let Some(s) = exact_sqrt(&disc) else { continue };
        let px = p * &x;
        if (&px - &s) % 2 != BigInt::from(0) {
            continue;
        }
        let mut ys: Vec<BigInt> = vec![(&px - &s) / 2];
        if s.is_positive() {
            ys.push((&px + &s) / 2);
        }
        for y in ys {
            if y.abs() <= b {
                out.push(IntPoint { x: x.clone(), y });
            }
        }
    }
    out
}
