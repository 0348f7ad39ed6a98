//! Divisibility scans for `(a^2 + b^2) / (ab + 1)` and `(x^2 + 2y^2) / (2xy + 1)`.

use super::parallel::{split_map, Workers};
use super::ScanReport;
use crate::arith::is_square_u128;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientHit {
    pub x: u64,
    pub y: u64,
    pub k: u64,
}

const MAX_QUOTIENT_BOUND: u64 = 1 << 30;

fn check_bound(bound: u64) -> Result<i64> {
    if bound == 0 || bound > MAX_QUOTIENT_BOUND {
        return Err(Error::InvalidBound);
    }
    Ok(bound as i64)
}

/// Every `1 <= a <= b <= bound` with `ab + 1 | a^2 + b^2`; quotients that are
/// not perfect squares are reported as counterexamples.
pub fn imo_scan(bound: u64, workers: Workers) -> Result<ScanReport<QuotientHit>> {
    let b = check_bound(bound)?;
    let hits = split_map(1, b, workers, |lo, hi| {
        let mut out = Vec::new();
        for a in lo as u128..=hi as u128 {
            for bb in a..=b as u128 {
                let num = a * a + bb * bb;
                let den = a * bb + 1;
                if num % den == 0 {
                    out.push(QuotientHit { x: a as u64, y: bb as u64, k: (num / den) as u64 });
                }
            }
        }
        out
    });
    let counterexamples = hits.iter().filter(|h| !is_square_u128(h.k as u128)).copied().collect();
    Ok(ScanReport {
        parameters: vec![("bound".into(), bound.to_string())],
        hits,
        counterexamples,
        exhaustiveness: format!("all pairs 1 <= a <= b <= {bound} tested by exact division"),
    })
}

fn square_or_twice_square(k: u64) -> bool {
    let k = k as u128;
    is_square_u128(k) || (k.is_multiple_of(2) && is_square_u128(k / 2))
}

/// Every `1 <= x, y <= bound` with `2xy + 1 | x^2 + 2y^2`; quotients that are
/// neither squares nor twice squares are counterexamples.
pub fn verify_final_prop(bound: u64, workers: Workers) -> Result<ScanReport<QuotientHit>> {
    let b = check_bound(bound)?;
    let hits = split_map(1, b, workers, |lo, hi| {
        let mut out = Vec::new();
        for x in lo as u128..=hi as u128 {
            for y in 1..=b as u128 {
                let num = x * x + 2 * y * y;
                let den = 2 * x * y + 1;
                if num % den == 0 {
                    out.push(QuotientHit { x: x as u64, y: y as u64, k: (num / den) as u64 });
                }
            }
        }
        out
    });
    let counterexamples = hits.iter().filter(|h| !square_or_twice_square(h.k)).copied().collect();
    Ok(ScanReport {
        parameters: vec![("bound".into(), bound.to_string())],
        hits,
        counterexamples,
        exhaustiveness: format!("all pairs 1 <= x, y <= {bound} tested by exact division"),
    })
}
