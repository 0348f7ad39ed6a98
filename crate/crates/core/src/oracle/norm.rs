//! Exhaustive search for small norms `x^2 - m*y^2 = +-nu`.

use num_bigint::BigInt;

use super::parallel::{split_map, Workers};
use super::ScanReport;
use crate::arith::is_square_u128;
use crate::conic::IntPoint;
use crate::error::{Error, Result};

const PELL_SEARCH_LIMIT: u64 = 10_000_000;
const MAX_HEIGHT: u64 = 50_000_000;

/// Smallest `(t, u)` with `u >= 1` and `t^2 - m*u^2 = 1`, by direct search.
pub fn pell_fundamental(m: u64) -> Result<(BigInt, BigInt)> {
    if is_square_u128(m as u128) {
        return Err(Error::NonSquareRequired(m.into()));
    }
    let m = m as u128;
    for u in 1..=PELL_SEARCH_LIMIT as u128 {
        let t2 = m * u * u + 1;
        let t = t2.isqrt();
        if t * t == t2 {
            return Ok((t.into(), u.into()));
        }
    }
    Err(Error::UnitSearchExhausted(m.into()))
}

/// Witnesses for `x^2 - m*y^2 = nu` (`plus`) and `= -nu` (`minus`), each the
/// first nonnegative solution in `(y, x)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEntry {
    pub nu: u64,
    pub plus: Option<IntPoint>,
    pub minus: Option<IntPoint>,
}

impl NormEntry {
    pub fn solvable(&self) -> bool {
        self.plus.is_some() || self.minus.is_some()
    }
}

/// Every `1 <= nu <= nu_max` with its witnesses, or proven absent.
///
/// With `eps = t + u*sqrt(m)` the fundamental Pell solution, every orbit of
/// solutions under multiplication by `eps` has a member with
/// `4*m*y^2 <= nu * (2t + 2)`, so scanning to that height is complete.
pub fn norm_scan(m: u64, nu_max: u64, workers: Workers) -> Result<ScanReport<NormEntry>> {
    if nu_max == 0 {
        return Err(Error::InvalidBound);
    }
    let (t, _) = pell_fundamental(m)?;
    let t: u128 = t.try_into().map_err(|_| too_high(m))?;
    let cap = (nu_max as u128)
        .checked_mul(2 * t + 2)
        .ok_or_else(|| too_high(m))?;
    let height = (cap / (4 * m as u128)).isqrt();
    if height > MAX_HEIGHT as u128 {
        return Err(too_high(m));
    }
    let mut report = norm_scan_to_height(m, nu_max, height as u64, workers)?;
    report.parameters.push(("t".into(), t.to_string()));
    report.exhaustiveness = format!(
        "all y <= {height} with 4*{m}*y^2 <= {nu_max}*(2*{t} + 2); every unit orbit has such a member"
    );
    Ok(report)
}

fn too_high(m: u64) -> Error {
    Error::UnsupportedRange(format!("norm scan height for m = {m} exceeds {MAX_HEIGHT}"))
}

type Witness = (u64, bool, u64, u64);

/// Scan `0 <= y <= y_max` without the completeness argument.
pub fn norm_scan_to_height(m: u64, nu_max: u64, y_max: u64, workers: Workers) -> Result<ScanReport<NormEntry>> {
    if nu_max == 0 || y_max > MAX_HEIGHT {
        return Err(Error::InvalidBound);
    }
    if is_square_u128(m as u128) {
        return Err(Error::NonSquareRequired(m.into()));
    }
    let found: Vec<Witness> = split_map(0, y_max as i64, workers, |lo, hi| {
        let mut out = Vec::new();
        for y in lo as u128..=hi as u128 {
            let my2 = m as u128 * y * y;
            let x_lo = my2.saturating_sub(nu_max as u128).isqrt();
            let x_hi = (my2 + nu_max as u128).isqrt();
            for x in x_lo..=x_hi {
                let x2 = x * x;
                let (nu, plus) = if x2 >= my2 { (x2 - my2, true) } else { (my2 - x2, false) };
                if nu >= 1 && nu <= nu_max as u128 {
                    out.push((nu as u64, plus, y as u64, x as u64));
                }
            }
        }
        out
    });
    let mut hits: Vec<NormEntry> = (1..=nu_max)
        .map(|nu| NormEntry { nu, plus: None, minus: None })
        .collect();
    for (nu, plus, y, x) in found {
        let entry = &mut hits[nu as usize - 1];
        let slot = if plus { &mut entry.plus } else { &mut entry.minus };
        if slot.is_none() {
            *slot = Some(IntPoint::new(x, y));
        }
    }
    Ok(ScanReport {
        parameters: vec![
            ("m".into(), m.to_string()),
            ("nu_max".into(), nu_max.to_string()),
            ("y_max".into(), y_max.to_string()),
        ],
        hits,
        counterexamples: Vec::new(),
        exhaustiveness: format!("all 0 <= y <= {y_max}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(r: &ScanReport<NormEntry>, nu: u64) -> &NormEntry {
        &r.hits[nu as usize - 1]
    }

    #[test]
    fn pell_solutions() {
        let p = |m| pell_fundamental(m).unwrap();
        assert_eq!(p(2), (3.into(), 2.into()));
        assert_eq!(p(3), (2.into(), 1.into()));
        assert_eq!(p(45), (161.into(), 24.into()));
        assert_eq!(p(13), (649.into(), 180.into()));
        assert_eq!(pell_fundamental(49), Err(Error::NonSquareRequired(49.into())));
    }

    #[test]
    fn radicand_three() {
        let r = norm_scan(3, 7, Workers::new(2)).unwrap();
        assert_eq!(entry(&r, 2).minus, Some(IntPoint::new(1, 1)));
        assert_eq!(entry(&r, 2).plus, None);
        assert_eq!(entry(&r, 6).plus, Some(IntPoint::new(3, 1)));
        assert_eq!(entry(&r, 1).plus, Some(IntPoint::new(1, 0)));
        assert!(!entry(&r, 5).solvable());
        assert!(!entry(&r, 7).solvable());
    }

    #[test]
    fn radicand_twenty_four() {
        let r = norm_scan(24, 12, Workers::new(3)).unwrap();
        for nu in [2, 3, 5, 6, 7, 10, 11] {
            assert!(!entry(&r, nu).solvable(), "nu={nu}");
        }
        assert_eq!(entry(&r, 8).minus, Some(IntPoint::new(4, 1)));
        assert_eq!(entry(&r, 12).plus, Some(IntPoint::new(6, 1)));
    }

    #[test]
    fn radicand_twenty_seven() {
        let r = norm_scan(27, 4, Workers::new(1)).unwrap();
        assert_eq!(entry(&r, 2).minus, Some(IntPoint::new(5, 1)));
    }

    #[test]
    fn doubling_height_adds_nothing() {
        for m in [3u64, 8, 15, 24, 27] {
            let r = norm_scan(m, 40, Workers::new(2)).unwrap();
            let y: u64 = r.parameters.iter().find(|(k, _)| k == "y_max").unwrap().1.parse().unwrap();
            let wide = norm_scan_to_height(m, 40, 2 * y.max(1), Workers::new(2)).unwrap();
            for (a, b) in r.hits.iter().zip(&wide.hits) {
                assert_eq!(a.plus.is_some(), b.plus.is_some(), "m={m} nu={}", a.nu);
                assert_eq!(a.minus.is_some(), b.minus.is_some(), "m={m} nu={}", a.nu);
            }
        }
    }

    #[test]
    fn deterministic_across_workers() {
        assert_eq!(norm_scan(15, 60, Workers::new(1)), norm_scan(15, 60, Workers::new(6)));
    }
}
