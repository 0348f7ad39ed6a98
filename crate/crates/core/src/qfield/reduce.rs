//! Moving an element along its unit orbit until its coordinates are small.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::family::{rd_delta, rd_unit, RdFamily, RdKind};
use super::QuadElt;
use crate::error::{Error, Result};

const MAX_CORRECTIONS: usize = 64;

/// Which bound a reduced element satisfies, with `T = tr(eps)` and
/// `nu = |N(reduced)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundFormula {
    /// `|a|, |b|*sqrt(m) <= sqrt(nu)/2 * B` with `B^2 = T + 2`.
    SqrtUnit,
    /// The same with `B^2 = sqrt(T + 2) + 2`.
    FourthRootUnit,
}

impl BoundFormula {
    pub fn name(self) -> &'static str {
        match self {
            BoundFormula::SqrtUnit => "sqrt-unit",
            BoundFormula::FourthRootUnit => "fourth-root-unit",
        }
    }
}

/// `reduced = input * unit^exponent`, times `delta` when one was applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub input: QuadElt,
    pub unit: QuadElt,
    pub exponent: i64,
    pub delta: Option<QuadElt>,
    pub reduced: QuadElt,
    pub formula: BoundFormula,
    pub nu: BigInt,
}

impl ReductionResult {
    /// Whether `4U^2` and `4mV^2` (with `reduced = (U + V sqrt m)/d`) respect
    /// the bound, decided on integers only.
    pub fn bounds_hold(&self) -> (bool, bool) {
        let d2 = BigInt::from(self.reduced.d() as u32 * self.reduced.d() as u32);
        let t2 = self.unit.trace() + 2;
        let lhs_a = self.reduced.u() * self.reduced.u() * 4;
        let lhs_b = self.reduced.m() * self.reduced.v() * self.reduced.v() * 4;
        let scale = &self.nu * &d2;
        let check = |lhs: &BigInt| match self.formula {
            BoundFormula::SqrtUnit => *lhs <= &scale * &t2,
            BoundFormula::FourthRootUnit => {
                let r: BigInt = lhs - &scale * 2;
                !r.is_positive() || &r * &r <= &scale * &scale * &t2
            }
        };
        (check(&lhs_a), check(&lhs_b))
    }

    /// Replay the multiplication and re-check norm and bounds.
    pub fn verify(&self) -> Result<()> {
        let mut x = self.input.mul(&self.unit.pow(self.exponent)?)?;
        if let Some(delta) = &self.delta {
            x = x.mul(delta)?;
        }
        if x != self.reduced {
            return Err(Error::OracleDisagreement(format!("replayed {x}, recorded {}", self.reduced)));
        }
        let factor = self.delta.as_ref().map_or(BigInt::one(), |d| d.norm().abs());
        if self.reduced.norm().abs() != self.input.norm().abs() * factor || self.nu != self.reduced.norm().abs() {
            return Err(Error::OracleDisagreement(format!("norm of {} changed", self.reduced)));
        }
        match self.bounds_hold() {
            (true, true) => Ok(()),
            _ => Err(Error::OracleDisagreement(format!("{} violates the {} bound", self.reduced, self.formula.name()))),
        }
    }
}

fn check_unit(xi: &QuadElt, eps: &QuadElt) -> Result<()> {
    if xi.is_zero() {
        return Err(Error::ZeroElement);
    }
    if xi.m() != eps.m() {
        return Err(Error::RadicandMismatch(xi.m().clone(), eps.m().clone()));
    }
    if !eps.norm().is_one() || eps.signum() != Sign::Plus || eps.cmp_abs(&eps.one())? != Ordering::Greater {
        return Err(Error::NotAUnit);
    }
    Ok(())
}

/// `ln |a / a'|`
fn ln_ratio(a: &QuadElt) -> f64 {
    a.ln_abs() - a.conj().ln_abs()
}

fn seed(ln_r: f64, ln_eps: f64, center: f64, per_step: f64) -> i64 {
    let j = ((center - ln_r) / (per_step * ln_eps)).round();
    if j.is_finite() {
        j.clamp(i64::MIN as f64 / 2.0, i64::MAX as f64 / 2.0) as i64
    } else {
        0
    }
}

/// Find `j` with `1/eps < |xi eps^j / (xi eps^j)'| <= eps`; the result then
/// satisfies the [`BoundFormula::SqrtUnit`] bounds.
pub fn reduce_by_unit(xi: &QuadElt, eps: &QuadElt) -> Result<ReductionResult> {
    check_unit(xi, eps)?;
    let eps_inv = eps.conj();
    let mut j = seed(ln_ratio(xi), eps.ln_abs(), 0.0, 2.0);
    let mut alpha = xi.mul(&eps.pow(j)?)?;
    let mut steps = 0;
    loop {
        let conj = alpha.conj();
        if alpha.cmp_abs(&eps.mul(&conj)?)? == Ordering::Greater {
            alpha = alpha.mul(&eps_inv)?;
            j -= 1;
        } else if eps.mul(&alpha)?.cmp_abs(&conj)? != Ordering::Greater {
            alpha = alpha.mul(eps)?;
            j += 1;
        } else {
            break;
        }
        steps += 1;
        if steps > MAX_CORRECTIONS {
            return Err(Error::ReductionDiverged(steps));
        }
    }
    Ok(ReductionResult {
        input: xi.clone(),
        unit: eps.clone(),
        exponent: j,
        delta: None,
        nu: alpha.norm().abs(),
        reduced: alpha,
        formula: BoundFormula::SqrtUnit,
    })
}

/// Two-case reduction for `m = n^2 + 2`: bring `r = |a/a'|` into
/// `[eps^(-3/2), eps^(1/2))` by powers of `eps`, then multiply by
/// `delta = n + sqrt m` when `r < eps^(-1/2)`. The result satisfies the
/// [`BoundFormula::FourthRootUnit`] bounds with `nu` or `2 nu`.
pub fn reduce_nsq_plus2(xi: &QuadElt, n: u64) -> Result<ReductionResult> {
    let f = RdFamily::new(RdKind::NsqPlus2, n)?;
    let eps = rd_unit(&f);
    check_unit(xi, &eps)?;
    let delta = rd_delta(n)?;
    let eps_inv = eps.conj();
    let eps3 = eps.pow(3)?;
    let mut j = seed(ln_ratio(xi), eps.ln_abs(), -0.5, 2.0);
    let mut alpha = xi.mul(&eps.pow(j)?)?;
    let mut steps = 0;
    // r^2 is compared through a^2 against eps^k a'^2
    loop {
        let a2 = alpha.mul(&alpha)?;
        let c = alpha.conj();
        let c2 = c.mul(&c)?;
        if a2.cmp_abs(&eps.mul(&c2)?)? != Ordering::Less {
            alpha = alpha.mul(&eps_inv)?;
            j -= 1;
        } else if eps3.mul(&a2)?.cmp_abs(&c2)? == Ordering::Less {
            alpha = alpha.mul(&eps)?;
            j += 1;
        } else {
            break;
        }
        steps += 1;
        if steps > MAX_CORRECTIONS {
            return Err(Error::ReductionDiverged(steps));
        }
    }
    let a2 = alpha.mul(&alpha)?;
    let c = alpha.conj();
    let lower = eps.mul(&a2)?.cmp_abs(&c.mul(&c)?)? == Ordering::Less;
    let applied = if lower {
        alpha = alpha.mul(&delta)?;
        Some(delta)
    } else {
        None
    };
    Ok(ReductionResult {
        input: xi.clone(),
        unit: eps,
        exponent: j,
        delta: applied,
        nu: alpha.norm().abs(),
        reduced: alpha,
        formula: BoundFormula::FourthRootUnit,
    })
}

/// For `0 <= x, y <= s` and `xy <= t`, decide `x + y <= s + t/s`.
pub fn cassels_combine(x: &BigRational, y: &BigRational, s: &BigRational, t: &BigRational) -> Result<bool> {
    let zero = BigRational::zero();
    if *x < zero || *y < zero || *t < zero || *s <= zero || x > s || y > s || x * y > *t {
        return Err(Error::PreconditionViolated(format!(
            "need 0 <= x, y <= s, xy <= t, s > 0; got x = {x}, y = {y}, s = {s}, t = {t}"
        )));
    }
    Ok(x + y <= s + t / s)
}
