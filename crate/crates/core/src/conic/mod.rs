//! The conic family `x^2 - p*x*y + y^2 = q` and its Vieta jumps.
//!
//! For a fixed `y` the two `x`-roots of the conic sum to `p*y`, and for a
//! fixed `x` the two `y`-roots sum to `p*x`. Replacing one root by the other
//! gives the two involutions [`sharp`] (moves `y`) and [`flat`] (moves `x`),
//! both of which map integral points to integral points.

mod classify;
mod descent;

pub use classify::{classify, ClassificationVerdict, VerdictTag};
pub use descent::{descend, imo_certify, DescentCertificate, ImoCertificate, StepTag, Terminal, STEP_BUDGET};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The conic `x^2 - p*x*y + y^2 = q` with `q != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    p: BigInt,
    q: BigInt,
}

impl Conic {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::ZeroConstant);
        }
        Ok(Conic { p: p.into(), q })
    }

    /// The IMO conic `C_k: x^2 - k*x*y + y^2 = k`.
    pub fn imo(k: impl Into<BigInt>) -> Result<Self> {
        let k = k.into();
        Conic::new(k.clone(), k)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 - ({})xy + y^2 = {}", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl IntPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        IntPoint { x: x.into(), y: y.into() }
    }

    pub fn swapped(&self) -> Self {
        IntPoint { x: self.y.clone(), y: self.x.clone() }
    }

    pub fn negated(&self) -> Self {
        IntPoint { x: -&self.x, y: -&self.y }
    }

    pub fn sum(&self) -> BigInt {
        &self.x + &self.y
    }
}

impl fmt::Display for IntPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `x^2 - p*x*y + y^2`, exactly.
pub fn evaluate(c: &Conic, pt: &IntPoint) -> BigInt {
    &pt.x * &pt.x - &c.p * &pt.x * &pt.y + &pt.y * &pt.y
}

pub fn contains(c: &Conic, pt: &IntPoint) -> bool {
    evaluate(c, pt) == c.q
}

pub(crate) fn ensure_on(c: &Conic, pt: &IntPoint) -> Result<()> {
    if contains(c, pt) {
        Ok(())
    } else {
        Err(Error::off_conic(&pt.x, &pt.y))
    }
}

pub(crate) fn sharp_unchecked(c: &Conic, pt: &IntPoint) -> IntPoint {
    IntPoint { x: pt.x.clone(), y: &c.p * &pt.x - &pt.y }
}

pub(crate) fn flat_unchecked(c: &Conic, pt: &IntPoint) -> IntPoint {
    IntPoint { x: &c.p * &pt.y - &pt.x, y: pt.y.clone() }
}

/// Keep `x`, jump `y` to the other root: `(x, p*x - y)`.
pub fn sharp(c: &Conic, pt: &IntPoint) -> Result<IntPoint> {
    ensure_on(c, pt)?;
    Ok(sharp_unchecked(c, pt))
}

/// Keep `y`, jump `x` to the other root: `(p*y - x, y)`.
pub fn flat(c: &Conic, pt: &IntPoint) -> Result<IntPoint> {
    ensure_on(c, pt)?;
    Ok(flat_unchecked(c, pt))
}

/// Walk the alternating sharp/flat chain through `start`.
///
/// The forward walk begins with sharp when `x >= y` and with flat otherwise;
/// the backward walk begins with the other operator. The result lists the
/// backward points (farthest first), then `start`, then the forward points.
/// On closed orbits (definite forms) the list wraps around and repeats.
pub fn chain(c: &Conic, start: &IntPoint, n_back: usize, n_fwd: usize) -> Result<Vec<IntPoint>> {
    ensure_on(c, start)?;
    let fwd_sharp_first = start.x >= start.y;
    let walk = |n: usize, sharp_first: bool| {
        let mut out = Vec::with_capacity(n);
        let mut cur = start.clone();
        let mut use_sharp = sharp_first;
        for _ in 0..n {
            cur = if use_sharp { sharp_unchecked(c, &cur) } else { flat_unchecked(c, &cur) };
            out.push(cur.clone());
            use_sharp = !use_sharp;
        }
        out
    };
    let mut back = walk(n_back, !fwd_sharp_first);
    back.reverse();
    let mut out = back;
    out.push(start.clone());
    out.extend(walk(n_fwd, fwd_sharp_first));
    Ok(out)
}

/// The closed orbit of `start` under alternating sharp and flat steps,
/// starting with sharp, or `None` if it does not close within `limit` steps.
pub fn closed_orbit(c: &Conic, start: &IntPoint, limit: usize) -> Result<Option<Vec<IntPoint>>> {
    ensure_on(c, start)?;
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    for i in 0..limit {
        cur = if i % 2 == 0 { sharp_unchecked(c, &cur) } else { flat_unchecked(c, &cur) };
        if cur == *start && i % 2 == 1 {
            return Ok(Some(out));
        }
        out.push(cur.clone());
    }
    Ok(None)
}

/// `a_1 = 0, a_2 = m, a_{n+2} = m^2 a_{n+1} - a_n`; consecutive terms lie on `C_{m^2}`.
pub fn recurrence_seq(m: &BigInt, count: usize) -> Vec<BigInt> {
    let m2 = m * m;
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for i in 0..count {
        let next = match i {
            0 => BigInt::zero(),
            1 => m.clone(),
            _ => &m2 * &out[i - 1] - &out[i - 2],
        };
        out.push(next);
    }
    out
}

/// Pairs `(F_{2n-1}, F_{2n+1})` for `n = 1..=count`, the positive solutions of
/// `x^2 - 3xy + y^2 = -1` with `x < y`.
pub fn fibonacci_solutions(count: usize) -> Vec<IntPoint> {
    let mut out = Vec::with_capacity(count);
    // (F_{2n-1}, F_{2n}) advanced two indices per step.
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..count {
        let next = &a + &b;
        out.push(IntPoint { x: a.clone(), y: next.clone() });
        a = next.clone();
        b = &b + &next;
    }
    out
}

/// `(a^2 + b^2) / (ab + 1)` when the division is exact.
pub fn imo_quotient(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let num = a * a + b * b;
    let den = a * b + 1u32;
    if den.is_zero() {
        return None;
    }
    let (k, r) = num.div_rem(&den);
    r.is_zero().then_some(k)
}
