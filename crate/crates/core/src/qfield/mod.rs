//! Exact arithmetic in `Z[sqrt m]` and `Z[(1 + sqrt m)/2]`.

mod family;
mod reduce;

pub use family::{
    davenport_min_norms, element_to_point, point_to_element, rd_delta, rd_unit, small_norm_classify,
    theorem_threshold, DavenportBounds, NormConstraint, RdFamily, RdKind,
};
pub use reduce::{cassels_combine, reduce_by_unit, reduce_nsq_plus2, BoundFormula, ReductionResult};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_square, ln_abs, ln_add};
use crate::error::{Error, Result};

/// The number `(u + v*sqrt(m)) / d` with `d` in `{1, 2}`.
///
/// A denominator of 2 requires `m = 1 (mod 4)` and `u = v (mod 2)`, so the
/// norm is always an integer. Values are kept with the smallest possible `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElt {
    u: BigInt,
    v: BigInt,
    m: BigInt,
    d: u8,
}

impl QuadElt {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>, m: impl Into<BigInt>, d: u8) -> Result<Self> {
        let (u, v, m) = (u.into(), v.into(), m.into());
        if !m.is_positive() || is_square(&m) {
            return Err(Error::InvalidElement(format!("radicand {m} must be a positive non-square")));
        }
        match d {
            1 => {}
            2 => {
                if m.mod_floor(&BigInt::from(4)) != BigInt::one() {
                    return Err(Error::InvalidElement(format!("denominator 2 needs m = 1 mod 4, got m = {m}")));
                }
                if (&u - &v).is_odd() {
                    return Err(Error::InvalidElement(format!("denominator 2 needs u = v mod 2, got ({u}, {v})")));
                }
            }
            _ => return Err(Error::InvalidElement(format!("denominator {d} is not 1 or 2"))),
        }
        Ok(Self::raw(u, v, m, d))
    }

    pub fn from_int(a: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Self> {
        Self::new(a, 0, m, 1)
    }

    fn raw(mut u: BigInt, mut v: BigInt, m: BigInt, mut d: u8) -> Self {
        while d > 1 && u.is_even() && v.is_even() {
            u /= 2;
            v /= 2;
            d /= 2;
        }
        debug_assert!(d == 1 || d == 2, "denominator {d} left after normalization");
        QuadElt { u, v, m, d }
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    /// `(U, V)` with value `(U + V*sqrt(m)) / 2`.
    pub fn halves(&self) -> (BigInt, BigInt) {
        if self.d == 2 {
            (self.u.clone(), self.v.clone())
        } else {
            (&self.u * 2, &self.v * 2)
        }
    }

    fn same_field(&self, other: &QuadElt) -> Result<()> {
        if self.m != other.m {
            return Err(Error::RadicandMismatch(self.m.clone(), other.m.clone()));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn one(&self) -> QuadElt {
        Self::raw(BigInt::one(), BigInt::zero(), self.m.clone(), 1)
    }

    pub fn conj(&self) -> QuadElt {
        QuadElt { u: self.u.clone(), v: -&self.v, m: self.m.clone(), d: self.d }
    }

    pub fn norm(&self) -> BigInt {
        let n = &self.u * &self.u - &self.m * &self.v * &self.v;
        n / (self.d as i32 * self.d as i32)
    }

    pub fn trace(&self) -> BigInt {
        &self.u * 2 / self.d as i32
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    pub fn mul(&self, other: &QuadElt) -> Result<QuadElt> {
        self.same_field(other)?;
        let u = &self.u * &other.u + &self.m * &self.v * &other.v;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(Self::raw(u, v, self.m.clone(), self.d * other.d))
    }

    pub fn add(&self, other: &QuadElt) -> Result<QuadElt> {
        self.same_field(other)?;
        let (a, b) = (self.halves(), other.halves());
        Ok(Self::raw(a.0 + b.0, a.1 + b.1, self.m.clone(), 2))
    }

    pub fn sub(&self, other: &QuadElt) -> Result<QuadElt> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuadElt {
        QuadElt { u: -&self.u, v: -&self.v, m: self.m.clone(), d: self.d }
    }

    pub fn scale(&self, k: &BigInt) -> QuadElt {
        Self::raw(&self.u * k, &self.v * k, self.m.clone(), self.d)
    }

    /// Exact sign of the real number.
    pub fn signum(&self) -> Sign {
        let (su, sv) = (self.u.sign(), self.v.sign());
        if sv == Sign::NoSign || su == sv {
            return su;
        }
        if su == Sign::NoSign {
            return sv;
        }
        if &self.u * &self.u > &self.m * &self.v * &self.v {
            su
        } else {
            sv
        }
    }

    pub fn abs(&self) -> QuadElt {
        if self.signum() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Compare `|self|` with `|other|` exactly.
    pub fn cmp_abs(&self, other: &QuadElt) -> Result<Ordering> {
        let diff = self.abs().sub(&other.abs())?;
        Ok(match diff.signum() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        })
    }

    /// Inverse of a unit: `conj / norm`.
    pub fn unit_inverse(&self) -> Result<QuadElt> {
        let n = self.norm();
        if !n.abs().is_one() {
            return Err(Error::NotAUnit);
        }
        Ok(self.conj().scale(&n))
    }

    /// `self^e`; negative exponents need a unit.
    pub fn pow(&self, e: i64) -> Result<QuadElt> {
        let base = if e < 0 { self.unit_inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// `ln |self|`, accurate even when the two terms nearly cancel.
    pub fn ln_abs(&self) -> f64 {
        let same_sign = self.u.sign() != -self.v.sign() || self.v.is_zero() || self.u.is_zero();
        let big = |u: &BigInt, v: &BigInt| {
            ln_add(ln_abs(u), ln_abs(v) + 0.5 * ln_abs(&self.m)) - (self.d as f64).ln()
        };
        if same_sign {
            big(&self.u, &self.v)
        } else {
            ln_abs(&self.norm()) - big(&self.u, &-&self.v)
        }
    }
}

impl fmt::Display for QuadElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.v.is_zero() {
            self.u.to_string()
        } else {
            let v = match self.v.magnitude().is_one() {
                true => String::new(),
                false => format!("{}*", self.v.magnitude()),
            };
            let op = if self.v.is_negative() { "-" } else { "+" };
            if self.u.is_zero() {
                let sign = if self.v.is_negative() { "-" } else { "" };
                format!("{sign}{v}sqrt({})", self.m)
            } else {
                format!("{} {op} {v}sqrt({})", self.u, self.m)
            }
        };
        if self.d == 2 {
            write!(f, "({body})/2")
        } else {
            f.write_str(&body)
        }
    }
}
