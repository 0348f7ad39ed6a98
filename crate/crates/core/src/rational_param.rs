//! Rational points on `x^2 - m^2*x*y + y^2 = m^2` through `(m, 0)`, and on the
//! Pell conic `x^2 - 2xy - y^2 = 1` through `(1, 0)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::conic::Conic;
use crate::error::{Error, Result};

/// A point with exact rational coordinates in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RatPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RatPoint { x, y }
    }

    pub fn from_integers(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        RatPoint {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Slope of a line through the base point; `Infinity` is the vertical line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SlopeParam {
    Finite(BigRational),
    Infinity,
}

impl fmt::Display for SlopeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeParam::Finite(t) => write!(f, "{t}"),
            SlopeParam::Infinity => f.write_str("inf"),
        }
    }
}

/// A conic `a*x^2 + b*x*y + c*y^2 = r` with integer coefficients.
pub trait CentralConic {
    /// `[a, b, c, r]`.
    fn form(&self) -> [BigInt; 4];

    fn contains_rat(&self, pt: &RatPoint) -> bool {
        let [a, b, c, r] = self.form();
        let lhs = &pt.x * &pt.x * BigRational::from_integer(a)
            + &pt.x * &pt.y * BigRational::from_integer(b)
            + &pt.y * &pt.y * BigRational::from_integer(c);
        lhs == BigRational::from_integer(r)
    }
}

impl CentralConic for Conic {
    fn form(&self) -> [BigInt; 4] {
        [BigInt::one(), -self.p(), BigInt::one(), self.q().clone()]
    }
}

fn check_m(m: &BigInt) -> Result<()> {
    if *m <= BigInt::zero() {
        return Err(Error::UnsupportedRange(format!("m = {m} must be positive")));
    }
    Ok(())
}

fn square_conic(m: &BigInt) -> Conic {
    let m2 = m * m;
    Conic::new(m2.clone(), m2).expect("m is positive")
}

/// Second intersection of the line through `(m, 0)` with slope `t`.
///
/// The vertical line meets the conic again at `(m, m^3)`, and the tangent at
/// `(m, 0)` has slope `2/m^2`.
pub fn point_from_t(m: &BigInt, t: &SlopeParam) -> Result<RatPoint> {
    check_m(m)?;
    let t = match t {
        SlopeParam::Infinity => return Ok(RatPoint::from_integers(m.clone(), m * m * m)),
        SlopeParam::Finite(t) => t,
    };
    let mr = BigRational::from_integer(m.clone());
    let m2 = &mr * &mr;
    let den = t * t - &m2 * t + BigRational::one();
    if den.is_zero() {
        return Err(Error::DegenerateDenominator(format!("t^2 - m^2 t + 1 = 0 at m = {m}, t = {t}")));
    }
    let x = &mr * (t * t - BigRational::one()) / &den;
    let y = &mr * t * (&m2 * t - BigRational::from_integer(2.into())) / &den;
    Ok(RatPoint { x, y })
}

/// Inverse of [`point_from_t`].
pub fn t_from_point(m: &BigInt, pt: &RatPoint) -> Result<SlopeParam> {
    check_m(m)?;
    if !square_conic(m).contains_rat(pt) {
        return Err(Error::PointNotOnConic { x: pt.x.to_string(), y: pt.y.to_string() });
    }
    let mr = BigRational::from_integer(m.clone());
    if pt.x == mr {
        return Ok(if pt.y.is_zero() {
            SlopeParam::Finite(BigRational::new(2.into(), m * m))
        } else {
            SlopeParam::Infinity
        });
    }
    Ok(SlopeParam::Finite(&pt.y / (&pt.x - mr)))
}

/// Rational point of `x^2 - 2xy - y^2 = 1` with parameter `t`; `t = 0` gives
/// `(-1, 0)` and `t = 1` gives `(1, 0)`.
pub fn pell_point_from_t(t: &BigRational) -> RatPoint {
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let den = t * t + &two * t - &one;
    // t^2 + 2t - 1 = 0 forces t = -1 +- sqrt 2
    debug_assert!(!den.is_zero());
    let x = (t * t + &one) / &den;
    let y = (&two * t - &two * t * t) / &den;
    RatPoint { x, y }
}

/// The conic `x^2 - 2xy - y^2 = 1`.
pub struct PellParamConic;

impl CentralConic for PellParamConic {
    fn form(&self) -> [BigInt; 4] {
        [1.into(), (-2).into(), (-1).into(), 1.into()]
    }
}
