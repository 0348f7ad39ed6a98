use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::QuadElt;
use crate::conic::{contains, Conic, IntPoint};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RdKind {
    /// `m = n^2 - 1`
    NsqMinus1,
    /// `m = n^2 - 4`, `n` odd
    NsqMinus4,
    /// `m = n^2 + 2`
    NsqPlus2,
}

impl RdKind {
    pub fn name(self) -> &'static str {
        match self {
            RdKind::NsqMinus1 => "NsqMinus1",
            RdKind::NsqMinus4 => "NsqMinus4",
            RdKind::NsqPlus2 => "NsqPlus2",
        }
    }

    pub fn parse(s: &str) -> Option<RdKind> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "nsqminus1" => Some(RdKind::NsqMinus1),
            "nsqminus4" => Some(RdKind::NsqMinus4),
            "nsqplus2" => Some(RdKind::NsqPlus2),
            _ => None,
        }
    }
}

/// A radicand of Richaud-Degert type with a closed-form unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RdFamily {
    kind: RdKind,
    n: u64,
}

impl RdFamily {
    pub fn new(kind: RdKind, n: u64) -> Result<Self> {
        let ok = match kind {
            RdKind::NsqMinus1 => n >= 2,
            RdKind::NsqMinus4 => n >= 3 && n % 2 == 1,
            RdKind::NsqPlus2 => n >= 1,
        };
        if !ok || n > u32::MAX as u64 {
            return Err(Error::InvalidFamily(format!("{} with n = {n}", kind.name())));
        }
        Ok(RdFamily { kind, n })
    }

    /// The first family (in declaration order) whose radicand is `m`.
    pub fn from_radicand(m: &BigInt) -> Option<RdFamily> {
        use num_traits::ToPrimitive;
        let root = |x: BigInt| crate::arith::exact_sqrt(&x).and_then(|r| r.to_u64());
        [
            (RdKind::NsqMinus1, root(m + 1)),
            (RdKind::NsqMinus4, root(m + 4)),
            (RdKind::NsqPlus2, root(m - 2)),
        ]
        .into_iter()
        .find_map(|(kind, n)| RdFamily::new(kind, n?).ok())
    }

    pub fn kind(&self) -> RdKind {
        self.kind
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn radicand(&self) -> BigInt {
        let n2 = BigInt::from(self.n) * self.n;
        match self.kind {
            RdKind::NsqMinus1 => n2 - 1,
            RdKind::NsqMinus4 => n2 - 4,
            RdKind::NsqPlus2 => n2 + 2,
        }
    }
}

/// `n + sqrt(n^2 - 1)`, `(n + sqrt(n^2 - 4))/2` or `n^2 + 1 + n*sqrt(n^2 + 2)`.
pub fn rd_unit(f: &RdFamily) -> QuadElt {
    let n = BigInt::from(f.n);
    let m = f.radicand();
    let e = match f.kind {
        RdKind::NsqMinus1 => QuadElt::new(n, 1, m, 1),
        RdKind::NsqMinus4 => QuadElt::new(n, 1, m, 2),
        RdKind::NsqPlus2 => QuadElt::new(&n * &n + 1, n, m, 1),
    };
    e.expect("family radicands are valid")
}

/// `n + sqrt(n^2 + 2)`, of norm -2, with square twice the unit.
pub fn rd_delta(n: u64) -> Result<QuadElt> {
    let f = RdFamily::new(RdKind::NsqPlus2, n)?;
    QuadElt::new(n, 1, f.radicand(), 1)
}

/// The shape forced on a solvable `nu` with `|x^2 - m*y^2| = nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormConstraint {
    ForcedSquare,
    /// `nu` equals `exceptional`, is a square, or (if allowed) twice a square.
    ForcedExceptional { exceptional: u64, twice_square_allowed: bool },
    NoConstraint,
}

impl NormConstraint {
    pub fn name(&self) -> &'static str {
        match self {
            NormConstraint::ForcedSquare => "ForcedSquare",
            NormConstraint::ForcedExceptional { .. } => "ForcedExceptional",
            NormConstraint::NoConstraint => "NoConstraint",
        }
    }

    pub fn admits(&self, nu: u64) -> bool {
        let sq = |x: u64| crate::arith::is_square_u128(x as u128);
        match *self {
            NormConstraint::ForcedSquare => sq(nu),
            NormConstraint::ForcedExceptional { exceptional, twice_square_allowed } => {
                nu == exceptional || sq(nu) || (twice_square_allowed && nu.is_multiple_of(2) && sq(nu / 2))
            }
            NormConstraint::NoConstraint => true,
        }
    }
}

/// Theorem threshold below which a constraint applies: `2n - 2`, `n + 2`
/// or `2n + 1`.
pub fn theorem_threshold(f: &RdFamily) -> u64 {
    match f.kind {
        RdKind::NsqMinus1 => 2 * f.n - 2,
        RdKind::NsqMinus4 => f.n + 2,
        RdKind::NsqPlus2 => 2 * f.n + 1,
    }
}

pub fn small_norm_classify(f: &RdFamily, nu: u64) -> Result<NormConstraint> {
    let in_range = match f.kind {
        RdKind::NsqMinus1 => f.n >= 2,
        RdKind::NsqMinus4 => f.n >= 7,
        RdKind::NsqPlus2 => f.n >= 5,
    };
    if !in_range {
        return Err(Error::ParameterOutOfTheoremRange(format!("{} with n = {}", f.kind.name(), f.n)));
    }
    if nu == 0 {
        return Err(Error::PreconditionViolated("nu must be positive".into()));
    }
    if nu >= theorem_threshold(f) {
        return Ok(NormConstraint::NoConstraint);
    }
    Ok(match f.kind {
        RdKind::NsqMinus1 => NormConstraint::ForcedSquare,
        RdKind::NsqMinus4 => NormConstraint::ForcedExceptional { exceptional: f.n - 2, twice_square_allowed: false },
        RdKind::NsqPlus2 => NormConstraint::ForcedExceptional { exceptional: 2 * f.n - 1, twice_square_allowed: true },
    })
}

/// Smallest non-square norms of `x^2 - (t^2 - 1)y^2` on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DavenportBounds {
    pub t: u64,
    /// `2t + 2`, attained as `+nu` at `(t + 1, 1)`
    pub plus: (u64, IntPoint),
    /// `2t - 2`, attained as `-nu` at `(t - 1, 1)`
    pub minus: (u64, IntPoint),
}

/// Below these values every norm is a square; when a bound is itself a
/// square it is still attained but not the first non-square norm.
pub fn davenport_min_norms(t: u64) -> Result<DavenportBounds> {
    if t < 2 || t > u32::MAX as u64 {
        return Err(Error::ParameterOutOfTheoremRange(format!("t = {t}")));
    }
    let m = BigInt::from(t) * t - 1;
    let plus = IntPoint::new(t + 1, 1);
    let minus = IntPoint::new(t - 1, 1);
    let norm = |p: &IntPoint| &p.x * &p.x - &m * &p.y * &p.y;
    debug_assert_eq!(norm(&plus), BigInt::from(2 * t + 2));
    debug_assert_eq!(norm(&minus), -BigInt::from(2 * t - 2));
    Ok(DavenportBounds { t, plus: (2 * t + 2, plus), minus: (2 * t - 2, minus) })
}

fn k_radicand(k: &BigInt) -> Result<BigInt> {
    if k.abs() <= BigInt::from(2) {
        return Err(Error::DegenerateK(k.clone()));
    }
    Ok(if k.is_even() {
        let kappa = k / 2;
        &kappa * &kappa - 1
    } else {
        k * k - 4
    })
}

/// `x - (k/2)y + y*sqrt((k/2)^2 - 1)` for even `k`, `((2x - ky) + y*sqrt(k^2 - 4))/2`
/// for odd `k`; the norm is `k`.
pub fn point_to_element(k: &BigInt, pt: &IntPoint) -> Result<QuadElt> {
    let m = k_radicand(k)?;
    let c = Conic::imo(k.clone())?;
    if !contains(&c, pt) {
        return Err(Error::PointNotOnConic { x: pt.x.to_string(), y: pt.y.to_string() });
    }
    if k.is_even() {
        QuadElt::new(&pt.x - k / 2 * &pt.y, pt.y.clone(), m, 1)
    } else {
        QuadElt::new(&pt.x * 2 - k * &pt.y, pt.y.clone(), m, 2)
    }
}

/// Inverse of [`point_to_element`].
pub fn element_to_point(k: &BigInt, a: &QuadElt) -> Result<IntPoint> {
    let m = k_radicand(k)?;
    if *a.m() != m {
        return Err(Error::RadicandMismatch(a.m().clone(), m));
    }
    let pt = if k.is_even() {
        if a.d() != 1 {
            return Err(Error::InvalidElement(format!("{a} is not in Z[sqrt({m})]")));
        }
        IntPoint { x: a.u() + k / 2 * a.v(), y: a.v().clone() }
    } else {
        let (u2, v2) = a.halves();
        let twice_x = &u2 + k * &v2;
        if twice_x.is_odd() {
            return Err(Error::InvalidElement(format!("{a} has no integral point for k = {k}")));
        }
        IntPoint { x: twice_x / 2, y: v2 }
    };
    if !contains(&Conic::imo(k.clone())?, &pt) {
        return Err(Error::PointNotOnConic { x: pt.x.to_string(), y: pt.y.to_string() });
    }
    Ok(pt)
}
