//! Pell conics, the unit action on `C_k`, and Vieta-form rewrites.
//!
//! Multiplying `x - (k/2)y + y*sqrt(m)` by the unit `(k + sqrt(k^2 - 4))/2`
//! moves the point `(x, y)` of `x^2 - kxy + y^2 = k` to `(kx - y, x)`. This
//! integral map is used directly, so odd `k` needs no half-integers.

mod group;
mod table1;

pub use group::group_add;
pub use table1::{regen_table1, Table1Row};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{isqrt, is_square};
use crate::conic::{contains, Conic, IntPoint};
use crate::error::{Error, Result};
use crate::qfield::{rd_unit, RdFamily, RdKind};
use crate::rational_param::CentralConic;

/// `x^2 - m*y^2 = rhs` with `rhs` in `{1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellConic {
    m: BigInt,
    rhs: i8,
}

impl PellConic {
    pub fn new(m: impl Into<BigInt>, rhs: i8) -> Result<Self> {
        let m = m.into();
        if !m.is_positive() || is_square(&m) {
            return Err(Error::NonSquareRequired(m));
        }
        if rhs != 1 && rhs != -1 {
            return Err(Error::InvalidElement(format!("Pell right-hand side {rhs} is not +-1")));
        }
        Ok(PellConic { m, rhs })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn rhs(&self) -> i8 {
        self.rhs
    }

    pub fn contains(&self, pt: &IntPoint) -> bool {
        &pt.x * &pt.x - &self.m * &pt.y * &pt.y == BigInt::from(self.rhs)
    }
}

impl CentralConic for PellConic {
    fn form(&self) -> [BigInt; 4] {
        [BigInt::one(), BigInt::zero(), -&self.m, BigInt::from(self.rhs)]
    }
}

/// Smallest solution of `t^2 - m*u^2 = 1` that is a power of the family unit:
/// the unit itself, or its cube when it is half-integral.
pub fn rd_fundamental(f: &RdFamily) -> IntPoint {
    let e = rd_unit(f);
    let e = if f.kind() == RdKind::NsqMinus4 { e.pow(3).expect("nonnegative power") } else { e };
    debug_assert_eq!(e.d(), 1);
    IntPoint { x: e.u().clone(), y: e.v().clone() }
}

type Mat = [[BigInt; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_pow(base: Mat, mut e: u64) -> Mat {
    let mut acc = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = mat_mul(&sq, &sq);
        }
    }
    acc
}

/// Apply `(x, y) -> (kx - y, x)` `j` times; negative `j` uses the inverse
/// `(x, y) -> (y, ky - x)`.
pub fn act(k: &BigInt, pt: &IntPoint, j: i64) -> Result<IntPoint> {
    let c = Conic::imo(k.clone())?;
    if !contains(&c, pt) {
        return Err(Error::off_conic(&pt.x, &pt.y));
    }
    let step: Mat = if j >= 0 {
        [[k.clone(), -BigInt::one()], [BigInt::one(), BigInt::zero()]]
    } else {
        [[BigInt::zero(), BigInt::one()], [-BigInt::one(), k.clone()]]
    };
    let t = mat_pow(step, j.unsigned_abs());
    Ok(IntPoint {
        x: &t[0][0] * &pt.x + &t[0][1] * &pt.y,
        y: &t[1][0] * &pt.x + &t[1][1] * &pt.y,
    })
}

fn c4() -> Conic {
    Conic::imo(4).expect("valid conic")
}

fn pell3() -> PellConic {
    PellConic::new(3, 1).expect("valid Pell conic")
}

/// `(2A, 2B) -> (A - 2B, B)` from `C_4` to `x^2 - 3y^2 = 1`.
pub fn c4_to_pell(pt: &IntPoint) -> Result<IntPoint> {
    for coord in [&pt.x, &pt.y] {
        if coord.is_odd() {
            return Err(Error::OddCoordinate(coord.clone()));
        }
    }
    if !contains(&c4(), pt) {
        return Err(Error::off_conic(&pt.x, &pt.y));
    }
    let (a, b) = (&pt.x / 2, &pt.y / 2);
    Ok(IntPoint { x: a - &b * 2, y: b })
}

/// `(x, y) -> (2x + 4y, 2y)` from `x^2 - 3y^2 = 1` to `C_4`.
pub fn pell_to_c4(pt: &IntPoint) -> Result<IntPoint> {
    if !pell3().contains(pt) {
        return Err(Error::off_conic(&pt.x, &pt.y));
    }
    Ok(IntPoint { x: &pt.x * 2 + &pt.y * 4, y: &pt.y * 2 })
}

/// `x^2 + 2c*x*y + (c^2 - m)*y^2 = rhs`, the shear of `X^2 - m*y^2 = rhs`
/// by `X = x + c*y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VietaForm {
    m: BigInt,
    c: BigInt,
    rhs: i8,
}

impl VietaForm {
    /// Shear by the integer nearest to `sqrt m`.
    pub fn new(m: impl Into<BigInt>, rhs: i8) -> Result<Self> {
        let pell = PellConic::new(m, rhs)?;
        let m = pell.m;
        let r = isqrt(&m).expect("positive radicand");
        let c = if m > &r * &r + &r { r + 1 } else { r };
        Ok(VietaForm { m, c, rhs })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn shear(&self) -> &BigInt {
        &self.c
    }

    /// Coefficients `[1, 2c, c^2 - m]` of the left-hand side.
    pub fn coefficients(&self) -> [BigInt; 3] {
        [BigInt::one(), &self.c * 2, &self.c * &self.c - &self.m]
    }

    pub fn contains(&self, pt: &IntPoint) -> bool {
        let [a, b, c] = self.coefficients();
        a * &pt.x * &pt.x + b * &pt.x * &pt.y + c * &pt.y * &pt.y == BigInt::from(self.rhs)
    }

    fn ensure_on(&self, pt: &IntPoint) -> Result<()> {
        if self.contains(pt) {
            Ok(())
        } else {
            Err(Error::off_conic(&pt.x, &pt.y))
        }
    }

    pub fn to_pell(&self, pt: &IntPoint) -> Result<IntPoint> {
        self.ensure_on(pt)?;
        Ok(IntPoint { x: &pt.x + &self.c * &pt.y, y: pt.y.clone() })
    }

    pub fn from_pell(&self, pt: &IntPoint) -> Result<IntPoint> {
        let pell = PellConic { m: self.m.clone(), rhs: self.rhs };
        if !pell.contains(pt) {
            return Err(Error::off_conic(&pt.x, &pt.y));
        }
        Ok(IntPoint { x: &pt.x - &self.c * &pt.y, y: pt.y.clone() })
    }

    /// Replace `x` by the other root for fixed `y`: `(-2cy - x, y)`.
    pub fn flat(&self, pt: &IntPoint) -> Result<IntPoint> {
        self.ensure_on(pt)?;
        let shift: BigInt = &self.c * 2 * &pt.y;
        let x = -shift - &pt.x;
        Ok(IntPoint { x, y: pt.y.clone() })
    }

    /// Replace `y` by the other root for fixed `x`, when that root is integral.
    pub fn sharp(&self, pt: &IntPoint) -> Result<IntPoint> {
        self.ensure_on(pt)?;
        let lead = &self.c * &self.c - &self.m;
        let twice: BigInt = &self.c * 2 * &pt.x;
        let (q, r) = (-twice).div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::NonIntegralJump(format!(
                "-2*{}*{} / {lead} is not an integer",
                self.c, pt.x
            )));
        }
        Ok(IntPoint { x: pt.x.clone(), y: q - &pt.y })
    }
}

impl CentralConic for VietaForm {
    fn form(&self) -> [BigInt; 4] {
        let [a, b, c] = self.coefficients();
        [a, b, c, BigInt::from(self.rhs)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> IntPoint {
        IntPoint::new(x, y)
    }

    fn fam(kind: RdKind, n: u64) -> RdFamily {
        RdFamily::new(kind, n).unwrap()
    }

    #[test]
    fn fundamentals() {
        assert_eq!(rd_fundamental(&fam(RdKind::NsqMinus1, 2)), pt(2, 1));
        assert_eq!(rd_fundamental(&fam(RdKind::NsqPlus2, 5)), pt(26, 5));
        assert_eq!(rd_fundamental(&fam(RdKind::NsqMinus4, 7)), pt(161, 24));
        assert_eq!(rd_fundamental(&fam(RdKind::NsqMinus4, 3)), pt(9, 4));
        for n in (3..80).step_by(2) {
            let f = fam(RdKind::NsqMinus4, n);
            assert!(PellConic::new(f.radicand(), 1).unwrap().contains(&rd_fundamental(&f)));
        }
    }

    #[test]
    fn unit_action() {
        let k4 = BigInt::from(4);
        assert_eq!(act(&k4, &pt(2, 0), 1).unwrap(), pt(8, 2));
        assert_eq!(act(&k4, &pt(8, 2), 1).unwrap(), pt(30, 8));
        assert_eq!(act(&k4, &pt(8, 2), 0).unwrap(), pt(8, 2));
        assert_eq!(act(&k4, &pt(2, 0), -1).unwrap(), pt(0, -2));
        let k9 = BigInt::from(9);
        let p = act(&k9, &pt(3, 0), 25).unwrap();
        assert!(contains(&Conic::imo(9).unwrap(), &p));
        assert_eq!(act(&k9, &p, -25).unwrap(), pt(3, 0));
        assert!(matches!(act(&k4, &pt(1, 1), 1), Err(Error::PointNotOnConic { .. })));
    }

    #[test]
    fn c4_correspondence() {
        assert_eq!(c4_to_pell(&pt(8, 2)).unwrap(), pt(2, 1));
        assert_eq!(pell_to_c4(&pt(7, 4)).unwrap(), pt(30, 8));
        assert_eq!(pell_to_c4(&pt(1, 0)).unwrap(), pt(2, 0));
        assert_eq!(c4_to_pell(&pt(3, 0)), Err(Error::OddCoordinate(3.into())));
        assert!(matches!(c4_to_pell(&pt(4, 0)), Err(Error::PointNotOnConic { .. })));
        assert!(matches!(pell_to_c4(&pt(2, 2)), Err(Error::PointNotOnConic { .. })));
    }

    #[test]
    fn vieta_forms() {
        let f = VietaForm::new(2, 1).unwrap();
        assert_eq!(f.shear(), &BigInt::from(1));
        assert_eq!(f.from_pell(&pt(3, 2)).unwrap(), pt(1, 2));
        let f = VietaForm::new(7, 1).unwrap();
        assert_eq!(f.shear(), &BigInt::from(3));
        assert_eq!(f.coefficients(), [1.into(), 6.into(), 2.into()]);
        assert_eq!(f.from_pell(&pt(8, 3)).unwrap(), pt(-1, 3));
        let f = VietaForm::new(3, 1).unwrap();
        assert_eq!(f.shear(), &BigInt::from(2));
        assert_eq!(f.from_pell(&pt(2, 1)).unwrap(), pt(0, 1));
        assert!(VietaForm::new(9, 1).is_err());
    }

    #[test]
    fn vieta_jumps_on_pell_forms() {
        // x^2 + 2xy - y^2 = 1: jumps from (1, 0) reach the pull-backs of all units.
        let f = VietaForm::new(2, 1).unwrap();
        let mut cur = pt(1, 0);
        let mut seen = vec![cur.clone()];
        for i in 0..12 {
            cur = if i % 2 == 0 { f.sharp(&cur).unwrap() } else { f.flat(&cur).unwrap() };
            assert!(f.contains(&cur));
            seen.push(cur.clone());
        }
        let pell: Vec<IntPoint> = seen.iter().map(|p| f.to_pell(p).unwrap()).collect();
        assert!(pell.contains(&pt(3, 2)) || pell.contains(&pt(3, -2)));
        assert!(pell.iter().all(|p| PellConic::new(2, 1).unwrap().contains(p)));
        let g = VietaForm::new(13, 1).unwrap();
        assert_eq!(g.shear(), &BigInt::from(4));
        assert!(matches!(g.sharp(&pt(1, 0)), Err(Error::NonIntegralJump(_))));
    }
}
