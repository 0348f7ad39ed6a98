use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational_param::{CentralConic, RatPoint};

fn coeffs<C: CentralConic>(c: &C) -> [BigRational; 4] {
    c.form().map(BigRational::from_integer)
}

fn quad(k: &[BigRational; 4], x: &BigRational, y: &BigRational) -> BigRational {
    &k[0] * x * x + &k[1] * x * y + &k[2] * y * y
}

/// `P + Q` with neutral element `N`: the second intersection of the conic
/// with the line through `N` parallel to `PQ` (the tangent at `P` when
/// `P = Q`). A line tangent at `N` gives `N`.
pub fn group_add<C: CentralConic>(c: &C, n: &RatPoint, p: &RatPoint, q: &RatPoint) -> Result<RatPoint> {
    for pt in [n, p, q] {
        if !c.contains_rat(pt) {
            return Err(Error::PointNotOnConic { x: pt.x.to_string(), y: pt.y.to_string() });
        }
    }
    let k = coeffs(c);
    let two = BigRational::from_integer(2.into());
    let (dx, dy) = if p == q {
        let gx = &two * &k[0] * &p.x + &k[1] * &p.y;
        let gy = &k[1] * &p.x + &two * &k[2] * &p.y;
        (-gy, gx)
    } else {
        (&q.x - &p.x, &q.y - &p.y)
    };
    let lead = quad(&k, &dx, &dy);
    if lead.is_zero() {
        return Err(Error::DegenerateConstruction(format!(
            "direction ({dx}, {dy}) is asymptotic; the line through N meets the conic once"
        )));
    }
    let gx = &two * &k[0] * &n.x + &k[1] * &n.y;
    let gy = &k[1] * &n.x + &two * &k[2] * &n.y;
    let s = -(gx * &dx + gy * &dy) / lead;
    Ok(RatPoint::new(&n.x + &s * dx, &n.y + s * dy))
}
