//! Replayable descent certificates.
//!
//! For `p > 2` and `q > 0` a first-quadrant point `(a, b)` with `a != b`
//! jumps the larger coordinate down: the new coordinate equals
//! `(smaller^2 - q) / larger`, which is strictly below the old one. The walk
//! stops on an axis point (certifying `q = A^2`), on the diagonal, or when the
//! next jump would leave the first quadrant (the smaller coordinate is then
//! below `sqrt(q)`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ensure_on, flat_unchecked, imo_quotient, sharp_unchecked, Conic, IntPoint};
use crate::error::{Error, Result};

/// Descent aborts after this many steps.
pub const STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepTag {
    Sharp,
    Flat,
    NegateBoth,
    Swap,
}

impl StepTag {
    pub fn apply(self, c: &Conic, pt: &IntPoint) -> IntPoint {
        match self {
            StepTag::Sharp => sharp_unchecked(c, pt),
            StepTag::Flat => flat_unchecked(c, pt),
            StepTag::NegateBoth => pt.negated(),
            StepTag::Swap => pt.swapped(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StepTag::Sharp => "sharp",
            StepTag::Flat => "flat",
            StepTag::NegateBoth => "negate-both",
            StepTag::Swap => "swap",
        }
    }
}

/// How a descent ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Terminal {
    /// One coordinate is zero, so `q` is the square of the other.
    Axis,
    /// Equal coordinates: `q = x^2 (2 - p)`.
    Diagonal,
    /// Both coordinates positive, the smaller one strictly below `sqrt(q)`.
    ReducedBox,
}

impl Terminal {
    pub fn name(self) -> &'static str {
        match self {
            Terminal::Axis => "axis",
            Terminal::Diagonal => "diagonal",
            Terminal::ReducedBox => "reduced-box",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentCertificate {
    pub conic: Conic,
    pub start: IntPoint,
    pub steps: Vec<(StepTag, IntPoint)>,
    pub terminal: IntPoint,
    pub kind: Terminal,
}

fn first_quadrant(pt: &IntPoint) -> bool {
    !pt.x.is_negative() && !pt.y.is_negative()
}

impl DescentCertificate {
    /// Re-run every step from `start` and check all certificate invariants.
    pub fn replay(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::CertificateReplay(msg));
        let c = &self.conic;
        if ensure_on(c, &self.start).is_err() {
            return fail(format!("start {} is off the conic", self.start));
        }
        let mut cur = self.start.clone();
        for (i, (tag, listed)) in self.steps.iter().enumerate() {
            let next = tag.apply(c, &cur);
            if &next != listed {
                return fail(format!("step {i} ({}) gives {next}, listed {listed}", tag.name()));
            }
            if ensure_on(c, &next).is_err() {
                return fail(format!("step {i} point {next} is off the conic"));
            }
            let jump = matches!(tag, StepTag::Sharp | StepTag::Flat);
            if jump && first_quadrant(&cur) && first_quadrant(&next) && next.sum() >= cur.sum() {
                return fail(format!("step {i} does not decrease x + y ({cur} -> {next})"));
            }
            cur = next;
        }
        if cur != self.terminal {
            return fail(format!("terminal {} differs from last point {cur}", self.terminal));
        }
        let t = &self.terminal;
        let ok = match self.kind {
            Terminal::Axis => {
                (t.x.is_zero() || t.y.is_zero()) && {
                    let a = if t.x.is_zero() { &t.y } else { &t.x };
                    a * a == *c.q()
                }
            }
            Terminal::Diagonal => t.x == t.y,
            Terminal::ReducedBox => {
                t.x.is_positive() && t.y.is_positive() && {
                    let s = t.x.clone().min(t.y.clone());
                    &s * &s < *c.q()
                }
            }
        };
        if !ok {
            return fail(format!("terminal {t} does not satisfy the {} condition", self.kind.name()));
        }
        Ok(())
    }

    /// `A` with `A^2 = q`, when the terminal certifies that `q` is a square.
    pub fn square_root(&self) -> Option<BigInt> {
        let t = &self.terminal;
        match self.kind {
            Terminal::Axis => Some(if t.x.is_zero() { t.y.abs() } else { t.x.abs() }),
            Terminal::Diagonal if self.conic.p().is_one() => Some(t.x.abs()),
            _ => None,
        }
    }
}

/// Build a descent certificate for an integral point of a conic with `p > 2`, `q > 0`.
pub fn descend(c: &Conic, start: &IntPoint) -> Result<DescentCertificate> {
    if *c.p() <= BigInt::from(2) || !c.q().is_positive() {
        return Err(Error::UnsupportedRange(format!(
            "descent needs p > 2 and q > 0, got p = {}, q = {}",
            c.p(),
            c.q()
        )));
    }
    ensure_on(c, start)?;

    let mut steps = Vec::new();
    let mut cur = start.clone();
    let push = |tag: StepTag, cur: &mut IntPoint, steps: &mut Vec<(StepTag, IntPoint)>| {
        *cur = tag.apply(c, cur);
        steps.push((tag, cur.clone()));
    };

    // Normalise into the closed first quadrant.
    if !cur.x.is_positive() && !cur.y.is_positive() {
        push(StepTag::NegateBoth, &mut cur, &mut steps);
    } else if cur.x.is_positive() && cur.y.is_negative() {
        push(StepTag::Sharp, &mut cur, &mut steps);
    } else if cur.x.is_negative() && cur.y.is_positive() {
        push(StepTag::Flat, &mut cur, &mut steps);
    }

    let kind = loop {
        if steps.len() > STEP_BUDGET {
            return Err(Error::NonterminatingGuard(STEP_BUDGET));
        }
        if cur.x.is_zero() || cur.y.is_zero() {
            break Terminal::Axis;
        }
        if cur.x == cur.y {
            break Terminal::Diagonal;
        }
        let tag = if cur.y > cur.x { StepTag::Sharp } else { StepTag::Flat };
        let next = tag.apply(c, &cur);
        if !first_quadrant(&next) {
            break Terminal::ReducedBox;
        }
        push(tag, &mut cur, &mut steps);
    };

    Ok(DescentCertificate {
        conic: c.clone(),
        start: start.clone(),
        steps,
        terminal: cur,
        kind,
    })
}

/// A replay-verified descent on `C_k` for `(a^2 + b^2) / (ab + 1) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImoCertificate {
    pub k: BigInt,
    pub certificate: DescentCertificate,
    pub root: BigInt,
}

pub fn imo_certify(a: &BigInt, b: &BigInt) -> Result<ImoCertificate> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::PreconditionViolated(format!("a and b must be positive, got ({a}, {b})")));
    }
    let k = imo_quotient(a, b).ok_or_else(|| Error::NotDivisible { a: a.clone(), b: b.clone() })?;
    let conic = Conic::imo(k.clone())?;
    let start = IntPoint { x: a.clone(), y: b.clone() };
    let certificate = if k.is_one() {
        // (a - b)^2 + ab = 1 forces (1, 1), the only diagonal point on any C_k.
        DescentCertificate {
            conic,
            start: start.clone(),
            steps: Vec::new(),
            terminal: start,
            kind: Terminal::Diagonal,
        }
    } else {
        descend(&conic, &start)?
    };
    certificate.replay()?;
    let root = certificate
        .square_root()
        .filter(|r| r * r == k)
        .ok_or_else(|| Error::CertificateReplay(format!("descent for ({a}, {b}) did not certify k = {k} as a square")))?;
    Ok(ImoCertificate { k, certificate, root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::contains;

    fn pt(x: i64, y: i64) -> IntPoint {
        IntPoint::new(x, y)
    }

    #[test]
    fn descend_from_table_point() {
        let c4 = Conic::imo(4).unwrap();
        let cert = descend(&c4, &pt(30, 8)).unwrap();
        assert_eq!(cert.steps, vec![(StepTag::Flat, pt(2, 8)), (StepTag::Sharp, pt(2, 0))]);
        assert_eq!(cert.terminal, pt(2, 0));
        assert_eq!(cert.kind, Terminal::Axis);
        assert_eq!(cert.square_root(), Some(BigInt::from(2)));
        cert.replay().unwrap();
    }

    #[test]
    fn descend_already_terminal() {
        let c4 = Conic::imo(4).unwrap();
        let cert = descend(&c4, &pt(2, 0)).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(cert.terminal, pt(2, 0));
    }

    #[test]
    fn descend_on_c9() {
        let c9 = Conic::imo(9).unwrap();
        let cert = descend(&c9, &pt(3, 27)).unwrap();
        cert.replay().unwrap();
        assert!(cert.terminal == pt(3, 0) || cert.terminal == pt(0, 3));
        assert_eq!(cert.square_root(), Some(BigInt::from(3)));
    }

    #[test]
    fn descend_normalises_signs() {
        let c4 = Conic::imo(4).unwrap();
        let cert = descend(&c4, &pt(-30, -8)).unwrap();
        assert_eq!(cert.steps[0], (StepTag::NegateBoth, pt(30, 8)));
        assert_eq!(cert.terminal, pt(2, 0));
        cert.replay().unwrap();
        let cert = descend(&c4, &pt(-2, 0)).unwrap();
        assert_eq!(cert.steps, vec![(StepTag::NegateBoth, pt(2, 0))]);

        // Mixed signs on the q = p + 2 family.
        let c = Conic::new(5, 7).unwrap();
        let cert = descend(&c, &pt(1, -1)).unwrap();
        assert_eq!(cert.steps, vec![(StepTag::Sharp, pt(1, 6))]);
        assert_eq!(cert.kind, Terminal::ReducedBox);
        cert.replay().unwrap();
        let cert = descend(&c, &pt(-1, 1)).unwrap();
        cert.replay().unwrap();
        assert_eq!(cert.terminal, pt(6, 1));
    }

    #[test]
    fn family_descent_lands_in_reduced_box() {
        let c = Conic::new(5, 7).unwrap();
        let far = crate::conic::chain(&c, &pt(1, -1), 0, 12).unwrap();
        for p in far.iter().filter(|p| first_quadrant(p)) {
            let cert = descend(&c, p).unwrap();
            cert.replay().unwrap();
            assert_eq!(cert.kind, Terminal::ReducedBox);
            assert!(cert.terminal == pt(1, 6) || cert.terminal == pt(6, 1));
            assert_eq!(cert.square_root(), None);
        }
    }

    #[test]
    fn descend_errors() {
        let c = Conic::imo(2).unwrap();
        assert!(matches!(descend(&c, &pt(1, 1)), Err(Error::UnsupportedRange(_))));
        let c = Conic::new(5, -3).unwrap();
        assert!(matches!(descend(&c, &pt(1, 1)), Err(Error::UnsupportedRange(_))));
        let c4 = Conic::imo(4).unwrap();
        assert!(matches!(descend(&c4, &pt(82, 30)), Err(Error::PointNotOnConic { .. })));
    }

    #[test]
    fn tampered_certificates_fail_replay() {
        let c4 = Conic::imo(4).unwrap();
        let mut cert = descend(&c4, &pt(30, 8)).unwrap();
        cert.steps[0].1 = pt(2, 9);
        assert!(matches!(cert.replay(), Err(Error::CertificateReplay(_))));

        let mut cert = descend(&c4, &pt(30, 8)).unwrap();
        cert.kind = Terminal::ReducedBox;
        assert!(cert.replay().is_err());

        // A listed "descent" that climbs instead.
        let cert = DescentCertificate {
            conic: c4.clone(),
            start: pt(2, 8),
            steps: vec![(StepTag::Flat, pt(30, 8))],
            terminal: pt(30, 8),
            kind: Terminal::Axis,
        };
        assert!(cert.replay().is_err());
    }

    #[test]
    fn imo_certify_examples() {
        let big = |v: i64| BigInt::from(v);
        let cert = imo_certify(&big(30), &big(8)).unwrap();
        assert_eq!(cert.k, big(4));
        assert_eq!(cert.certificate.terminal, pt(2, 0));
        assert_eq!(cert.root, big(2));

        let cert = imo_certify(&big(27), &big(3)).unwrap();
        assert_eq!(cert.k, big(9));
        assert_eq!(cert.root, big(3));

        let cert = imo_certify(&big(1), &big(1)).unwrap();
        assert_eq!(cert.k, big(1));
        assert_eq!(cert.certificate.terminal, pt(1, 1));
        assert_eq!(cert.certificate.kind, Terminal::Diagonal);
        assert_eq!(cert.root, big(1));

        assert!(matches!(imo_certify(&big(2), &big(1)), Err(Error::NotDivisible { .. })));
        assert!(matches!(imo_certify(&big(0), &big(1)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn every_listed_point_is_on_the_conic() {
        let c = Conic::imo(16).unwrap();
        let ch = crate::conic::chain(&c, &pt(4, 0), 0, 20).unwrap();
        let cert = descend(&c, ch.last().unwrap()).unwrap();
        assert_eq!(cert.steps.len(), 20);
        assert!(cert.steps.iter().all(|(_, p)| contains(&c, p)));
    }
}
