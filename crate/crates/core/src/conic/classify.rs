//! Solvability of `x^2 - p*x*y + y^2 = q` in integers, decided by the known
//! theorems wherever they apply.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntPoint;
use crate::arith::exact_sqrt;
use crate::oracle::{rep_c2_plus_3d2, two_square_rep, FACTOR_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    UnsolvableByTheorem,
    SolvableSquare,
    SolvableFamily,
    SolvableRepresentation,
    UnsupportedRange,
}

impl VerdictTag {
    pub fn name(self) -> &'static str {
        match self {
            VerdictTag::UnsolvableByTheorem => "UnsolvableByTheorem",
            VerdictTag::SolvableSquare => "SolvableSquare",
            VerdictTag::SolvableFamily => "SolvableFamily",
            VerdictTag::SolvableRepresentation => "SolvableRepresentation",
            VerdictTag::UnsupportedRange => "UnsupportedRange",
        }
    }

    pub fn is_solvable(self) -> bool {
        matches!(
            self,
            VerdictTag::SolvableSquare | VerdictTag::SolvableFamily | VerdictTag::SolvableRepresentation
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub tag: VerdictTag,
    pub witnesses: Vec<IntPoint>,
    pub theorem_id: String,
    pub notes: String,
}

impl ClassificationVerdict {
    fn new(tag: VerdictTag, witnesses: Vec<IntPoint>, theorem_id: &str, notes: impl Into<String>) -> Self {
        ClassificationVerdict {
            tag,
            witnesses,
            theorem_id: theorem_id.to_string(),
            notes: notes.into(),
        }
    }
}

/// Classify `x^2 - p*x*y + y^2 = q`.
///
/// Negative `p` is reflected by `y -> -y`. The definite and degenerate cases
/// `p` in `{0, 1, 2}` are answered through representation tests; for `p > 2`
/// the verdict comes from the bounds `0 < q <= p + 1` and `3 - p <= q < 0`
/// and the two boundary families `q = p + 2`, `q = 2 - p`. Anything else is
/// `UnsupportedRange` unless `q` is a positive square (then `(sqrt q, 0)` is a
/// witness).
pub fn classify(p: &BigInt, q: &BigInt) -> ClassificationVerdict {
    if q.is_zero() {
        return ClassificationVerdict::new(VerdictTag::UnsupportedRange, vec![], "none", "q = 0 is excluded");
    }
    if p.is_negative() {
        let mut v = classify(&-p, q);
        for w in &mut v.witnesses {
            w.y = -&w.y;
        }
        v.notes = if v.notes.is_empty() {
            format!("reflected y -> -y from p = {}", -p)
        } else {
            format!("reflected y -> -y from p = {}; {}", -p, v.notes)
        };
        return v;
    }

    if *p <= BigInt::from(2) {
        return match p.to_u32().unwrap_or(0) {
            2 => classify_p2(q),
            1 => classify_p1(q),
            _ => classify_p0(q),
        };
    }
    classify_hyperbolic(p, q)
}

fn square_witness(q: &BigInt) -> Option<Vec<IntPoint>> {
    exact_sqrt(q).map(|r| vec![IntPoint { x: r, y: BigInt::zero() }])
}

fn classify_p2(q: &BigInt) -> ClassificationVerdict {
    match square_witness(q) {
        Some(w) => ClassificationVerdict::new(VerdictTag::SolvableSquare, w, "p2-square", "q = (x - y)^2"),
        None => ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "p2-square",
            "q = (x - y)^2 must be a square",
        ),
    }
}

fn too_large(q: &BigInt) -> ClassificationVerdict {
    ClassificationVerdict::new(
        VerdictTag::UnsupportedRange,
        vec![],
        "none",
        format!("|q| = {} exceeds the factorization limit {FACTOR_LIMIT}", q.abs()),
    )
}

fn classify_p1(q: &BigInt) -> ClassificationVerdict {
    if q.is_negative() {
        return ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "p1-definite",
            "x^2 - xy + y^2 is positive definite",
        );
    }
    // (2x - y)^2 + 3y^2 = 4q
    match rep_c2_plus_3d2(&(q * 4)) {
        Ok(Some((c, d))) => {
            let x = (&c + &d).div_floor(&BigInt::from(2));
            ClassificationVerdict::new(
                VerdictTag::SolvableRepresentation,
                vec![IntPoint { x, y: d.clone() }],
                "p1-eisenstein",
                format!("4q = {c}^2 + 3*{d}^2"),
            )
        }
        Ok(None) => ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "p1-eisenstein",
            "a prime = 2 mod 3 divides q to an odd power",
        ),
        Err(_) => too_large(q),
    }
}

fn classify_p0(q: &BigInt) -> ClassificationVerdict {
    if q.is_negative() {
        return ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "p0-definite",
            "x^2 + y^2 is positive definite",
        );
    }
    match two_square_rep(q) {
        Ok(Some((a, b))) => ClassificationVerdict::new(
            VerdictTag::SolvableRepresentation,
            vec![IntPoint { x: a.clone(), y: b.clone() }],
            "p0-two-squares",
            format!("q = {a}^2 + {b}^2"),
        ),
        Ok(None) => ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "p0-two-squares",
            "a prime = 3 mod 4 divides q to an odd power",
        ),
        Err(_) => too_large(q),
    }
}

fn classify_hyperbolic(p: &BigInt, q: &BigInt) -> ClassificationVerdict {
    let one = BigInt::from(1);
    if q.is_positive() && *q <= p + 1 {
        return match square_witness(q) {
            Some(w) => ClassificationVerdict::new(VerdictTag::SolvableSquare, w, "TM1", ""),
            None => ClassificationVerdict::new(
                VerdictTag::UnsolvableByTheorem,
                vec![],
                "TM1",
                "0 < q <= p + 1 and q is not a square",
            ),
        };
    }
    if *q == p + 2 {
        return ClassificationVerdict::new(
            VerdictTag::SolvableFamily,
            vec![IntPoint { x: one.clone(), y: -&one }, IntPoint { x: one, y: p + 1 }],
            "TM1-boundary",
            "infinite chain through (1, -1)",
        );
    }
    if *q == 2 - p {
        return ClassificationVerdict::new(
            VerdictTag::SolvableFamily,
            vec![IntPoint { x: one.clone(), y: one.clone() }, IntPoint { x: one, y: p - 1 }],
            "Thpq-family",
            "infinite chain through (1, 1) and its negative",
        );
    }
    if q.is_negative() && *q >= 3 - p {
        return ClassificationVerdict::new(
            VerdictTag::UnsolvableByTheorem,
            vec![],
            "Thpq",
            "3 - p <= q < 0",
        );
    }
    if let Some(w) = square_witness(q) {
        return ClassificationVerdict::new(
            VerdictTag::SolvableSquare,
            w,
            "axis-point",
            "q is a square, outside the theorem ranges",
        );
    }
    ClassificationVerdict::new(
        VerdictTag::UnsupportedRange,
        vec![],
        "none",
        "no theorem covers this (p, q); fall back to a box search",
    )
}
