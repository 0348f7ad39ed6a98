use num_bigint::BigInt;

use super::pell_to_c4;
use crate::conic::{contains, Conic, IntPoint};
use crate::qfield::QuadElt;

/// One row of the unit/point table for `C_4`: `sign * eps^exponent` with
/// `eps = 2 + sqrt 3`, and its point `(2x + 4y, 2y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub exponent: i64,
    pub sign: i8,
    pub unit: QuadElt,
    pub point: IntPoint,
    pub on_conic: bool,
    /// The point as it appears in the published table.
    pub printed: IntPoint,
    pub printed_on_conic: bool,
    pub erratum: Option<String>,
}

const PRINTED_PLUS: [(i64, i64); 6] = [(-2, -8), (0, -2), (2, 0), (8, 2), (30, 8), (82, 30)];
const PRINTED_MINUS: [(i64, i64); 6] = [(-30, 8), (-8, 2), (-2, 0), (0, -2), (2, -8), (8, -30)];

/// Rows for `exponent` in `-2..=3`, positive sign first, each compared with
/// the published point.
pub fn regen_table1() -> Vec<Table1Row> {
    let c4 = Conic::imo(4).expect("valid conic");
    let eps = QuadElt::new(2, 1, 3, 1).expect("valid unit");
    let mut rows = Vec::with_capacity(12);
    for (sign, printed) in [(1i8, PRINTED_PLUS), (-1, PRINTED_MINUS)] {
        for (exponent, &(px, py)) in (-2i64..=3).zip(printed.iter()) {
            let unit = eps.pow(exponent).expect("unit powers exist").scale(&BigInt::from(sign));
            let pell = IntPoint { x: unit.u().clone(), y: unit.v().clone() };
            let point = pell_to_c4(&pell).expect("unit powers lie on the Pell conic");
            let printed = IntPoint::new(px, py);
            let printed_on_conic = contains(&c4, &printed);
            let erratum = (printed != point).then(|| {
                let status = if printed_on_conic { "on C_4 but not the image of this unit" } else { "not on C_4" };
                format!("printed {printed} ({status}); regenerated {point}")
            });
            rows.push(Table1Row {
                exponent,
                sign,
                on_conic: contains(&c4, &point),
                unit,
                point,
                printed,
                printed_on_conic,
                erratum,
            });
        }
    }
    rows
}
