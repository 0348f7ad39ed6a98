use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use vieta_core::oracle::{norm_scan, Workers};
use vieta_core::qfield::{
    davenport_min_norms, element_to_point, point_to_element, rd_delta, rd_unit, reduce_by_unit, reduce_nsq_plus2,
    small_norm_classify, theorem_threshold, QuadElt, RdFamily, RdKind,
};
use vieta_core::{conic::chain, Conic};

const RADICANDS: [(i64, RdKind, u64); 6] = [
    (3, RdKind::NsqMinus1, 2),
    (8, RdKind::NsqMinus1, 3),
    (15, RdKind::NsqMinus1, 4),
    (24, RdKind::NsqMinus1, 5),
    (27, RdKind::NsqPlus2, 5),
    (45, RdKind::NsqMinus4, 7),
];

fn element(m: i64) -> impl Strategy<Value = QuadElt> {
    let half = m % 4 == 1;
    (-10_000i64..10_000, -10_000i64..10_000, any::<bool>()).prop_map(move |(u, v, h)| {
        if half && h {
            let v = if (u - v) % 2 != 0 { v + 1 } else { v };
            QuadElt::new(u, v, m, 2).unwrap()
        } else {
            QuadElt::new(u, v, m, 1).unwrap()
        }
    })
}

fn nonzero(m: i64) -> impl Strategy<Value = QuadElt> {
    element(m).prop_filter("nonzero", |e| !e.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn norm_is_multiplicative(
        (a, b) in prop::sample::select(vec![3i64, 5, 8, 13, 27, 45]).prop_flat_map(|m| (element(m), element(m)))
    ) {
        prop_assert_eq!(a.mul(&b).unwrap().norm(), a.norm() * b.norm());
        prop_assert_eq!(a.mul(&a.conj()).unwrap(), QuadElt::from_int(a.norm(), a.m().clone()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_bounds_hold(
        (i, xi) in (0usize..6).prop_flat_map(|i| (Just(i), nonzero(RADICANDS[i].0))),
        j in -30i64..30,
    ) {
        let (_, kind, n) = RADICANDS[i];
        let eps = rd_unit(&RdFamily::new(kind, n).unwrap());
        let shifted = xi.mul(&eps.pow(j).unwrap()).unwrap();
        let r = reduce_by_unit(&shifted, &eps).unwrap();
        prop_assert!(r.verify().is_ok());
        prop_assert_eq!(r.nu.clone(), xi.norm().abs());
        // the window is a fundamental domain, so the orbit representative is unique
        prop_assert_eq!(r.reduced, reduce_by_unit(&xi, &eps).unwrap().reduced);
    }

    #[test]
    fn delta_reduction_bounds_hold(xi in nonzero(27), j in -10i64..10) {
        let eps = rd_unit(&RdFamily::new(RdKind::NsqPlus2, 5).unwrap());
        let r = reduce_nsq_plus2(&xi.mul(&eps.pow(j).unwrap()).unwrap(), 5).unwrap();
        prop_assert!(r.verify().is_ok());
    }
}

#[test]
fn unit_orbit_preserves_norm() {
    let xi = QuadElt::new(9, 5, 3, 1).unwrap();
    let eps = QuadElt::new(2, 1, 3, 1).unwrap();
    for j in -20..=20 {
        assert_eq!(xi.mul(&eps.pow(j).unwrap()).unwrap().norm().abs(), xi.norm().abs());
    }
    let xi = QuadElt::new(9, 1, 45, 2).unwrap();
    let eps = QuadElt::new(7, 1, 45, 2).unwrap();
    for j in -20..=20 {
        assert_eq!(xi.mul(&eps.pow(j).unwrap()).unwrap().norm(), xi.norm());
    }
}

#[test]
fn delta_squared_is_twice_the_unit() {
    for n in 1..=100u64 {
        let d = rd_delta(n).unwrap();
        let e = rd_unit(&RdFamily::new(RdKind::NsqPlus2, n).unwrap());
        assert_eq!(d.mul(&d).unwrap(), e.scale(&BigInt::from(2)));
        assert_eq!(d.norm(), BigInt::from(-2));
    }
}

#[test]
fn points_map_to_elements_of_norm_k() {
    for k in [3i64, 4, 5, 9, 16, -4, -7, -9] {
        let kb = BigInt::from(k);
        let c = Conic::imo(k).unwrap();
        let seeds = vieta_core::oracle::box_search(&c, 60, Workers::new(1)).unwrap().hits;
        assert_eq!(!seeds.is_empty(), [4, 9, 16].contains(&k), "k={k}");
        for s in &seeds {
            for p in chain(&c, s, 3, 3).unwrap() {
                let a = point_to_element(&kb, &p).unwrap();
                assert_eq!(a.norm(), kb);
                assert_eq!(element_to_point(&kb, &a).unwrap(), p);
            }
        }
    }
}

#[test]
fn small_norm_theorems_against_oracle() {
    let cases: Vec<RdFamily> = (2..=20)
        .map(|n| RdFamily::new(RdKind::NsqMinus1, n).unwrap())
        .chain((7..=21).step_by(2).map(|n| RdFamily::new(RdKind::NsqMinus4, n).unwrap()))
        .chain((5..=20).map(|n| RdFamily::new(RdKind::NsqPlus2, n).unwrap()))
        .collect();
    for f in cases {
        let m: u64 = f.radicand().try_into().unwrap();
        let limit = theorem_threshold(&f) - 1;
        let report = norm_scan(m, limit, Workers::new(1)).unwrap();
        for e in report.hits.iter().filter(|e| e.solvable()) {
            let shape = small_norm_classify(&f, e.nu).unwrap();
            assert!(shape.admits(e.nu), "{f:?}: nu = {} solvable but {shape:?}", e.nu);
        }
    }
}

#[test]
fn davenport_bounds_against_oracle() {
    for t in 2..=25u64 {
        let b = davenport_min_norms(t).unwrap();
        let r = norm_scan(t * t - 1, 2 * t + 2, Workers::new(1)).unwrap();
        let sq = |x: u64| (x as f64).sqrt().round().powi(2) as u64 == x;
        for e in &r.hits {
            if e.nu < b.plus.0 && e.plus.is_some() {
                assert!(sq(e.nu), "t={t}: +{} attained", e.nu);
            }
            if e.nu < b.minus.0 && e.minus.is_some() {
                assert!(sq(e.nu), "t={t}: -{} attained", e.nu);
            }
        }
        assert!(r.hits[b.plus.0 as usize - 1].plus.is_some());
        assert!(r.hits[b.minus.0 as usize - 1].minus.is_some());
    }
}
