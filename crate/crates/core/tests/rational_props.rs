use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use vieta_core::conic::Conic;
use vieta_core::rational_param::{pell_point_from_t, point_from_t, t_from_point, CentralConic, PellParamConic, SlopeParam};

fn rational() -> impl Strategy<Value = BigRational> {
    (-100i64..=100, 1i64..=100).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn roundtrip(t in rational(), m in prop::sample::select(vec![2i64, 3, 5])) {
        let m = BigInt::from(m);
        let m2 = &m * &m;
        let conic = Conic::new(m2.clone(), m2).unwrap();
        let slope = SlopeParam::Finite(t);
        let pt = point_from_t(&m, &slope).unwrap();
        prop_assert!(conic.contains_rat(&pt));
        prop_assert_eq!(t_from_point(&m, &pt).unwrap(), slope);
    }

    #[test]
    fn pell_points(t in rational()) {
        prop_assert!(PellParamConic.contains_rat(&pell_point_from_t(&t)));
    }
}

#[test]
fn infinity_roundtrips() {
    for m in 1..20i64 {
        let m = BigInt::from(m);
        let pt = point_from_t(&m, &SlopeParam::Infinity).unwrap();
        assert_eq!(t_from_point(&m, &pt).unwrap(), SlopeParam::Infinity);
    }
}
