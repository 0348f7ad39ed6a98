use num_bigint::BigInt;
use proptest::prelude::*;
use vieta_core::conic::{contains, Conic};
use vieta_core::oracle::{box_search, imo_scan, norm_scan, two_square_rep, verify_final_prop, Workers};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_search_is_sound_and_worker_independent(p in -30i64..30, q in -60i64..60, b in 1u64..80, w in 1usize..9) {
        prop_assume!(q != 0);
        let c = Conic::new(p, q).unwrap();
        let one = box_search(&c, b, Workers::new(1)).unwrap();
        let many = box_search(&c, b, Workers::new(w)).unwrap();
        prop_assert_eq!(&one, &many);
        prop_assert!(one.hits.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(one.hits.iter().all(|h| contains(&c, h)));
    }

    #[test]
    fn two_squares_match_brute_force(n in 1u64..20_000) {
        let brute = (0..=n).take_while(|a| a * a <= n).any(|a| {
            let r = ((n - a * a) as f64).sqrt() as u64;
            (r.saturating_sub(1)..=r + 1).any(|b| a * a + b * b == n)
        });
        prop_assert_eq!(two_square_rep(&BigInt::from(n)).unwrap().is_some(), brute);
    }
}

#[test]
fn scans_are_worker_independent() {
    for w in [2, 3, 8] {
        assert_eq!(imo_scan(150, Workers::new(1)), imo_scan(150, Workers::new(w)));
        assert_eq!(verify_final_prop(90, Workers::new(1)), verify_final_prop(90, Workers::new(w)));
        assert_eq!(norm_scan(45, 30, Workers::new(1)), norm_scan(45, 30, Workers::new(w)));
    }
}
