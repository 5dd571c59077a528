mod common;

use common::*;
use proptest::prelude::*;
use qrotundus::annulus::{minus_partner_of_plus, AnnulusKind, AnnulusTriangulation, LoopStatistic};
use qrotundus::farey::RegularCF;
use qrotundus::polygon::{FanTriangulation, Statistic};
use qrotundus::qcore::{rotundus_minus, rotundus_plus};

fn a_seq() -> impl Strategy<Value = Vec<i64>> {
    (1usize..3).prop_flat_map(|m| proptest::collection::vec(1i64..=3, 2 * m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fan_paths(a in a_seq()) {
        let fan = FanTriangulation::from_regular(&RegularCF::new(a.clone()).unwrap());
        let (num, den) = q_rational_by_generators(&a);
        let start = fan.k + 1;
        for (to, target) in [(1, num), (0, den)] {
            let paths = fan.enumerate_paths(start, to).unwrap();
            prop_assert!(paths.iter().all(|p| p.weight == p.coarea as i64));
            let g = fan.path_generating_poly(start, to, Statistic::Coarea).unwrap();
            prop_assert_eq!(to_int_poly(&g), target);
        }
        prop_assert_eq!(fan.quiddity().iter().sum::<usize>(), 3 * (fan.n - 2));
    }

    #[test]
    fn plus_annulus(a in a_seq()) {
        let t = AnnulusTriangulation::build(AnnulusKind::Plus, &a).unwrap();
        let r = rotundus_plus(&a).unwrap();
        prop_assert_eq!(t.loop_generating_poly(LoopStatistic::Area).unwrap(), r.clone());
        prop_assert_eq!(t.loop_generating_poly(LoopStatistic::Coarea).unwrap(), r.clone());
        prop_assert_eq!(t.loop_poly_via_paths().unwrap(), r.clone());
        prop_assert_eq!(t.closure_generating_poly().unwrap(), r);
        prop_assert!(t.is_isomorphic(&minus_partner_of_plus(&t.fan.a).unwrap()));
    }

    #[test]
    fn minus_annulus(c in proptest::collection::vec(2i64..=5, 1..5)) {
        let r = rotundus_minus(&c).unwrap();
        match AnnulusTriangulation::build(AnnulusKind::Minus, &c) {
            Ok(t) => {
                prop_assert_eq!(t.loop_generating_poly(LoopStatistic::Coarea).unwrap(), r.clone());
                prop_assert_eq!(t.count_matchings().unwrap() as i128, rotundus_minus_at(&c, 1));
                let quiddity: Vec<i64> = t.inner_quiddity().iter().map(|&x| x as i64).collect();
                prop_assert_eq!(quiddity, c);
            }
            // Only the all-2 sequences leave no outer marked point.
            Err(_) => prop_assert!(c.iter().all(|&x| x == 2)),
        }
    }
}
