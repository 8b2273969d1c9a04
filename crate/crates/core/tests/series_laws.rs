mod common;

use common::*;
use mzv_core::identities::{log_gamma_series, rhs_main, sakata_rhs};
use mzv_core::TruncatedSeries;
use proptest::prelude::*;

fn with_unit(f: &TruncatedSeries) -> TruncatedSeries {
    f.add(&TruncatedSeries::one(f.order())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_laws(f in graded_series_strategy(8, 2), g in graded_series_strategy(8, 2), h in graded_series_strategy(8, 2)) {
        let (f, g, h) = (with_unit(&f), g, with_unit(&h));
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(TruncatedSeries::one(8).mul(&f).unwrap(), f);
    }

    #[test]
    fn exp_group_law(f in graded_series_strategy(8, 2)) {
        let product = f.exp().unwrap().mul(&f.neg().exp().unwrap()).unwrap();
        prop_assert_eq!(product, TruncatedSeries::one(8));
    }

    #[test]
    fn exp_additivity(f in graded_series_strategy(6, 2), g in graded_series_strategy(6, 2)) {
        let lhs = f.add(&g).unwrap().exp().unwrap();
        let rhs = f.exp().unwrap().mul(&g.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneity_preserved(f in graded_series_strategy(7, 3), g in graded_series_strategy(7, 3)) {
        prop_assert!(f.is_weight_homogeneous());
        prop_assert!(f.mul(&g).unwrap().is_weight_homogeneous());
        prop_assert!(f.exp().unwrap().is_weight_homogeneous());
    }

    #[test]
    fn flip_is_an_involutive_ring_map(f in graded_series_strategy(7, 2), g in graded_series_strategy(7, 2)) {
        prop_assert_eq!(f.flip().flip(), f.clone());
        prop_assert_eq!(f.mul(&g).unwrap().flip(), f.flip().mul(&g.flip()).unwrap());
        prop_assert_eq!(f.exp().unwrap().flip(), f.flip().exp().unwrap());
    }
}

#[test]
fn generator_series_are_homogeneous() {
    for order in [0, 1, 5, 10] {
        assert!(log_gamma_series(order).is_weight_homogeneous());
        assert!(rhs_main(order).is_weight_homogeneous());
        assert!(sakata_rhs(order).is_weight_homogeneous());
        assert!(log_gamma_series(order).exp().unwrap().is_weight_homogeneous());
    }
}

#[test]
fn exp_via_horner_agrees_with_power_sum() {
    // independent route: sum f^n / n! with explicit powers, no recurrence
    let order = 8;
    let a = log_gamma_series(order);
    let mut power = TruncatedSeries::one(order);
    let mut sum = TruncatedSeries::one(order);
    let mut factorial = num_bigint::BigInt::from(1);
    for n in 1..=order {
        power = power.mul(&a).unwrap();
        factorial *= n;
        let inv = mzv_core::Coefficient::new(1.into(), factorial.clone());
        sum = sum.add(&power.scale(&inv)).unwrap();
    }
    assert_eq!(sum, a.exp().unwrap());
}
