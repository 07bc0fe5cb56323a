//! Randomized invariants over the public API.

use mixfield::fresnel::{fresnel_cs, g};
use mixfield::interference::{interference_approx, interference_exact};
use mixfield::link::{rate_near, rate_report};
use mixfield::steering::{far_steering, near_steering};
use mixfield::sweep::{read_csv, write_csv};
use mixfield::{
    element_offset, ArrayConfig, FarFieldDirection, FieldRegion, LinkBudget, NearFieldPoint,
    SweepRecord,
};
use proptest::prelude::*;

fn cfg(n: usize) -> ArrayConfig {
    ArrayConfig::new(n, 30e9).unwrap()
}

fn angle() -> impl Strategy<Value = f64> {
    -0.99f64..0.99
}

fn budget() -> impl Strategy<Value = LinkBudget> {
    (
        0.0f64..40.0,
        0.0f64..40.0,
        -80.0f64..-40.0,
        -110.0f64..-50.0,
    )
        .prop_map(|(pn, pf, b, s)| LinkBudget::from_db(pn, pf, b, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn steering_vectors_have_unit_norm(n in 1usize..600, psi in angle(), theta in angle(), r in 0.5f64..500.0) {
        let c = cfg(n);
        let a = far_steering(&c, FarFieldDirection::new(psi).unwrap());
        let b = near_steering(&c, NearFieldPoint::new(theta, r).unwrap());
        prop_assert!((a.norm() - 1.0).abs() < 1e-12);
        prop_assert!((b.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn offsets_are_antisymmetric(n_ant in 1usize..2000, frac in 0.0f64..1.0) {
        let n = ((n_ant as f64 * frac) as usize).min(n_ant - 1);
        let lhs = element_offset(n, n_ant).unwrap();
        let rhs = element_offset(n_ant - 1 - n, n_ant).unwrap();
        prop_assert_eq!(lhs, -rhs);
    }

    #[test]
    fn regions_never_move_inward(n in 1usize..1500, r1 in 0.01f64..1e4, r2 in 0.01f64..1e4) {
        let c = cfg(n);
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let a: FieldRegion = c.classify_region(lo).unwrap();
        prop_assert!(a <= c.classify_region(hi).unwrap());
    }

    #[test]
    fn fresnel_is_odd_and_bounded(x in -1e4f64..1e4) {
        let (c, s) = fresnel_cs(x).unwrap();
        let (cn, sn) = fresnel_cs(-x).unwrap();
        prop_assert_eq!(c, -cn);
        prop_assert_eq!(s, -sn);
        prop_assert!(c.abs() <= 0.78 && s.abs() <= 0.72);
    }

    #[test]
    fn kernel_is_a_normalized_correlation(b1 in -50.0f64..50.0, b2 in 1e-8f64..100.0) {
        let v = g(b1, b2).unwrap();
        prop_assert!((0.0..=1.0 + 1e-9).contains(&v), "G({b1}, {b2}) = {v}");
        prop_assert_eq!(v, g(-b1, b2).unwrap());
    }

    #[test]
    fn exact_correlation_is_bounded(n in 1usize..600, psi in angle(), theta in angle(), r in 0.1f64..1e3) {
        let v = interference_exact(&cfg(n), FarFieldDirection::new(psi).unwrap(), NearFieldPoint::new(theta, r).unwrap());
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v));
    }

    #[test]
    fn mirror_invariance(n in 1usize..600, psi in angle(), theta in angle(), r in 0.1f64..1e3) {
        let c = cfg(n);
        let f = |p: f64, t: f64| interference_exact(&c, FarFieldDirection::new(p).unwrap(), NearFieldPoint::new(t, r).unwrap());
        prop_assert!((f(psi, theta) - f(-psi, -theta)).abs() < 1e-12);
        let a = |p: f64, t: f64| interference_approx(&c, FarFieldDirection::new(p).unwrap(), NearFieldPoint::new(t, r).unwrap());
        prop_assert!((a(psi, theta) - a(-psi, -theta)).abs() < 1e-14);
    }

    #[test]
    fn rate_loss_respects_bound(link in budget(), n in 1usize..1100, r in 0.5f64..400.0, f in 0.0f64..=1.0) {
        let rep = rate_report(&link, &cfg(n), r, f).unwrap();
        prop_assert!(rep.rate_loss >= 0.0);
        prop_assert!(rep.rate_loss <= rep.rate_loss_bound);
        prop_assert!(rep.rate <= rep.rate_ideal);
        prop_assert!((rep.rate_ideal - rep.rate - rep.rate_loss).abs() < 1e-9);
    }

    #[test]
    fn rate_falls_as_leakage_grows(link in budget(), r in 0.5f64..400.0, f1 in 0.0f64..=1.0, f2 in 0.0f64..=1.0) {
        let c = cfg(256);
        let (lo, hi) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        prop_assert!(rate_near(&link, &c, r, hi).unwrap() <= rate_near(&link, &c, r, lo).unwrap());
    }

    #[test]
    fn csv_round_trip_is_byte_identical(
        vals in prop::collection::vec(prop::num::f64::NORMAL | prop::num::f64::ZERO, 14),
        n in prop::option::of(1usize..5000),
        warn in prop::option::of(any::<bool>()),
        region in 0usize..4,
    ) {
        let region = [None, Some(FieldRegion::TooClose), Some(FieldRegion::NearField), Some(FieldRegion::FarField)][region];
        let opt = |i: usize| (i % 3 != 0).then_some(vals[i]);
        let rec = SweepRecord {
            swept_value: vals[0],
            series_value: opt(1),
            n_antennas: n,
            theta: opt(2),
            psi: opt(4),
            r: opt(5),
            beta1: vals[3],
            beta2: vals[6],
            f_exact: opt(7),
            f_sum: opt(8),
            f_closed: opt(10),
            interference_power_dbm: opt(11),
            sinr_db: opt(13),
            rate: Some(vals[9]),
            rate_ideal: Some(vals[12]),
            rate_loss: opt(1),
            rate_loss_bound: opt(2),
            region,
            approx_domain_warning: warn,
        };
        let mut first = Vec::new();
        write_csv(std::slice::from_ref(&rec), &mut first).unwrap();
        let back = read_csv(first.as_slice()).unwrap();
        prop_assert_eq!(&back[0], &rec);
        let mut second = Vec::new();
        write_csv(&back, &mut second).unwrap();
        prop_assert_eq!(first, second);
    }
}
