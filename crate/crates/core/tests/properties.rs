//! Relations between invariants computed by different modules.

use proptest::prelude::*;
use tolcomplex::collapse::{collapsibility_number, collapsibility_with_certificate};
use tolcomplex::format::{format_complex, parse_complex};
use tolcomplex::geometry::{nerve_of_boxes, random_boxes, random_complex};
use tolcomplex::leray::leray_number;
use tolcomplex::report::analyze;
use tolcomplex::tolerance::tolerance_complex;
use tolcomplex::{betti_numbers, SimplicialComplex, VertexSet};

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7, 0.2f64..0.8, any::<u64>()).prop_map(|(n, p, s)| random_complex(n, p, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn collapsibility_bounds_leray_bounds_helly(k in complex()) {
        let (c, cert) = collapsibility_with_certificate(&k);
        cert.replay(&k, c).unwrap();
        let l = leray_number(&k);
        prop_assert!(c >= l, "C = {c} < L = {l}");
        prop_assert!(l >= k.helly_number());
    }

    #[test]
    fn tolerance_only_grows_invariants_boundedly(k in complex(), t in 0usize..3) {
        let tk = tolerance_complex(&k, t);
        prop_assert!(k.is_subcomplex_of(&tk));
        prop_assert!(leray_number(&tk) <= leray_number(&k).max(1) * (t + 1) + t + 64);
        prop_assert_eq!(tolerance_complex(&tk, 1), tolerance_complex(&k, t + 1));
    }

    #[test]
    fn files_round_trip(k in complex()) {
        prop_assert_eq!(parse_complex(&format_complex(&k)).unwrap(), k);
    }

    #[test]
    fn analysis_agrees_with_modules(k in complex()) {
        let a = analyze(&k);
        prop_assert_eq!(a.collapsibility_number, collapsibility_number(&k));
        prop_assert_eq!(a.leray_number, leray_number(&k));
        let b = betti_numbers(&k).unwrap();
        prop_assert_eq!(b.euler_characteristic(), k.reduced_euler_characteristic());
        prop_assert_eq!(a.betti.unwrap(), b);
    }

    #[test]
    fn interval_nerves_are_one_collapsible(n in 1usize..10, seed in any::<u64>()) {
        let k = nerve_of_boxes(&random_boxes(1, n, seed, 12).unwrap());
        prop_assert!(collapsibility_number(&k) <= 1);
        prop_assert!(leray_number(&k) <= 1);
        prop_assert!(k.helly_number() <= 1);
    }

    #[test]
    fn planar_box_nerves_are_two_collapsible(n in 1usize..9, seed in any::<u64>()) {
        let k = nerve_of_boxes(&random_boxes(2, n, seed, 10).unwrap());
        prop_assert!(collapsibility_number(&k) <= 2);
        prop_assert!(k.helly_number() <= 1);
    }
}

#[test]
fn two_blocks_are_tight() {
    for t in 1..=3 {
        let k = tolcomplex::geometry::two_block_complex(t).unwrap();
        let tk = tolerance_complex(&k, t);
        assert_eq!(tk, SimplicialComplex::simplex_boundary(VertexSet::range(2 * t + 2)));
        assert_eq!(leray_number(&tk), 2 * t + 1);
    }
}
