mod common;

use common::{brute_force_chain_length, brute_force_is_ideal, poset_strategy, vee};
use latmin::gen::labeled_posets;
use latmin::{verify_birkhoff_roundtrip, ElementSet, Poset};
use proptest::prelude::*;

#[test]
fn chain_length_examples_match_enumeration() {
    let c = Poset::chain(3);
    assert_eq!(brute_force_chain_length(&c, 0, 2), Some(2));
    assert_eq!(c.max_chain_length(0, 2), Some(2));
    assert_eq!(brute_force_chain_length(&vee(), 0, 2), Some(1));
    assert_eq!(brute_force_chain_length(&vee(), 0, 1), None);
}

#[test]
fn every_labeled_poset_up_to_four() {
    for n in 0..=4 {
        for p in labeled_posets(n) {
            let ideals = p.ideals().unwrap();
            assert!(ideals.is_union_intersection_closed().unwrap());
            assert!(verify_birkhoff_roundtrip(&p).unwrap(), "{p:?}");
            for x in ElementSet::all(n) {
                assert_eq!(ideals.contains(x), brute_force_is_ideal(&p, x));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_axioms(p in poset_strategy(8)) {
        let n = p.len();
        for i in 0..n {
            prop_assert!(p.leq(i, i));
            for j in 0..n {
                if i != j {
                    prop_assert!(!(p.leq(i, j) && p.leq(j, i)));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) {
                        prop_assert!(p.leq(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn ideals_are_exactly_the_down_closed_sets(p in poset_strategy(8)) {
        let ideals = p.ideals().unwrap();
        for x in ElementSet::all(p.len()) {
            prop_assert_eq!(ideals.contains(x), brute_force_is_ideal(&p, x));
        }
        prop_assert!(ideals.is_union_intersection_closed().unwrap());
    }

    #[test]
    fn birkhoff_roundtrip(p in poset_strategy(8)) {
        prop_assert!(verify_birkhoff_roundtrip(&p).unwrap());
    }

    #[test]
    fn chain_lengths_match_enumeration(p in poset_strategy(8)) {
        for j in 0..p.len() {
            for i in 0..p.len() {
                prop_assert_eq!(p.max_chain_length(j, i), brute_force_chain_length(&p, j, i));
            }
        }
    }

    #[test]
    fn covers_regenerate_the_order(p in poset_strategy(8)) {
        let q = Poset::from_relations(p.len(), &p.covers()).unwrap();
        prop_assert_eq!(q, p);
    }
}
