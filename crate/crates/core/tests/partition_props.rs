mod common;

use common::{poset_strategy, vee};
use latmin::gen::random_bipartite_graph;
use latmin::partition::{ideal_of_independent_set, is_independent};
use latmin::{
    bis_to_poset, build_prop2, build_table, count_bis_bruteforce, estimate_ideal_count, g_r,
    partition_sum_dyadic, BipartiteGraphPlain, ConstructionVariant, DyadicSum, ElementSet,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn vee_sums() {
    let f0 = build_table(&vee(), ConstructionVariant::F0).unwrap();
    assert_eq!(partition_sum_dyadic(&f0).unwrap(), DyadicSum::new(163u32, 5));
    let p2 = build_prop2(&vee()).unwrap();
    // 5 + 2^-10 + 2 * 2^-5
    assert_eq!(partition_sum_dyadic(&p2).unwrap(), DyadicSum::new(5 * 1024 + 1 + 64u32, 10));
}

#[test]
fn k22_bridge() {
    let g = BipartiteGraphPlain::complete(2, 2);
    assert_eq!(count_bis_bruteforce(&g).unwrap(), 7);
    assert_eq!(bis_to_poset(&g).ideals().unwrap().len(), 7);
}

#[test]
fn seeded_bis_bridge_with_explicit_bijection() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let a = rand::Rng::gen_range(&mut rng, 0..=5);
        let b = rand::Rng::gen_range(&mut rng, 0..=5);
        let g = random_bipartite_graph(a, b, 0.4, &mut rng);
        let p = bis_to_poset(&g);
        let ideals = p.ideals().unwrap();
        assert_eq!(count_bis_bruteforce(&g).unwrap(), ideals.len() as u64);
        let mut images = Vec::new();
        for s in ElementSet::all(a) {
            for t in ElementSet::all(b) {
                if is_independent(&g, s, t) {
                    images.push(ideal_of_independent_set(&g, s, t));
                }
            }
        }
        images.sort();
        assert_eq!(images, ideals.members());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn partition_sum_is_within_a_quarter(p in poset_strategy(8)) {
        let count = p.ideals().unwrap().len();
        let quarter = DyadicSum::new(1u32, 2);
        for v in ConstructionVariant::ALL {
            let f = build_table(&p, v).unwrap();
            let sum = partition_sum_dyadic(&f).unwrap();
            prop_assert!(sum >= DyadicSum::integer(count as u64));
            prop_assert!(sum.abs_diff(&DyadicSum::integer(count as u64)) <= quarter);
            prop_assert_eq!(estimate_ideal_count(&f).unwrap(), count as u64);
        }
        let f = build_prop2(&p).unwrap();
        prop_assert_eq!(estimate_ideal_count(&f).unwrap(), count as u64);
    }

    #[test]
    fn g_r_is_an_indicator_in_the_limit(p in poset_strategy(6), r in 0.01f64..20.0) {
        let f = build_table(&p, ConstructionVariant::F0).unwrap();
        for (x, v) in f.iter() {
            let g = g_r(&f, r, x).unwrap();
            prop_assert_eq!(v == latmin::ExtInt::ZERO, g == 1.0);
            if v != latmin::ExtInt::ZERO {
                prop_assert!(g_r(&f, r * 1.5, x).unwrap() < g);
            }
        }
    }
}
