mod common;

use common::{poset_strategy, vee};
use latmin::construct::build_graph;
use latmin::gen::labeled_posets;
use latmin::verify::ViolationKind;
use latmin::{
    build_prop2, build_table, check_min_condition, enumerate_matchings_bruteforce,
    is_generalized_matroid, is_mnat_concave, is_submodular, maximizers, minimizers,
    ConstructionVariant, ElementSet, ExtInt, Poset, SetFunctionTable,
};
use proptest::prelude::*;

/// f0/f2 straight from the definition: best brute-force matching covering
/// exactly `U_X`. f1: best matching inside `U_X ∪ V_{N∖X}`.
fn oracle_table(p: &Poset, variant: ConstructionVariant) -> SetFunctionTable {
    let g = build_graph(p, variant);
    let all = enumerate_matchings_bruteforce(&g).unwrap();
    let full = p.ground_set();
    SetFunctionTable::from_fn(p.len(), |x| {
        all.iter()
            .filter(|m| match variant {
                ConstructionVariant::F1 => {
                    m.matched_u().is_subset(x) && m.matched_v().is_subset(full.difference(x))
                }
                _ => m.matched_u() == x,
            })
            .map(|m| ExtInt::Finite(m.weight))
            .max()
            .unwrap_or(ExtInt::NegInf)
    })
    .unwrap()
}

fn check_poset(p: &Poset) {
    let ideals = p.ideals().unwrap();
    let tables: Vec<_> = ConstructionVariant::ALL
        .iter()
        .map(|&v| build_table(p, v).unwrap())
        .collect();
    assert_eq!(tables[1], tables[2], "f1 != f2 on {p:?}");
    for (v, f) in ConstructionVariant::ALL.iter().zip(&tables) {
        assert_eq!(is_mnat_concave(f).unwrap(), None, "{v} on {p:?}");
        assert_eq!(is_submodular(f).unwrap(), None, "{v} on {p:?}");
        assert!(check_min_condition(f, p).unwrap(), "{v} on {p:?}");
        assert_eq!(minimizers(f), ideals);
        assert_eq!(is_generalized_matroid(&maximizers(f)).unwrap(), None);
        assert!(f.values().iter().all(|v| v.finite().is_some_and(|v| v >= 0)));
    }
    let prop2 = build_prop2(p).unwrap();
    assert_eq!(is_submodular(&prop2).unwrap(), None);
    assert!(check_min_condition(&prop2, p).unwrap());
    assert_eq!(minimizers(&prop2), ideals);
}

#[test]
fn all_labeled_posets_up_to_four() {
    for n in 0..=4 {
        for p in labeled_posets(n) {
            check_poset(&p);
        }
    }
}

#[test]
fn tables_match_the_definitions_on_small_posets() {
    for n in 0..=3 {
        for p in labeled_posets(n) {
            for v in ConstructionVariant::ALL {
                assert_eq!(build_table(&p, v).unwrap(), oracle_table(&p, v), "{v} on {p:?}");
            }
        }
    }
}

#[test]
fn prop2_is_not_mnat_concave_on_vee() {
    let f = build_prop2(&vee()).unwrap();
    let w = is_mnat_concave(&f).unwrap().unwrap();
    assert_eq!(w.kind, ViolationKind::MNatExchange);
    assert_eq!(w.x, ElementSet::from_elements([2]));
    assert_eq!(w.y, ElementSet::from_elements([0, 1]));
    assert_eq!(w.i, Some(2));
    assert!(w.reproduces(&f));
}

fn small_table_strategy() -> impl Strategy<Value = SetFunctionTable> {
    (0usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, 1 << n).prop_map(move |vals| {
            SetFunctionTable::new(n, vals.into_iter().map(ExtInt::Finite).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn random_posets_are_represented(p in poset_strategy(7)) {
        check_poset(&p);
    }

    #[test]
    fn f1_table_matches_definition(p in poset_strategy(5)) {
        let v = ConstructionVariant::F1;
        prop_assert_eq!(build_table(&p, v).unwrap(), oracle_table(&p, v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    /// Arbitrary small tables: witnesses are genuine, M♮ implies submodular,
    /// and the structural corollaries hold whenever their premise does.
    #[test]
    fn axiom_checks_on_arbitrary_tables(f in small_table_strategy()) {
        let sub = is_submodular(&f).unwrap();
        let mnat = is_mnat_concave(&f).unwrap();
        if let Some(w) = &sub {
            prop_assert!(w.reproduces(&f));
        }
        if let Some(w) = &mnat {
            prop_assert!(w.reproduces(&f));
        }
        if mnat.is_none() {
            prop_assert!(sub.is_none());
            let top = maximizers(&f);
            prop_assert_eq!(is_generalized_matroid(&top).unwrap(), None);
        }
        if sub.is_none() {
            prop_assert!(minimizers(&f).is_union_intersection_closed().unwrap());
        }
    }
}
