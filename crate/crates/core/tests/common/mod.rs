#![allow(dead_code)]

use latmin::{ElementSet, Poset};
use proptest::prelude::*;

/// Random labeled poset on up to `max_n` elements: upward edges on a random
/// linear order, closed transitively, then relabeled by a permutation.
pub fn poset_strategy(max_n: usize) -> impl Strategy<Value = Poset> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let slots = n * n.saturating_sub(1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), slots),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, perm)| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in 0..i {
                    if bits[k] {
                        pairs.push((perm[j], perm[i]));
                    }
                    k += 1;
                }
            }
            Poset::from_relations(n, &pairs).unwrap()
        })
}

/// Longest chain in `[j, i]` by enumerating every subset of the interval.
pub fn brute_force_chain_length(p: &Poset, j: usize, i: usize) -> Option<usize> {
    if !p.leq(j, i) {
        return None;
    }
    let interval: Vec<usize> = (0..p.len()).filter(|&s| p.leq(j, s) && p.leq(s, i)).collect();
    let mut best = 0;
    for mask in 0u32..1 << interval.len() {
        let members: Vec<usize> = (0..interval.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| interval[k])
            .collect();
        let is_chain = members
            .iter()
            .all(|&a| members.iter().all(|&b| p.leq(a, b) || p.leq(b, a)));
        if is_chain && !members.is_empty() {
            best = best.max(members.len() - 1);
        }
    }
    Some(best)
}

/// Downward closure tested straight from the relation, without `is_ideal`.
pub fn brute_force_is_ideal(p: &Poset, x: ElementSet) -> bool {
    (0..p.len()).all(|y| !x.contains(y) || (0..p.len()).all(|z| !p.leq(z, y) || x.contains(z)))
}

pub fn vee() -> Poset {
    Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap()
}
