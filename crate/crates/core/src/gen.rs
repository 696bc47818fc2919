//! Poset and graph generators for test corpora and the `gen` command.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matching::WeightedBipartiteGraph;
use crate::partition::BipartiteGraphPlain;
use crate::poset::Poset;
use crate::set::ElementSet;

/// Draws each relation `j ≺ i` with `j < i` independently with probability
/// `edge_prob`, then closes transitively. Always acyclic.
pub fn random_dag<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> Result<Poset> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!("edge probability {edge_prob} not in [0, 1]")));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(edge_prob) {
                pairs.push((j, i));
            }
        }
    }
    Poset::from_relations(n, &pairs)
}

/// Every partial order on `{0, .., n-1}` (labeled, so isomorphic copies are
/// listed separately). Feasible for `n <= 5`.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (j, i)))
        .collect();
    assert!(slots.len() < 32, "too many relation slots for n = {n}");
    let mut out = Vec::new();
    for mask in 0u32..1 << slots.len() {
        let mut down: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for (k, &(j, i)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                down[i] = down[i].with(j);
            }
        }
        let antisymmetric = (0..n).all(|i| down[i].without(i).iter().all(|j| !down[j].contains(i)));
        let transitive = (0..n).all(|i| down[i].iter().all(|j| down[j].is_subset(down[i])));
        if antisymmetric && transitive {
            out.push(Poset::from_down_sets(down).expect("validated order"));
        }
    }
    out
}

/// Each of the `u_size * v_size` slots holds an edge with probability
/// `edge_prob`, weighted uniformly in `0..=max_weight`.
pub fn random_weighted_graph<R: Rng + ?Sized>(
    u_size: usize,
    v_size: usize,
    edge_prob: f64,
    max_weight: i64,
    rng: &mut R,
) -> WeightedBipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..u_size {
        for v in 0..v_size {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, rng.gen_range(0..=max_weight)));
            }
        }
    }
    WeightedBipartiteGraph::new(u_size, v_size, edges).expect("slots are distinct")
}

pub fn random_bipartite_graph<R: Rng + ?Sized>(
    a_size: usize,
    b_size: usize,
    edge_prob: f64,
    rng: &mut R,
) -> BipartiteGraphPlain {
    let mut edges = Vec::new();
    for a in 0..a_size {
        for b in 0..b_size {
            if rng.gen_bool(edge_prob) {
                edges.push((a, b));
            }
        }
    }
    BipartiteGraphPlain::new(a_size, b_size, edges).expect("slots are distinct")
}
