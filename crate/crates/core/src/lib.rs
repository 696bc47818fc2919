//! Finite distributive lattices realized as minimizer sets of M♮-concave set
//! functions, with exhaustive checkers for every property involved.
//!
//! Given a poset `P`, [`construct::build_table`] produces exact value tables of
//! matching-based set functions whose minimizers are exactly the ideals of
//! `P`; [`verify`] checks the exchange axioms and minimizer conditions by
//! brute force, and [`partition`] recovers `|I(P)|` from an exact dyadic
//! partition sum.

pub mod caps;
pub mod construct;
pub mod error;
pub mod gen;
pub mod io;
pub mod matching;
pub mod partition;
pub mod poset;
pub mod set;
pub mod value;
pub mod verify;

pub use caps::Caps;
pub use construct::{build_graph, build_prop2, build_table, ConstructionVariant, SetFunctionTable};
pub use error::{Error, Result};
pub use matching::{
    enumerate_matchings_bruteforce, max_weight_matching_saturating, max_weight_matching_within,
    Matching, WeightedBipartiteGraph,
};
pub use partition::{
    bis_to_poset, count_bis_bruteforce, estimate_ideal_count, g_r, partition_sum_dyadic,
    BipartiteGraphPlain, DyadicSum,
};
pub use poset::{verify_birkhoff_roundtrip, Poset, SubsetFamily};
pub use set::ElementSet;
pub use value::ExtInt;
pub use verify::{
    check_min_condition, is_generalized_matroid, is_mnat_concave, is_submodular, maximizers,
    minimizers, ViolationWitness,
};
