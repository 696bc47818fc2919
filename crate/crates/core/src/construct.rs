//! Set functions whose zero set is exactly the ideal family of a poset.
//!
//! `build_prop2` is the classical submodular representative. The three
//! matching constructions produce M♮-concave representatives:
//!
//! * `F0`: edges `u_i v_j` for `j ≼ i`, weight 1 off the diagonal, value is the
//!   best matching covering exactly `U_X`.
//! * `F1`: edges `u_i v_j` for `j ≺ i`, weighted by longest-chain length, value
//!   is the best matching inside `U_X ∪ V_{N∖X}`.
//! * `F2`: the `F0` edge set with `F1` weights off the diagonal, value as in
//!   `F0`. It coincides with `F1` everywhere.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::matching::{
    max_weight_matching_saturating, max_weight_matching_within, WeightedBipartiteGraph,
};
use crate::poset::Poset;
use crate::set::ElementSet;
use crate::value::ExtInt;

/// Values of `f: 2^N → Z ∪ {-inf}`, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunctionTable {
    n: usize,
    values: Vec<ExtInt>,
}

impl SetFunctionTable {
    pub fn new(n: usize, values: Vec<ExtInt>) -> Result<Self> {
        caps::check("set function table", n, caps::HARD_MAX_N)?;
        if values.len() != 1usize << n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: values.len().checked_ilog2().unwrap_or(0) as usize,
            });
        }
        Ok(SetFunctionTable { n, values })
    }

    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(ElementSet) -> ExtInt,
    {
        caps::check("set function table", n, caps::HARD_MAX_N)?;
        Ok(SetFunctionTable {
            n,
            values: ElementSet::all(n).map(f).collect(),
        })
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: ElementSet) -> ExtInt {
        self.values[x.bits() as usize]
    }

    pub fn values(&self) -> &[ExtInt] {
        &self.values
    }

    /// `(X, f(X))` in canonical subset order.
    pub fn iter(&self) -> impl Iterator<Item = (ElementSet, ExtInt)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| (ElementSet::from_bits(k as u64), v))
    }

    /// Finite values, or the first subset holding `-inf`.
    pub fn finite_values(&self) -> Result<Vec<i64>> {
        self.iter()
            .map(|(x, v)| v.finite().ok_or(Error::InfiniteValue { set: x }))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionVariant {
    F0,
    F1,
    F2,
}

impl ConstructionVariant {
    pub const ALL: [ConstructionVariant; 3] = [Self::F0, Self::F1, Self::F2];
}

impl fmt::Display for ConstructionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::F0 => "f0",
            Self::F1 => "f1",
            Self::F2 => "f2",
        })
    }
}

impl FromStr for ConstructionVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f0" => Ok(Self::F0),
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            other => Err(Error::InvalidParameter(format!("unknown variant {other:?}"))),
        }
    }
}

/// `f(X) = |{ j ∈ N∖X : j ≺ i for some i ∈ X }|`.
pub fn build_prop2(poset: &Poset) -> Result<SetFunctionTable> {
    build_prop2_capped(poset, Caps::default().table)
}

pub fn build_prop2_capped(poset: &Poset, cap: usize) -> Result<SetFunctionTable> {
    caps::check("table construction", poset.len(), cap)?;
    let full = poset.ground_set();
    SetFunctionTable::from_fn(poset.len(), |x| {
        let below: ElementSet = x
            .iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.union(poset.strict_down_set(i)));
        ExtInt::Finite(below.intersection(full.difference(x)).len() as i64)
    })
}

/// The weighted bipartite graph `(U, V)` with `u_i ↔ i`, `v_j ↔ j`.
pub fn build_graph(poset: &Poset, variant: ConstructionVariant) -> WeightedBipartiteGraph {
    let n = poset.len();
    let chain_weight = |j: usize, i: usize| {
        poset
            .max_chain_length(j, i)
            .expect("edge endpoints are comparable") as i64
    };
    let mut edges = Vec::new();
    for i in 0..n {
        for j in poset.down_set(i).iter() {
            let weight = if i == j {
                if variant == ConstructionVariant::F1 {
                    continue;
                }
                0
            } else {
                match variant {
                    ConstructionVariant::F0 => 1,
                    ConstructionVariant::F1 | ConstructionVariant::F2 => chain_weight(j, i),
                }
            };
            edges.push((i, j, weight));
        }
    }
    WeightedBipartiteGraph::new(n, n, edges).expect("poset edges are distinct and in range")
}

pub fn build_table(poset: &Poset, variant: ConstructionVariant) -> Result<SetFunctionTable> {
    build_table_capped(poset, variant, Caps::default().table)
}

pub fn build_table_capped(
    poset: &Poset,
    variant: ConstructionVariant,
    cap: usize,
) -> Result<SetFunctionTable> {
    let n = poset.len();
    caps::check("table construction", n, cap)?;
    let graph = build_graph(poset, variant);
    let full = poset.ground_set();
    let values: Result<Vec<ExtInt>> = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| {
            let x = ElementSet::from_bits(bits);
            match variant {
                ConstructionVariant::F0 | ConstructionVariant::F2 => {
                    Ok(max_weight_matching_saturating(&graph, x)?.value)
                }
                ConstructionVariant::F1 => {
                    let (value, _) = max_weight_matching_within(&graph, x, full.difference(x))?;
                    Ok(ExtInt::Finite(value))
                }
            }
        })
        .collect();
    SetFunctionTable::new(n, values?)
}
