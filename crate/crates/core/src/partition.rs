//! Partition sums of `exp(-r f)` and the bridge from bipartite independent
//! sets to poset ideals.
//!
//! At `r = (n+2) ln 2` every term is `2^{-(n+2) f(X)}`, so the sum is an exact
//! dyadic rational. When `f` vanishes exactly on the ideals and is a positive
//! integer elsewhere, the non-ideal terms add up to at most
//! `2^n * 2^{-(n+2)} = 1/4`, and rounding recovers `|I(P)|`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::construct::SetFunctionTable;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Exact value `numerator / 2^exponent`, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicSum {
    numerator: BigUint,
    exponent: u64,
}

impl DyadicSum {
    pub fn new(numerator: impl Into<BigUint>, exponent: u64) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            exponent = 0;
        } else {
            let shift = numerator.trailing_zeros().unwrap_or(0).min(exponent);
            numerator >>= shift;
            exponent -= shift;
        }
        DyadicSum {
            numerator,
            exponent,
        }
    }

    pub fn integer(value: impl Into<BigUint>) -> Self {
        DyadicSum::new(value, 0)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> BigUint {
        BigUint::one() << self.exponent
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &DyadicSum) -> DyadicSum {
        let e = self.exponent.max(other.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &other.numerator << (e - other.exponent);
        let diff = if a >= b { a - b } else { b - a };
        DyadicSum::new(diff, e)
    }

    /// Nearest integer; halves round up.
    pub fn round(&self) -> BigUint {
        if self.exponent == 0 {
            return self.numerator.clone();
        }
        let half = BigUint::one() << (self.exponent - 1);
        (&self.numerator + half) >> self.exponent
    }

    pub fn to_f64(&self) -> f64 {
        let num = self.numerator.to_f64().unwrap_or(f64::INFINITY);
        num / 2f64.powi(self.exponent.min(i32::MAX as u64) as i32)
    }
}

impl Ord for DyadicSum {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        (&self.numerator << (e - self.exponent)).cmp(&(&other.numerator << (e - other.exponent)))
    }
}

impl PartialOrd for DyadicSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `numerator/denominator`.
impl fmt::Display for DyadicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator())
    }
}

impl std::str::FromStr for DyadicSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a dyadic fraction: {s:?}"));
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let num: BigUint = num.trim().parse().map_err(|_| bad())?;
        let den: BigUint = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() || den.count_ones() != 1 {
            return Err(bad());
        }
        Ok(DyadicSum::new(num, den.trailing_zeros().unwrap_or(0)))
    }
}

/// `exp(-r f(X))`.
pub fn g_r(f: &SetFunctionTable, r: f64, x: ElementSet) -> Result<f64> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidParameter(format!("r must be positive and finite, got {r}")));
    }
    if !x.is_subset(ElementSet::full(f.ground_size())) {
        return Err(Error::IndexOutOfRange {
            index: x.difference(ElementSet::full(f.ground_size())).iter().next().unwrap_or(0),
            n: f.ground_size(),
        });
    }
    let v = f.get(x).finite().ok_or(Error::InfiniteValue { set: x })?;
    Ok((-r * v as f64).exp())
}

/// `Σ_X 2^{-(n+2) f(X)}`, exactly.
pub fn partition_sum_dyadic(f: &SetFunctionTable) -> Result<DyadicSum> {
    let scale = f.ground_size() as i64 + 2;
    let exponents: Vec<i64> = f
        .finite_values()?
        .into_iter()
        .map(|v| scale * v)
        .collect();
    // Common denominator 2^top; every term becomes 2^{top - k}.
    let top = exponents.iter().copied().max().unwrap_or(0).max(0);
    let mut numerator = BigUint::zero();
    for k in exponents {
        numerator += BigUint::one() << (top - k) as u64;
    }
    Ok(DyadicSum::new(numerator, top as u64))
}

/// `|I(P)|` recovered from a representing function by rounding its dyadic
/// partition sum. Assumes `f` is zero exactly on the ideals and a positive
/// integer elsewhere; that is not re-checked here.
pub fn estimate_ideal_count(f: &SetFunctionTable) -> Result<u64> {
    let sum = partition_sum_dyadic(f)?;
    sum.round()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("ideal count does not fit in 64 bits".into()))
}

/// Vertex-set limit for [`count_bis_bruteforce`].
pub const BIS_BRUTEFORCE_CAP: usize = 20;

/// Unweighted bipartite graph with sides `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraphPlain {
    a_size: usize,
    b_size: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraphPlain {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(a_size: usize, b_size: usize, edges: I) -> Result<Self> {
        if a_size + b_size > crate::set::MAX_ELEMENTS {
            return Err(Error::Size {
                what: "bipartite graph",
                n: a_size + b_size,
                cap: crate::set::MAX_ELEMENTS,
            });
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for &(a, b) in &edges {
            if a >= a_size {
                return Err(Error::IndexOutOfRange { index: a, n: a_size });
            }
            if b >= b_size {
                return Err(Error::IndexOutOfRange { index: b, n: b_size });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        Ok(BipartiteGraphPlain {
            a_size,
            b_size,
            edges,
        })
    }

    pub fn complete(a_size: usize, b_size: usize) -> Self {
        let edges = (0..a_size).flat_map(|a| (0..b_size).map(move |b| (a, b)));
        BipartiteGraphPlain::new(a_size, b_size, edges).expect("complete graph is well formed")
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.b_size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex index of `b ∈ B` in the combined numbering `A` then `B`.
    fn b_vertex(&self, b: usize) -> usize {
        self.a_size + b
    }
}

/// Height-≤2 poset on `A ∪ B` (A first) with `a ≺ b` for every edge.
///
/// Independent sets `(S, T)` correspond to ideals via `(A∖S) ∪ T`.
pub fn bis_to_poset(graph: &BipartiteGraphPlain) -> Poset {
    let pairs: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .map(|&(a, b)| (a, graph.b_vertex(b)))
        .collect();
    Poset::from_relations(graph.a_size + graph.b_size, &pairs).expect("bipartite relations are acyclic")
}

/// Image of the independent set `(S, T)` (`S ⊆ A`, `T ⊆ B`, both in side-local
/// indices) under the bijection onto ideals of [`bis_to_poset`].
pub fn ideal_of_independent_set(graph: &BipartiteGraphPlain, s: ElementSet, t: ElementSet) -> ElementSet {
    let kept_a = ElementSet::full(graph.a_size).difference(s);
    let shifted_t = ElementSet::from_bits(t.bits() << graph.a_size);
    kept_a.union(shifted_t)
}

/// True iff no edge joins `s ⊆ A` to `t ⊆ B`.
pub fn is_independent(graph: &BipartiteGraphPlain, s: ElementSet, t: ElementSet) -> bool {
    graph
        .edges
        .iter()
        .all(|&(a, b)| !(s.contains(a) && t.contains(b)))
}

/// Number of vertex subsets of `A ∪ B` spanning no edge, by exhaustive scan.
pub fn count_bis_bruteforce(graph: &BipartiteGraphPlain) -> Result<u64> {
    let total = graph.a_size + graph.b_size;
    if total > BIS_BRUTEFORCE_CAP {
        return Err(Error::Size {
            what: "independent set enumeration",
            n: total,
            cap: BIS_BRUTEFORCE_CAP,
        });
    }
    let edges: Vec<u64> = graph
        .edges
        .iter()
        .map(|&(a, b)| 1u64 << a | 1u64 << graph.b_vertex(b))
        .collect();
    Ok((0..1u64 << total)
        .filter(|&mask| edges.iter().all(|&e| mask & e != e))
        .count() as u64)
}
