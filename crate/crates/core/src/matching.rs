//! Exact maximum-weight bipartite matching under side constraints.
//!
//! Both entry points run the same successive-shortest-path assignment with
//! vertex potentials over integer costs. Nothing here touches floating point.

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};
use crate::value::ExtInt;

/// Edge-count limit for [`enumerate_matchings_bruteforce`].
pub const BRUTEFORCE_EDGE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: i64,
}

/// Bipartite graph `(U, V; E)` with integer edge weights.
///
/// Weights may be any integers; only [`max_weight_matching_within`] requires
/// them to be nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBipartiteGraph {
    u_size: usize,
    v_size: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, i64)>>,
}

impl WeightedBipartiteGraph {
    pub fn new<I>(u_size: usize, v_size: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        for size in [u_size, v_size] {
            if size > MAX_ELEMENTS {
                return Err(Error::Size {
                    what: "bipartite graph side",
                    n: size,
                    cap: MAX_ELEMENTS,
                });
            }
        }
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v, weight)| Edge { u, v, weight })
            .collect();
        for e in &edges {
            if e.u >= u_size {
                return Err(Error::IndexOutOfRange { index: e.u, n: u_size });
            }
            if e.v >= v_size {
                return Err(Error::IndexOutOfRange { index: e.v, n: v_size });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return Err(Error::DuplicateEdge { u: w[0].u, v: w[0].v });
        }
        let mut adjacency = vec![Vec::new(); u_size];
        for e in &edges {
            adjacency[e.u].push((e.v, e.weight));
        }
        Ok(WeightedBipartiteGraph {
            u_size,
            v_size,
            edges,
            adjacency,
        })
    }

    pub fn u_size(&self) -> usize {
        self.u_size
    }

    pub fn v_size(&self) -> usize {
        self.v_size
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, weight)| weight)
    }

    /// `Γ(U')`: the V-vertices adjacent to some vertex of `us`.
    pub fn neighbourhood(&self, us: ElementSet) -> ElementSet {
        us.iter()
            .flat_map(|u| self.adjacency[u].iter().map(|&(v, _)| v))
            .collect()
    }
}

/// A set of vertex-disjoint edges and its total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `(u, v)` pairs sorted by `u`.
    pub pairs: Vec<(usize, usize)>,
    pub weight: i64,
}

impl Matching {
    pub fn empty() -> Self {
        Matching {
            pairs: Vec::new(),
            weight: 0,
        }
    }

    /// `∂M ∩ U`.
    pub fn matched_u(&self) -> ElementSet {
        self.pairs.iter().map(|&(u, _)| u).collect()
    }

    /// `∂M ∩ V`.
    pub fn matched_v(&self) -> ElementSet {
        self.pairs.iter().map(|&(_, v)| v).collect()
    }

    /// Edges exist in `graph`, no vertex is used twice, and the stated weight
    /// is the sum of edge weights.
    pub fn is_valid_in(&self, graph: &WeightedBipartiteGraph) -> bool {
        let mut total = 0;
        for &(u, v) in &self.pairs {
            match graph.weight(u, v) {
                Some(w) => total += w,
                None => return false,
            }
        }
        let k = self.pairs.len();
        total == self.weight && self.matched_u().len() == k && self.matched_v().len() == k
    }
}

/// Optimal value of a constrained matching problem with one optimal witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub value: ExtInt,
    pub matching: Option<Matching>,
}

/// `max { w(M) : ∂M ∩ U = R }`, or `-inf` when no matching covers exactly `R`.
pub fn max_weight_matching_saturating(
    graph: &WeightedBipartiteGraph,
    saturate: ElementSet,
) -> Result<Optimum> {
    check_subset(saturate, graph.u_size)?;
    let rows: Vec<usize> = saturate.iter().collect();
    let adjacency: Vec<Vec<(usize, i64)>> =
        rows.iter().map(|&u| graph.adjacency[u].clone()).collect();
    let assignment = assign_all_rows(graph.v_size, &adjacency);
    Ok(match assignment {
        None => Optimum {
            value: ExtInt::NegInf,
            matching: None,
        },
        Some(cols) => {
            let pairs: Vec<(usize, usize)> = rows.iter().copied().zip(cols).collect();
            let weight = pairs
                .iter()
                .map(|&(u, v)| graph.weight(u, v).expect("assigned along an edge"))
                .sum();
            Optimum {
                value: ExtInt::Finite(weight),
                matching: Some(Matching { pairs, weight }),
            }
        }
    })
}

/// `max { w(M) : ∂M ⊆ allowed_u ∪ allowed_v }` with no saturation
/// requirement. Always finite, since the empty matching is feasible.
///
/// Pads `V` with `|allowed_u|` dummy vertices, each joined to every allowed
/// U-vertex by a weight-0 edge, then saturates `allowed_u`. This is exact
/// only for nonnegative weights.
pub fn max_weight_matching_within(
    graph: &WeightedBipartiteGraph,
    allowed_u: ElementSet,
    allowed_v: ElementSet,
) -> Result<(i64, Matching)> {
    check_subset(allowed_u, graph.u_size)?;
    check_subset(allowed_v, graph.v_size)?;
    if let Some(e) = graph.edges.iter().find(|e| e.weight < 0) {
        return Err(Error::NegativeWeight {
            u: e.u,
            v: e.v,
            weight: e.weight,
        });
    }
    let rows: Vec<usize> = allowed_u.iter().collect();
    let dummies = rows.len();
    let adjacency: Vec<Vec<(usize, i64)>> = rows
        .iter()
        .map(|&u| {
            graph.adjacency[u]
                .iter()
                .copied()
                .filter(|&(v, _)| allowed_v.contains(v))
                .chain((0..dummies).map(|d| (graph.v_size + d, 0)))
                .collect()
        })
        .collect();
    let cols = assign_all_rows(graph.v_size + dummies, &adjacency)
        .expect("dummy columns make every row assignable");
    let pairs: Vec<(usize, usize)> = rows
        .iter()
        .copied()
        .zip(cols)
        .filter(|&(_, v)| v < graph.v_size)
        .collect();
    let weight = pairs
        .iter()
        .map(|&(u, v)| graph.weight(u, v).expect("assigned along an edge"))
        .sum();
    Ok((weight, Matching { pairs, weight }))
}

/// Every matching of `graph` (including the empty one) with its weight.
/// Matchings are listed in increasing order of their edge-subset bitmask
/// over [`WeightedBipartiteGraph::edges`].
pub fn enumerate_matchings_bruteforce(graph: &WeightedBipartiteGraph) -> Result<Vec<Matching>> {
    let m = graph.edges.len();
    if m > BRUTEFORCE_EDGE_CAP {
        return Err(Error::Size {
            what: "matching enumeration (edges)",
            n: m,
            cap: BRUTEFORCE_EDGE_CAP,
        });
    }
    let mut out = Vec::new();
    'subsets: for mask in 0u32..1 << m {
        let mut us = 0u64;
        let mut vs = 0u64;
        let mut pairs = Vec::new();
        let mut weight = 0;
        for (k, e) in graph.edges.iter().enumerate() {
            if mask >> k & 1 == 0 {
                continue;
            }
            if us >> e.u & 1 == 1 || vs >> e.v & 1 == 1 {
                continue 'subsets;
            }
            us |= 1 << e.u;
            vs |= 1 << e.v;
            pairs.push((e.u, e.v));
            weight += e.weight;
        }
        out.push(Matching { pairs, weight });
    }
    Ok(out)
}

fn check_subset(set: ElementSet, size: usize) -> Result<()> {
    match set.difference(ElementSet::full(size)).iter().next() {
        Some(index) => Err(Error::IndexOutOfRange { index, n: size }),
        None => Ok(()),
    }
}

/// Maximum-weight assignment of every row to a distinct column, using only
/// the listed `(column, weight)` edges. Returns the column of each row, or
/// `None` when some row cannot be matched.
///
/// Hungarian method in its shortest-augmenting-path form: rows are added one
/// at a time and each is joined by a Dijkstra search over reduced costs.
/// Costs are `max_weight - w >= 0` so the initial zero potentials are
/// feasible; since every row is matched, minimizing cost maximizes weight.
fn assign_all_rows(cols: usize, adjacency: &[Vec<(usize, i64)>]) -> Option<Vec<usize>> {
    let rows = adjacency.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    if rows > cols {
        return None;
    }
    let top = adjacency
        .iter()
        .flatten()
        .map(|&(_, w)| w)
        .max()
        .unwrap_or(0);

    // 1-based with index 0 as the virtual root column, as in the classic
    // dense formulation.
    let mut row_pot = vec![0i64; rows + 1];
    let mut col_pot = vec![0i64; cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];

    for row in 1..=rows {
        owner[0] = row;
        let mut j0 = 0usize;
        let mut min_slack: Vec<Option<i64>> = vec![None; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            for &(c, w) in &adjacency[i0 - 1] {
                let j = c + 1;
                if used[j] {
                    continue;
                }
                let reduced = (top - w) - row_pot[i0] - col_pot[j];
                if min_slack[j].is_none_or(|m| reduced < m) {
                    min_slack[j] = Some(reduced);
                    way[j] = j0;
                }
            }
            let mut delta: Option<i64> = None;
            let mut j1 = 0;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                if let Some(m) = min_slack[j] {
                    if delta.is_none_or(|d| m < d) {
                        delta = Some(m);
                        j1 = j;
                    }
                }
            }
            // No unused column is reachable: this row has no augmenting path.
            let delta = delta?;
            for j in 0..=cols {
                if used[j] {
                    row_pot[owner[j]] += delta;
                    col_pot[j] -= delta;
                } else if let Some(m) = min_slack[j].as_mut() {
                    *m -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut assignment = vec![0usize; rows];
    for j in 1..=cols {
        if owner[j] != 0 {
            assignment[owner[j] - 1] = j - 1;
        }
    }
    Some(assignment)
}
