//! Finite posets, their ideals, and the Birkhoff correspondence.
//!
//! Elements are `0..n` internally; every external presentation (files,
//! `Display`) shifts them to `1..=n`.

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// A partial order on `{0, .., n-1}`.
///
/// Stored as principal down-sets: `down[i] = { j : j ≼ i }`, which always
/// contains `i` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    down: Vec<ElementSet>,
}

impl Poset {
    /// Reflexive-transitive closure of the strict relations `j ≺ i` given as
    /// `(j, i)` pairs. Pairs may be covers or arbitrary comparabilities.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::Size {
                what: "poset",
                n,
                cap: MAX_ELEMENTS,
            });
        }
        let mut down: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(j, i) in pairs {
            for index in [j, i] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if i == j {
                return Err(Error::Cycle { element: i });
            }
            down[i] = down[i].with(j);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row = down[k];
            for d in down.iter_mut() {
                if d.contains(k) {
                    *d = d.union(row);
                }
            }
        }
        for i in 0..n {
            for j in down[i].without(i).iter() {
                if down[j].contains(i) {
                    return Err(Error::Cycle { element: i.min(j) });
                }
            }
        }
        Ok(Poset { n, down })
    }

    /// Builds a poset from principal down-sets, validating the order axioms.
    pub fn from_down_sets(down: Vec<ElementSet>) -> Result<Poset> {
        let n = down.len();
        let full = ElementSet::full(n);
        let mut pairs = Vec::new();
        for (i, d) in down.iter().enumerate() {
            if !d.is_subset(full) {
                return Err(Error::IndexOutOfRange {
                    index: d.difference(full).iter().next().unwrap_or(n),
                    n,
                });
            }
            pairs.extend(d.without(i).iter().map(|j| (j, i)));
        }
        Poset::from_relations(n, &pairs)
    }

    pub fn chain(n: usize) -> Poset {
        let down = (0..n).map(|i| ElementSet::full(i + 1)).collect();
        Poset { n, down }
    }

    pub fn antichain(n: usize) -> Poset {
        let down = (0..n).map(ElementSet::singleton).collect();
        Poset { n, down }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// `j ≼ i`.
    #[inline]
    pub fn leq(&self, j: usize, i: usize) -> bool {
        self.down[i].contains(j)
    }

    /// `j ≺ i`, i.e. `j ≼ i` and `j ≠ i`.
    #[inline]
    pub fn lt(&self, j: usize, i: usize) -> bool {
        j != i && self.leq(j, i)
    }

    /// The principal ideal `↓i`.
    #[inline]
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// `{ j : j ≺ i }`.
    #[inline]
    pub fn strict_down_set(&self, i: usize) -> ElementSet {
        self.down[i].without(i)
    }

    pub fn up_set(&self, j: usize) -> ElementSet {
        (0..self.n).filter(|&i| self.leq(j, i)).collect()
    }

    /// All strict comparabilities `(j, i)` with `j ≺ i`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = (0..self.n)
            .flat_map(|i| self.strict_down_set(i).iter().map(move |j| (j, i)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Cover relations `(j, i)`: `j ≺ i` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(j, i)| {
                let between = self.strict_down_set(i).intersection(self.up_set(j).without(j));
                between.is_empty()
            })
            .collect()
    }

    /// True iff `x` is downward closed.
    pub fn is_ideal(&self, x: ElementSet) -> bool {
        x.iter().all(|i| self.down[i].is_subset(x))
    }

    /// `I(P)` under the default enumeration cap.
    pub fn ideals(&self) -> Result<SubsetFamily> {
        self.ideals_capped(Caps::default().enumerate)
    }

    /// Every ideal of the poset. Subsets are scanned in canonical order and
    /// tested for downward closure.
    pub fn ideals_capped(&self, cap: usize) -> Result<SubsetFamily> {
        caps::check("ideal enumeration", self.n, cap)?;
        let members = ElementSet::all(self.n).filter(|&x| self.is_ideal(x)).collect();
        Ok(SubsetFamily {
            n: self.n,
            members,
        })
    }

    /// Length `|S| - 1` of a longest chain `S` inside the interval `[j, i]`,
    /// or `None` when `j ⋠ i`.
    pub fn max_chain_length(&self, j: usize, i: usize) -> Option<usize> {
        if !self.leq(j, i) {
            return None;
        }
        let interval = self.down[i].intersection(self.up_set(j));
        // Sizes of down-sets give a linear extension.
        let mut order: Vec<usize> = interval.iter().collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut longest = vec![0usize; self.n];
        for &x in &order {
            longest[x] = self
                .strict_down_set(x)
                .intersection(interval)
                .iter()
                .map(|y| longest[y] + 1)
                .max()
                .unwrap_or(0);
        }
        Some(longest[i])
    }
}

/// A duplicate-free family of subsets of `{0, .., n-1}`, kept sorted in
/// canonical subset order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<ElementSet>,
}

impl SubsetFamily {
    pub fn new<I: IntoIterator<Item = ElementSet>>(n: usize, members: I) -> Result<SubsetFamily> {
        let full = ElementSet::full(n);
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(full)) {
            return Err(Error::IndexOutOfRange {
                index: bad.difference(full).iter().next().unwrap_or(n),
                n,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SubsetFamily { n, members })
    }

    /// All `2^n` subsets.
    pub fn power_set(n: usize) -> SubsetFamily {
        SubsetFamily {
            n,
            members: ElementSet::all(n).collect(),
        }
    }

    pub(crate) fn from_sorted(n: usize, members: Vec<ElementSet>) -> SubsetFamily {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubsetFamily { n, members }
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: ElementSet) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Sorted list of sorted 1-indexed element lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.members.iter().map(|m| m.to_one_indexed()).collect();
        lists.sort();
        lists
    }

    /// Checks closure under `∪` and `∩`, reporting the first offending pair.
    pub fn closure_violation(&self) -> Result<Option<(ElementSet, ElementSet)>> {
        if self.members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for (k, &a) in self.members.iter().enumerate() {
            for &b in &self.members[k + 1..] {
                if !self.contains(a.union(b)) || !self.contains(a.intersection(b)) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// True iff the family is closed under union and intersection, i.e. a
    /// distributive lattice under inclusion.
    pub fn is_union_intersection_closed(&self) -> Result<bool> {
        Ok(self.closure_violation()?.is_none())
    }

    /// Members with exactly one lower cover in the inclusion order, and the
    /// poset they form under inclusion.
    pub fn join_irreducibles(&self) -> Result<BirkhoffRepresentation> {
        if let Some((a, b)) = self.closure_violation()? {
            return Err(Error::NotLattice { a, b });
        }
        let mut irreducible = Vec::new();
        for &a in &self.members {
            let below: Vec<ElementSet> = self
                .members
                .iter()
                .copied()
                .filter(|&b| b != a && b.is_subset(a))
                .collect();
            let lower_covers = below
                .iter()
                .filter(|&&b| !below.iter().any(|&c| c != b && b.is_subset(c)))
                .count();
            if lower_covers == 1 {
                irreducible.push(a);
            }
        }
        let down = irreducible
            .iter()
            .map(|&a| {
                irreducible
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| b.is_subset(a))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let poset = Poset::from_down_sets(down)?;
        Ok(BirkhoffRepresentation {
            poset,
            members: irreducible,
        })
    }
}

/// The join-irreducible members of a set lattice, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffRepresentation {
    /// Element `k` stands for `members[k]`.
    pub poset: Poset,
    pub members: Vec<ElementSet>,
}

impl BirkhoffRepresentation {
    pub fn element_of(&self, member: ElementSet) -> Option<usize> {
        self.members.iter().position(|&m| m == member)
    }
}

/// Enumerates `I(P)`, recovers the join-irreducibles, and checks that
/// `x ↦ ↓x` is an order isomorphism from `P` onto them.
pub fn verify_birkhoff_roundtrip(poset: &Poset) -> Result<bool> {
    verify_birkhoff_roundtrip_capped(poset, Caps::default().enumerate)
}

pub fn verify_birkhoff_roundtrip_capped(poset: &Poset, cap: usize) -> Result<bool> {
    let rep = poset.ideals_capped(cap)?.join_irreducibles()?;
    if rep.poset.len() != poset.len() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(poset.len());
    for x in 0..poset.len() {
        match rep.element_of(poset.down_set(x)) {
            Some(k) => image.push(k),
            None => return Ok(false),
        }
    }
    let mut seen = image.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != image.len() {
        return Ok(false);
    }
    for x in 0..poset.len() {
        for y in 0..poset.len() {
            if poset.leq(x, y) != rep.poset.leq(image[x], image[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> Poset {
        // 1 ≺ 3, 2 ≺ 3
        Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap()
    }

    fn set(one_indexed: &[usize]) -> ElementSet {
        one_indexed.iter().map(|i| i - 1).collect()
    }

    #[test]
    fn closure_of_vee() {
        let p = vee();
        assert_eq!(p.strict_pairs(), vec![(0, 2), (1, 2)]);
        assert!(!p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn closure_is_transitive() {
        let p = Poset::from_relations(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p.lt(0, 3));
        assert_eq!(p, Poset::chain(4));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn empty_relations_give_antichain() {
        assert_eq!(Poset::from_relations(2, &[]).unwrap(), Poset::antichain(2));
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(
            Poset::from_relations(2, &[(0, 1), (1, 0)]),
            Err(Error::Cycle { .. })
        ));
        assert!(matches!(
            Poset::from_relations(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cycle { .. })
        ));
        assert!(matches!(Poset::from_relations(1, &[(0, 0)]), Err(Error::Cycle { .. })));
        assert!(matches!(
            Poset::from_relations(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn ideal_membership() {
        let p = vee();
        assert!(p.is_ideal(set(&[1, 2])));
        assert!(!p.is_ideal(set(&[3])));
        assert!(p.is_ideal(ElementSet::EMPTY));
    }

    #[test]
    fn ideals_of_vee() {
        let family = vee().ideals().unwrap();
        assert_eq!(
            family.to_lists(),
            vec![vec![], vec![1], vec![1, 2], vec![1, 2, 3], vec![2]]
        );
        assert_eq!(family.len(), 5);
    }

    #[test]
    fn ideals_of_chain_and_antichain() {
        for n in 0..6 {
            assert_eq!(Poset::chain(n).ideals().unwrap().len(), n + 1);
            assert_eq!(Poset::antichain(n).ideals().unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn empty_poset_has_one_ideal() {
        let family = Poset::antichain(0).ideals().unwrap();
        assert_eq!(family.members(), &[ElementSet::EMPTY]);
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            Poset::antichain(21).ideals(),
            Err(Error::Size { n: 21, cap: 20, .. })
        ));
        assert!(Poset::antichain(5).ideals_capped(4).is_err());
    }

    #[test]
    fn chain_lengths() {
        let c = Poset::chain(3);
        assert_eq!(c.max_chain_length(0, 2), Some(2));
        assert_eq!(c.max_chain_length(1, 1), Some(0));
        let p = vee();
        assert_eq!(p.max_chain_length(0, 2), Some(1));
        assert_eq!(p.max_chain_length(0, 1), None);
        assert_eq!(p.max_chain_length(2, 0), None);
    }

    #[test]
    fn lattice_closure() {
        assert!(vee().ideals().unwrap().is_union_intersection_closed().unwrap());
        let f = SubsetFamily::new(2, [ElementSet::EMPTY, set(&[1]), set(&[2])]).unwrap();
        assert!(!f.is_union_intersection_closed().unwrap());
        let single = SubsetFamily::new(2, [set(&[2])]).unwrap();
        assert!(single.is_union_intersection_closed().unwrap());
        let empty = SubsetFamily::new(2, []).unwrap();
        assert_eq!(empty.is_union_intersection_closed(), Err(Error::EmptyFamily));
    }

    #[test]
    fn join_irreducibles_of_vee() {
        let rep = vee().ideals().unwrap().join_irreducibles().unwrap();
        assert_eq!(rep.members, vec![set(&[1]), set(&[2]), set(&[1, 2, 3])]);
        assert_eq!(rep.poset, vee());
    }

    #[test]
    fn join_irreducibles_of_boolean_and_chain_lattices() {
        let rep = SubsetFamily::power_set(4).join_irreducibles().unwrap();
        assert_eq!(rep.members, (0..4).map(ElementSet::singleton).collect::<Vec<_>>());
        assert_eq!(rep.poset, Poset::antichain(4));

        let prefixes = Poset::chain(4).ideals().unwrap();
        let rep = prefixes.join_irreducibles().unwrap();
        assert_eq!(rep.poset, Poset::chain(4));
    }

    #[test]
    fn join_irreducibles_require_lattice() {
        let f = SubsetFamily::new(2, [ElementSet::EMPTY, set(&[1]), set(&[2])]).unwrap();
        assert!(matches!(f.join_irreducibles(), Err(Error::NotLattice { .. })));
    }

    #[test]
    fn birkhoff_roundtrips() {
        assert!(verify_birkhoff_roundtrip(&vee()).unwrap());
        for n in 0..6 {
            assert!(verify_birkhoff_roundtrip(&Poset::chain(n)).unwrap());
            assert!(verify_birkhoff_roundtrip(&Poset::antichain(n)).unwrap());
        }
    }

    #[test]
    fn family_rejects_out_of_range_members() {
        assert!(SubsetFamily::new(2, [set(&[3])]).is_err());
    }
}
