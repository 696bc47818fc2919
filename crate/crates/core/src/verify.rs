//! Exhaustive checks of submodularity, the M♮ exchange axiom, the minimizer
//! condition, and the generalized-matroid exchange axiom.
//!
//! Every scan visits `(X, Y, i)` with `Y` as the outer key, then `X`, both by
//! canonical bitmask, then `i` ascending, and reports the first violation, so
//! witnesses do not depend on how the work is split across threads.

use std::fmt;

use rayon::prelude::*;

use crate::caps::{self, Caps};
use crate::construct::SetFunctionTable;
use crate::error::{Error, Result};
use crate::poset::{Poset, SubsetFamily};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Submodularity,
    MNatExchange,
    GeneralizedMatroid,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Submodularity => "submodularity",
            ViolationKind::MNatExchange => "mnat-exchange",
            ViolationKind::GeneralizedMatroid => "generalized-matroid",
        })
    }
}

/// A required inequality `lhs <= rhs` that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
}

impl Inequality {
    fn holds(self) -> bool {
        self.lhs <= self.rhs
    }
}

/// One candidate `j ∈ Y∖X` that did not rescue the exchange.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailedExchange {
    pub j: usize,
    /// Absent for set families, where the check is membership rather than
    /// an inequality.
    pub failed: Option<Inequality>,
}

/// Certificate that an axiom fails at `(X, Y, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    pub kind: ViolationKind,
    pub x: ElementSet,
    pub y: ElementSet,
    pub i: Option<usize>,
    pub failed: Option<Inequality>,
    /// Every `j ∈ Y∖X`, in increasing order.
    pub tried_j: Vec<FailedExchange>,
}

impl ViolationWitness {
    /// Re-evaluates the cited inequalities on `f` and confirms that each one
    /// fails with exactly the recorded values.
    pub fn reproduces(&self, f: &SetFunctionTable) -> bool {
        let val = |s: ElementSet| f.get(s).finite();
        let (x, y) = (self.x, self.y);
        match self.kind {
            ViolationKind::Submodularity => {
                let observed = (|| {
                    Some(Inequality {
                        lhs: val(x.union(y))? + val(x.intersection(y))?,
                        rhs: val(x)? + val(y)?,
                    })
                })();
                observed.is_some() && observed == self.failed && !observed.unwrap().holds()
            }
            ViolationKind::MNatExchange => {
                let Some(i) = self.i else { return false };
                if !x.difference(y).contains(i) {
                    return false;
                }
                let Some(base) = exchange_removal(f, x, y, i) else {
                    return false;
                };
                if Some(base) != self.failed || base.holds() {
                    return false;
                }
                let js: Vec<usize> = y.difference(x).iter().collect();
                if js != self.tried_j.iter().map(|t| t.j).collect::<Vec<_>>() {
                    return false;
                }
                self.tried_j.iter().all(|t| {
                    let observed = exchange_swap(f, x, y, i, t.j);
                    observed.is_some() && observed == t.failed && !observed.unwrap().holds()
                })
            }
            ViolationKind::GeneralizedMatroid => false,
        }
    }

    /// Family analogue of [`reproduces`](Self::reproduces).
    pub fn reproduces_in_family(&self, family: &SubsetFamily) -> bool {
        let Some(i) = self.i else { return false };
        let (a, b) = (self.x, self.y);
        if self.kind != ViolationKind::GeneralizedMatroid
            || !family.contains(a)
            || !family.contains(b)
            || !a.difference(b).contains(i)
        {
            return false;
        }
        let js: Vec<usize> = b.difference(a).iter().collect();
        js == self.tried_j.iter().map(|t| t.j).collect::<Vec<_>>()
            && !(family.contains(a.without(i)) && family.contains(b.with(i)))
            && js.iter().all(|&j| !swap_in_family(family, a, b, i, j))
    }
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at X={} Y={}", self.kind, self.x, self.y)?;
        if let Some(i) = self.i {
            write!(f, " i={}", i + 1)?;
        }
        if let Some(q) = self.failed {
            write!(f, " ({} > {})", q.lhs, q.rhs)?;
        }
        for t in &self.tried_j {
            write!(f, "; j={} fails", t.j + 1)?;
            if let Some(q) = t.failed {
                write!(f, " ({} > {})", q.lhs, q.rhs)?;
            }
        }
        Ok(())
    }
}

/// `f(X) + f(Y) <= f(X-i) + f(Y+i)`.
fn exchange_removal(f: &SetFunctionTable, x: ElementSet, y: ElementSet, i: usize) -> Option<Inequality> {
    let val = |s: ElementSet| f.get(s).finite();
    Some(Inequality {
        lhs: val(x)? + val(y)?,
        rhs: val(x.without(i))? + val(y.with(i))?,
    })
}

/// `f(X) + f(Y) <= f(X-i+j) + f(Y+i-j)`.
fn exchange_swap(f: &SetFunctionTable, x: ElementSet, y: ElementSet, i: usize, j: usize) -> Option<Inequality> {
    let val = |s: ElementSet| f.get(s).finite();
    Some(Inequality {
        lhs: val(x)? + val(y)?,
        rhs: val(x.without(i).with(j))? + val(y.with(i).without(j))?,
    })
}

fn swap_in_family(family: &SubsetFamily, a: ElementSet, b: ElementSet, i: usize, j: usize) -> bool {
    family.contains(a.without(i).with(j)) && family.contains(b.with(i).without(j))
}

fn finite_table(f: &SetFunctionTable, cap: usize) -> Result<Vec<i64>> {
    caps::check("verification", f.ground_size(), cap)?;
    f.finite_values()
}

/// `None` iff `f(X) + f(Y) >= f(X∪Y) + f(X∩Y)` for every pair.
pub fn is_submodular(f: &SetFunctionTable) -> Result<Option<ViolationWitness>> {
    is_submodular_capped(f, Caps::default().verify)
}

pub fn is_submodular_capped(f: &SetFunctionTable, cap: usize) -> Result<Option<ViolationWitness>> {
    let values = finite_table(f, cap)?;
    let size = values.len() as u64;
    // Symmetric in X and Y, so only X <= Y is scanned.
    Ok((0..size).into_par_iter().find_map_first(|yb| {
        (0..=yb).find_map(|xb| {
            let q = Inequality {
                lhs: values[(xb | yb) as usize] + values[(xb & yb) as usize],
                rhs: values[xb as usize] + values[yb as usize],
            };
            (!q.holds()).then(|| ViolationWitness {
                kind: ViolationKind::Submodularity,
                x: ElementSet::from_bits(xb),
                y: ElementSet::from_bits(yb),
                i: None,
                failed: Some(q),
                tried_j: Vec::new(),
            })
        })
    }))
}

/// `None` iff for all `X, Y` and `i ∈ X∖Y`, either
/// `f(X)+f(Y) <= f(X-i)+f(Y+i)` or `f(X)+f(Y) <= f(X-i+j)+f(Y+i-j)` for some
/// `j ∈ Y∖X`. A witness lists every `j` that was tried.
pub fn is_mnat_concave(f: &SetFunctionTable) -> Result<Option<ViolationWitness>> {
    is_mnat_concave_capped(f, Caps::default().verify)
}

pub fn is_mnat_concave_capped(f: &SetFunctionTable, cap: usize) -> Result<Option<ViolationWitness>> {
    let values = finite_table(f, cap)?;
    let size = values.len() as u64;
    let at = |s: ElementSet| values[s.bits() as usize];
    Ok((0..size).into_par_iter().find_map_first(|yb| {
        let y = ElementSet::from_bits(yb);
        (0..size).find_map(|xb| {
            let x = ElementSet::from_bits(xb);
            let total = at(x) + at(y);
            x.difference(y).iter().find_map(|i| {
                let removal = Inequality {
                    lhs: total,
                    rhs: at(x.without(i)) + at(y.with(i)),
                };
                if removal.holds() {
                    return None;
                }
                let mut tried = Vec::new();
                for j in y.difference(x).iter() {
                    let swap = Inequality {
                        lhs: total,
                        rhs: at(x.without(i).with(j)) + at(y.with(i).without(j)),
                    };
                    if swap.holds() {
                        return None;
                    }
                    tried.push(FailedExchange {
                        j,
                        failed: Some(swap),
                    });
                }
                Some(ViolationWitness {
                    kind: ViolationKind::MNatExchange,
                    x,
                    y,
                    i: Some(i),
                    failed: Some(removal),
                    tried_j: tried,
                })
            })
        })
    }))
}

/// Subsets attaining the minimum value.
pub fn minimizers(f: &SetFunctionTable) -> SubsetFamily {
    let best = f.values().iter().min().copied();
    extremal(f, best)
}

/// Subsets attaining the maximum value.
pub fn maximizers(f: &SetFunctionTable) -> SubsetFamily {
    let best = f.values().iter().max().copied();
    extremal(f, best)
}

fn extremal(f: &SetFunctionTable, best: Option<crate::value::ExtInt>) -> SubsetFamily {
    let members = f
        .iter()
        .filter(|&(_, v)| Some(v) == best)
        .map(|(x, _)| x)
        .collect();
    SubsetFamily::from_sorted(f.ground_size(), members)
}

/// `f(X) = 0` on every ideal of `poset` and `f(X) > 0` elsewhere.
pub fn check_min_condition(f: &SetFunctionTable, poset: &Poset) -> Result<bool> {
    if f.ground_size() != poset.len() {
        return Err(Error::DimensionMismatch {
            expected: poset.len(),
            found: f.ground_size(),
        });
    }
    Ok(f.iter().all(|(x, v)| match v.finite() {
        Some(v) if poset.is_ideal(x) => v == 0,
        Some(v) => v > 0,
        None => false,
    }))
}

/// `None` iff for all `A, B` in the family and `i ∈ A∖B`, either both `A-i`
/// and `B+i` are members, or both `A-i+j` and `B+i-j` are for some
/// `j ∈ B∖A`.
pub fn is_generalized_matroid(family: &SubsetFamily) -> Result<Option<ViolationWitness>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let members = family.members();
    Ok(members.par_iter().find_map_first(|&b| {
        members.iter().find_map(|&a| {
            a.difference(b).iter().find_map(|i| {
                if family.contains(a.without(i)) && family.contains(b.with(i)) {
                    return None;
                }
                let js: Vec<usize> = b.difference(a).iter().collect();
                if js.iter().any(|&j| swap_in_family(family, a, b, i, j)) {
                    return None;
                }
                Some(ViolationWitness {
                    kind: ViolationKind::GeneralizedMatroid,
                    x: a,
                    y: b,
                    i: Some(i),
                    failed: None,
                    tried_j: js
                        .into_iter()
                        .map(|j| FailedExchange { j, failed: None })
                        .collect(),
                })
            })
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_prop2, build_table, ConstructionVariant};
    use crate::value::ExtInt;

    fn vee() -> Poset {
        Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap()
    }

    fn set(one_indexed: &[usize]) -> ElementSet {
        one_indexed.iter().map(|i| i - 1).collect()
    }

    fn table(n: usize, f: impl Fn(ElementSet) -> i64) -> SetFunctionTable {
        SetFunctionTable::from_fn(n, |x| ExtInt::Finite(f(x))).unwrap()
    }

    #[test]
    fn prop2_is_submodular() {
        assert_eq!(is_submodular(&build_prop2(&vee()).unwrap()).unwrap(), None);
    }

    #[test]
    fn supermodular_pair_is_caught() {
        let f = table(2, |x| [0, 1, 1, 3][x.bits() as usize]);
        let w = is_submodular(&f).unwrap().unwrap();
        assert_eq!((w.x, w.y), (set(&[1]), set(&[2])));
        assert_eq!(w.failed, Some(Inequality { lhs: 3, rhs: 2 }));
        assert!(w.reproduces(&f));
    }

    #[test]
    fn constant_zero_passes_everything() {
        let f = table(3, |_| 0);
        assert_eq!(is_submodular(&f).unwrap(), None);
        assert_eq!(is_mnat_concave(&f).unwrap(), None);
        assert_eq!(minimizers(&f).len(), 8);
        assert_eq!(maximizers(&f).len(), 8);
    }

    #[test]
    fn prop2_fails_exchange_on_vee() {
        let f = build_prop2(&vee()).unwrap();
        let w = is_mnat_concave(&f).unwrap().unwrap();
        assert_eq!(w.kind, ViolationKind::MNatExchange);
        assert_eq!((w.x, w.y, w.i), (set(&[3]), set(&[1, 2]), Some(2)));
        assert_eq!(w.failed, Some(Inequality { lhs: 2, rhs: 0 }));
        let js: Vec<_> = w.tried_j.iter().map(|t| (t.j, t.failed.unwrap())).collect();
        assert_eq!(
            js,
            vec![
                (0, Inequality { lhs: 2, rhs: 1 }),
                (1, Inequality { lhs: 2, rhs: 1 })
            ]
        );
        assert!(w.reproduces(&f));
        assert_eq!(
            w.to_string(),
            "mnat-exchange violated at X={3} Y={1,2} i=3 (2 > 0); j=1 fails (2 > 1); j=2 fails (2 > 1)"
        );
    }

    #[test]
    fn f0_is_mnat_concave_on_vee() {
        let f = build_table(&vee(), ConstructionVariant::F0).unwrap();
        assert_eq!(is_mnat_concave(&f).unwrap(), None);
    }

    #[test]
    fn modular_function_is_mnat_concave() {
        let f = table(4, |x| x.len() as i64);
        assert_eq!(is_mnat_concave(&f).unwrap(), None);
        assert_eq!(maximizers(&f).members(), &[ElementSet::full(4)]);
    }

    #[test]
    fn infinite_values_are_rejected() {
        let mut values = vec![ExtInt::Finite(0); 4];
        values[3] = ExtInt::NegInf;
        let f = SetFunctionTable::new(2, values).unwrap();
        assert!(matches!(is_submodular(&f), Err(Error::InfiniteValue { .. })));
        assert!(matches!(is_mnat_concave(&f), Err(Error::InfiniteValue { .. })));
        assert!(!check_min_condition(&f, &Poset::antichain(2)).unwrap());
    }

    #[test]
    fn verification_cap() {
        let f = table(4, |_| 0);
        assert!(matches!(is_mnat_concave_capped(&f, 3), Err(Error::Size { .. })));
    }

    #[test]
    fn min_and_max_families_of_f0() {
        let p = vee();
        let f = build_table(&p, ConstructionVariant::F0).unwrap();
        assert_eq!(minimizers(&f), p.ideals().unwrap());
        assert_eq!(
            maximizers(&f).to_lists(),
            vec![vec![1, 3], vec![2, 3], vec![3]]
        );
        assert_eq!(minimizers(&build_prop2(&p).unwrap()), p.ideals().unwrap());
    }

    #[test]
    fn min_condition() {
        let p = vee();
        for v in ConstructionVariant::ALL {
            assert!(check_min_condition(&build_table(&p, v).unwrap(), &p).unwrap());
        }
        assert!(check_min_condition(&build_prop2(&p).unwrap(), &p).unwrap());
        assert!(!check_min_condition(&table(3, |_| 1), &p).unwrap());
        assert!(matches!(
            check_min_condition(&table(2, |_| 0), &p),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn generalized_matroid_examples() {
        let f = build_table(&vee(), ConstructionVariant::F0).unwrap();
        assert_eq!(is_generalized_matroid(&maximizers(&f)).unwrap(), None);

        let gap = SubsetFamily::new(2, [ElementSet::EMPTY, set(&[1, 2])]).unwrap();
        let w = is_generalized_matroid(&gap).unwrap().unwrap();
        assert_eq!((w.x, w.y, w.i), (set(&[1, 2]), ElementSet::EMPTY, Some(0)));
        assert!(w.reproduces_in_family(&gap));

        let single = SubsetFamily::new(3, [set(&[2])]).unwrap();
        assert_eq!(is_generalized_matroid(&single).unwrap(), None);

        let empty = SubsetFamily::new(3, []).unwrap();
        assert_eq!(is_generalized_matroid(&empty), Err(Error::EmptyFamily));
    }

    #[test]
    fn tampered_witness_does_not_reproduce() {
        let f = build_prop2(&vee()).unwrap();
        let mut w = is_mnat_concave(&f).unwrap().unwrap();
        w.tried_j.pop();
        assert!(!w.reproduces(&f));
    }
}
