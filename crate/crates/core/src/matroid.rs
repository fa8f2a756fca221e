//! A finite matroid given by its ground-set size and an independence predicate.

use std::fmt;
use std::sync::Arc;

use crate::digraph::{Digraph, EdgeCorrespondence, EdgeSet};
use crate::error::{Error, Result};
use crate::multipath::MultipathTester;

type Oracle = Arc<dyn Fn(&EdgeSet) -> bool + Send + Sync>;

/// Elements are `0..ground_size`; the predicate is queried with sets over that universe.
///
/// Nothing checks the matroid axioms at construction time; callers that build a
/// matroid from an arbitrary predicate can run [`crate::mp_structure::check_independence_axioms`].
#[derive(Clone)]
pub struct Matroid {
    ground_size: usize,
    oracle: Oracle,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid").field("ground_size", &self.ground_size).finish_non_exhaustive()
    }
}

impl Matroid {
    pub fn from_predicate(ground_size: usize, independent: impl Fn(&EdgeSet) -> bool + Send + Sync + 'static) -> Self {
        Matroid { ground_size, oracle: Arc::new(independent) }
    }

    /// The pair `(E(g), Mult(g))`. It is a matroid exactly when `g` is an MP-digraph.
    pub fn multipath(g: &Digraph) -> Self {
        let g = Arc::new(g.clone());
        let n = g.edge_count();
        Matroid::from_predicate(n, move |s| MultipathTester::new(&g).test(s))
    }

    /// `U(k, n)`: the sets with at most `k` elements.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::BadParameters(format!("U({k},{n}) needs k <= n")));
        }
        Ok(Matroid::from_predicate(n, move |s| s.len() <= k))
    }

    /// Every subset independent.
    pub fn free(n: usize) -> Self {
        Matroid::from_predicate(n, |_| true)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> EdgeSet {
        EdgeSet::full(self.ground_size)
    }

    pub fn is_independent(&self, s: &EdgeSet) -> bool {
        debug_assert_eq!(s.universe(), self.ground_size);
        (self.oracle)(s)
    }

    /// Greedy augmentation in increasing id order.
    pub fn rank(&self, a: &EdgeSet) -> usize {
        let mut basis = EdgeSet::empty(self.ground_size);
        for e in a {
            let grown = basis.with(e);
            if self.is_independent(&grown) {
                basis = grown;
            }
        }
        basis.len()
    }

    /// A basis of `a`, found by the same greedy pass as [`Matroid::rank`].
    pub fn basis_of(&self, a: &EdgeSet) -> EdgeSet {
        let mut basis = EdgeSet::empty(self.ground_size);
        for e in a {
            let grown = basis.with(e);
            if self.is_independent(&grown) {
                basis = grown;
            }
        }
        basis
    }

    pub fn full_rank(&self) -> usize {
        self.rank(&self.ground())
    }

    /// `(z(a), n(a)) = (r(E) - r(a), |a| - r(a))`.
    pub fn corank_nullity(&self, a: &EdgeSet) -> (usize, usize) {
        let r = self.rank(a);
        (self.full_rank() - r, a.len() - r)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        !self.is_independent(&EdgeSet::from_ids(self.ground_size, [e]))
    }

    /// Whether every basis contains `e`, i.e. removing it drops the rank.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(&self.ground().without(e)) < self.full_rank()
    }

    /// `M \ e` on `0..n-1`; ids above `e` shift down.
    pub fn delete(&self, e: usize) -> Result<(Matroid, EdgeCorrespondence)> {
        self.check_element(e)?;
        let corr = EdgeCorrespondence::shift_down(self.ground_size, e);
        let parent = self.clone();
        let m = Matroid::from_predicate(self.ground_size - 1, move |s| parent.is_independent(&parent.lift(s, e)));
        Ok((m, corr))
    }

    /// `M / e` on `0..n-1`: a set is independent when adding `e` back keeps it independent.
    pub fn contract(&self, e: usize) -> Result<(Matroid, EdgeCorrespondence)> {
        self.check_element(e)?;
        if self.is_loop(e) {
            return Err(Error::ContractLoop(e));
        }
        let corr = EdgeCorrespondence::shift_down(self.ground_size, e);
        let parent = self.clone();
        let m = Matroid::from_predicate(self.ground_size - 1, move |s| {
            parent.is_independent(&parent.lift(s, e).with(e))
        });
        Ok((m, corr))
    }

    /// Elements of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let (a, b) = (self.clone(), other.clone());
        let n1 = a.ground_size;
        Matroid::from_predicate(n1 + b.ground_size, move |s| {
            let left = EdgeSet::from_ids(n1, s.iter().filter(|&i| i < n1));
            let right = EdgeSet::from_ids(b.ground_size, s.iter().filter(|&i| i >= n1).map(|i| i - n1));
            a.is_independent(&left) && b.is_independent(&right)
        })
    }

    /// Every independent set, in increasing bitmask order.
    pub fn independents(&self, cap: usize) -> Result<Vec<EdgeSet>> {
        self.check_cap(cap)?;
        Ok(all_subsets(self.ground_size).filter(|s| self.is_independent(s)).collect())
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.ground_size {
            return Err(Error::InvalidEdge { edge: e, edge_count: self.ground_size });
        }
        Ok(())
    }

    pub(crate) fn check_cap(&self, cap: usize) -> Result<()> {
        if self.ground_size > cap {
            return Err(Error::CapExceeded { size: self.ground_size, cap });
        }
        Ok(())
    }

    /// Re-inserts the gap at `removed` into a set over the shrunken ground set.
    fn lift(&self, s: &EdgeSet, removed: usize) -> EdgeSet {
        EdgeSet::from_ids(self.ground_size, s.iter().map(|i| if i < removed { i } else { i + 1 }))
    }
}

/// All `2^n` subsets of `0..n` in bitmask order; requires `n <= 63`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = EdgeSet> {
    assert!(n < 64, "exhaustive subset iteration over {n} elements");
    (0..1u64 << n).map(move |mask| EdgeSet::from_mask(n, mask))
}

/// Whether the two independence predicates agree on all subsets.
pub fn equal_matroids(m1: &Matroid, m2: &Matroid, cap: usize) -> Result<bool> {
    if m1.ground_size != m2.ground_size {
        return Ok(false);
    }
    m1.check_cap(cap)?;
    Ok(all_subsets(m1.ground_size).all(|s| m1.is_independent(&s) == m2.is_independent(&s)))
}

/// Whether `m1` equals `m2` after relabelling: element `i` of `m1` corresponds to
/// element `map[i]` of `m2`, which must be a bijection.
pub fn equal_under(m1: &Matroid, m2: &Matroid, map: &[usize], cap: usize) -> Result<bool> {
    if m1.ground_size != m2.ground_size || map.len() != m1.ground_size {
        return Ok(false);
    }
    m1.check_cap(cap)?;
    let n = m2.ground_size;
    Ok(all_subsets(m1.ground_size).all(|s| {
        let image = EdgeSet::from_ids(n, s.iter().map(|i| map[i]));
        m1.is_independent(&s) == m2.is_independent(&image)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    const CAP: usize = 16;

    #[test]
    fn uniform_ranks() {
        for n in 0..=6 {
            for k in 0..=n {
                let u = Matroid::uniform(k, n).unwrap();
                for s in all_subsets(n) {
                    assert_eq!(u.rank(&s), s.len().min(k));
                }
            }
        }
        assert!(matches!(Matroid::uniform(3, 2), Err(Error::BadParameters(_))));
    }

    #[test]
    fn uniform_independent_counts() {
        assert_eq!(Matroid::uniform(0, 1).unwrap().independents(CAP).unwrap().len(), 1);
        assert_eq!(Matroid::uniform(4, 4).unwrap().independents(CAP).unwrap().len(), 16);
        assert_eq!(Matroid::uniform(1, 3).unwrap().independents(CAP).unwrap().len(), 4);
    }

    #[test]
    fn corank_and_nullity() {
        let u = Matroid::uniform(1, 3).unwrap();
        assert_eq!(u.corank_nullity(&EdgeSet::from_ids(3, [0, 2])), (0, 1));
        assert_eq!(u.corank_nullity(&u.ground()).0, 0);
        assert_eq!(u.corank_nullity(&EdgeSet::empty(3)), (1, 0));
    }

    #[test]
    fn loops_and_coloops() {
        let looped = Matroid::multipath(&families::loops(1));
        assert!(looped.is_loop(0));
        let path = Matroid::multipath(&families::coherent_path(4));
        assert!((0..4).all(|e| path.is_coloop(e) && !path.is_loop(e)));
        let cycle = Matroid::multipath(&families::coherent_cycle(4));
        assert!((0..4).all(|e| !cycle.is_coloop(e) && !cycle.is_loop(e)));
    }

    #[test]
    fn minors_of_uniform_matroids() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        for e in 0..2 {
            let (c, corr) = u12.contract(e).unwrap();
            assert_eq!(corr.codomain_size(), 1);
            assert!(equal_matroids(&c, &Matroid::uniform(0, 1).unwrap(), CAP).unwrap());
        }
        for n in 1..=6 {
            for k in 0..=n {
                let u = Matroid::uniform(k, n).unwrap();
                for e in 0..n {
                    let (d, _) = u.delete(e).unwrap();
                    let expected = Matroid::uniform(k.min(n - 1), n - 1).unwrap();
                    assert!(equal_matroids(&d, &expected, CAP).unwrap());
                }
            }
        }
        let u01 = Matroid::uniform(0, 1).unwrap();
        assert!(matches!(u01.contract(0), Err(Error::ContractLoop(0))));
    }

    #[test]
    fn delete_and_contract_commute() {
        let u = Matroid::uniform(2, 4).unwrap();
        // delete 0, then contract old 2 (now 1); versus contract 2, then delete 0
        let (d, _) = u.delete(0).unwrap();
        let (dc, _) = d.contract(1).unwrap();
        let (c, _) = u.contract(2).unwrap();
        let (cd, _) = c.delete(0).unwrap();
        assert!(equal_matroids(&dc, &cd, CAP).unwrap());
    }

    #[test]
    fn direct_sums() {
        let u = Matroid::uniform(1, 1).unwrap();
        assert!(equal_matroids(&u.direct_sum(&u), &Matroid::free(2), CAP).unwrap());
        let empty = Matroid::free(0);
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert!(equal_matroids(&u13.direct_sum(&empty), &u13, CAP).unwrap());
        assert!(equal_matroids(&empty.direct_sum(&u13), &u13, CAP).unwrap());
        let sum = u13.direct_sum(&Matroid::uniform(2, 3).unwrap());
        assert_eq!(sum.full_rank(), 3);
    }

    #[test]
    fn sink_is_u_1_n() {
        let m = Matroid::multipath(&families::sink(2));
        assert!(equal_matroids(&m, &Matroid::uniform(1, 2).unwrap(), CAP).unwrap());
    }

    #[test]
    fn equality_cap_and_relabelling() {
        let big = Matroid::free(17);
        assert_eq!(equal_matroids(&big, &big, CAP), Err(Error::CapExceeded { size: 17, cap: CAP }));
        // U(1,2) + U(1,1) versus U(1,1) + U(1,2)
        let a = Matroid::uniform(1, 2).unwrap().direct_sum(&Matroid::uniform(1, 1).unwrap());
        let b = Matroid::uniform(1, 1).unwrap().direct_sum(&Matroid::uniform(1, 2).unwrap());
        assert!(!equal_matroids(&a, &b, CAP).unwrap());
        assert!(equal_under(&a, &b, &[1, 2, 0], CAP).unwrap());
    }
}
