//! Multipaths: spanning subgraphs whose components are isolated vertices or simple
//! directed paths.

use crate::digraph::{Digraph, EdgeSet};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::LaurentPoly;

/// Reusable scratch space for the multipath predicate.
///
/// The check is degree counting plus one walk along the successor pointers, linear in
/// the number of vertices touched.
pub struct MultipathTester<'g> {
    g: &'g Digraph,
    indeg: Vec<u8>,
    succ: Vec<usize>,
    touched: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'g> MultipathTester<'g> {
    pub fn new(g: &'g Digraph) -> Self {
        let n = g.vertex_count();
        MultipathTester { g, indeg: vec![0; n], succ: vec![NONE; n], touched: Vec::new() }
    }

    pub fn test(&mut self, s: &EdgeSet) -> bool {
        let ok = self.degrees_ok(s) && self.acyclic(s.len());
        for &v in &self.touched {
            self.indeg[v] = 0;
            self.succ[v] = NONE;
        }
        self.touched.clear();
        ok
    }

    fn degrees_ok(&mut self, s: &EdgeSet) -> bool {
        for e in s {
            let (a, b) = self.g.edge(e);
            if a == b || self.succ[a] != NONE || self.indeg[b] != 0 {
                return false;
            }
            self.succ[a] = b;
            self.indeg[b] = 1;
            self.touched.push(a);
            self.touched.push(b);
        }
        true
    }

    /// With in- and out-degrees at most one, the edges form disjoint paths and cycles;
    /// walking every path from its start covers all edges iff there is no cycle.
    fn acyclic(&self, edge_count: usize) -> bool {
        let mut covered = 0;
        for &v in &self.touched {
            if self.indeg[v] == 0 && self.succ[v] != NONE {
                let mut at = v;
                while self.succ[at] != NONE {
                    at = self.succ[at];
                    covered += 1;
                }
            }
        }
        covered == edge_count
    }
}

pub fn is_multipath(g: &Digraph, s: &EdgeSet) -> bool {
    MultipathTester::new(g).test(s)
}

/// `Mult(g)`, grouped by length: entry `i` holds the multipaths with `i` edges in
/// canonical (lexicographic) order.
pub fn enumerate_multipaths(g: &Digraph) -> Result<Vec<Vec<EdgeSet>>> {
    enumerate_multipaths_with(g, &Limits::default())
}

pub fn enumerate_multipaths_with(g: &Digraph, limits: &Limits) -> Result<Vec<Vec<EdgeSet>>> {
    let mut walk = Enumeration {
        tester: MultipathTester::new(g),
        edge_count: g.edge_count(),
        budget: limits.subsets,
        examined: 1,
        found: vec![vec![g.empty_edges()]],
    };
    walk.extend(&g.empty_edges(), 0)?;
    let mut groups = walk.found;
    for group in &mut groups {
        group.sort_by(EdgeSet::canonical_cmp);
    }
    Ok(groups)
}

/// Depth-first growth by increasing edge id. `Mult(g)` is closed under taking
/// subsets, so every multipath is reached through its prefixes and each candidate
/// examined is a multipath plus one edge.
struct Enumeration<'g> {
    tester: MultipathTester<'g>,
    edge_count: usize,
    budget: u64,
    examined: u64,
    found: Vec<Vec<EdgeSet>>,
}

impl Enumeration<'_> {
    fn extend(&mut self, base: &EdgeSet, from: usize) -> Result<()> {
        for e in from..self.edge_count {
            self.examined += 1;
            if self.examined > self.budget {
                return Err(Error::EnumerationBudgetExceeded(self.budget));
            }
            let candidate = base.with(e);
            if self.tester.test(&candidate) {
                let len = candidate.len();
                if self.found.len() <= len {
                    self.found.push(Vec::new());
                }
                self.found[len].push(candidate.clone());
                self.extend(&candidate, e + 1)?;
            }
        }
        Ok(())
    }
}

/// The path poset `P(g)`: all multipaths ordered by edge-set inclusion.
#[derive(Debug, Clone)]
pub struct PathPoset {
    elements: Vec<EdgeSet>,
}

impl PathPoset {
    /// Elements sorted by (size, lexicographic id order); the first is the empty
    /// multipath.
    pub fn elements(&self) -> &[EdgeSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: &EdgeSet) -> bool {
        self.elements.binary_search_by(|m| m.canonical_cmp(s)).is_ok()
    }

    pub fn less_or_equal(&self, a: usize, b: usize) -> bool {
        self.elements[a].is_subset(&self.elements[b])
    }

    /// Multipaths not contained in any other multipath.
    pub fn maximal_elements(&self) -> Vec<&EdgeSet> {
        self.elements
            .iter()
            .filter(|m| !self.elements.iter().any(|other| other.len() > m.len() && m.is_subset(other)))
            .collect()
    }
}

pub fn path_poset(g: &Digraph) -> Result<PathPoset> {
    path_poset_with(g, &Limits::default())
}

pub fn path_poset_with(g: &Digraph, limits: &Limits) -> Result<PathPoset> {
    let elements: Vec<EdgeSet> = enumerate_multipaths_with(g, limits)?.into_iter().flatten().collect();
    debug_assert!(elements.windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
    let poset = PathPoset { elements };
    debug_assert!(poset
        .elements
        .iter()
        .all(|m| m.iter().all(|e| poset.contains(&m.without(e)))));
    Ok(poset)
}

/// Number of connected components of the spanning subgraph `(V(g), s)`.
pub fn p0_of_subset(g: &Digraph, s: &EdgeSet) -> usize {
    g.p0_of_subset(s)
}

/// `sum over multipaths m of x^{ℓ(m)}`, written in the variable `q`.
pub fn multipath_length_polynomial(g: &Digraph) -> Result<LaurentPoly> {
    multipath_length_polynomial_with(g, &Limits::default())
}

pub fn multipath_length_polynomial_with(g: &Digraph, limits: &Limits) -> Result<LaurentPoly> {
    let groups = enumerate_multipaths_with(g, limits)?;
    Ok(LaurentPoly::from_terms(groups.iter().enumerate().map(|(i, grp)| (i as i64, grp.len() as i64))))
}
