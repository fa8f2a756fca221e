//! Flowing colourings and the colouring identities for maximal-rank spanning forests.
//!
//! A flowing `k`-colouring is a map `c: V -> {1..k}` with `c(v) != c(w)` for every
//! edge `(v, w)`, equal colours on the sources of edges with a common target, and
//! equal colours on the targets of edges with a common source.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::digraph::{has_directed_cycle, Digraph, EdgeSet};
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::Matroid;
use crate::mp_structure::require_mp;
use crate::poly::BiPoly;
use crate::tutte::tutte_by_uniform_product_with;

/// Vertices forced to share a colour, merged into classes, and the simple graph the
/// edges induce on the classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowQuotient {
    /// Class of every vertex; classes are numbered by their smallest vertex.
    pub class_of: Vec<usize>,
    /// Sorted, duplicate-free neighbour lists of the classes.
    pub adjacency: Vec<Vec<usize>>,
    /// Some edge has both ends in one class, so no flowing colouring exists.
    pub contradictory: bool,
}

impl FlowQuotient {
    pub fn class_count(&self) -> usize {
        self.adjacency.len()
    }
}

pub fn flow_quotient(g: &Digraph) -> FlowQuotient {
    let n = g.vertex_count();
    let mut dsu = DisjointSets::new(n);
    let mut first_source = vec![None; n];
    let mut first_target = vec![None; n];
    for &(s, t) in g.edges() {
        match first_source[t] {
            None => first_source[t] = Some(s),
            Some(s0) => {
                dsu.union(s0, s);
            }
        }
        match first_target[s] {
            None => first_target[s] = Some(t),
            Some(t0) => {
                dsu.union(t0, t);
            }
        }
    }
    let class_of = dsu.labels();
    let classes = dsu.blocks();
    let mut adjacency = vec![Vec::new(); classes];
    let mut contradictory = false;
    for &(s, t) in g.edges() {
        let (a, b) = (class_of[s], class_of[t]);
        if a == b {
            contradictory = true;
        } else {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    FlowQuotient { class_of, adjacency, contradictory }
}

/// `τ_g(k)`.
pub fn count_flowing(g: &Digraph, k: u64) -> Result<u128> {
    count_flowing_with(g, k, &Limits::default())
}

/// Proper `k`-colourings of the quotient graph, counted by backtracking one connected
/// component at a time. Colours are interchangeable, so the first vertex of each
/// component is fixed to one colour and the count multiplied by `k`.
pub fn count_flowing_with(g: &Digraph, k: u64, limits: &Limits) -> Result<u128> {
    if g.vertex_count() == 0 {
        return Ok(1);
    }
    let q = flow_quotient(g);
    if q.contradictory || k == 0 {
        return Ok(0);
    }
    let mut counter = Backtrack { q: &q, k, colour: vec![u64::MAX; q.class_count()], visited: 0, budget: limits.assignments };
    let mut seen = vec![false; q.class_count()];
    let mut total: u128 = 1;
    for root in 0..q.class_count() {
        if seen[root] {
            continue;
        }
        let order = component_order(&q, root, &mut seen);
        counter.colour[order[0]] = 0;
        let count = counter.extend(&order, 1)?;
        total = total.saturating_mul(count).saturating_mul(k as u128);
    }
    Ok(total)
}

/// Breadth-first order, so that each vertex after the first has a coloured neighbour.
fn component_order(q: &FlowQuotient, root: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in &q.adjacency[order[i]] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

struct Backtrack<'q> {
    q: &'q FlowQuotient,
    k: u64,
    colour: Vec<u64>,
    visited: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn extend(&mut self, order: &[usize], depth: usize) -> Result<u128> {
        if depth == order.len() {
            return Ok(1);
        }
        let v = order[depth];
        let mut count = 0;
        for c in 0..self.k {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::AssignmentBudgetExceeded(self.budget));
            }
            if self.q.adjacency[v].iter().all(|&w| self.colour[w] != c) {
                self.colour[v] = c;
                count += self.extend(order, depth + 1)?;
                self.colour[v] = u64::MAX;
            }
        }
        Ok(count)
    }
}

/// `τ_g(k)` by checking the three clauses on all `k^|V|` maps.
pub fn count_flowing_raw(g: &Digraph, k: u64, limits: &Limits) -> Result<u128> {
    let n = g.vertex_count() as u32;
    let total = (k as u128).checked_pow(n).filter(|&t| t <= limits.assignments as u128);
    let Some(total) = total else {
        return Err(Error::AssignmentBudgetExceeded(limits.assignments));
    };
    let edges = g.edges();
    let mut colour = vec![0u64; n as usize];
    let mut count = 0;
    for index in 0..total {
        let mut rest = index;
        for c in colour.iter_mut() {
            *c = (rest % k as u128) as u64;
            rest /= k as u128;
        }
        let flowing = edges.iter().enumerate().all(|(i, &(s, t))| {
            colour[s] != colour[t]
                && edges[i + 1..].iter().all(|&(s2, t2)| {
                    (t2 != t || colour[s2] == colour[s]) && (s2 != s || colour[t2] == colour[t])
                })
        });
        if flowing {
            count += 1;
        }
    }
    Ok(count)
}

fn require_cycle_free_mp(g: &Digraph, limits: &Limits) -> Result<()> {
    require_mp(g, limits)?;
    if g.has_loops() || has_directed_cycle(g) {
        return Err(Error::HasCoherentCycle);
    }
    Ok(())
}

/// A spanning forest `S` with `r(S) = r(E)`: one spanning tree per component, grown
/// from a maximum multipath.
pub fn max_rank_spanning_forest(g: &Digraph) -> Result<EdgeSet> {
    max_rank_spanning_forest_with(g, &Limits::default())
}

pub fn max_rank_spanning_forest_with(g: &Digraph, limits: &Limits) -> Result<EdgeSet> {
    require_cycle_free_mp(g, limits)?;
    let basis = Matroid::multipath(g).basis_of(&g.all_edges());
    let mut dsu = DisjointSets::new(g.vertex_count());
    for e in &basis {
        let (a, b) = g.edge(e);
        assert!(dsu.union(a, b), "a multipath has no undirected cycle");
    }
    let mut forest = basis;
    for e in 0..g.edge_count() {
        let (a, b) = g.edge(e);
        if dsu.union(a, b) {
            forest.insert(e);
        }
    }
    Ok(forest)
}

/// Every spanning forest of the underlying undirected multigraph (one spanning tree
/// per component), or `None` when there are more than `limit` of them.
pub fn spanning_forests(g: &Digraph, limit: usize) -> Option<Vec<EdgeSet>> {
    let target = g.vertex_count() - g.p0();
    let mut search = ForestSearch { g, target, limit, found: Vec::new(), overflow: false };
    search.extend(0, &mut DisjointSets::new(g.vertex_count()), g.empty_edges());
    if search.overflow {
        None
    } else {
        Some(search.found)
    }
}

struct ForestSearch<'g> {
    g: &'g Digraph,
    target: usize,
    limit: usize,
    found: Vec<EdgeSet>,
    overflow: bool,
}

impl ForestSearch<'_> {
    /// Include or exclude edge `e`, pruning branches where the chosen edges plus the
    /// undecided ones can no longer span every component.
    fn extend(&mut self, e: usize, dsu: &mut DisjointSets, chosen: EdgeSet) {
        if self.overflow {
            return;
        }
        if chosen.len() == self.target {
            if self.found.len() == self.limit {
                self.overflow = true;
            } else {
                self.found.push(chosen);
            }
            return;
        }
        if e == self.g.edge_count() || !self.can_finish(e, dsu, chosen.len()) {
            return;
        }
        let (a, b) = self.g.edge(e);
        let mut with = dsu.clone();
        if with.union(a, b) {
            self.extend(e + 1, &mut with, chosen.with(e));
        }
        self.extend(e + 1, dsu, chosen);
    }

    fn can_finish(&self, from: usize, dsu: &DisjointSets, have: usize) -> bool {
        let mut reach = dsu.clone();
        let mut gained = 0;
        for e in from..self.g.edge_count() {
            let (a, b) = self.g.edge(e);
            if reach.union(a, b) {
                gained += 1;
            }
        }
        have + gained == self.target
    }
}

/// Outcome of [`verify_colouring_identity`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringReport {
    pub rank: usize,
    pub p0: usize,
    /// Maximal-rank spanning forests for which the identity was checked.
    pub forests_checked: usize,
    /// Whether every spanning forest was enumerated (within the forest limit).
    pub exhaustive: bool,
    /// Total number of `(forest, k)` equalities checked, the tree form included.
    pub equalities: usize,
}

/// `k^{p0} T(1-k, 0)` as an exact integer.
fn tutte_side(t: &BiPoly, p0: usize, k: u64) -> BigInt {
    let value = t.eval_integers(&BigInt::from(1 - k as i64), &BigInt::zero());
    value * num_traits::pow(BigInt::from(k), p0)
}

fn sign(r: usize) -> BigInt {
    if r.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Checks `k^{p0(G)} T(1-k, 0) = (-1)^{r(G)} τ_S(k)` for the greedy forest and, when
/// there are at most the configured number of spanning forests, for every forest of
/// maximal rank. For a tree, `k T(1-k, 0) = (-1)^r τ_G(k)` is checked as well.
pub fn verify_colouring_identity(g: &Digraph, ks: &[u64]) -> Result<ColouringReport> {
    verify_colouring_identity_with(g, ks, &Limits::default())
}

pub fn verify_colouring_identity_with(g: &Digraph, ks: &[u64], limits: &Limits) -> Result<ColouringReport> {
    require_cycle_free_mp(g, limits)?;
    let matroid = Matroid::multipath(g);
    let rank = matroid.full_rank();
    let p0 = g.p0();
    let t = tutte_by_uniform_product_with(g, limits)?;
    let mut forests = vec![max_rank_spanning_forest_with(g, limits)?];
    let all = spanning_forests(g, limits.spanning_forests);
    let exhaustive = all.is_some();
    for s in all.into_iter().flatten() {
        if matroid.rank(&s) == rank && !forests.contains(&s) {
            forests.push(s);
        }
    }
    let mut equalities = 0;
    for s in &forests {
        let (sub, _) = g.spanning_subgraph(s);
        for &k in ks {
            let lhs = tutte_side(&t, p0, k);
            let rhs = sign(rank) * BigInt::from(count_flowing_with(&sub, k, limits)?);
            if lhs != rhs {
                return Err(Error::IdentityViolation(format!(
                    "spanning forest {s}, k = {k}: k^p0 T(1-k,0) = {lhs} but (-1)^r tau_S(k) = {rhs}"
                )));
            }
            equalities += 1;
        }
    }
    if p0 == 1 && g.is_undirected_forest() {
        for &k in ks {
            let lhs = tutte_side(&t, 1, k);
            let rhs = sign(rank) * BigInt::from(count_flowing_with(g, k, limits)?);
            if lhs != rhs {
                return Err(Error::IdentityViolation(format!(
                    "tree, k = {k}: k T(1-k,0) = {lhs} but (-1)^r tau_G(k) = {rhs}"
                )));
            }
            equalities += 1;
        }
    }
    Ok(ColouringReport { rank, p0, forests_checked: forests.len(), exhaustive, equalities })
}
