//! Finite digraphs with positional edge identifiers.
//!
//! Loops (and parallel loops) are allowed; between two distinct vertices there is at
//! most one edge in each direction. Every surgery returns a fresh digraph together
//! with an [`EdgeCorrespondence`] instead of silently renumbering edges.

mod cycles;
mod edge_set;
mod pattern;
mod surgery;

use std::collections::HashMap;

use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

pub use cycles::{directed_cycles, directed_cycles_with, has_directed_cycle};
pub use edge_set::{EdgeSet, Iter as EdgeSetIter};
pub use pattern::{find_forbidden_pattern, PatternKind, PatternWitness};
pub use surgery::EdgeCorrespondence;

#[derive(Debug, Clone, Serialize)]
pub struct Digraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    out_edges: Vec<Vec<usize>>,
    #[serde(skip)]
    in_edges: Vec<Vec<usize>>,
    #[serde(skip)]
    loops: Vec<Vec<usize>>,
    #[serde(skip)]
    pair_index: HashMap<(usize, usize), usize>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Digraph {}

/// Connected components of the underlying undirected multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Block index of every vertex; blocks are numbered by their smallest vertex.
    pub block_of: Vec<usize>,
    pub blocks: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
}

impl Components {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

impl Digraph {
    pub fn new(vertex_count: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: Vec<_> = edge_list.into_iter().collect();
        let mut out_edges = vec![Vec::new(); vertex_count];
        let mut in_edges = vec![Vec::new(); vertex_count];
        let mut loops = vec![Vec::new(); vertex_count];
        let mut pair_index = HashMap::with_capacity(edges.len());
        for (id, &(s, t)) in edges.iter().enumerate() {
            for v in [s, t] {
                if v >= vertex_count {
                    return Err(Error::OutOfRangeVertex { vertex: v, vertex_count });
                }
            }
            if s == t {
                loops[s].push(id);
                continue;
            }
            if pair_index.insert((s, t), id).is_some() {
                return Err(Error::DuplicateNonLoopEdge { source_vertex: s, target: t });
            }
            out_edges[s].push(id);
            in_edges[t].push(id);
        }
        Ok(Digraph { vertices: vertex_count, edges, out_edges, in_edges, loops, pair_index })
    }

    /// The digraph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Digraph::new(n, []).expect("edgeless digraph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(source, target)` of edge `e`; panics on an invalid id.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn check_edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdge { edge: e, edge_count: self.edges.len() })
    }

    pub fn source(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn target(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (s, t) = self.edges[e];
        s == t
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|l| !l.is_empty())
    }

    pub fn loop_edges(&self) -> EdgeSet {
        EdgeSet::from_ids(self.edge_count(), self.loops.iter().flatten().copied())
    }

    /// Non-loop edges leaving `v`, in increasing id order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Non-loop edges entering `v`, in increasing id order.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn loops_at(&self, v: usize) -> &[usize] {
        &self.loops[v]
    }

    /// Out-degree ignoring loops.
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    /// In-degree ignoring loops.
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    /// The edge `(u, v)` for distinct `u` and `v`.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.pair_index.get(&(u, v)).copied()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn empty_edges(&self) -> EdgeSet {
        EdgeSet::empty(self.edge_count())
    }

    /// Every edge `(v, w)` becomes `(w, v)`; edge ids are preserved.
    pub fn reverse(&self) -> Digraph {
        Digraph::new(self.vertices, self.edges.iter().map(|&(s, t)| (t, s))).expect("reversal preserves validity")
    }

    pub fn connected_components(&self) -> Components {
        self.components_of(&self.all_edges())
    }

    /// Number of connected components of the spanning subgraph `(V, s)`.
    pub fn p0_of_subset(&self, s: &EdgeSet) -> usize {
        let mut dsu = DisjointSets::new(self.vertices);
        for e in s {
            let (a, b) = self.edges[e];
            dsu.union(a, b);
        }
        dsu.blocks()
    }

    pub fn p0(&self) -> usize {
        self.p0_of_subset(&self.all_edges())
    }

    /// Components of the spanning subgraph `(V, s)`.
    pub fn components_of(&self, s: &EdgeSet) -> Components {
        let mut dsu = DisjointSets::new(self.vertices);
        for e in s {
            let (a, b) = self.edges[e];
            dsu.union(a, b);
        }
        let block_of = dsu.labels();
        let count = dsu.blocks();
        let mut blocks: Vec<Component> =
            (0..count).map(|_| Component { vertices: Vec::new(), edges: self.empty_edges() }).collect();
        for (v, &b) in block_of.iter().enumerate() {
            blocks[b].vertices.push(v);
        }
        for e in s {
            blocks[block_of[self.edges[e].0]].edges.insert(e);
        }
        Components { block_of, blocks }
    }

    /// Whether the underlying undirected multigraph is a forest (loops and digons count
    /// as cycles).
    pub fn is_undirected_forest(&self) -> bool {
        let mut dsu = DisjointSets::new(self.vertices);
        self.edges.iter().all(|&(a, b)| dsu.union(a, b))
    }

    /// `self` followed by `other`, with the vertices and edges of `other` shifted past
    /// those of `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let n = self.vertices;
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|&(s, t)| (s + n, t + n)));
        Digraph::new(n + other.vertices, edges).expect("disjoint union preserves validity")
    }

    /// The spanning subgraph `(V, s)`. Its edge `i` is the `i`-th smallest member of `s`;
    /// the returned vector maps new ids back to ids of `self`.
    pub fn spanning_subgraph(&self, s: &EdgeSet) -> (Digraph, Vec<usize>) {
        let ids: Vec<usize> = s.iter().collect();
        let g = Digraph::new(self.vertices, ids.iter().map(|&e| self.edges[e])).expect("subgraph of a valid digraph");
        (g, ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_conventions() {
        let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.edge_count(), 3);
        assert_eq!(path.edge_between(1, 2), Some(1));
        let looped = Digraph::new(1, [(0, 0), (0, 0)]).unwrap();
        assert_eq!(looped.loops_at(0), &[0, 1]);
        assert_eq!(looped.out_degree(0), 0);
        assert_eq!(
            Digraph::new(2, [(0, 1), (0, 1)]),
            Err(Error::DuplicateNonLoopEdge { source_vertex: 0, target: 1 })
        );
        assert_eq!(Digraph::new(2, [(0, 2)]), Err(Error::OutOfRangeVertex { vertex: 2, vertex_count: 2 }));
        // opposite directions are distinct pairs
        assert!(Digraph::new(2, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn reverse_path_and_loop() {
        let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.reverse().edges(), &[(1, 0), (2, 1), (3, 2)]);
        let l = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(l.reverse(), l);
    }

    #[test]
    fn components() {
        let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.connected_components().count(), 1);
        let two = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.blocks[1].vertices, vec![2, 3]);
        assert_eq!(comps.blocks[1].edges, EdgeSet::from_ids(2, [1]));
        assert_eq!(Digraph::edgeless(3).connected_components().count(), 3);
    }

    #[test]
    fn p0_of_subsets() {
        let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.p0_of_subset(&path.empty_edges()), 4);
        assert_eq!(path.p0_of_subset(&path.all_edges()), 1);
    }

    #[test]
    fn forests() {
        assert!(Digraph::new(3, [(0, 1), (2, 1)]).unwrap().is_undirected_forest());
        assert!(!Digraph::new(2, [(0, 1), (1, 0)]).unwrap().is_undirected_forest());
        assert!(!Digraph::new(1, [(0, 0)]).unwrap().is_undirected_forest());
    }
}
