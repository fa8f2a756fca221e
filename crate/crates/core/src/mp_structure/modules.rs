use std::fmt;

use serde::Serialize;

use super::require_mp;
use crate::digraph::{directed_cycles_with, Digraph, EdgeSet};
use crate::error::Result;
use crate::limits::Limits;
use crate::matroid::Matroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    Loop,
    CoherentCycle,
    SinkStar,
    SourceStar,
    SingleEdge,
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Loop => "loop",
            ModuleKind::CoherentCycle => "coherent-cycle",
            ModuleKind::SinkStar => "sink",
            ModuleKind::SourceStar => "source",
            ModuleKind::SingleEdge => "single-edge",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynamicalModule {
    pub kind: ModuleKind,
    pub edges: EdgeSet,
    /// The common target of a sink, the common source of a source, or the vertex
    /// carrying a loop.
    pub center: Option<usize>,
    /// Vertices of a coherent cycle, in the order the cycle visits them from its
    /// smallest vertex. Empty for the other kinds.
    pub cycle: Vec<usize>,
}

impl DynamicalModule {
    /// `(k, n)` such that the module's matroid is `U(k, n)`.
    pub fn uniform_parameters(&self) -> (usize, usize) {
        let n = self.edges.len();
        match self.kind {
            ModuleKind::Loop => (0, 1),
            ModuleKind::CoherentCycle => (n - 1, n),
            ModuleKind::SinkStar | ModuleKind::SourceStar | ModuleKind::SingleEdge => (1, n),
        }
    }

    pub fn matroid(&self) -> Matroid {
        let (k, n) = self.uniform_parameters();
        Matroid::uniform(k, n).expect("module parameters satisfy k <= n")
    }
}

impl fmt::Display for DynamicalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.edges)?;
        if let Some(c) = self.center {
            write!(f, " at {c}")?;
        }
        Ok(())
    }
}

/// A partition of `E(g)` into dynamical modules, ordered by smallest edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDecomposition {
    pub modules: Vec<DynamicalModule>,
}

impl ModuleDecomposition {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module_of(&self, e: usize) -> Option<&DynamicalModule> {
        self.modules.iter().find(|m| m.edges.contains(e))
    }

    pub fn factorization(&self) -> UniformFactorization {
        UniformFactorization::new(self.modules.iter().map(DynamicalModule::uniform_parameters))
    }
}

pub fn dynamical_modules(g: &Digraph) -> Result<ModuleDecomposition> {
    dynamical_modules_with(g, &Limits::default())
}

/// Loops, then coherent-cycle components, then stars of the remaining edges: an
/// out-star at every vertex with two or more out-edges, an in-star at every vertex
/// with two or more in-edges, and single edges for the rest.
pub fn dynamical_modules_with(g: &Digraph, limits: &Limits) -> Result<ModuleDecomposition> {
    require_mp(g, limits)?;
    let m = g.edge_count();
    let mut modules = Vec::new();
    let mut assigned = g.empty_edges();
    for e in &g.loop_edges() {
        modules.push(DynamicalModule {
            kind: ModuleKind::Loop,
            edges: EdgeSet::from_ids(m, [e]),
            center: Some(g.source(e)),
            cycle: Vec::new(),
        });
        assigned.insert(e);
    }
    for cycle in directed_cycles_with(g, limits)? {
        let start = g.source(cycle.first().expect("cycles are non-empty"));
        let mut order = vec![start];
        let mut at = start;
        loop {
            let next = g.out_edges(at).iter().map(|&e| g.target(e)).next().expect("cycle vertex has an out-edge");
            if next == start {
                break;
            }
            order.push(next);
            at = next;
        }
        assigned = assigned.union(&cycle);
        modules.push(DynamicalModule { kind: ModuleKind::CoherentCycle, edges: cycle, center: None, cycle: order });
    }
    for v in 0..g.vertex_count() {
        for (kind, star) in [(ModuleKind::SourceStar, g.out_edges(v)), (ModuleKind::SinkStar, g.in_edges(v))] {
            let free: Vec<usize> = star.iter().copied().filter(|&e| !assigned.contains(e)).collect();
            if free.len() >= 2 {
                let edges = EdgeSet::from_ids(m, free);
                assert!(edges.is_disjoint(&assigned), "an edge lies in both an in-star and an out-star");
                assigned = assigned.union(&edges);
                modules.push(DynamicalModule { kind, edges, center: Some(v), cycle: Vec::new() });
            }
        }
    }
    for e in 0..m {
        if !assigned.contains(e) {
            modules.push(DynamicalModule {
                kind: ModuleKind::SingleEdge,
                edges: EdgeSet::from_ids(m, [e]),
                center: None,
                cycle: Vec::new(),
            });
        }
    }
    modules.sort_by_key(|md| md.edges.first());
    Ok(ModuleDecomposition { modules })
}

/// The direct sum of the module matroids, laid out on `E(g)`: a set is independent
/// when it meets every module `U(k, n)` in at most `k` edges.
pub fn module_matroid(g: &Digraph) -> Result<Matroid> {
    let decomposition = dynamical_modules(g)?;
    let blocks: Vec<(EdgeSet, usize)> =
        decomposition.modules.iter().map(|md| (md.edges.clone(), md.uniform_parameters().0)).collect();
    Ok(Matroid::from_predicate(g.edge_count(), move |s| {
        blocks.iter().all(|(edges, k)| s.intersection(edges).len() <= *k)
    }))
}

/// A multiset of uniform matroids `U(k, n)` whose direct sum is the matroid at hand,
/// kept sorted by `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UniformFactorization {
    factors: Vec<(usize, usize)>,
}

impl UniformFactorization {
    pub fn new(factors: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut factors: Vec<_> = factors.into_iter().collect();
        factors.sort_unstable();
        UniformFactorization { factors }
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(k, _)| k).sum()
    }

    pub fn ground_size(&self) -> usize {
        self.factors.iter().map(|&(_, n)| n).sum()
    }

    /// Splits the disconnected factors: `U(0, n)` into `n` copies of `U(0, 1)` and
    /// `U(n, n)` into `n` copies of `U(1, 1)`.
    pub fn normalized(&self) -> Self {
        UniformFactorization::new(self.factors.iter().flat_map(|&(k, n)| {
            if k == 0 {
                vec![(0, 1); n]
            } else if k == n {
                vec![(1, 1); n]
            } else {
                vec![(k, n)]
            }
        }))
    }
}

/// Equal factors are grouped, e.g. `U(0,1) x3 + U(1,2)`; the empty sum is `U(0,0)`.
impl fmt::Display for UniformFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "U(0,0)");
        }
        let mut first = true;
        for group in self.factors.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (k, n) = group[0];
            write!(f, "U({k},{n})")?;
            if group.len() > 1 {
                write!(f, " x{}", group.len())?;
            }
        }
        Ok(())
    }
}

pub fn uniform_decomposition(g: &Digraph) -> Result<UniformFactorization> {
    uniform_decomposition_with(g, &Limits::default())
}

pub fn uniform_decomposition_with(g: &Digraph, limits: &Limits) -> Result<UniformFactorization> {
    Ok(dynamical_modules_with(g, limits)?.factorization())
}

/// Connected uniform matroids determine their parameters and the decomposition into
/// connected parts is unique, so comparing normalized factorizations decides
/// isomorphism.
pub fn matroids_isomorphic(g1: &Digraph, g2: &Digraph) -> Result<bool> {
    Ok(uniform_decomposition(g1)?.normalized() == uniform_decomposition(g2)?.normalized())
}
