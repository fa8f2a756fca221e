//! Recognition of MP-digraphs and the structure of their multipath matroids.
//!
//! A digraph is MP when its multipaths are the independent sets of a matroid. The
//! recognizer works from the forbidden-subgraph characterization: no transitive
//! triangle and no zigzag (up to reversal), and every coherently oriented cycle forms
//! a whole connected component.

mod modules;
mod oracle;

use std::fmt;

use serde::Serialize;

use crate::digraph::{directed_cycles_with, find_forbidden_pattern, Digraph, EdgeSet, PatternWitness};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub use modules::{
    dynamical_modules, dynamical_modules_with, matroids_isomorphic, module_matroid, uniform_decomposition,
    uniform_decomposition_with, DynamicalModule, ModuleDecomposition, ModuleKind, UniformFactorization,
};
pub use oracle::{check_circuit_axioms, check_independence_axioms, minimal_dependent_sets};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum MpWitness {
    Pattern(PatternWitness),
    /// A coherent cycle together with an edge that touches it from outside.
    NonComponentCycle { cycle: EdgeSet, extra_edge: usize },
}

impl fmt::Display for MpWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MpWitness::Pattern(p) => p.fmt(f),
            MpWitness::NonComponentCycle { cycle, extra_edge } => {
                write!(f, "coherent cycle {cycle} is not a component: edge {extra_edge} touches it")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MpVerdict {
    pub witness: Option<MpWitness>,
}

impl MpVerdict {
    pub fn is_mp(&self) -> bool {
        self.witness.is_none()
    }

    /// `Ok(())` for MP-digraphs, otherwise [`Error::NotMpDigraph`] carrying the witness.
    pub fn require(&self) -> Result<()> {
        match &self.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotMpDigraph(w.to_string())),
        }
    }
}

impl fmt::Display for MpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "MP"),
            Some(w) => write!(f, "NOT-MP: {w}"),
        }
    }
}

pub fn recognize_mp(g: &Digraph) -> Result<MpVerdict> {
    recognize_mp_with(g, &Limits::default())
}

/// Loops never affect the verdict: a loop is dependent on its own, so it is
/// a matroid loop whatever surrounds it, and the remaining edges are judged alone.
pub fn recognize_mp_with(g: &Digraph, limits: &Limits) -> Result<MpVerdict> {
    if let Some(p) = find_forbidden_pattern(g) {
        return Ok(MpVerdict { witness: Some(MpWitness::Pattern(p)) });
    }
    for cycle in directed_cycles_with(g, limits)? {
        for e in &cycle {
            let v = g.source(e);
            let outside = g.out_edges(v).iter().chain(g.in_edges(v)).find(|&&f| !cycle.contains(f));
            if let Some(&extra_edge) = outside {
                return Ok(MpVerdict { witness: Some(MpWitness::NonComponentCycle { cycle, extra_edge }) });
            }
        }
    }
    Ok(MpVerdict { witness: None })
}

pub(crate) fn require_mp(g: &Digraph, limits: &Limits) -> Result<()> {
    recognize_mp_with(g, limits)?.require()
}

/// The minimal edge sets that are not multipaths: single loops, pairs of edges with
/// a common target, pairs with a common source, and coherently oriented cycles.
pub fn circuits_mp(g: &Digraph) -> Result<Vec<EdgeSet>> {
    circuits_mp_with(g, &Limits::default())
}

pub fn circuits_mp_with(g: &Digraph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let m = g.edge_count();
    let mut circuits: Vec<EdgeSet> = g.loop_edges().iter().map(|e| EdgeSet::from_ids(m, [e])).collect();
    for v in 0..g.vertex_count() {
        for star in [g.in_edges(v), g.out_edges(v)] {
            for (i, &a) in star.iter().enumerate() {
                for &b in &star[i + 1..] {
                    circuits.push(EdgeSet::from_ids(m, [a, b]));
                }
            }
        }
    }
    circuits.extend(directed_cycles_with(g, limits)?);
    circuits.sort_by(EdgeSet::canonical_cmp);
    circuits.dedup();
    Ok(circuits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::PatternKind;
    use crate::families;

    #[test]
    fn tournament_rejected_with_pattern_a() {
        let v = recognize_mp(&families::transitive_tournament(3)).unwrap();
        assert!(matches!(v.witness, Some(MpWitness::Pattern(ref p)) if p.kind == PatternKind::TransitiveTriangle));
        assert!(v.to_string().starts_with("NOT-MP"));
    }

    #[test]
    fn non_coherent_square_accepted() {
        let v = recognize_mp(&families::non_coherent_square()).unwrap();
        assert!(v.is_mp());
        assert_eq!(v.to_string(), "MP");
    }

    #[test]
    fn cycle_with_tail_rejected() {
        let g = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let v = recognize_mp(&g).unwrap();
        match v.witness {
            Some(MpWitness::NonComponentCycle { cycle, extra_edge }) => {
                assert_eq!(cycle, EdgeSet::from_ids(4, [0, 1, 2]));
                assert_eq!(extra_edge, 3);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn loops_on_cycles_are_harmless() {
        let g = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        assert!(recognize_mp(&g).unwrap().is_mp());
    }

    #[test]
    fn circuits_of_small_families() {
        assert_eq!(circuits_mp(&families::sink(3)).unwrap().len(), 3);
        let cycle = families::coherent_cycle(5);
        assert_eq!(circuits_mp(&cycle).unwrap(), vec![cycle.all_edges()]);
        let l = families::loops(1);
        assert_eq!(circuits_mp(&l).unwrap(), vec![EdgeSet::full(1)]);
        let digon = families::coherent_cycle(2);
        assert_eq!(circuits_mp(&digon).unwrap(), vec![EdgeSet::full(2)]);
    }
}
