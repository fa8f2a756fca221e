use super::{Digraph, EdgeSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All coherently oriented simple cycles of length at least two, as edge sets in
/// canonical order. Loops are not reported.
pub fn directed_cycles(g: &Digraph) -> Result<Vec<EdgeSet>> {
    directed_cycles_with(g, &Limits::default())
}

pub fn directed_cycles_with(g: &Digraph, limits: &Limits) -> Result<Vec<EdgeSet>> {
    let mut search = CycleSearch {
        g,
        budget: limits.cycles,
        on_path: vec![false; g.vertex_count()],
        path: Vec::new(),
        found: Vec::new(),
    };
    // every simple cycle is found exactly once, from its smallest vertex
    for start in 0..g.vertex_count() {
        search.on_path[start] = true;
        search.extend(start, start)?;
        search.on_path[start] = false;
    }
    let mut found = search.found;
    found.sort_by(EdgeSet::canonical_cmp);
    Ok(found)
}

struct CycleSearch<'g> {
    g: &'g Digraph,
    budget: u64,
    on_path: Vec<bool>,
    path: Vec<usize>,
    found: Vec<EdgeSet>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, start: usize, at: usize) -> Result<()> {
        for &e in self.g.out_edges(at) {
            let next = self.g.target(e);
            if next == start {
                if self.found.len() as u64 >= self.budget {
                    return Err(Error::CycleBudgetExceeded(self.budget));
                }
                let ids = self.path.iter().copied().chain(std::iter::once(e));
                self.found.push(EdgeSet::from_ids(self.g.edge_count(), ids));
            } else if next > start && !self.on_path[next] {
                self.on_path[next] = true;
                self.path.push(e);
                self.extend(start, next)?;
                self.path.pop();
                self.on_path[next] = false;
            }
        }
        Ok(())
    }
}

/// Whether some coherently oriented cycle of length at least two exists.
pub fn has_directed_cycle(g: &Digraph) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = g.vertex_count();
    let mut mark = vec![Mark::New; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        mark[root] = Mark::Open;
        stack.push((root, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&e) = g.out_edges(v).get(*next) {
                *next += 1;
                let w = g.target(e);
                match mark[w] {
                    Mark::Open => return true,
                    Mark::New => {
                        mark[w] = Mark::Open;
                        stack.push((w, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coherent_triangle_has_one_cycle() {
        let g = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = directed_cycles(&g).unwrap();
        assert_eq!(c, vec![EdgeSet::full(3)]);
        assert!(has_directed_cycle(&g));
    }

    #[test]
    fn path_has_none() {
        let g = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(directed_cycles(&g).unwrap().is_empty());
        assert!(!has_directed_cycle(&g));
    }

    #[test]
    fn non_coherent_square_has_none() {
        // a1=0, a2=1, b1=2, b2=3, c=4
        let g = Digraph::new(5, [(0, 1), (2, 3), (3, 1), (2, 0), (1, 4)]).unwrap();
        assert!(directed_cycles(&g).unwrap().is_empty());
        assert!(!has_directed_cycle(&g));
    }

    #[test]
    fn loops_are_not_cycles() {
        let g = Digraph::new(1, [(0, 0)]).unwrap();
        assert!(directed_cycles(&g).unwrap().is_empty());
        assert!(!has_directed_cycle(&g));
    }

    #[test]
    fn complete_digraph_cycle_count() {
        // K4 with both directions: 6 digons, 8 triangles, 6 four-cycles
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    edges.push((u, v));
                }
            }
        }
        let g = Digraph::new(4, edges).unwrap();
        let c = directed_cycles(&g).unwrap();
        let sizes: Vec<usize> = c.iter().map(EdgeSet::len).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 6);
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 8);
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let limits = Limits { cycles: 0, ..Limits::default() };
        assert_eq!(directed_cycles_with(&g, &limits), Err(Error::CycleBudgetExceeded(0)));
    }
}
