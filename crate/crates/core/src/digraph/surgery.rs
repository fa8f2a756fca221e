use super::Digraph;
use crate::error::{Error, Result};

/// Identification of the edges of a digraph with the edges of a digraph obtained
/// from it by removing or contracting one edge.
///
/// Surviving edges keep their relative order: ids below the operated edge are
/// unchanged and ids above it shift down by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCorrespondence {
    image: Vec<Option<usize>>,
    removed: usize,
}

impl EdgeCorrespondence {
    /// The shift-down map on `0..n` that drops `removed`.
    pub fn shift_down(n: usize, removed: usize) -> Self {
        assert!(removed < n, "removed element {removed} outside 0..{n}");
        let image = (0..n)
            .map(|i| match i.cmp(&removed) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            })
            .collect();
        EdgeCorrespondence { image, removed }
    }

    /// The edge without an image.
    pub fn removed(&self) -> usize {
        self.removed
    }

    pub fn image(&self, old: usize) -> Option<usize> {
        self.image.get(old).copied().flatten()
    }

    pub fn preimage(&self, new: usize) -> usize {
        if new < self.removed {
            new
        } else {
            new + 1
        }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.image.len() - 1
    }
}

impl Digraph {
    /// `V` unchanged, `E` without `e`.
    pub fn delete_edge(&self, e: usize) -> Result<(Digraph, EdgeCorrespondence)> {
        self.check_edge(e)?;
        let corr = EdgeCorrespondence::shift_down(self.edge_count(), e);
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p);
        let g = Digraph::new(self.vertices, edges).expect("deleting an edge preserves validity");
        Ok((g, corr))
    }

    /// MP-contraction of the non-loop edge `e = (v, w)`.
    ///
    /// `v` and `w` merge into a vertex `x`, which takes the index `min(v, w)`; the
    /// vertices above `max(v, w)` shift down by one. Edges away from `{v, w}` are kept,
    /// `(a, v)` becomes `(a, x)` and `(w, b)` becomes `(x, b)`. Edges `(v, a)` with
    /// `a != w`, edges `(b, w)` with `b != v`, loops at `v` or `w`, and the reverse
    /// edge `(w, v)` all become loops at `x`.
    pub fn mp_contract(&self, e: usize) -> Result<(Digraph, EdgeCorrespondence)> {
        let (v, w) = self.check_edge(e)?;
        if v == w {
            return Err(Error::LoopContraction(e));
        }
        let merge = merge_map(v, w);
        let x = v.min(w);
        let mut edges = Vec::with_capacity(self.edge_count() - 1);
        for (i, &(s, t)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let image = if s == t {
                (merge(s), merge(s))
            } else if s == v || t == w {
                (x, x)
            } else {
                // (w, v) also lands on (x, x) here
                (merge(s), merge(t))
            };
            edges.push(image);
        }
        let g = Digraph::new(self.vertices - 1, edges)
            .expect("MP-contraction cannot create parallel non-loop edges");
        Ok((g, EdgeCorrespondence::shift_down(self.edge_count(), e)))
    }

    /// Classical contraction of the non-loop edge `e`: its endpoints merge and every
    /// other edge keeps its endpoints under the merge. Fails when two edges become
    /// parallel.
    pub fn contract_classical(&self, e: usize) -> Result<(Digraph, EdgeCorrespondence)> {
        let (v, w) = self.check_edge(e)?;
        if v == w {
            return Err(Error::LoopContraction(e));
        }
        let merge = merge_map(v, w);
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &(s, t))| (merge(s), merge(t)));
        let g = Digraph::new(self.vertices - 1, edges)?;
        Ok((g, EdgeCorrespondence::shift_down(self.edge_count(), e)))
    }
}

fn merge_map(v: usize, w: usize) -> impl Fn(usize) -> usize {
    let (lo, hi) = (v.min(w), v.max(w));
    move |u| {
        if u == v || u == w {
            lo
        } else if u > hi {
            u - 1
        } else {
            u
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delete_middle_edge_of_path() {
        let g = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let (h, corr) = g.delete_edge(1).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(corr.image(0), Some(0));
        assert_eq!(corr.image(1), None);
        assert_eq!(g.delete_edge(2), Err(Error::InvalidEdge { edge: 2, edge_count: 2 }));
    }

    #[test]
    fn delete_single_loop() {
        let g = Digraph::new(1, [(0, 0)]).unwrap();
        let (h, _) = g.delete_edge(0).unwrap();
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn contract_alternating_path() {
        // v0 <- v1 -> v2 -> v3, contracting (v1, v0)
        let g = Digraph::new(4, [(1, 0), (1, 2), (2, 3)]).unwrap();
        let (h, corr) = g.mp_contract(0).unwrap();
        assert_eq!(h.vertex_count(), 3);
        // x = 0, v2 -> 1, v3 -> 2
        assert_eq!(h.edges(), &[(0, 0), (1, 2)]);
        assert_eq!(corr.image(1), Some(0));
        assert_eq!(corr.image(2), Some(1));
    }

    #[test]
    fn contract_digon_gives_loop() {
        let g = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let (h, _) = g.mp_contract(0).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edges(), &[(0, 0)]);
    }

    #[test]
    fn contract_single_edge() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        let (h, _) = g.mp_contract(0).unwrap();
        assert_eq!(h, Digraph::edgeless(1));
    }

    #[test]
    fn contract_rewires_in_and_out_edges() {
        // a -> v -> w -> b, plus v -> c and d -> w
        let g = Digraph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (5, 2)]).unwrap();
        let (h, _) = g.mp_contract(1).unwrap();
        // x = 1; 3 -> 2, 4 -> 3, 5 -> 4
        assert_eq!(h.edges(), &[(0, 1), (1, 2), (1, 1), (1, 1)]);
    }

    #[test]
    fn loop_contraction_rejected() {
        let g = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(g.mp_contract(0), Err(Error::LoopContraction(0)));
    }

    #[test]
    fn classical_contraction_keeps_edges() {
        let g = Digraph::new(4, [(1, 0), (1, 2), (2, 3)]).unwrap();
        let (h, _) = g.contract_classical(0).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
        let tri = Digraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(tri.contract_classical(1), Err(Error::DuplicateNonLoopEdge { .. })));
    }

    #[test]
    fn correspondence_preimage_inverts_image() {
        let c = EdgeCorrespondence::shift_down(5, 2);
        for new in 0..4 {
            assert_eq!(c.image(c.preimage(new)), Some(new));
        }
        assert_eq!(c.codomain_size(), 4);
    }
}
