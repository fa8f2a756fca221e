use std::fmt;

use serde::Serialize;

use super::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    /// Pattern A: distinct `u, v, w` with edges `(u,v)`, `(v,w)`, `(u,w)`.
    TransitiveTriangle,
    /// Pattern B: distinct `v0..v3` with edges `(v0,v1)`, `(v2,v1)`, `(v2,v3)`.
    Zigzag,
}

impl PatternKind {
    pub fn letter(self) -> char {
        match self {
            PatternKind::TransitiveTriangle => 'A',
            PatternKind::Zigzag => 'B',
        }
    }
}

/// A concrete occurrence of a forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// `(u, v, w)` for pattern A, `(v0, v1, v2, v3)` for pattern B.
    pub vertices: Vec<usize>,
    /// Edge ids of the occurrence, in the order the pattern lists its edges.
    pub edges: Vec<usize>,
    /// Whether the occurrence was found in the reversed digraph; vertex roles then
    /// refer to reversed edges.
    pub reversed: bool,
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pattern {} on vertices {:?} via edges {:?}", self.kind.letter(), self.vertices, self.edges)?;
        if self.reversed {
            write!(f, " (reversed)")?;
        }
        Ok(())
    }
}

/// Searches `g`, then `g` reversed, for pattern A and then pattern B. Both classes
/// are closed under reversal, so the second pass only confirms the first.
pub fn find_forbidden_pattern(g: &Digraph) -> Option<PatternWitness> {
    search(g, false).or_else(|| search(&g.reverse(), true))
}

fn search(g: &Digraph, reversed: bool) -> Option<PatternWitness> {
    transitive_triangle(g)
        .map(|(vertices, edges)| PatternWitness { kind: PatternKind::TransitiveTriangle, vertices, edges, reversed })
        .or_else(|| {
            zigzag(g).map(|(vertices, edges)| PatternWitness { kind: PatternKind::Zigzag, vertices, edges, reversed })
        })
}

fn transitive_triangle(g: &Digraph) -> Option<(Vec<usize>, Vec<usize>)> {
    for u in 0..g.vertex_count() {
        for &uv in g.out_edges(u) {
            let v = g.target(uv);
            for &vw in g.out_edges(v) {
                let w = g.target(vw);
                if w == u {
                    continue;
                }
                if let Some(uw) = g.edge_between(u, w) {
                    return Some((vec![u, v, w], vec![uv, vw, uw]));
                }
            }
        }
    }
    None
}

fn zigzag(g: &Digraph) -> Option<(Vec<usize>, Vec<usize>)> {
    for v1 in 0..g.vertex_count() {
        let ins = g.in_edges(v1);
        for &a in ins {
            let v0 = g.source(a);
            for &b in ins {
                let v2 = g.source(b);
                if v2 == v0 {
                    continue;
                }
                for &c in g.out_edges(v2) {
                    let v3 = g.target(c);
                    if v3 != v0 && v3 != v1 {
                        return Some((vec![v0, v1, v2, v3], vec![a, b, c]));
                    }
                }
            }
        }
    }
    None
}
