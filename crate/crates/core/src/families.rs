//! Named digraphs used throughout the documentation and the test suites.

use crate::digraph::Digraph;

/// `I_n`: the coherent path `0 -> 1 -> ... -> n` with `n` edges.
pub fn coherent_path(n: usize) -> Digraph {
    Digraph::new(n + 1, (0..n).map(|i| (i, i + 1))).expect("valid path")
}

/// `S_n`: `n` edges `(i, 0)` into the center `0`.
pub fn sink(n: usize) -> Digraph {
    Digraph::new(n + 1, (1..=n).map(|i| (i, 0))).expect("valid sink")
}

/// `n` edges `(0, i)` out of the center `0`.
pub fn source(n: usize) -> Digraph {
    sink(n).reverse()
}

/// The coherently oriented cycle with `m` edges on the vertices `0..m`; `m = 1` is a
/// single loop.
pub fn coherent_cycle(m: usize) -> Digraph {
    Digraph::new(m, (0..m).map(|i| (i, (i + 1) % m))).expect("valid cycle")
}

/// `A_n`: `n` edges on `0..=n` whose orientation alternates, starting with `0 -> 1`,
/// then `2 -> 1`, `2 -> 3`, and so on.
pub fn alternating(n: usize) -> Digraph {
    Digraph::new(n + 1, (0..n).map(|i| if i % 2 == 0 { (i, i + 1) } else { (i + 1, i) })).expect("valid")
}

/// The transitive tournament on `n` vertices: `(i, j)` for every `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Digraph::new(n, edges).expect("valid tournament")
}

/// One vertex carrying `n` loops.
pub fn loops(n: usize) -> Digraph {
    Digraph::new(1, vec![(0, 0); n]).expect("loops are always allowed")
}

/// The five-vertex digraph with no flowing colourings. With `a1, a2, b1, b2, c` as
/// vertices `0..5`: `a1 -> a2`, `b1 -> b2`, `b2 -> c`, `b1 -> a1`, `a2 -> c`.
pub fn worked_example() -> Digraph {
    Digraph::new(5, [(0, 1), (2, 3), (3, 4), (2, 0), (1, 4)]).expect("valid")
}

/// The spanning tree of [`worked_example`] without the edge `a2 -> c`; its rank is 3.
pub fn worked_example_tree_a() -> Digraph {
    Digraph::new(5, [(0, 1), (2, 3), (3, 4), (2, 0)]).expect("valid")
}

/// The spanning tree of [`worked_example`] without the edge `a1 -> a2`; its rank is 2.
pub fn worked_example_tree_b() -> Digraph {
    Digraph::new(5, [(2, 3), (3, 4), (2, 0), (1, 4)]).expect("valid")
}

/// A square whose orientation is not coherent, with a pendant edge; an MP-digraph.
pub fn non_coherent_square() -> Digraph {
    Digraph::new(5, [(0, 1), (2, 3), (3, 1), (2, 0), (1, 4)]).expect("valid")
}

/// A path with its first edge reversed, and an out-star with a tail: different
/// digraphs with isomorphic multipath matroids.
pub fn isomorphic_pair() -> (Digraph, Digraph) {
    (
        Digraph::new(4, [(1, 0), (1, 2), (2, 3)]).expect("valid"),
        Digraph::new(4, [(0, 1), (1, 2), (1, 3)]).expect("valid"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(coherent_path(3).edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(alternating(3).edges(), &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(transitive_tournament(4).edge_count(), 6);
        assert_eq!(coherent_cycle(1).edges(), &[(0, 0)]);
        assert_eq!(source(2).edges(), &[(0, 1), (0, 2)]);
        assert_eq!(loops(3).edge_count(), 3);
    }
}
