//! Seeded instance generators and exhaustive instance families.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit integer through
//! `SeedableRng::seed_from_u64`. Derived quantities use fixed recipes so that a seed
//! reproduces the same instances on every platform:
//!
//! * a uniform real in `[0, 1)` is `(next_u64 >> 11) * 2^-53`;
//! * a uniform integer in `0..n` is the high word of `next_u64 * n` (as a 128-bit
//!   product);
//! * a Bernoulli(`p`) trial is `uniform real < p`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::mp_structure::recognize_mp;

pub const REJECTION_CAP: u64 = 10_000;

#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Independent stream `stream` of the generator for `seed`.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        SeededRng(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Fisher-Yates, drawing positions from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameters(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Every ordered pair `(u, v)` with `u != v`, in lexicographic order, becomes an
/// edge with probability `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    Ok(random_loopless(&mut SeededRng::new(seed), n, p))
}

pub fn random_loopless(rng: &mut SeededRng, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::new(n, edges).expect("distinct ordered pairs")
}

/// As [`random_loopless`], then a loop at each vertex with probability `loop_p`.
pub fn random_with_loops(rng: &mut SeededRng, n: usize, p: f64, loop_p: f64) -> Digraph {
    let base = random_loopless(rng, n, p);
    let mut edges = base.edges().to_vec();
    for v in 0..n {
        if rng.bernoulli(loop_p) {
            edges.push((v, v));
        }
    }
    Digraph::new(n, edges).expect("loops are always allowed")
}

/// A uniform labeled tree on `n` vertices, decoded from a uniform Prüfer sequence.
/// Edges are returned as unordered pairs `(a, b)` with `a < b`.
pub fn random_labeled_tree(rng: &mut SeededRng, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// A uniform labeled tree with each edge oriented by a fair coin, redrawn until the
/// result is an MP-digraph.
pub fn gen_random_mp_tree(n: usize, seed: u64) -> Result<Digraph> {
    random_mp_tree(&mut SeededRng::new(seed), n)
}

pub fn random_mp_tree(rng: &mut SeededRng, n: usize) -> Result<Digraph> {
    for _ in 0..REJECTION_CAP {
        let edges: Vec<(usize, usize)> =
            random_labeled_tree(rng, n).into_iter().map(|(a, b)| if rng.bernoulli(0.5) { (a, b) } else { (b, a) }).collect();
        let g = Digraph::new(n, edges).expect("tree edges are distinct");
        if recognize_mp(&g)?.is_mp() {
            return Ok(g);
        }
    }
    Err(Error::RejectionCapExceeded(REJECTION_CAP))
}

/// A random MP-digraph with at most `max_edges` edges.
///
/// Half of the draws are sparse random digraphs kept only when they pass recognition,
/// which produces undirected cycles that are not coherent. The other half glue
/// together MP-trees, coherent cycles and loops, then relabel vertices and permute
/// edge ids at random.
pub fn random_mp_digraph(rng: &mut SeededRng, max_edges: usize) -> Result<Digraph> {
    if rng.bernoulli(0.5) {
        for _ in 0..REJECTION_CAP {
            let n = rng.between(2, 7);
            let g = random_loopless(rng, n, 1.6 / n as f64);
            if g.edge_count() <= max_edges && recognize_mp(&g)?.is_mp() {
                return Ok(g);
            }
        }
        return Err(Error::RejectionCapExceeded(REJECTION_CAP));
    }
    let mut vertex_count = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let target = rng.between(1, max_edges.max(1));
    while edges.len() < target {
        let room = target - edges.len();
        let piece = match rng.below(5) {
            0 if room >= 2 => coherent_cycle_piece(rng.between(2, room.min(5))),
            1 => vec![(0, 0)],
            _ => {
                let size = rng.between(2, (room + 1).min(7));
                random_mp_tree(rng, size)?.edges().to_vec()
            }
        };
        let width = piece.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
        edges.extend(piece.into_iter().map(|(a, b)| (a + vertex_count, b + vertex_count)));
        vertex_count += width;
    }
    vertex_count += rng.below(2);
    let mut relabel: Vec<usize> = (0..vertex_count).collect();
    rng.shuffle(&mut relabel);
    rng.shuffle(&mut edges);
    let g = Digraph::new(vertex_count, edges.into_iter().map(|(a, b)| (relabel[a], relabel[b])))
        .expect("pieces are vertex-disjoint");
    debug_assert!(recognize_mp(&g).map(|v| v.is_mp()).unwrap_or(false));
    Ok(g)
}

fn coherent_cycle_piece(m: usize) -> Vec<(usize, usize)> {
    (0..m).map(|i| (i, (i + 1) % m)).collect()
}

/// All `2^(n(n-1))` loopless digraphs on `n` labeled vertices. Bit `i` of the index
/// selects the `i`-th ordered pair in lexicographic order.
pub fn all_loopless_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertices for exhaustive enumeration");
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| loopless_from_mask(n, &pairs, mask))
}

fn loopless_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Digraph {
    let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
    Digraph::new(n, edges).expect("distinct pairs")
}

/// The `index`-th digraph of [`all_loopless_digraphs`].
pub fn loopless_digraph(n: usize, index: u64) -> Digraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    loopless_from_mask(n, &pairs, index)
}

/// Every orientation of every labeled forest on exactly `n` vertices. Forests come in
/// the order of their edge masks over the unordered pairs; orientation bit `i` reverses
/// the `i`-th edge from `(a, b)` with `a < b` to `(b, a)`.
pub fn all_oriented_forests(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let undirected = Digraph::new(n, chosen.iter().copied()).expect("distinct pairs");
        if !undirected.is_undirected_forest() {
            continue;
        }
        for orientation in 0u64..1 << chosen.len() {
            let edges = chosen.iter().enumerate().map(|(i, &(a, b))| if orientation >> i & 1 == 1 { (b, a) } else { (a, b) });
            out.push(Digraph::new(n, edges).expect("distinct pairs"));
        }
    }
    out
}
