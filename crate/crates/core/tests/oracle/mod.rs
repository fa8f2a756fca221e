//! Brute-force reference implementations, written directly from the definitions and
//! sharing no code with the library beyond its `Digraph` container.

#![allow(dead_code)]

use std::collections::HashMap;

use mpmat::Digraph;

pub type Edges = Vec<(usize, usize)>;

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

/// Every component of `(V, S)` is an isolated vertex or a simple directed path: no
/// loops, in- and out-degrees at most one, and no cycle in the underlying graph.
pub fn is_multipath(n: usize, edges: &[(usize, usize)], mask: u32) -> bool {
    let mut indeg = vec![0u8; n];
    let mut outdeg = vec![0u8; n];
    let mut dsu = Dsu::new(n);
    for i in members(mask) {
        let (s, t) = edges[i];
        if s == t {
            return false;
        }
        outdeg[s] += 1;
        indeg[t] += 1;
        if outdeg[s] > 1 || indeg[t] > 1 || !dsu.union(s, t) {
            return false;
        }
    }
    true
}

/// Independence table over all `2^|E|` subsets.
pub fn multipath_table(g: &Digraph) -> Vec<bool> {
    let m = g.edge_count();
    assert!(m <= 24, "oracle tables are exponential in the edge count");
    (0..1u32 << m).map(|s| is_multipath(g.vertex_count(), g.edges(), s)).collect()
}

pub fn independents(table: &[bool]) -> Vec<u32> {
    (0..table.len() as u32).filter(|&s| table[s as usize]).collect()
}

/// (I1) the empty set is independent, (I2) closed under subsets, (I3) for
/// independents `A`, `B` with `|A| < |B|` some `e ∈ B − A` has `A + e` independent.
/// For I3 it suffices to take `|B| = |A| + 1`, since every independent `B` has
/// independent subsets of each smaller size containing any chosen part of it.
pub fn independence_axioms(table: &[bool]) -> bool {
    if !table[0] {
        return false;
    }
    let sets = independents(table);
    for &s in &sets {
        if members(s).any(|e| !table[(s & !(1 << e)) as usize]) {
            return false;
        }
    }
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); 33];
    for &s in &sets {
        by_size[s.count_ones() as usize].push(s);
    }
    for k in 0..32 {
        for &a in &by_size[k] {
            for &b in &by_size[k + 1] {
                if !members(b & !a).any(|e| table[(a | 1 << e) as usize]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal dependent sets.
pub fn circuits(table: &[bool]) -> Vec<u32> {
    (0..table.len() as u32)
        .filter(|&s| !table[s as usize] && members(s).all(|e| table[(s & !(1 << e)) as usize]))
        .collect()
}

/// (C1) the empty set is not a circuit, (C2) no circuit properly contains another,
/// (C3) for distinct circuits sharing `e`, some circuit lies in `C1 ∪ C2 − e`.
pub fn circuit_axioms(circuits: &[u32]) -> bool {
    if circuits.contains(&0) {
        return false;
    }
    for &a in circuits {
        for &b in circuits {
            if a != b && a & b == a {
                return false;
            }
        }
    }
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            for e in members(a & b) {
                let room = (a | b) & !(1 << e);
                if !circuits.iter().any(|&c| c & !room == 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// `rank[S]` = size of a largest independent subset of `S`.
pub fn rank_table(table: &[bool]) -> Vec<u32> {
    let mut rank = vec![0u32; table.len()];
    for s in 1..table.len() {
        rank[s] = if table[s] {
            (s as u32).count_ones()
        } else {
            members(s as u32).map(|e| rank[s & !(1 << e)]).max().unwrap()
        };
    }
    rank
}

/// Number of subsets with each (corank, nullity).
pub fn rank_generating_counts(table: &[bool]) -> HashMap<(u32, u32), i128> {
    let rank = rank_table(table);
    let full = *rank.last().unwrap();
    let mut counts = HashMap::new();
    for (s, &r) in rank.iter().enumerate() {
        *counts.entry((full - r, (s as u32).count_ones() - r)).or_insert(0i128) += 1;
    }
    counts
}

fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Coefficients of `T(x, y) = Σ (x-1)^z (y-1)^n` keyed by `(deg x, deg y)`.
pub fn tutte_coefficients(table: &[bool]) -> HashMap<(u32, u32), i128> {
    let mut out: HashMap<(u32, u32), i128> = HashMap::new();
    for (&(z, nul), &c) in &rank_generating_counts(table) {
        for i in 0..=z {
            for j in 0..=nul {
                let sign = if (z - i + nul - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_insert(0) += sign * c * binomial(z, i) * binomial(nul, j);
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `T(1 - k, 0)`: only subsets contribute, each with `(-k)^z (-1)^n`.
pub fn tutte_at_one_minus_k_zero(table: &[bool], k: i128) -> i128 {
    rank_generating_counts(table)
        .iter()
        .map(|(&(z, nul), &c)| c * (-k).pow(z) * if nul % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Number of connected components of `(V, S)`.
pub fn components(n: usize, edges: &[(usize, usize)], mask: u32) -> usize {
    let mut dsu = Dsu::new(n);
    let merged = members(mask).filter(|&i| dsu.union(edges[i].0, edges[i].1)).count();
    n - merged
}

/// Flowing `k`-colourings `c: V -> {0..k-1}`: endpoints of every edge differ, sources
/// of edges into a common vertex agree, targets of edges out of a common vertex agree.
/// Each connected component is counted separately by backtracking with its first
/// vertex fixed to colour 0, then scaled by `k`.
pub fn count_flowing(n: usize, edges: &[(usize, usize)], k: u32) -> u128 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut neighbours = vec![Vec::new(); n];
    for &(s, t) in edges {
        neighbours[s].push(t);
        neighbours[t].push(s);
    }
    let mut seen = vec![false; n];
    let mut total: u128 = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut order = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < order.len() {
            for &w in &neighbours[order[i]] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut colour = vec![u32::MAX; n];
        colour[start] = 0;
        let count = extend(edges, &order, 1, &mut colour, k);
        total *= count * k as u128;
    }
    total
}

fn consistent(edges: &[(usize, usize)], colour: &[u32], v: usize) -> bool {
    let set = |x: usize| colour[x] != u32::MAX;
    for (i, &(s, t)) in edges.iter().enumerate() {
        if (s == v || t == v) && set(s) && set(t) && colour[s] == colour[t] {
            return false;
        }
        for &(s2, t2) in &edges[i + 1..] {
            let involves = s == v || t == v || s2 == v || t2 == v;
            if !involves {
                continue;
            }
            if t == t2 && set(s) && set(s2) && colour[s] != colour[s2] {
                return false;
            }
            if s == s2 && set(t) && set(t2) && colour[t] != colour[t2] {
                return false;
            }
        }
    }
    true
}

fn extend(edges: &[(usize, usize)], order: &[usize], i: usize, colour: &mut Vec<u32>, k: u32) -> u128 {
    if i == order.len() {
        return u128::from(consistent(edges, colour, order[0]));
    }
    let v = order[i];
    let mut count = 0;
    for c in 0..k {
        colour[v] = c;
        if consistent(edges, colour, v) {
            count += extend(edges, order, i + 1, colour, k);
        }
    }
    colour[v] = u32::MAX;
    count
}

/// Edge subsets of size `|V| - p0` without an undirected cycle.
pub fn spanning_forests(g: &Digraph) -> Vec<u32> {
    let n = g.vertex_count();
    let all = (1u32 << g.edge_count()) - 1;
    let target = (n - components(n, g.edges(), all)) as u32;
    (0..=all)
        .filter(|&s| s.count_ones() == target && components(n, g.edges(), s) == n - target as usize)
        .collect()
}

pub fn sub_edges(g: &Digraph, mask: u32) -> Edges {
    members(mask).map(|i| g.edge(i)).collect()
}

/// Mask of an iterator of edge ids.
pub fn mask_of(ids: impl IntoIterator<Item = usize>) -> u32 {
    ids.into_iter().fold(0, |m, i| m | 1 << i)
}

pub fn mask_members(mask: u32) -> Vec<usize> {
    members(mask).collect()
}
