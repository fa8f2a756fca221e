//! Tutte polynomials of multipath matroids, computed three independent ways.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::digraph::{has_directed_cycle, Digraph, EdgeSet};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::Matroid;
use crate::mp_structure::{require_mp, uniform_decomposition_with};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TutteMethod {
    Definition,
    Recursive,
    UniformProduct,
}

impl TutteMethod {
    pub const ALL: [TutteMethod; 3] = [TutteMethod::Definition, TutteMethod::Recursive, TutteMethod::UniformProduct];

    pub fn name(self) -> &'static str {
        match self {
            TutteMethod::Definition => "def",
            TutteMethod::Recursive => "rec",
            TutteMethod::UniformProduct => "uniform",
        }
    }
}

impl fmt::Display for TutteMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TutteMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TutteMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown Tutte method `{s}`")))
    }
}

/// The Tutte polynomial of `M_g` by the chosen method. The defining sum is computed
/// for any digraph; the other two methods require an MP-digraph.
pub fn tutte(g: &Digraph, method: TutteMethod, limits: &Limits) -> Result<BiPoly> {
    match method {
        TutteMethod::Definition => tutte_by_definition_with(&Matroid::multipath(g), limits.tutte_ground),
        TutteMethod::Recursive => tutte_recursive_with(g, limits),
        TutteMethod::UniformProduct => tutte_by_uniform_product_with(g, limits),
    }
}

pub fn tutte_by_definition(m: &Matroid) -> Result<BiPoly> {
    tutte_by_definition_with(m, Limits::default().tutte_ground)
}

/// `sum over A ⊆ X of (x-1)^{z(A)} (y-1)^{n(A)}`.
///
/// Ranks of all subsets are tabulated bottom-up: `r(A) = |A|` when `A` is
/// independent and `max r(A - e)` otherwise. A set with a dependent subset is
/// dependent, so the oracle is only asked about sets whose every one-smaller subset
/// is independent.
pub fn tutte_by_definition_with(m: &Matroid, cap: usize) -> Result<BiPoly> {
    m.check_cap(cap.min(30))?;
    let n = m.ground_size();
    let mut rank = vec![0u8; 1 << n];
    for s in 1usize..1 << n {
        let size = s.count_ones() as u8;
        let (mut lo, mut hi) = (u8::MAX, 0u8);
        let mut rest = s;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            let r = rank[s & !(1 << e)];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let independent =
            lo == size - 1 && m.is_independent(&EdgeSet::from_mask(n, s as u64));
        rank[s] = if independent { size } else { hi };
    }
    let full = rank[(1 << n) - 1] as usize;
    let mut counts: HashMap<(usize, usize), u128> = HashMap::new();
    for (s, &r) in rank.iter().enumerate() {
        let r = r as usize;
        *counts.entry((full - r, s.count_ones() as usize - r)).or_default() += 1;
    }
    Ok(expand_counts(&counts))
}

/// `sum c(z, n) (x-1)^z (y-1)^n` for a table of counts.
fn expand_counts(counts: &HashMap<(usize, usize), u128>) -> BiPoly {
    let xm1 = &BiPoly::x() - &BiPoly::one();
    let ym1 = &BiPoly::y() - &BiPoly::one();
    let mut keys: Vec<_> = counts.keys().copied().collect();
    keys.sort_unstable();
    let mut total = BiPoly::zero();
    for (z, nul) in keys {
        let term = &xm1.pow(z as u32) * &ym1.pow(nul as u32);
        total = &total + &(&term * &BiPoly::constant(BigInt::from(counts[&(z, nul)])));
    }
    total
}

/// `T(U(k, n))`, grouping the defining sum by subset size: `C(n, j)` subsets of size
/// `j`, each with corank `k - min(j, k)` and nullity `j - min(j, k)`.
pub fn uniform_tutte(k: usize, n: usize) -> Result<BiPoly> {
    if k > n {
        return Err(Error::BadParameters(format!("U({k},{n}) needs k <= n")));
    }
    let mut counts = HashMap::new();
    let mut binomial: u128 = 1;
    for j in 0..=n {
        let r = j.min(k);
        *counts.entry((k - r, j - r)).or_default() += binomial;
        binomial = binomial * (n - j) as u128 / (j + 1) as u128;
    }
    Ok(expand_counts(&counts))
}

pub fn tutte_recursive(g: &Digraph) -> Result<BiPoly> {
    tutte_recursive_with(g, &Limits::default())
}

/// Deletion and MP-contraction of the smallest edge: a loop gives `y·T(g∖e)`, a
/// coloop gives `x·T(g⫽e)`, any other edge `T(g∖e) + T(g⫽e)`.
pub fn tutte_recursive_with(g: &Digraph, limits: &Limits) -> Result<BiPoly> {
    require_mp(g, limits)?;
    Ok(recurse(g))
}

fn recurse(g: &Digraph) -> BiPoly {
    if g.edge_count() == 0 {
        return BiPoly::one();
    }
    let e = 0;
    if g.is_loop(e) {
        let (h, _) = g.delete_edge(e).expect("edge 0 exists");
        return &BiPoly::y() * &recurse(&h);
    }
    let (contracted, _) = g.mp_contract(e).expect("edge 0 is not a loop");
    if is_coloop(g, e) {
        return &BiPoly::x() * &recurse(&contracted);
    }
    let (deleted, _) = g.delete_edge(e).expect("edge 0 exists");
    &recurse(&deleted) + &recurse(&contracted)
}

/// Without coherent cycles, `(v, w)` is a coloop exactly when no other edge leaves `v`
/// or enters `w`; otherwise the rank is compared directly.
fn is_coloop(g: &Digraph, e: usize) -> bool {
    if has_directed_cycle(g) {
        return Matroid::multipath(g).is_coloop(e);
    }
    let (v, w) = g.edge(e);
    g.out_degree(v) <= 1 && g.in_degree(w) <= 1
}

pub fn tutte_by_uniform_product(g: &Digraph) -> Result<BiPoly> {
    tutte_by_uniform_product_with(g, &Limits::default())
}

/// The product of `T(U(k, n))` over the uniform factors of `M_g`.
pub fn tutte_by_uniform_product_with(g: &Digraph, limits: &Limits) -> Result<BiPoly> {
    let factorization = uniform_decomposition_with(g, limits)?;
    let mut memo: HashMap<(usize, usize), BiPoly> = HashMap::new();
    let mut product = BiPoly::one();
    for &(k, n) in factorization.factors() {
        let factor = match memo.entry((k, n)) {
            Entry::Occupied(known) => known.into_mut(),
            Entry::Vacant(slot) => slot.insert(uniform_tutte(k, n)?),
        };
        product = &product * factor;
    }
    Ok(product)
}

/// All three methods, failing with [`Error::IdentityViolation`] when they disagree.
pub fn tutte_all(g: &Digraph, limits: &Limits) -> Result<[BiPoly; 3]> {
    let results = [
        tutte(g, TutteMethod::Definition, limits)?,
        tutte(g, TutteMethod::Recursive, limits)?,
        tutte(g, TutteMethod::UniformProduct, limits)?,
    ];
    if results[0] != results[1] || results[1] != results[2] {
        return Err(Error::IdentityViolation(format!(
            "Tutte methods disagree: def {}, rec {}, uniform {}",
            results[0], results[1], results[2]
        )));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn defn(g: &Digraph) -> BiPoly {
        tutte_by_definition(&Matroid::multipath(g)).unwrap()
    }

    #[test]
    fn small_uniform_matroids() {
        let t = |k, n| tutte_by_definition(&Matroid::uniform(k, n).unwrap()).unwrap();
        assert_eq!(t(1, 1), BiPoly::x());
        assert_eq!(t(1, 2), &BiPoly::x() + &BiPoly::y());
        assert_eq!(t(0, 1), BiPoly::y());
        assert_eq!(t(0, 0), BiPoly::one());
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(uniform_tutte(k, n).unwrap(), t(k, n), "U({k},{n})");
            }
        }
    }

    #[test]
    fn worked_example_is_x_times_x_plus_y_squared() {
        let g = families::worked_example();
        let expected = &BiPoly::x() * &(&BiPoly::x() + &BiPoly::y()).pow(2);
        assert_eq!(expected.to_string(), "x^3 + 2*x^2*y + x*y^2");
        let all = tutte_all(&g, &Limits::default()).unwrap();
        assert!(all.iter().all(|t| *t == expected));
    }

    #[test]
    fn loops_paths_and_cycles() {
        assert_eq!(tutte_recursive(&families::loops(1)).unwrap(), BiPoly::y());
        assert_eq!(tutte_by_uniform_product(&families::loops(4)).unwrap(), BiPoly::y().pow(4));
        for n in 0..=5 {
            let g = families::coherent_path(n);
            assert_eq!(tutte_recursive(&g).unwrap(), BiPoly::x().pow(n as u32));
            assert_eq!(defn(&g), BiPoly::x().pow(n as u32));
        }
        let c3 = families::coherent_cycle(3);
        assert_eq!(tutte_by_uniform_product(&c3).unwrap().to_string(), "x^2 + x + y");
        assert_eq!(tutte_recursive(&c3).unwrap(), defn(&c3));
    }

    #[test]
    fn recursion_on_cycles_with_loops() {
        let g = Digraph::new(3, [(1, 1), (0, 1), (1, 2), (2, 0), (0, 0)]).unwrap();
        let all = tutte_all(&g, &Limits::default()).unwrap();
        assert_eq!(all[0], &defn(&families::coherent_cycle(3)) * &BiPoly::y().pow(2));
    }

    #[test]
    fn non_mp_input() {
        let a3 = families::alternating(3);
        assert!(matches!(tutte_recursive(&a3), Err(Error::NotMpDigraph(_))));
        assert!(matches!(tutte_by_uniform_product(&a3), Err(Error::NotMpDigraph(_))));
        // the defining sum is still a well-defined polynomial of the set system
        assert!(tutte_by_definition(&Matroid::multipath(&a3)).is_ok());
    }

    #[test]
    fn method_names() {
        assert_eq!("rec".parse::<TutteMethod>().unwrap(), TutteMethod::Recursive);
        assert!("fast".parse::<TutteMethod>().is_err());
    }

    #[test]
    fn definition_cap() {
        assert!(matches!(tutte_by_definition_with(&Matroid::free(5), 4), Err(Error::CapExceeded { size: 5, cap: 4 })));
    }
}
