//! Exhaustive checks of the matroid axioms for explicit set families.
//!
//! Families are handled as bitmasks over the ground set, so the caps below 64 are
//! hard limits; the default cap of 16 keeps every table at 65536 entries.

use crate::digraph::EdgeSet;
use crate::error::{Error, Result};

fn masks(ground_size: usize, family: &[EdgeSet], cap: usize) -> Result<Vec<u64>> {
    if ground_size > cap || ground_size >= 64 {
        return Err(Error::CapExceeded { size: ground_size, cap: cap.min(63) });
    }
    Ok(family
        .iter()
        .map(|s| {
            assert_eq!(s.universe(), ground_size, "family member over the wrong ground set");
            s.to_mask().expect("ground set below 64")
        })
        .collect())
}

fn membership(ground_size: usize, masks: &[u64]) -> Vec<bool> {
    let mut member = vec![false; 1 << ground_size];
    for &m in masks {
        member[m as usize] = true;
    }
    member
}

/// (I1) the empty set is independent; (I2) the family is closed under subsets;
/// (I3) a smaller independent set can be augmented from any larger one.
///
/// For (I3) the table `best[S]`, the size of a largest member inside `S`, is filled
/// for all `S`. A member `A` fails augmentation exactly when the set `A ∪ D`, with
/// `D` the elements that cannot be added to `A`, holds a member larger than `A`.
pub fn check_independence_axioms(ground_size: usize, independents: &[EdgeSet], cap: usize) -> Result<bool> {
    let masks = masks(ground_size, independents, cap)?;
    let member = membership(ground_size, &masks);
    if !member[0] {
        return Ok(false);
    }
    for &a in &masks {
        if bits(a).any(|e| !member[(a & !(1 << e)) as usize]) {
            return Ok(false);
        }
    }
    let full = (1u64 << ground_size) - 1;
    let mut best = vec![0u8; 1 << ground_size];
    for s in 1..=full {
        best[s as usize] = if member[s as usize] {
            s.count_ones() as u8
        } else {
            bits(s).map(|e| best[(s & !(1 << e)) as usize]).max().unwrap_or(0)
        };
    }
    for &a in &masks {
        let blocked = bits(full & !a).filter(|&e| !member[(a | 1 << e) as usize]).fold(0u64, |acc, e| acc | 1 << e);
        if best[(a | blocked) as usize] as u32 > a.count_ones() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (C1) the empty set is not a circuit; (C2) no circuit properly contains another;
/// (C3) for distinct circuits `C1, C2` and `e` in both, some circuit lies inside
/// `(C1 ∪ C2) \ {e}`.
pub fn check_circuit_axioms(ground_size: usize, circuits: &[EdgeSet], cap: usize) -> Result<bool> {
    let masks = masks(ground_size, circuits, cap)?;
    if masks.contains(&0) {
        return Ok(false);
    }
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if a != b && (a & b == a || a & b == b) {
                return Ok(false);
            }
        }
    }
    // dependent[S]: S contains some circuit
    let mut dependent = membership(ground_size, &masks);
    for s in 1..1usize << ground_size {
        if !dependent[s] {
            dependent[s] = bits(s as u64).any(|e| dependent[s & !(1 << e)]);
        }
    }
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if a == b {
                continue;
            }
            let union = a | b;
            if bits(a & b).any(|e| !dependent[(union & !(1 << e)) as usize]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The minimal sets outside a subset-closed family, given the family explicitly.
pub fn minimal_dependent_sets(ground_size: usize, independents: &[EdgeSet], cap: usize) -> Result<Vec<EdgeSet>> {
    let masks = masks(ground_size, independents, cap)?;
    let member = membership(ground_size, &masks);
    let mut out: Vec<EdgeSet> = (0..1u64 << ground_size)
        .filter(|&s| !member[s as usize] && bits(s).all(|e| member[(s & !(1 << e)) as usize]))
        .map(|s| EdgeSet::from_mask(ground_size, s))
        .collect();
    out.sort_by(EdgeSet::canonical_cmp);
    Ok(out)
}

fn bits(mask: u64) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let e = rest.trailing_zeros();
        rest &= rest - 1;
        Some(e)
    })
}
