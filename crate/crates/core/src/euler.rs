//! The graded Euler characteristic of multipath cohomology.
//!
//! With coefficients in an algebra of graded dimension `α`, the characteristic is
//! `χ = Σ (-1)^{|m|} α^{p0(m)}` over all multipaths `m`. For an MP-forest it is
//! also `(-1)^r α^{|E| - r + p0} T(1 - α, 1)`.

use num_bigint::BigInt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::Matroid;
use crate::mp_structure::recognize_mp_with;
use crate::multipath::enumerate_multipaths_with;
use crate::poly::LaurentPoly;
use crate::tutte::tutte_by_uniform_product_with;

pub fn chi_mu(g: &Digraph, alpha: &LaurentPoly) -> Result<LaurentPoly> {
    chi_mu_with(g, alpha, &Limits::default())
}

pub fn chi_mu_with(g: &Digraph, alpha: &LaurentPoly, limits: &Limits) -> Result<LaurentPoly> {
    let mut powers = vec![LaurentPoly::one()];
    for i in 1..=g.vertex_count() {
        powers.push(&powers[i - 1] * alpha);
    }
    let mut counts = vec![0i64; g.vertex_count() + 1];
    for (length, group) in enumerate_multipaths_with(g, limits)?.iter().enumerate() {
        let sign = if length % 2 == 0 { 1 } else { -1 };
        for m in group {
            counts[g.p0_of_subset(m)] += sign;
        }
    }
    let mut chi = LaurentPoly::zero();
    for (p0, &c) in counts.iter().enumerate() {
        if c != 0 {
            chi = &chi + &powers[p0].scale(&BigInt::from(c));
        }
    }
    Ok(chi)
}

/// An MP-digraph without loops whose underlying undirected multigraph is a forest.
pub fn is_mp_forest(g: &Digraph) -> Result<bool> {
    Ok(!g.has_loops() && g.is_undirected_forest() && recognize_mp_with(g, &Limits::default())?.is_mp())
}

fn require_mp_forest(g: &Digraph, limits: &Limits) -> Result<()> {
    if g.has_loops() {
        return Err(Error::NotMpForest("the digraph has a loop".into()));
    }
    if !g.is_undirected_forest() {
        return Err(Error::NotMpForest("the underlying graph has a cycle".into()));
    }
    if let Some(w) = recognize_mp_with(g, limits)?.witness {
        return Err(Error::NotMpForest(w.to_string()));
    }
    Ok(())
}

pub fn chi_via_tutte(g: &Digraph, alpha: &LaurentPoly) -> Result<LaurentPoly> {
    chi_via_tutte_with(g, alpha, &Limits::default())
}

pub fn chi_via_tutte_with(g: &Digraph, alpha: &LaurentPoly, limits: &Limits) -> Result<LaurentPoly> {
    require_mp_forest(g, limits)?;
    let r = Matroid::multipath(g).full_rank();
    let t = g.edge_count() - r + g.p0();
    let tutte = tutte_by_uniform_product_with(g, limits)?;
    let value = tutte.eval(&(&LaurentPoly::one() - alpha), &LaurentPoly::one());
    let signed = if r.is_multiple_of(2) { value } else { -value };
    Ok(&signed * &alpha.pow(t as u32))
}

/// Checks `chi_mu = chi_via_tutte` for every `alpha`; returns the number of
/// equalities checked.
pub fn verify_euler_identity(g: &Digraph, alphas: &[LaurentPoly]) -> Result<usize> {
    verify_euler_identity_with(g, alphas, &Limits::default())
}

pub fn verify_euler_identity_with(g: &Digraph, alphas: &[LaurentPoly], limits: &Limits) -> Result<usize> {
    require_mp_forest(g, limits)?;
    for alpha in alphas {
        let direct = chi_mu_with(g, alpha, limits)?;
        let tutte_side = chi_via_tutte_with(g, alpha, limits)?;
        if direct != tutte_side {
            return Err(Error::IdentityViolation(format!(
                "alpha = {alpha}: multipath sum {direct} but Tutte side {tutte_side}"
            )));
        }
    }
    Ok(alphas.len())
}
