//! Property sweeps over families of digraphs.
//!
//! Every instance is checked independently (in parallel) and the results are
//! aggregated in instance order, so a report depends only on the family and the
//! suites, never on scheduling.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{count_flowing_raw, count_flowing_with, verify_colouring_identity_with};
use crate::digraph::{has_directed_cycle, Digraph};
use crate::error::{Error, Result};
use crate::euler::verify_euler_identity_with;
use crate::generate::{loopless_digraph, random_mp_digraph, random_mp_tree, random_with_loops, SeededRng};
use crate::limits::Limits;
use crate::matroid::{equal_matroids, Matroid};
use crate::mp_structure::{
    check_circuit_axioms, check_independence_axioms, circuits_mp_with, minimal_dependent_sets, recognize_mp_with,
};
use crate::multipath::enumerate_multipaths_with;
use crate::poly::LaurentPoly;
use crate::tutte::tutte_all;

/// Largest edge count for which deletion and contraction are compared exhaustively.
pub const DELCONTR_EDGES: usize = 10;
/// Largest vertex count for which colourings are also counted by the raw oracle.
pub const RAW_COLOURING_VERTICES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All `2^(n(n-1))` loopless digraphs on `n` labeled vertices.
    Exhaustive { n: usize },
    /// `count` seeded instances; see [`Family::instance`].
    Random { count: usize, seed: u64, n: usize },
}

impl Family {
    pub fn len(&self) -> usize {
        match *self {
            Family::Exhaustive { n } => 1usize << (n * n.saturating_sub(1)),
            Family::Random { count, .. } => count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Random instance `i` draws from ChaCha8 stream `i` of the seed, so instances
    /// can be produced in any order. It is, in turn by `i mod 3`: a random digraph on
    /// `n` vertices with edge probability 0.3 and loop probability 0.1, a random
    /// MP-digraph with at most 12 edges, or a random MP-tree on 2 to 9 vertices.
    pub fn instance(&self, i: usize) -> Result<Digraph> {
        match *self {
            Family::Exhaustive { n } => Ok(loopless_digraph(n, i as u64)),
            Family::Random { seed, n, .. } => {
                let mut rng = SeededRng::for_stream(seed, i as u64);
                match i % 3 {
                    0 => Ok(random_with_loops(&mut rng, n, 0.3, 0.1)),
                    1 => random_mp_digraph(&mut rng, 12),
                    _ => {
                        let size = rng.between(2, 9);
                        random_mp_tree(&mut rng, size)
                    }
                }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Exhaustive { n } => write!(f, "exhaustive n={n}"),
            Family::Random { count, seed, n } => write!(f, "random count={count} seed={seed} n={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    DelContr,
    Tutte3,
    Colouring,
    Euler,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Axioms, Suite::DelContr, Suite::Tutte3, Suite::Colouring, Suite::Euler];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::DelContr => "delcontr",
            Suite::Tutte3 => "tutte3",
            Suite::Colouring => "colouring",
            Suite::Euler => "euler",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Pass,
    Skip,
    Budget,
    Fail(String),
}

impl From<Result<Outcome>> for Outcome {
    fn from(r: Result<Outcome>) -> Self {
        match r {
            Ok(o) => o,
            Err(e) if e.is_budget() => Outcome::Budget,
            Err(e) => Outcome::Fail(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub budget_exceeded: usize,
    /// The first few failures, by instance index.
    pub counterexamples: Vec<Counterexample>,
}

pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub instances: usize,
    pub checks: Vec<CheckSummary>,
    pub passed: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {} ({} instances)", self.family, self.instances)?;
        for c in &self.checks {
            writeln!(
                f,
                "{}: run {}, passed {}, failed {}, skipped {}, budget exceeded {}",
                c.name, c.run, c.passed, c.failed, c.skipped, c.budget_exceeded
            )?;
            for x in &c.counterexamples {
                writeln!(f, "  instance {} (vertices {}, edges {:?}): {}", x.instance, x.vertices, x.edges, x.message)?;
            }
        }
        write!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

pub fn run_verification(family: Family, suites: &[Suite], limits: &Limits) -> VerificationReport {
    let outcomes: Vec<(Option<Digraph>, Vec<Outcome>)> = (0..family.len())
        .into_par_iter()
        .map(|i| match family.instance(i) {
            Ok(g) => {
                let results = suites.iter().map(|&s| Outcome::from(run_suite(s, &g, limits))).collect();
                (Some(g), results)
            }
            Err(e) => (None, suites.iter().map(|_| Outcome::from(Err::<Outcome, _>(e.clone()))).collect()),
        })
        .collect();
    let mut checks: Vec<CheckSummary> = suites
        .iter()
        .map(|s| CheckSummary {
            name: s.name().to_string(),
            run: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            budget_exceeded: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for (i, (g, results)) in outcomes.into_iter().enumerate() {
        for (summary, outcome) in checks.iter_mut().zip(results) {
            match outcome {
                Outcome::Skip => summary.skipped += 1,
                Outcome::Budget => summary.budget_exceeded += 1,
                Outcome::Pass => {
                    summary.run += 1;
                    summary.passed += 1;
                }
                Outcome::Fail(message) => {
                    summary.run += 1;
                    summary.failed += 1;
                    if summary.counterexamples.len() < MAX_COUNTEREXAMPLES {
                        summary.counterexamples.push(Counterexample {
                            instance: i,
                            vertices: g.as_ref().map_or(0, Digraph::vertex_count),
                            edges: g.as_ref().map_or_else(Vec::new, |g| g.edges().to_vec()),
                            message,
                        });
                    }
                }
            }
        }
    }
    let passed = checks.iter().all(|c| c.failed == 0);
    VerificationReport { family: family.to_string(), instances: family.len(), checks, passed }
}

fn fail(message: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Fail(message.into()))
}

fn run_suite(suite: Suite, g: &Digraph, limits: &Limits) -> Result<Outcome> {
    match suite {
        Suite::Axioms => check_axioms(g, limits),
        Suite::DelContr => check_delcontr(g, limits),
        Suite::Tutte3 => check_tutte3(g, limits),
        Suite::Colouring => check_colouring(g, limits),
        Suite::Euler => check_euler(g, limits),
    }
}

/// Recognition agrees with the independence axioms on `Mult(g)` and with the circuit
/// axioms on its minimal non-members, which are exactly the predicted circuits.
fn check_axioms(g: &Digraph, limits: &Limits) -> Result<Outcome> {
    let m = g.edge_count();
    if m > limits.exhaustive_ground {
        return Ok(Outcome::Skip);
    }
    let verdict = recognize_mp_with(g, limits)?.is_mp();
    let family: Vec<_> = enumerate_multipaths_with(g, limits)?.into_iter().flatten().collect();
    let independence = check_independence_axioms(m, &family, limits.exhaustive_ground)?;
    let minimal = minimal_dependent_sets(m, &family, limits.exhaustive_ground)?;
    let circuit = check_circuit_axioms(m, &minimal, limits.exhaustive_ground)?;
    if circuits_mp_with(g, limits)? != minimal {
        return fail("predicted circuits differ from the minimal non-multipaths");
    }
    if verdict != independence || verdict != circuit {
        return fail(format!("recognition {verdict}, independence axioms {independence}, circuit axioms {circuit}"));
    }
    Ok(Outcome::Pass)
}

fn check_delcontr(g: &Digraph, limits: &Limits) -> Result<Outcome> {
    if g.edge_count() > DELCONTR_EDGES || !recognize_mp_with(g, limits)?.is_mp() {
        return Ok(Outcome::Skip);
    }
    let matroid = Matroid::multipath(g);
    for e in (0..g.edge_count()).filter(|&e| !g.is_loop(e)) {
        let (deleted, _) = g.delete_edge(e)?;
        let (minus, _) = matroid.delete(e)?;
        if !equal_matroids(&Matroid::multipath(&deleted), &minus, limits.exhaustive_ground)? {
            return fail(format!("deleting edge {e} does not delete it from the matroid"));
        }
        let (contracted, _) = g.mp_contract(e)?;
        let (quotient, _) = matroid.contract(e)?;
        if !equal_matroids(&Matroid::multipath(&contracted), &quotient, limits.exhaustive_ground)? {
            return fail(format!("MP-contracting edge {e} does not contract it in the matroid"));
        }
    }
    Ok(Outcome::Pass)
}

fn check_tutte3(g: &Digraph, limits: &Limits) -> Result<Outcome> {
    if g.edge_count() > limits.exhaustive_ground || !recognize_mp_with(g, limits)?.is_mp() {
        return Ok(Outcome::Skip);
    }
    let [t, ..] = tutte_all(g, limits)?;
    let reversed = tutte_all(&g.reverse(), limits)?;
    if reversed[0] != t {
        return fail(format!("Tutte polynomial {t} changes to {} under reversal", reversed[0]));
    }
    Ok(Outcome::Pass)
}

/// The quotient count matches the raw count and reversal, and on coherent-cycle-free
/// MP-digraphs the spanning-forest identities hold for `k = 1..=5`.
fn check_colouring(g: &Digraph, limits: &Limits) -> Result<Outcome> {
    for k in 0..=4 {
        let fast = count_flowing_with(g, k, limits)?;
        if fast != count_flowing_with(&g.reverse(), k, limits)? {
            return fail(format!("tau({k}) changes under reversal"));
        }
        if g.vertex_count() <= RAW_COLOURING_VERTICES {
            let raw = count_flowing_raw(g, k, limits)?;
            if raw != fast {
                return fail(format!("tau({k}): quotient count {fast}, raw count {raw}"));
            }
        }
    }
    if g.has_loops() || has_directed_cycle(g) || !recognize_mp_with(g, limits)?.is_mp() {
        return Ok(Outcome::Pass);
    }
    verify_colouring_identity_with(g, &[1, 2, 3, 4, 5], limits)?;
    Ok(Outcome::Pass)
}

pub fn euler_alphas() -> [LaurentPoly; 3] {
    [
        LaurentPoly::constant(2),
        LaurentPoly::from_terms([(0, 1), (1, 1)]),
        LaurentPoly::from_terms([(-1, 1), (0, 1), (1, 1)]),
    ]
}

fn check_euler(g: &Digraph, limits: &Limits) -> Result<Outcome> {
    if g.has_loops() || !g.is_undirected_forest() || !recognize_mp_with(g, limits)?.is_mp() {
        return Ok(Outcome::Skip);
    }
    verify_euler_identity_with(g, &euler_alphas(), limits)?;
    Ok(Outcome::Pass)
}
