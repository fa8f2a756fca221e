//! Enumeration budgets shared by every exhaustive routine.

use std::env;

/// Name of the environment variable that overrides the enumeration budgets.
pub const BUDGET_ENV: &str = "MPMAT_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of directed cycles reported by cycle enumeration.
    pub cycles: u64,
    /// Maximum number of candidate edge subsets examined by multipath enumeration.
    pub subsets: u64,
    /// Maximum number of colour assignments visited while counting colourings.
    pub assignments: u64,
    /// Largest ground set accepted by the exhaustive axiom and equality oracles.
    pub exhaustive_ground: usize,
    /// Largest ground set accepted by the defining-sum Tutte computation.
    pub tutte_ground: usize,
    /// Spanning forests beyond this count are not enumerated one by one.
    pub spanning_forests: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cycles: 1_000_000,
            subsets: 1 << 24,
            assignments: 100_000_000,
            exhaustive_ground: 16,
            tutte_ground: 20,
            spanning_forests: 50,
        }
    }
}

impl Limits {
    /// Defaults, with the three enumeration budgets replaced by `MPMAT_BUDGET` when it
    /// holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(budget) = env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            if budget > 0 {
                limits = limits.with_budget(budget);
            }
        }
        limits
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.cycles = budget;
        self.subsets = budget;
        self.assignments = budget;
        self
    }
}
