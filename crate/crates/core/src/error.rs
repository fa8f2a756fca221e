use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph with {vertex_count} vertices")]
    OutOfRangeVertex { vertex: usize, vertex_count: usize },
    #[error("duplicate non-loop edge ({source_vertex}, {target})")]
    DuplicateNonLoopEdge { source_vertex: usize, target: usize },
    #[error("edge id {edge} is not valid for a digraph with {edge_count} edges")]
    InvalidEdge { edge: usize, edge_count: usize },
    #[error("edge {0} is a loop and cannot be MP-contracted")]
    LoopContraction(usize),
    #[error("cycle enumeration exceeded its budget of {0} cycles")]
    CycleBudgetExceeded(u64),
    #[error("multipath enumeration exceeded its budget of {0} examined subsets")]
    EnumerationBudgetExceeded(u64),
    #[error("colouring enumeration exceeded its budget of {0} assignments")]
    AssignmentBudgetExceeded(u64),
    #[error("ground set of size {size} exceeds the exhaustive cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("not an MP-digraph: {0}")]
    NotMpDigraph(String),
    #[error("not an MP-forest: {0}")]
    NotMpForest(String),
    #[error("digraph has a coherently oriented cycle or loop")]
    HasCoherentCycle,
    #[error("element {0} is a loop of the matroid and cannot be contracted")]
    ContractLoop(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("cannot evaluate a polynomial with negative exponents at zero")]
    ZeroAtNegativeExponent,
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("rejection sampling gave up after {0} attempts")]
    RejectionCapExceeded(u64),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Budget and cap errors are reported by the sweeps instead of failing them.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CycleBudgetExceeded(_)
                | Error::EnumerationBudgetExceeded(_)
                | Error::AssignmentBudgetExceeded(_)
                | Error::CapExceeded { .. }
        )
    }
}
