//! Maximum-clique search driven by a Hedge-based dynamical system evolving in a
//! barrier-restricted slice of the Nisan-Bomze game, plus the verification
//! machinery (equalizer LP, fixed-point enumeration, multiplier bounds, brute
//! force oracle) used to check the dynamics against exact small-scale ground
//! truth.

pub mod ariadne;
pub mod barrier;
pub mod corpus;
pub mod dynamics;
pub mod equilibrium;
pub mod game;
pub mod graph;
pub mod linalg;
pub mod multipliers;
pub mod props;
pub mod shapley;
pub mod trace;

pub use ariadne::{run, run_for_k, KOutcome, KResult, Report, RunConfig};
pub use game::{build_nisan_game, NisanGame, Strategy};
pub use graph::{max_clique_bruteforce, parse_dimacs, Graph, VertexSet};

/// Library error type. Invariant faults carry a serialized diagnostic dump so
/// a violated theorem surfaces with enough context to reproduce it.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("oracle refused: n = {n} exceeds cap {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("solver failure: {0}")]
    SolverFailure(String),
    #[error("invariant fault: {msg}")]
    InvariantFault { msg: String, dump: String },
}

pub type Result<T> = std::result::Result<T, Error>;
