//! Numerical SU(2) representations used to cross-check the exact character sets.

pub mod quat;
pub mod solver;
pub mod traces;
pub mod witness;

pub use quat::Quat;
pub use solver::{
    commutator_score, eval_word, relator_residual, solve_representation, system_at, OracleConfig, RelationSystem,
    Representation, Requirement, Solution,
};
pub use traces::sample_product_traces;
pub use witness::{verify_split, verify_witness, VerificationReport};
