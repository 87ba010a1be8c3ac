pub mod assembly;
pub mod cli;
pub mod error;
pub mod homology;
pub mod lipa;
pub mod pieces;
pub mod su2_oracle;
pub mod torus_sets;
pub mod trace_intervals;

pub use error::{Error, Result};
