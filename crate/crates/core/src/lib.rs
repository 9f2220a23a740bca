//! Exact linear algebra and free-structure machinery for deriving polynomial
//! identities of dialgebra operations.

pub mod basis;
pub mod bso;
pub mod commands;
pub mod conjecture;
pub mod dialgebra;
pub mod engine;
pub mod error;
pub mod expansion;
pub mod experiments;
pub mod field;
pub mod kp;
pub mod linalg;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod report;
pub mod term;
pub mod varieties;

pub use error::{Error, Result};
