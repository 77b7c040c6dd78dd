//! Exact construction, identity checking and classification of
//! finite-dimensional absolute-valued algebras with a left unit.

pub mod algebra;
pub mod arith;
pub mod classify;
pub mod error;
pub mod harness;
pub mod identity;
pub mod isometry;
pub mod sample;

pub use error::{Error, Result};
