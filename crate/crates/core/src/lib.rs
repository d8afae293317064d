//! Exact construction of faithful nilpotent representations of nilpotent Lie algebras over Q.

pub mod engine;
pub mod error;
pub mod fixtures;
pub mod free;
pub mod graded;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod rep;

pub use error::{AdoError, Result};
