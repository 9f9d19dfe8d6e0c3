//! Command-line driver for the finite lattice dualities: document parsing
//! and serialization, dualization and reconstruction, DOT rendering, the
//! exhaustive verification suites and the `X₀` versus `X_m` search.
//!
//! The binary is a thin wrapper around [`run`], which writes to caller
//! supplied streams so that every command is testable in-process.

pub mod app;
pub mod document;
pub mod dot;
pub mod error;
pub mod json;
pub mod mutation;
pub mod recheck;
pub mod search;
pub mod verify;

pub use app::run;
pub use error::{CliError, CliResult, ParseError};
