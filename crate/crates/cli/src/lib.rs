//! # `pseudosym`
//!
//! Command-line front end for `pseudosym-core`: parameter intake, the
//! `gens`, `basis`, `hilbert`, `verify`, `sweep` and `oracle` subcommands,
//! reference fixtures, and JSON output with sorted keys.

pub mod failure;
pub mod fixtures;
pub mod params;
pub mod pipeline;
pub mod sweep;

pub use failure::{Failure, EXIT_INTERNAL, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
pub use pipeline::Report;
