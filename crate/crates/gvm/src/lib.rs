//! Command line, file formats and parallel sweeps on top of `gvm-core`.
//!
//! - [`parse`]: text syntax for exact scalars (`-5/2`, `1/2+tau`, `3*sigma`).
//! - [`sweep`]: rayon sweeps with deterministic row order, capped by
//!   `GVM_THREADS`.
//! - [`record`]: CSV and JSON sweep reports.
//! - [`diagram`]: SVG and ASCII lattice plots of reducible points.
//! - [`cli`]: the `gvm` binary.

pub mod cli;
pub mod diagram;
pub mod parse;
pub mod record;
pub mod sweep;

pub use gvm_core;
