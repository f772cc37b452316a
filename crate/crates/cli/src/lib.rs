//! File formats, checkpoints, sweep driving and the command-line front end
//! for the hypergraph transversal toolkit. The algorithms live in
//! `hypertau-core`; this crate owns everything that touches the filesystem,
//! the clock, and process exit codes.

pub mod checkpoint;
mod cli;
pub mod formats;
pub mod report;

pub use cli::run;
