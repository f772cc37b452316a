//! Hypergraph transversal toolkit.
//!
//! Exact minimum transversals of k-uniform hypergraphs, the
//! `(n + floor(k/2) m) / floor(3k/2)` upper bound as exact rational
//! arithmetic, the extremal families `E_k` (one edge on k vertices) and
//! `T_k` (the generalized triangle) with recognizers, multigraph matching
//! and edge coloring up to the `floor(3*Delta/2)` bound, the conflict
//! multigraph reduction for maximum-degree-2 hypergraphs, and exhaustive
//! enumeration of small instances up to isomorphism for verifying the
//! bound's equality characterization.
//!
//! The crate is `no_std` + `alloc`; everything is pure functions over
//! immutable values. File formats, checkpoints and the CLI live in the
//! companion `hypertau` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bits;
mod canon;
mod error;
mod rational;

pub mod extremal;
pub mod hypergraph;
pub mod multigraph;
pub mod reduction;
pub mod transversal;
pub mod verify;

pub use error::Error;
pub use rational::Rational;

pub use hypergraph::{ComponentPartition, Hypergraph, VertexDeletion, VertexSet};
pub use transversal::Transversal;
