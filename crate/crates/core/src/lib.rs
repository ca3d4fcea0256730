//! Exact fractional chromatic and cochromatic numbers of small graphs.
//!
//! The crate computes `chi_f(G)` (cover by independent sets) and `Z_f(G)`
//! (cover by cliques and independent sets) as exact rationals, each paired
//! with a primal cover and a dual vertex labeling of equal weight. The
//! [`harness`] module checks known identities and bounds against those
//! certified values.

pub mod error;
pub mod graph;
pub mod harness;
pub mod lp;
pub mod rational;
pub mod rng;
pub mod sets;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, GraphStats, Provenance};
pub use rational::Rational;
pub use sets::{SetKind, VertexSet};
