//! Exact machinery for ordinal min-cost matching under unknown metrics.
//!
//! Agents report only rankings over items; the true costs come from a metric
//! the mechanism never sees. This crate provides the exact domain model
//! (instances, metrics, matchings, fractional matchings), the hard-instance
//! generators, every mechanism studied (serial dictatorship and its random and
//! truncated variants, RepMatch, deferred acceptance, Boston), an exact
//! adversarial distortion oracle built on a rational simplex solver, and the
//! thin-matching toolkit (thinness, Hall-threshold rounding, Birkhoff-von
//! Neumann decomposition, cycle counterexamples).
//!
//! All arithmetic is over arbitrary-precision rationals. Randomized routines
//! take an explicit seed and are reproducible bit-for-bit.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bipartite;
pub mod distortion;
mod error;
pub mod fractional;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod matching;
pub mod mechanisms;
pub mod metric;
pub mod perm;
pub mod rational;
pub mod thin;

pub use error::{Error, Result};
pub use fractional::{fractional_cost, FractionalMatching};
pub use graph::{metric_from_graph, Vertex, WeightedGraph};
pub use instance::{consistent, prefs_from_metric, Instance};
pub use matching::{cost, Matching};
pub use metric::Metric;
pub use perm::PriorityOrder;
pub use rational::{Extended, Rational};
