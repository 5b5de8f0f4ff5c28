//! Computational workbench for the rapid decay property of finitely
//! generated groups.
//!
//! - [`group`]: exact arithmetic, word lengths and Cayley balls.
//! - [`spectral`]: group-algebra vectors, convolution, operator-norm bounds
//!   and rapid-decay degree estimates.
//! - [`median`]: median graphs, hyperplanes, chain covers of hyperplane
//!   posets and interval growth.
//! - [`centroid`]: centroid maps for tree-like and cube-like actions and the
//!   empirical check of their cardinality conditions.

pub mod centroid;
pub mod error;
pub mod fit;
pub mod graph;
pub mod group;
pub mod median;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::FiniteGraph;
pub use group::{BallIndex, Element, GroupHandle, GroupOptions, GroupSpec};
