//! Exact computation and verification of distance-equalizer sets.
//!
//! A distance-equalizer set of a connected graph G is a vertex set D
//! such that every pair of vertices x, y outside D has some w in D with
//! d(x,w) = d(y,w); the equidistant dimension ξ(G) is the smallest size
//! of such a set. This crate computes ξ exactly at desk scale, builds
//! the known closed-form witness sets for two-dimensional Hamming
//! graphs, hypercubes, prisms of cycles, and squared grids, and verifies
//! everything against BFS distance matrices.
//!
//! Start from the runnable examples (`cargo run --example solve_families`)
//! or the `equidim` binary for the file-based command-line surface.

mod bits;
pub mod cli;
pub mod constructions;
pub mod equalizer;
pub mod error;
pub mod graph;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, Label, VertexSet};
