//! Correspondences between unmixed bipartite graphs, sublattices of the
//! Boolean lattice and finite posets, together with a certified squarefree
//! quadratic Gröbner basis for the toric ideal of minimal vertex covers.
//!
//! Indices in the Rust API are 0-based: `x_i` is left vertex `i`, `y_j` is
//! right vertex `j`, and bit `i` of a subset mask is `x_{i+1}` in the usual
//! 1-based notation. The text formats in [`format`] are 1-based.

pub mod bits;
pub mod cli;
pub mod correspondence;
mod error;
pub mod format;
pub mod graph;
pub mod lattice;
pub mod toric;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, CoverFamily, Relabeling, VertexCover};
pub use lattice::{Poset, SubsetFamily};

/// Size caps for the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `left_size + right_size` accepted by cover enumeration (at most 64).
    pub max_vertices: usize,
    /// Largest poset whose ideal lattice is enumerated.
    pub max_poset_size: usize,
    /// Largest number of standard monomials visited by the injectivity check.
    pub max_standard_monomials: usize,
    /// Graphs up to this many vertices get their primary decomposition certified.
    pub certify_vertices: usize,
    /// Guard on reduction steps for a single S-polynomial.
    pub max_reduction_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 40,
            max_poset_size: 20,
            max_standard_monomials: 1_000_000,
            certify_vertices: 12,
            max_reduction_steps: 1_000_000,
        }
    }
}
