//! Exact-arithmetic analysis of a linear operator paired with a bilinear
//! form on a finite-dimensional space with a fixed basis.
//!
//! The central object is a directed graph on the basis: an edge (i, j)
//! exists when the form is nonzero on the pair (in either order) or the
//! image of basis vector i has a nonzero coefficient on basis vector j.
//! Weak components of this graph give an orthogonal block decomposition of
//! the space and split the operator into a sum of summands, one per block.
//! On top of that the crate decides indecomposability, weak symmetry and
//! minimality, searches for basis-equivalence witnesses, and ships
//! brute-force oracles for each analysis.
//!
//! All arithmetic is exact: rationals or Gaussian rationals with
//! arbitrary-precision integers, so every equality test is structural.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `preeuclid` binary for the JSON/DOT command-line
//! surface.

pub mod cli;
pub mod decompose;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod scalar;
pub mod structure;

#[cfg(test)]
pub(crate) mod fixtures_test;

pub use decompose::{
    decompose, f_support_digraph, indecomposable_oracle, is_f_indecomposable, is_minimal,
    minimality_oracle, verify_decomposition, Decomposition,
};
pub use equivalence::{compare_bases, find_f_equivalence, ComparisonReport, Verdict};
pub use error::{Error, Result};
pub use graph::{AssocGraph, Partition, Provenance};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar, ScalarLiteral};
pub use structure::StructureSpec;
