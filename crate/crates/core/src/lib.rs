//! Construction, verification and block-count bounds for t-designs and
//! t-adesigns.

#![allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]

pub mod algebra;
mod bitset;
pub mod bounds;
pub mod builders;
pub mod cli;
pub mod error;
pub mod formats;
pub mod graphs;
pub mod incidence;
pub mod matrix;
pub mod setdiff;

pub use error::{Error, Result};
pub use incidence::{Classification, IncidenceStructure, MatrixVerdict, Verdict};
pub use matrix::{Matrix, Scalar};

/// Integer matrix used for adjacency, incidence and conference matrices.
pub type IntMatrix = Matrix<i64>;

pub type BoundReport = bounds::BoundReport<u64>;
pub type FeasibilityReport = bounds::FeasibilityReport<u64>;
