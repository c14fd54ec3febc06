//! Exact combinatorics of the basic module of the affine Lie algebra C_n^(1).
//!
//! The crate is organised bottom-up:
//!
//! - [`root_system`]: the triangular basis scheme of C_n, the cell order,
//!   the triangles `Δ_r` / `^rΔ` and exact Weyl dimensions.
//! - [`partitions`]: colored partitions over `x_ab(j)`, their total order,
//!   products and embeddings.
//! - [`leading_terms`]: the quadratic leading terms of level one relations.
//! - [`census`]: counting embeddings of leading terms in length three
//!   partitions and comparing against `dim Q_3 = 2n C(2n+4, 5)`.
//! - [`qseries`]: exact truncated power series and the three sides of the
//!   Rogers-Ramanujan type identity in the principal specialization.

pub mod census;
pub mod decimal;
pub mod error;
pub mod leading_terms;
pub mod partitions;
pub mod qseries;
pub mod root_system;

pub use error::{Error, Result};
pub use leading_terms::LeadingTermSet;
pub use partitions::{ColoredPartition, Part};
pub use qseries::QSeries;
pub use root_system::{Cell, Rank, WeightVec};
