//! Exact Schubert calculus on Grassmannians.
//!
//! The crate computes Chern characters, Chern classes, and Todd classes of
//! the tautological and tangent bundles of `G_d(n)` in the rational Chow
//! ring, reduces them modulo the hyperplane class, and decides whether the
//! local ring at the vertex of the Plücker cone is a Roberts ring. The same
//! question for the Pfaffian rings `B_m(n)` is answered in [`pfaffian`].
//!
//! All arithmetic is exact over `Q`.

pub mod bundles;
pub mod chow;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod pfaffian;
pub mod series;

pub use chow::{ChowElement, ChowRing, HMatrixSet, Reduction};
pub use cone::{ConeChowDims, ReportMode, RobertsReport, TauRecord, VerdictSummary};
pub use error::{Error, Result};
pub use partition::{GrassmannShape, Partition};
pub use pfaffian::{AntisymmetricMatrix, PfaffianClassification};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Version of the engine, reported in machine-readable output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
