//! Exact linear algebra over prime fields and the geometry of Steiner
//! bundles on projective space: Schwarzenberger constructions, jumping
//! loci of rank-1 tensors in matrix subspaces, tangent certificates, the
//! pair transform, and the classification of maximal jumping loci.

pub mod error;
pub mod field;
pub mod mat;
pub mod proj;

pub use error::Error;
pub use field::FieldCtx;
pub use proj::Limits;

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
