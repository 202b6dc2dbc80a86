//! Exact lattice-polyhedral machinery for rational curves in projective
//! toric varieties.
//!
//! Everything here is exact: integers are arbitrary precision, polyhedral
//! data is rational, and no floating point appears anywhere. The crate is
//! organized around the pipeline
//!
//! * [`matrix`] / [`lattice`] — integer linear algebra (Hermite and Smith
//!   normal forms, sublattices, saturation),
//! * [`cone`] / [`polytope`] / [`fan`] — exact polyhedral geometry via the
//!   double description method (face lattices, inner normal fans, convex
//!   hulls, common refinements),
//! * [`cayley`] — Cayley structures on faces of a point configuration:
//!   enumeration up to equivalence, resolution/concision/reduction, and the
//!   primitive/cuspidal/nodal/smooth classification,
//! * [`order`] — the partial order on Cayley structures and the census of
//!   Hilbert-scheme components whose general member is a smooth rational
//!   curve,
//! * [`orbits`] — torus-orbit degenerations: limit one-cycles, the orbit
//!   fan of a curve in the Chow variety, Chow polytopes, and the refined
//!   fan for conics,
//! * [`oracle`] — an independent curve oracle that builds explicit rational
//!   parametrizations and certifies degree and singularity predictions by
//!   binary-form gcd and resultant elimination.

pub mod cayley;
pub mod cone;
mod error;
pub mod fan;
pub mod fixtures;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod orbits;
pub mod order;
pub mod polytope;

pub use error::Error;
pub use matrix::{Int, IntMatrix, Rat};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
