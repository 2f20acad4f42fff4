//! Block designs from permutation-group data, and verification of their
//! flag-transitivity, local primitivity and primitivity type.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations, stabilizer chains, normal closures, induced actions.
//! - [`structure`]: block systems, (quasi)primitivity, minimal normal subgroups
//!   and the affine / almost-simple classification.
//! - [`incidence`]: incidence structures, design parameters, t-design strength,
//!   incidence-graph diameter and the local-primitivity report.
//! - [`coset`]: coset actions and coset-graph designs.
//! - [`geometry`]: finite fields, subspaces, classical groups and the projective,
//!   affine and symplectic design families.
//! - [`analysis`]: the end-to-end analysis report and the corpus census.
//! - [`corpus`]: the bundled instances.

pub mod analysis;
pub mod corpus;
pub mod coset;
pub mod geometry;
pub mod incidence;
pub mod limits;
pub mod perm;
pub mod structure;

pub use limits::Limits;
