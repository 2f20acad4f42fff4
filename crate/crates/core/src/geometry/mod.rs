//! Finite fields, vector spaces and subspaces, classical groups as
//! permutation groups, and the projective, affine and symplectic designs.

mod builders;
mod classical;
mod field;
mod space;

pub use builders::{build_ag, build_pg, build_symplectic_subdesign, is_proper_subdesign, AffineInstance, BuiltInstance};
pub use classical::{
    classical_group, expected_order, gl_order, sp_order, symplectic_form, ClassicalFamily, ClassicalGroup,
};
pub use field::FiniteField;
pub use space::{enumerate_subspaces, gaussian_coefficient, SubspaceList, VectorSpace};

use num_bigint::BigUint;
use thiserror::Error;

use crate::incidence::DesignError;
use crate::perm::PermError;

/// Largest vector space the builders will materialize.
pub const MAX_POINTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("no field of order {0} is supported")]
    UnsupportedField(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{what} exceeds the point limit {limit}")]
    TooLarge { what: String, limit: usize },
    #[error("{group} has order {actual}, expected {expected}")]
    OrderMismatch {
        group: String,
        expected: BigUint,
        actual: BigUint,
    },
    #[error("geometry inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Design(#[from] DesignError),
}
