//! Permutations, permutation groups with stabilizer chains, and induced actions.
//!
//! All groups act on the right: `x^(pq) = (x^p)^q`.

mod action;
mod conjugacy;
mod group;
mod io;
mod permutation;

pub use action::{induced_action, ActionImage};
pub use conjugacy::prime_order_class_representatives;
pub use group::GroupWithChain;
pub use io::{format_group_file, parse_group_file, GroupFileError};
pub use permutation::Permutation;

pub(crate) use permutation::is_prime;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed cycle notation at byte {position}: {reason}")]
    Malformed { position: usize, reason: String },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("group of order {order} exceeds the element enumeration limit {limit}")]
    EnumerationLimit { order: BigUint, limit: u64 },
    #[error("action maps an object outside the object list")]
    NotInvariant,
}
