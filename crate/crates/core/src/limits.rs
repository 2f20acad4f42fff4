//! Resource limits for the enumeration-based algorithms.

use std::env;

/// Element-enumeration limit, overridable with `LPDESIGN_ELEMENT_LIMIT`.
pub const DEFAULT_ELEMENT_LIMIT: u64 = 1_000_000;
/// Coset-index limit, overridable with `LPDESIGN_INDEX_LIMIT`.
pub const DEFAULT_INDEX_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order whose elements may be listed.
    pub element_limit: u64,
    /// Largest coset space that may be materialized.
    pub index_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            element_limit: DEFAULT_ELEMENT_LIMIT,
            index_limit: DEFAULT_INDEX_LIMIT,
        }
    }
}

impl Limits {
    /// Defaults, overridden by the environment where set and parseable.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = env::var("LPDESIGN_ELEMENT_LIMIT").ok().and_then(|s| s.parse().ok()) {
            limits.element_limit = v;
        }
        if let Some(v) = env::var("LPDESIGN_INDEX_LIMIT").ok().and_then(|s| s.parse().ok()) {
            limits.index_limit = v;
        }
        limits
    }
}
