use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown color `{0}`")]
    UnknownColor(String),

    #[error("edge {edge}: vertex {vertex} is outside 1..={vertex_count}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("edge {edge} has fewer than two distinct vertices")]
    EdgeTooSmall { edge: usize },

    #[error("color `{0}` has no edges")]
    EdgelessColor(String),

    #[error("color `{refined}` refines color `{coarser}`")]
    RefinedColors { refined: String, coarser: String },

    #[error("color order is not a permutation of the colors: {0}")]
    BadColorOrder(String),

    #[error("k-equal parameters out of range: need 2 <= k <= l, got l={l}, k={k}")]
    KEqualRange { l: usize, k: usize },

    #[error("{what}: {needed} exceeds the budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error(
        "word truncation is unbounded: generators of degree <= 1 exist, a weight cap is required"
    )]
    UnboundedTruncation,

    #[error("not a Massey color system: {0}")]
    NotAMasseySystem(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
