//! Error type shared by every module in this crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop ({0}, {0}) not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid generator size: {0}")]
    InvalidSize(String),

    #[error("graph is disconnected: vertex {unreachable} unreachable from {start}")]
    Disconnected { start: usize, unreachable: usize },

    #[error("configuration has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("chip arithmetic overflowed the 64-bit range")]
    IntegerOverflow,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a star")]
    NotAStar,

    #[error("bound {0} does not apply to this graph")]
    BoundInapplicable(&'static str),

    #[error("configuration window admits no configuration")]
    EmptyWindow,

    #[error("configuration window exceeds the cap of {cap} configurations")]
    WindowTooLarge { cap: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid chip range: lo {lo} exceeds hi {hi}")]
    InvalidRange { lo: i64, hi: i64 },
}
