use thiserror::Error;

/// Contract violations reported by the sliding window and the tree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window capacity must be at least 1")]
    ZeroCapacity,
    #[error("window is full (capacity {capacity}); delete from the front first")]
    WindowFull { capacity: usize },
    #[error("window is empty")]
    WindowEmpty,
    #[error("position {pos} is outside the window [{tail}..{head}]")]
    OutOfWindow { pos: u64, tail: u64, head: u64 },
    #[error("the root has no incoming edge")]
    RootEdge,
    #[error("pattern must be non-empty")]
    EmptyPattern,
}

pub type Result<T> = std::result::Result<T, Error>;
