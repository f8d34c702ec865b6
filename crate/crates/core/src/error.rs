use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Range bounds out of order.
    #[error("invalid range: lo {lo} exceeds hi {hi}")]
    RangeOrder { lo: u64, hi: u64 },

    /// A documented operating ceiling was exceeded.
    #[error("{what} {requested} exceeds the supported ceiling {ceiling}")]
    Capacity {
        what: &'static str,
        requested: u64,
        ceiling: u64,
    },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// 1/p has a terminating (not purely periodic) expansion in the base.
    #[error("1/{p} terminates in base {base}: {p} divides the base")]
    TerminatingExpansion { p: u64, base: u64 },

    /// A long-running computation was cancelled by its progress callback.
    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
