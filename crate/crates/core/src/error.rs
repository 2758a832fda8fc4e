use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: link ends before it begins")]
    EndBeforeBegin { line: usize },

    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: String },

    #[error("lines {first} and {second}: overlapping links on the pair {{{u}, {v}}}")]
    OverlappingLinks {
        first: usize,
        second: usize,
        u: String,
        v: String,
    },

    #[error("duration must be strictly positive, got {0}")]
    NonPositiveDelta(String),

    #[error("time overflow while adding duration to {0}")]
    TimeOverflow(String),

    #[error("clique size must be at least 3, got {0}")]
    InvalidK(usize),

    #[error("clique of size {found} fed to a percolation of size {expected}")]
    CliqueSize { expected: usize, found: usize },

    #[error("clique starting at {found} arrived after one starting at {previous}")]
    OutOfOrder { previous: String, found: String },

    #[error("unknown union-find node {0}")]
    UnknownNode(u32),

    #[error("instance too large for brute force: {0}")]
    TooLarge(String),

    #[error("invalid link stream: {0}")]
    Invalid(String),
}
