use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair {{{0}, {1}}} is oriented more than once")]
    DuplicatePair(Vertex, Vertex),
    #[error("pair {{{0}, {1}}} has no orientation")]
    MissingPair(Vertex, Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("regular tournament needs an odd n >= 3, got {0}")]
    EvenOrTooSmall(usize),
    #[error("({0}, {1}) is not an edge of the regular tournament")]
    NotAnEdgeOfTReg(Vertex, Vertex),
    #[error("u and v must differ (got {0})")]
    SameVertex(Vertex),
    #[error("tournament too small: need n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("{what}: n = {n} exceeds the exact-search cap {cap}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("construction needs an odd n, got {0}")]
    EvenN(usize),
    #[error("promise k must satisfy 1 <= k <= n (k = {k}, n = {n})")]
    InvalidK { k: usize, n: usize },
    #[error("top-cycle promise violated: {0}")]
    PromiseViolated(String),
    #[error("oracle answered {{{0}, {1}}} inconsistently")]
    ConflictingAnswer(Vertex, Vertex),
    #[error("adversary is inconsistent: {0}")]
    InconsistentAdversary(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown tag `{0}`")]
    UnknownTag(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
