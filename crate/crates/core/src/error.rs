use thiserror::Error;

use crate::family::Family;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loops are not allowed (vertex {0})")]
    Loop(usize),

    #[error("kelmans operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("invalid parameters for family {family}: n={n}, k={k} ({reason})")]
    FamilyParams {
        family: Family,
        n: usize,
        k: usize,
        reason: &'static str,
    },

    #[error("perturbation {perturbation} is not available for family {family} with n={n}, k={k}")]
    InvalidPerturbation {
        family: Family,
        perturbation: &'static str,
        n: usize,
        k: usize,
    },

    #[error("partition sides are unbalanced: {a} vs {b}")]
    Unbalanced { a: usize, b: usize },

    #[error("edge {0}-{1} joins two vertices of the same side")]
    IntraSideEdge(usize, usize),

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("quotient matrix is malformed: {0}")]
    MalformedQuotient(String),

    #[error("partition is not equitable: class {class} vertex {vertex} has {found} neighbours in class {other}, expected {expected}")]
    NotEquitable {
        class: usize,
        other: usize,
        vertex: usize,
        found: usize,
        expected: usize,
    },

    #[error("no sign change of f on ({lo}, {hi}) for n={n}, k={k}: f(lo)={f_lo}, f(hi)={f_hi}")]
    NoSignChange {
        n: i64,
        k: i64,
        lo: i64,
        hi: i64,
        f_lo: i128,
        f_hi: i128,
    },

    #[error("rayleigh quotient of the zero vector")]
    ZeroVector,

    #[error("vector length {found} does not match graph order {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("theorem-based verdict contradicted by exact search: {0}")]
    SoundnessViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the printable range 63..=126")]
    BadByte { position: usize, byte: u8 },
    #[error("truncated size header")]
    TruncatedHeader,
    #[error("expected {expected} data bytes for n={n}, found {found}")]
    BodyLength { n: u64, expected: u64, found: usize },
    #[error("order {0} exceeds the graph6 limit of 68719476735")]
    TooLarge(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
