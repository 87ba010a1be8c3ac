use thiserror::Error;

/// Errors raised by the symbolic core and the document layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("slope ({0},{1}) is not primitive")]
    NonPrimitive(i64, i64),
    #[error("matrix {0:?} has determinant {1}, expected ±1")]
    NotUnimodular([[i64; 2]; 2], i64),
    #[error("not a QHS complement: {0}")]
    NotQhsComplement(String),
    #[error("not a rational homology sphere")]
    NotQhs,
    #[error("degenerate line: m = 0 for slope ({0},{1})")]
    DegenerateLine(i64, i64),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("coefficient pair ({0},{1}) is not coprime")]
    NonCoprime(i64, i64),
    #[error("gluing graph is not a tree: {0}")]
    NotTree(String),
    #[error("port {1} of piece {0:?} is used more than once")]
    PortReused(String, usize),
    #[error("port {1} out of range for piece {0:?}")]
    PortOutOfRange(String, usize),
    #[error("unknown piece {0:?}")]
    UnknownPiece(String),
    #[error("duplicate piece id {0:?}")]
    DuplicateId(String),
    #[error("too many unglued ports: {0}")]
    OpenPorts(usize),
    #[error("no interior edge to split along")]
    NoInteriorEdge,
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("invalid piece {0:?}: {1}")]
    InvalidPiece(String, String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed provenance: {0}")]
    Provenance(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
