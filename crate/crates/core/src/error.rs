use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is outside [0, {order})")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("label list has length {got}, expected {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("element {element} is outside a semigroup of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("exponent overflows 64 bits")]
    ExponentOverflow,
    #[error("order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("graph has {vertices} vertices, exact limit is {limit}")]
    SizeLimitExceeded { vertices: usize, limit: usize },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
