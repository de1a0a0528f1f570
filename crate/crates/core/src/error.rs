use std::fmt;

use thiserror::Error;

/// Which side a multiplication was applied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the carrier is empty")]
    EmptyCarrier,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table[{i}][{j}] = {value} is out of range for a carrier of size {size}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        value: usize,
        size: usize,
    },
    #[error("{what} has {len} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        len: usize,
        expected: usize,
    },
    #[error("carrier of size {size} exceeds the configured limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("order pair ({lo}, {hi}) refers to an element outside the carrier")]
    OrderIndexOutOfRange { lo: usize, hi: usize },
    #[error("order is not antisymmetric: {i} <= {j} and {j} <= {i}")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("relation is not a quasiorder")]
    NotQuasiorder,
    #[error("order is not stable: {i} <= {j} fails after {side} multiplication by {a}")]
    NotStable {
        a: usize,
        i: usize,
        j: usize,
        side: Side,
    },
    #[error("element {witness} does not lie in a subgroup")]
    NotCompletelyRegular { witness: usize },
    #[error("seed set is empty")]
    EmptySeed,
    #[error("map value {value} at position {index} is out of range")]
    MapOutOfRange { index: usize, value: usize },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable {letter} is not bound by the assignment")]
    UnboundVariable { letter: String },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("relation has {vars} variables over a carrier of size {size}; pass force to check anyway")]
    TooExpensive { vars: usize, size: usize },
    #[error("not a normal band: {relation} fails")]
    NotANormalBand { relation: String },
    #[error("not a normal orthogroup: {relation} fails at assignment {assignment:?}")]
    NotNocr {
        relation: String,
        assignment: Vec<usize>,
    },
    #[error("generator {index} is not a normal orthogroup")]
    GeneratorNotNocr { index: usize },
    #[error("generator {index} is not completely regular")]
    GeneratorNotCr { index: usize },
    #[error("not a group: {relation} fails")]
    NotAGroup { relation: String },
    #[error("order is not the equality")]
    OrderNotEquality,
    #[error("hypothesis {relation} does not hold")]
    HypothesisFailed { relation: String },
    #[error("{letters} letters requested; at most {max} supported")]
    TooManyLetters { letters: usize, max: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("malformed semigroup file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
