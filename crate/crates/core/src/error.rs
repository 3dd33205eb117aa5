use thiserror::Error;

use crate::index::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KronError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),

    #[error("negative part in {0:?}")]
    NegativePart(Vec<i64>),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid index triple: {}", join_violations(.0))]
    InvalidTriple(Vec<Violation>),

    #[error("invalid Kronecker index (n, r, s, g1, g2) = {0:?}")]
    InvalidKronIndex([i64; 5]),

    #[error("reduced index (r, s, g1, g2) = {0:?} violates r >= 0, s >= 0, g1 >= g2 >= 0")]
    InvalidReducedIndex([i64; 4]),

    #[error("weights differ: {0:?}")]
    WeightMismatch(Vec<u64>),

    #[error("indices {0:?} must be distinct elements of 0..=6")]
    BadTriple([usize; 3]),

    #[error("no wall-crossing rule for triple {0}{1}{2}")]
    UnlistedTriple(usize, usize, usize),

    #[error("point {0:?} lies outside the cone of feasible parameters")]
    OutsideCone([i64; 4]),

    #[error("constraint system is unbounded")]
    Unbounded,

    #[error("n = {n} exceeds the character-table cap {cap}; raise the cap (--cap) to evaluate it")]
    CapExceeded { n: u64, cap: u64 },

    #[error(
        "no stabilization witness for {what} up to n = {limit}; raise the stabilization limit"
    )]
    NotStabilized { what: String, limit: u64 },

    #[error("{0}")]
    Unsupported(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("engines disagree: {0}")]
    Disagreement(String),

    #[error("cache i/o: {0}")]
    Cache(String),

    #[error("malformed catalog document: {0}")]
    Catalog(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = KronError> = std::result::Result<T, E>;
