use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type tuple has no nonzero entries")]
    EmptyType,
    #[error("ill-formed type tuple: {0}")]
    IllFormed(String),
    #[error("vertex {vertex} is not in a tournament of order {order}")]
    BadSubset { vertex: usize, order: usize },
    #[error("scope too large: {0}")]
    ScopeTooLarge(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("sequence too short: need at least {needed} vertices, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("type spans {needed} vertices but the tournament has only {order}")]
    TypeTooLong { needed: usize, order: usize },
    #[error("symmetric type {0} produced an odd enumeration count")]
    ParityViolation(String),
    #[error("count {count} for {what} is not divisible by {divisor}")]
    DivisibilityViolation {
        what: String,
        count: u64,
        divisor: u64,
    },
    #[error("digraph has {needed} vertices but the tournament has only {order}")]
    TooManyVertices { needed: usize, order: usize },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("invalid vertex sequence: {0}")]
    BadSequence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
