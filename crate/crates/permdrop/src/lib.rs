//! Exact combinatorics of permutations with bounded drop size: statistics,
//! subexcedent codes, pattern-restricted enumeration, ballot-sequence
//! bijections, generating functions, and an exhaustive verification
//! harness for the identities relating them.
//!
//! See the `book/` guide for a narrative walkthrough; its code snippets are
//! compiled as doc-tests from the [`guide`] module.

pub mod algebra;
pub mod ballot;
pub mod codes;
pub mod enumerate;
pub mod guide;
pub mod parse;
pub mod pattern;
pub mod perm;
pub mod verify;

#[cfg(test)]
pub(crate) mod test_util;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("duplicate value {value} at index {index}")]
    DuplicateValue { index: usize, value: usize },

    #[error("value {value} at index {index} is out of range")]
    ValueOutOfRange { index: usize, value: i64 },

    #[error("entry {value} at index {index} violates subexcedence (need 1 <= a_i <= i)")]
    NotSubexcedent { index: usize, value: usize },

    #[error("empty permutation has no such statistic")]
    EmptyPermutation,

    #[error("prefix sum goes negative at position {position}")]
    NegativePrefix { position: usize },

    #[error("step {value} at position {position} is not +1 or -1")]
    BadStep { position: usize, value: i64 },

    #[error("adjacency index {index} out of range for a pattern of length {len}")]
    BadAdjacency { index: usize, len: usize },

    #[error("permutation contains the pattern {0}")]
    PatternContained(String),

    #[error("maxdrop {maxdrop} exceeds the bound k = {k}")]
    DropBoundExceeded { maxdrop: usize, k: usize },

    #[error("last letter is {last}, expected {expected}")]
    WrongLastLetter { last: usize, expected: usize },

    #[error("invalid bound k = {k} for n = {n}")]
    BadBound { n: usize, k: usize },

    #[error("{0}")]
    FamilyMismatch(String),

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("max-n {requested} exceeds the hard cap {cap}")]
    BudgetExceeded { requested: usize, cap: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),
}
