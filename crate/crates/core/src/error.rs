use std::fmt;

use thiserror::Error;

/// Why a candidate Horton-Strahler sequence is not admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Empty,
    /// Some `N_i` is zero.
    ZeroCount { index: usize },
    /// `N_K` must equal 1.
    LastNotOne { last: u64 },
    /// `N_i >= 2 * N_{i+1}` fails at position `index` (1-based).
    Halving { index: usize, value: u64, next: u64 },
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Empty => write!(f, "sequence is empty (need K >= 1)"),
            Admissibility::ZeroCount { index } => write!(f, "N{index} must be positive"),
            Admissibility::LastNotOne { last } => {
                write!(f, "last entry N_K must be 1, found {last}")
            }
            Admissibility::Halving { index, value, next } => write!(
                f,
                "N{index} >= 2*N{} violated: {value} < 2*{next}",
                index + 1
            ),
        }
    }
}

/// Failures while decoding a wire message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("message truncated at byte {offset}")]
    Truncated { offset: usize },
    #[error("varint at byte {offset} overflows 64 bits or is not minimally encoded")]
    BadVarint { offset: usize },
    #[error("header sequence is inadmissible: {0}")]
    Inadmissible(Admissibility),
    #[error("payload index {index} is not below space size {size}")]
    PayloadOutOfRange { index: String, size: String },
    #[error("padding bits in final byte are not zero")]
    NonZeroPadding,
    #[error("{extra} trailing byte(s) after message")]
    TrailingData { extra: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tree at vertex {vertex}: {reason}")]
    Structure { vertex: usize, reason: String },
    #[error("format error at offset {offset}: {reason}")]
    Format { offset: usize, reason: String },
    #[error("inadmissible sequence: {0}")]
    Inadmissible(Admissibility),
    #[error("index {index} out of range: space has {size} element(s)")]
    OutOfRange { index: String, size: String },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Format,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Format { .. } | Error::Codec(_) => ErrorKind::Format,
            _ => ErrorKind::Domain,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn format(offset: usize, reason: impl Into<String>) -> Self {
        Error::Format {
            offset,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
