use std::fmt;
use std::str::FromStr;

use crate::error::{Admissibility, Error, Result};

/// Branch counts `(N_1, ..., N_K)` of a tree, one entry per Horton-Strahler
/// order. Always admissible: `N_K == 1` and `N_i >= 2 N_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HortonSequence(Vec<u64>);

/// Checks the admissibility conditions, reporting the first violation.
pub fn check_admissible(counts: &[u64]) -> std::result::Result<(), Admissibility> {
    if counts.is_empty() {
        return Err(Admissibility::Empty);
    }
    if let Some(i) = counts.iter().position(|&n| n == 0) {
        return Err(Admissibility::ZeroCount { index: i + 1 });
    }
    let last = counts[counts.len() - 1];
    if last != 1 {
        return Err(Admissibility::LastNotOne { last });
    }
    for (i, w) in counts.windows(2).enumerate() {
        if w[1].checked_mul(2).is_none_or(|twice| w[0] < twice) {
            return Err(Admissibility::Halving {
                index: i + 1,
                value: w[0],
                next: w[1],
            });
        }
    }
    Ok(())
}

pub fn is_admissible(counts: &[u64]) -> bool {
    check_admissible(counts).is_ok()
}

impl HortonSequence {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        check_admissible(&counts).map_err(Error::Inadmissible)?;
        Ok(HortonSequence(counts))
    }

    pub(crate) fn new_unchecked(counts: Vec<u64>) -> Self {
        debug_assert!(is_admissible(&counts), "{counts:?}");
        HortonSequence(counts)
    }

    /// The sequence of a perfect tree of order `k`: `N_i = 2^(k-i)`.
    pub fn perfect(order: u32) -> Self {
        assert!((1..64).contains(&order), "order must be in 1..64");
        HortonSequence((0..order).rev().map(|e| 1u64 << e).collect())
    }

    /// Tree order `K`.
    pub fn order(&self) -> u32 {
        self.0.len() as u32
    }

    /// Leaf count `N_1`.
    pub fn leaves(&self) -> u64 {
        self.0[0]
    }

    /// `N_i` for 1-based order `i`.
    pub fn get(&self, order: u32) -> u64 {
        self.0[order as usize - 1]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Display for HortonSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Parses `"N1,N2,...,NK"` without the admissibility check.
pub(crate) fn parse_counts(s: &str) -> Result<Vec<u64>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for part in s.split(',') {
        let trimmed = part.trim();
        let value = trimmed.parse::<u64>().map_err(|_| {
            Error::format(offset, format!("expected a non-negative integer, found {part:?}"))
        })?;
        out.push(value);
        offset += part.len() + 1;
    }
    Ok(out)
}

impl FromStr for HortonSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HortonSequence::new(parse_counts(s)?)
    }
}
