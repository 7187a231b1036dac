//! Cross-checks of the counting formula against the Catalan numbers and
//! against brute-force enumeration.

use std::collections::BTreeMap;

use crate::counting::{admissible_sequences, catalan, count_trees, BigCount, HortonSequence};
use crate::tree::enumerate_trees;

/// Largest leaf count for which the exhaustive oracle runs.
pub const ORACLE_MAX_LEAVES: u64 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub leaves: u64,
    pub catalan: BigCount,
    pub sequence_sum: BigCount,
    pub sequences: usize,
    /// `None` when the oracle was skipped for this size.
    pub oracle_ok: Option<bool>,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.catalan == self.sequence_sum && self.oracle_ok != Some(false)
    }
}

/// Trees with `n` leaves grouped by branch counts, by exhaustive enumeration.
pub fn oracle_groups(n: u64) -> BTreeMap<HortonSequence, u64> {
    let mut groups = BTreeMap::new();
    for tree in enumerate_trees(n as usize).expect("n >= 1") {
        *groups.entry(tree.horton_sequence()).or_insert(0) += 1;
    }
    groups
}

/// Checks one leaf count using `count` as the per-sequence counter.
pub fn verify_leaves_with<F>(n: u64, count: F) -> VerifyRow
where
    F: Fn(&HortonSequence) -> BigCount,
{
    let sequences: Vec<_> = admissible_sequences(n).collect();
    let counts: Vec<_> = sequences.iter().map(&count).collect();
    let sequence_sum = counts.iter().sum();
    let oracle_ok = (n <= ORACLE_MAX_LEAVES).then(|| {
        let groups = oracle_groups(n);
        groups.len() <= sequences.len()
            && sequences.iter().zip(&counts).all(|(s, c)| {
                let seen = groups.get(s).copied().unwrap_or(0);
                *c == BigCount::from(seen)
            })
    });
    VerifyRow {
        leaves: n,
        catalan: catalan(n - 1),
        sequence_sum,
        sequences: sequences.len(),
        oracle_ok,
    }
}

pub fn verify_up_to(max_leaves: u64) -> Vec<VerifyRow> {
    (1..=max_leaves)
        .map(|n| verify_leaves_with(n, count_trees))
        .collect()
}
