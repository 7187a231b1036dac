//! Tree counts over a grid of leaf counts and tails `(N_2, ..., N_K)`.

use crate::counting::{check_admissible, count_trees, BigCount, HortonSequence};

/// Column tails of the published grid.
pub const TABLE1_TAILS: [&[u64]; 4] = [&[2, 1], &[3, 1], &[4, 2, 1], &[5, 2, 1]];

/// Leaf counts of the published grid.
pub const TABLE1_LEAVES: [u64; 10] = [4, 5, 6, 7, 8, 9, 10, 11, 12, 30];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub leaves: u64,
    /// `None` where `(leaves, tail...)` is not admissible.
    pub cells: Vec<Option<BigCount>>,
}

pub fn count_grid(leaves: &[u64], tails: &[&[u64]]) -> Vec<TableRow> {
    leaves
        .iter()
        .map(|&n| TableRow {
            leaves: n,
            cells: tails
                .iter()
                .map(|tail| {
                    let mut v = vec![n];
                    v.extend_from_slice(tail);
                    check_admissible(&v)
                        .ok()
                        .map(|_| count_trees(&HortonSequence::new_unchecked(v)))
                })
                .collect(),
        })
        .collect()
}

pub fn table1() -> Vec<TableRow> {
    count_grid(&TABLE1_LEAVES, &TABLE1_TAILS)
}

/// Column header for a tail, e.g. `N2=4;N3=2;N4=1`.
pub fn tail_label(tail: &[u64]) -> String {
    tail.iter()
        .enumerate()
        .map(|(i, n)| format!("N{}={n}", i + 2))
        .collect::<Vec<_>>()
        .join(";")
}

/// Decimal digits grouped by thousands with commas.
pub fn group_thousands(digits: &str) -> String {
    let len = digits.len();
    let mut out = String::with_capacity(len + len / 3);
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (len - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}
