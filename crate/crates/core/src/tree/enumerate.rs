use super::{decode_bits, CanonicalBits, PlaneTree};
use crate::error::{Error, Result};

/// Every tree with `n` leaves, in lexicographic order of canonical bits
/// (`0 < 1`). Generation walks balanced bit strings directly and never
/// consults any counting formula.
pub fn enumerate_trees(n: usize) -> Result<EnumerateTrees> {
    if n == 0 {
        return Err(Error::domain("leaf count must be at least 1"));
    }
    Ok(EnumerateTrees {
        n,
        bits: Vec::with_capacity(2 * n - 1),
        started: false,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct EnumerateTrees {
    n: usize,
    bits: Vec<bool>,
    started: bool,
    done: bool,
}

impl EnumerateTrees {
    fn len(&self) -> usize {
        2 * self.n - 1
    }

    /// Extends the current prefix with the lexicographically smallest valid
    /// completion: a leaf whenever the tree stays open, otherwise a fork.
    fn complete(&mut self) {
        let total = self.len();
        let mut ones = self.bits.iter().filter(|&&b| b).count();
        let mut need = 1 + 2 * ones - self.bits.len();
        while self.bits.len() < total {
            let last = self.bits.len() + 1 == total;
            if need > 1 || last {
                self.bits.push(false);
                need -= 1;
            } else {
                self.bits.push(true);
                ones += 1;
                need += 1;
            }
        }
        debug_assert_eq!(ones, self.n - 1);
        debug_assert_eq!(need, 0);
    }

    /// Advances to the next bit string, returning false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(b) = self.bits.pop() {
            if b {
                continue;
            }
            let ones = self.bits.iter().filter(|&&b| b).count();
            if ones < self.n - 1 {
                self.bits.push(true);
                self.complete();
                return true;
            }
        }
        false
    }

    pub fn next_bits(&mut self) -> Option<CanonicalBits> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(CanonicalBits::new_unchecked(self.bits.clone()))
    }
}

impl Iterator for EnumerateTrees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        self.next_bits().map(|b| decode_bits(&b))
    }
}
