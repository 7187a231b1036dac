//! Weak compositions of `total` into `parts` ordered parts, ranked in
//! colexicographic order: the last part is the most significant and smaller
//! values come first. For `total = 3, parts = 2` the order is
//! `(3,0), (2,1), (1,2), (0,3)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};

/// `C(total + parts - 1, parts - 1)`.
pub fn composition_count(total: u64, parts: u64) -> BigUint {
    if parts == 0 {
        return if total == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(total + parts - 1, parts - 1)
}

/// Walks the parts from last to first. At part `p` (1-based) with `rem`
/// still to distribute, choosing value `v` skips
/// `C(rem - v + p - 2, p - 2)` compositions of the earlier parts; those counts
/// are updated incrementally rather than recomputed.
struct Walk {
    rem: u64,
    /// `p - 2` for the current part
    j: u64,
    /// `C(rem + j, j)`: completions when the current part takes value 0
    block: BigUint,
}

impl Walk {
    fn new(total: u64, parts: u64) -> Self {
        debug_assert!(parts >= 2);
        let j = parts - 2;
        Walk {
            rem: total,
            j,
            block: binomial(total + j, j),
        }
    }

    /// Size of the block for value `v + 1` given the block for `v`.
    fn shrink(&self, v: u64, block: &BigUint) -> BigUint {
        let n = self.rem - v + self.j;
        block * (self.rem - v) / n
    }

    /// Commits value `v` (whose block is `block`) and steps to the previous part.
    fn commit(&mut self, v: u64, block: BigUint) {
        self.rem -= v;
        if self.j > 0 {
            // C(rem + j, j) -> C(rem + j - 1, j - 1)
            self.block = block * self.j / (self.rem + self.j);
            self.j -= 1;
        } else {
            self.block = block;
        }
    }
}

/// The `index`-th weak composition of `total` into `parts` parts.
pub fn composition_unrank(total: u64, parts: u64, index: &BigUint) -> Result<Vec<u64>> {
    let count = composition_count(total, parts);
    if parts == 0 || *index >= count {
        return Err(Error::OutOfRange {
            index: index.to_string(),
            size: count.to_string(),
        });
    }
    let mut out = vec![0u64; parts as usize];
    if parts == 1 {
        out[0] = total;
        return Ok(out);
    }
    let mut idx = index.clone();
    let mut walk = Walk::new(total, parts);
    for p in (2..=parts as usize).rev() {
        if walk.j == 0 {
            // every value of the second part leaves exactly one completion
            let v = u64::try_from(&idx).expect("bounded by total");
            out[p - 1] = v;
            walk.rem -= v;
            idx = BigUint::zero();
            continue;
        }
        let mut v = 0;
        let mut block = walk.block.clone();
        while idx >= block {
            idx -= &block;
            block = walk.shrink(v, &block);
            v += 1;
        }
        out[p - 1] = v;
        walk.commit(v, block);
    }
    out[0] = walk.rem;
    Ok(out)
}

/// Inverse of [`composition_unrank`].
pub fn composition_rank(parts: &[u64]) -> BigUint {
    let mut idx = BigUint::zero();
    if parts.len() < 2 {
        return idx;
    }
    let total: u64 = parts.iter().sum();
    let mut walk = Walk::new(total, parts.len() as u64);
    for p in (2..=parts.len()).rev() {
        let a = parts[p - 1];
        if walk.j == 0 {
            idx += a;
            walk.rem -= a;
            continue;
        }
        let mut block = walk.block.clone();
        for v in 0..a {
            idx += &block;
            block = walk.shrink(v, &block);
        }
        walk.commit(a, block);
    }
    idx
}
