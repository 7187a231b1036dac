//! Exact counting of trees by Horton-Strahler numbers, and the bijection
//! between a counted space and `0..count`.

mod bijection;
mod composition;
mod sample;
mod sequence;

pub use bijection::{rank, unrank, FrameLayout, OrderFrames, TreeRank};
pub use composition::{composition_count, composition_rank, composition_unrank};
pub use sample::{
    rng_from_seed, sample_uniform, sample_uniform_n, uniform_below, SequenceSampler,
    UniformSampler,
};
pub use sequence::{check_admissible, is_admissible, HortonSequence};

pub(crate) use sequence::parse_counts;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};

/// Arbitrary-precision tree count.
pub type BigCount = BigUint;

/// Catalan number `C_m`; `C_{n-1}` counts all trees with `n` leaves.
pub fn catalan(m: u64) -> BigCount {
    arith::catalan(m)
}

/// Number of trees with the given branch counts:
///
/// `2^(N_1 - 1 - sum_{i<K} N_{i+1}) * prod_{i<K} C(N_i - 2, 2 N_{i+1} - 2)`
pub fn count_trees(seq: &HortonSequence) -> BigCount {
    let n = seq.as_slice();
    let exponent = n[0] - 1 - n[1..].iter().sum::<u64>();
    let factors: Vec<BigUint> = n
        .windows(2)
        .map(|w| arith::binomial(w[0] - 2, 2 * w[1] - 2))
        .collect();
    arith::product(factors) << exponent
}

/// [`count_trees`] on raw counts, rejecting inadmissible input.
pub fn count_trees_checked(counts: &[u64]) -> Result<BigCount> {
    check_admissible(counts).map_err(Error::Inadmissible)?;
    Ok(count_trees(&HortonSequence::new_unchecked(counts.to_vec())))
}

/// Ways to attach the extra frames of one order, counted as
/// `2^(N_i - 2 N_{i+1}) * C(N_i - 2, 2 N_{i+1} - 2)`.
pub(crate) fn level_factor(upper: u64, lower_next: u64) -> BigUint {
    arith::binomial(upper - 2, 2 * lower_next - 2) << (upper - 2 * lower_next)
}

/// All admissible sequences with `N_1 = n`, ordered by `K` and then
/// lexicographically.
pub fn admissible_sequences(n: u64) -> impl Iterator<Item = HortonSequence> {
    let max_order = if n == 0 { 0 } else { 64 - n.leading_zeros() };
    (1..=max_order).flat_map(move |k| sequences_of_order(n, k))
}

fn sequences_of_order(n: u64, k: u32) -> Vec<HortonSequence> {
    fn extend(prefix: &mut Vec<u64>, k: u32, out: &mut Vec<HortonSequence>) {
        let level = prefix.len() as u32 + 1;
        if level > k {
            out.push(HortonSequence::new_unchecked(prefix.clone()));
            return;
        }
        // N_level must leave room to halve down to N_K = 1
        let lo = 1u64 << (k - level);
        let hi = prefix[prefix.len() - 1] / 2;
        let hi = if level == k { lo.min(hi) } else { hi };
        for v in lo..=hi {
            prefix.push(v);
            extend(prefix, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || k > 64 || n < 1u64 << (k - 1) {
        return out;
    }
    if k == 1 {
        if n == 1 {
            out.push(HortonSequence::new_unchecked(vec![1]));
        }
        return out;
    }
    extend(&mut vec![n], k, &mut out);
    out
}

/// `C_{n-1}` as a sum of [`count_trees`] over all admissible sequences.
pub fn catalan_by_sequences(n: u64) -> BigCount {
    admissible_sequences(n).map(|s| count_trees(&s)).sum()
}

impl HortonSequence {
    pub fn count(&self) -> BigCount {
        count_trees(self)
    }

    pub fn is_singleton_space(&self) -> bool {
        self.count().is_one()
    }
}
