//! Seeded uniform sampling.
//!
//! All randomness comes from ChaCha20 seeded through
//! `rand_chacha::ChaCha20Rng::seed_from_u64`, so a seed fixes the output on
//! every platform. Uniform integers below a big bound are drawn by rejection:
//! take as many 64-bit words as the bound's bit length needs (least
//! significant word first), mask the excess high bits, retry while the value
//! is not below the bound.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::bijection::{unrank, TreeRank};
use super::{admissible_sequences, count_trees, BigCount, HortonSequence};
use crate::error::{Error, Result};
use crate::tree::PlaneTree;

pub fn rng_from_seed(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniform draw from `0..bound`. Panics on a zero bound.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    if bound.is_one() {
        return BigUint::zero();
    }
    let bits = (bound - 1u32).bits();
    let words = bits.div_ceil(64) as usize;
    let excess = words as u64 * 64 - bits;
    loop {
        let mut digits = Vec::with_capacity(words * 2);
        for w in 0..words {
            let mut x = rng.next_u64();
            if w + 1 == words {
                x &= u64::MAX >> excess;
            }
            digits.push(x as u32);
            digits.push((x >> 32) as u32);
        }
        let candidate = BigUint::new(digits);
        if candidate < *bound {
            return candidate;
        }
    }
}

/// Repeated uniform draws from one space `T_{N_1...N_K}`.
#[derive(Debug, Clone)]
pub struct SequenceSampler {
    sequence: HortonSequence,
    size: BigCount,
}

impl SequenceSampler {
    pub fn new(sequence: HortonSequence) -> Self {
        let size = count_trees(&sequence);
        SequenceSampler { sequence, size }
    }

    pub fn size(&self) -> &BigCount {
        &self.size
    }

    pub fn sample_rank<R: RngCore + ?Sized>(&self, rng: &mut R) -> TreeRank {
        TreeRank {
            sequence: self.sequence.clone(),
            index: uniform_below(rng, &self.size),
        }
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> PlaneTree {
        unrank(&self.sample_rank(rng)).expect("index drawn below space size")
    }
}

/// Uniform sample from `T_{N_1...N_K}` for a fixed seed.
pub fn sample_uniform(seq: &HortonSequence, seed: u64) -> PlaneTree {
    SequenceSampler::new(seq.clone()).sample(&mut rng_from_seed(seed))
}

/// Uniform sampling over all `C_{n-1}` trees with `n` leaves: a global index
/// is located in the cumulative counts of the admissible sequences and the
/// remainder is unranked inside that sequence's space.
#[derive(Debug, Clone)]
pub struct UniformSampler {
    leaves: u64,
    sequences: Vec<HortonSequence>,
    /// `cumulative[j]` is the number of trees in sequences `0..=j`.
    cumulative: Vec<BigCount>,
}

impl UniformSampler {
    pub fn new(leaves: u64) -> Result<Self> {
        if leaves == 0 {
            return Err(Error::domain("leaf count must be at least 1"));
        }
        let sequences: Vec<_> = admissible_sequences(leaves).collect();
        let mut acc = BigCount::zero();
        let cumulative = sequences
            .iter()
            .map(|s| {
                acc += count_trees(s);
                acc.clone()
            })
            .collect();
        Ok(UniformSampler {
            leaves,
            sequences,
            cumulative,
        })
    }

    pub fn leaves(&self) -> u64 {
        self.leaves
    }

    pub fn total(&self) -> &BigCount {
        self.cumulative.last().expect("at least one sequence")
    }

    pub fn sequences(&self) -> &[HortonSequence] {
        &self.sequences
    }

    /// Maps a global index in `0..C_{n-1}` to its rank within its own space.
    pub fn locate(&self, global: &BigCount) -> Result<TreeRank> {
        if global >= self.total() {
            return Err(Error::OutOfRange {
                index: global.to_string(),
                size: self.total().to_string(),
            });
        }
        let j = self.cumulative.partition_point(|c| c <= global);
        let before = if j == 0 {
            BigCount::zero()
        } else {
            self.cumulative[j - 1].clone()
        };
        Ok(TreeRank {
            sequence: self.sequences[j].clone(),
            index: global - before,
        })
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> PlaneTree {
        let global = uniform_below(rng, self.total());
        let rank = self.locate(&global).expect("drawn below total");
        unrank(&rank).expect("located rank is in range")
    }
}

pub fn sample_uniform_n(leaves: u64, seed: u64) -> Result<PlaneTree> {
    Ok(UniformSampler::new(leaves)?.sample(&mut rng_from_seed(seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::catalan;

    #[test]
    fn singleton_spaces() {
        let one = HortonSequence::new(vec![1]).unwrap();
        for seed in [0, 1, 42, u64::MAX] {
            assert_eq!(sample_uniform(&one, seed), PlaneTree::leaf());
            assert_eq!(sample_uniform_n(1, seed).unwrap(), PlaneTree::leaf());
        }
        let perfect = HortonSequence::perfect(3);
        assert_eq!(sample_uniform(&perfect, 7), PlaneTree::perfect(3));
    }

    #[test]
    fn same_seed_same_tree() {
        let seq: HortonSequence = "40,9,3,1".parse().unwrap();
        assert_eq!(sample_uniform(&seq, 99), sample_uniform(&seq, 99));
        let t = sample_uniform(&seq, 99);
        assert_eq!(t.horton_sequence(), seq);
    }

    #[test]
    fn uniform_below_stays_in_range() {
        let mut rng = rng_from_seed(3);
        let bound = BigUint::from(20u32);
        let mut seen = [false; 20];
        for _ in 0..2000 {
            let x = uniform_below(&mut rng, &bound);
            assert!(x < bound);
            seen[u64::try_from(&x).unwrap() as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        let big = BigUint::one() << 200u32;
        assert!(uniform_below(&mut rng, &big) < big);
    }

    #[test]
    fn locate_splits_by_cumulative_counts() {
        let s = UniformSampler::new(4).unwrap();
        assert_eq!(s.total(), &catalan(3));
        // (4,1) holds indices 0..4, (4,2,1) holds index 4
        for g in 0..4u32 {
            assert_eq!(s.locate(&g.into()).unwrap().to_string(), format!("4,1@{g}"));
        }
        assert_eq!(s.locate(&4u32.into()).unwrap().to_string(), "4,2,1@0");
        assert!(s.locate(&5u32.into()).is_err());
        assert!(UniformSampler::new(0).is_err());
    }
}
