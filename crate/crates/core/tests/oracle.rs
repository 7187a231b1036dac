//! Cross-checks of counting, ranking and coding against exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use proptest::prelude::*;
use strahler::codec::{decode_bytes, encode, encode_bytes};
use strahler::counting::{
    admissible_sequences, catalan, count_trees, rank, rng_from_seed, unrank, HortonSequence,
    SequenceSampler, TreeRank, UniformSampler,
};
use strahler::tree::{enumerate_trees, hs_orders, CanonicalBits};
use strahler::PlaneTree;

fn oracle_bits_by_sequence(n: usize) -> BTreeMap<HortonSequence, BTreeSet<CanonicalBits>> {
    let mut groups: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
    for t in enumerate_trees(n).unwrap() {
        groups.entry(t.horton_sequence()).or_default().insert(t.to_bits());
    }
    groups
}

fn all_ranks(seq: &HortonSequence) -> impl Iterator<Item = TreeRank> + '_ {
    let size = u64::try_from(count_trees(seq)).expect("small space");
    (0..size).map(move |i| TreeRank::new(seq.clone(), BigUint::from(i)).unwrap())
}

#[test]
fn group_sizes_partition_catalan() {
    for n in 1..=9usize {
        let groups = oracle_bits_by_sequence(n);
        let total: usize = groups.values().map(BTreeSet::len).sum();
        assert_eq!(BigUint::from(total), catalan(n as u64 - 1));
        for (seq, bits) in &groups {
            assert_eq!(count_trees(seq), BigUint::from(bits.len()), "{seq}");
        }
        // every admissible sequence is realised
        assert_eq!(groups.len(), admissible_sequences(n as u64).count());
    }
}

#[test]
fn unrank_enumerates_exactly_each_group() {
    for n in 1..=9usize {
        for (seq, oracle) in oracle_bits_by_sequence(n) {
            let built: BTreeSet<_> = all_ranks(&seq)
                .map(|r| {
                    let t = unrank(&r).unwrap();
                    assert_eq!(hs_orders(&t).branch_count, seq);
                    t.to_bits()
                })
                .collect();
            assert_eq!(built, oracle, "{seq}");
        }
    }
}

#[test]
fn rank_and_unrank_are_inverse_on_small_trees() {
    for n in 1..=8usize {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(unrank(&rank(&t)).unwrap(), t);
        }
        for seq in admissible_sequences(n as u64) {
            for r in all_ranks(&seq) {
                assert_eq!(rank(&unrank(&r).unwrap()), r);
            }
        }
    }
}

#[test]
fn bits_roundtrip_and_injective() {
    for n in 1..=9usize {
        let mut seen = HashSet::new();
        for t in enumerate_trees(n).unwrap() {
            let b = t.to_bits();
            assert_eq!(b.len(), 2 * n - 1);
            assert_eq!(PlaneTree::from_bits(&b), t);
            assert!(seen.insert(b));
        }
    }
}

#[test]
fn order_properties_on_all_small_trees() {
    for n in 1..=9usize {
        for t in enumerate_trees(n).unwrap() {
            let l = hs_orders(&t);
            let k = l.tree_order;
            assert!(n as u64 >= 1 << (k - 1));
            assert_eq!(l.stem_order(), k);
            assert_eq!(l.branch_count.leaves(), n as u64);
            // flipping every left/right choice keeps the branch counts
            let mirrored: String = mirror(&t);
            assert_eq!(mirrored.parse::<PlaneTree>().unwrap().horton_sequence(), l.branch_count);
        }
    }
}

fn mirror(t: &PlaneTree) -> String {
    fn go(t: &PlaneTree, v: usize, out: &mut String) {
        match t.children(v) {
            None => out.push('0'),
            Some((l, r)) => {
                out.push('1');
                go(t, r, out);
                go(t, l, out);
            }
        }
    }
    let mut s = String::new();
    go(t, 0, &mut s);
    s
}

#[test]
fn codec_roundtrip_on_small_trees() {
    for n in 1..=8usize {
        for t in enumerate_trees(n).unwrap() {
            let msg = encode(&t);
            let size = count_trees(&msg.sequence);
            assert_eq!(msg.payload_bits(), strahler::arith::ceil_log2(&size));
            assert_eq!(decode_bytes(&encode_bytes(&t)).unwrap(), t);
        }
    }
}

#[test]
fn sampled_trees_roundtrip_at_larger_sizes() {
    for (leaves, seed) in [(16u64, 1u64), (64, 2), (256, 3)] {
        let sampler = UniformSampler::new(leaves).unwrap();
        let mut rng = rng_from_seed(seed);
        for _ in 0..200 {
            let t = sampler.sample(&mut rng);
            assert_eq!(t.leaf_count() as u64, leaves);
            assert_eq!(decode_bytes(&encode_bytes(&t)).unwrap(), t);
        }
    }
}

#[test]
fn mid_sized_sequence_samples() {
    let seq: HortonSequence = "21,8,3,1".parse().unwrap();
    let sampler = SequenceSampler::new(seq.clone());
    let mut rng = rng_from_seed(11);
    for _ in 0..50 {
        let t = sampler.sample(&mut rng);
        assert_eq!(hs_orders(&t).branch_count, seq);
        assert_eq!(rank(&t).sequence, seq);
    }
}

fn big_sequence() -> impl Strategy<Value = HortonSequence> {
    // build bottom-up from N_K = 1 with random slack at every level
    proptest::collection::vec(0u64..40, 0..6).prop_map(|slack| {
        let mut v = vec![1u64];
        for s in slack {
            let next = 2 * v[v.len() - 1] + s;
            v.push(next);
        }
        v.reverse();
        HortonSequence::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_ranks_roundtrip(seq in big_sequence(), seed in any::<u64>()) {
        let sampler = SequenceSampler::new(seq.clone());
        let r = sampler.sample_rank(&mut rng_from_seed(seed));
        let t = unrank(&r).unwrap();
        prop_assert_eq!(t.horton_sequence(), seq);
        prop_assert_eq!(rank(&t), r);
        prop_assert_eq!(decode_bytes(&encode_bytes(&t)).unwrap(), t);
    }
}
