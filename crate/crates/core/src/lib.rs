//! Exact combinatorics of planted binary plane trees classified by their
//! Horton-Strahler numbers: counting, a rank/unrank bijection with seeded
//! uniform sampling, an enumerative codec, and entropy computations for
//! uniform and Horton-law tree spaces.

pub mod arith;
pub mod codec;
pub mod counting;
pub mod entropy;
pub mod error;
pub mod table;
pub mod tree;
pub mod verify;

pub use codec::{decode, decode_bytes, encode, encode_bytes, measure_rate, RateReport, WireMessage};
pub use counting::{
    admissible_sequences, catalan, count_trees, rank, sample_uniform, sample_uniform_n, unrank,
    BigCount, HortonSequence, TreeRank,
};
pub use entropy::{binary_entropy, entropy_rate, entropy_tn, LogBits, TkrParams};
pub use error::{Error, ErrorKind, Result};
pub use tree::{enumerate_trees, hs_orders, CanonicalBits, OrderLabeling, PlaneTree};
