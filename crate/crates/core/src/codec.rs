//! Enumerative coding of trees.
//!
//! Wire format, byte aligned:
//!
//! ```text
//! varint(K) varint(N_1) ... varint(N_K) payload
//! ```
//!
//! Varints are unsigned LEB128: seven data bits per byte, least significant
//! group first, high bit set on every byte except the last, minimal length.
//! The payload is the rank index written big-endian in exactly
//! `w = ceil(log2 count(N_1..N_K))` bits, most significant bit first, then zero
//! bits up to the next byte boundary. A singleton space has `w = 0` and no
//! payload bytes.
//!
//! Example: the tree `1101000` has sequence `(4,1)` and rank index 2 in a
//! space of 4 trees, so `w = 2` and the message is `02 04 01 80`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::ceil_log2;
use crate::counting::{check_admissible, count_trees, rank, unrank, HortonSequence, TreeRank};
use crate::error::{CodecError, Result};
use crate::tree::PlaneTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireMessage {
    pub sequence: HortonSequence,
    pub index: BigUint,
}

fn put_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn get_varint(bytes: &[u8], pos: &mut usize) -> Result<u64, CodecError> {
    let start = *pos;
    let mut value: u64 = 0;
    for shift in (0..).step_by(7) {
        let Some(&byte) = bytes.get(*pos) else {
            return Err(CodecError::Truncated { offset: *pos });
        };
        *pos += 1;
        let data = u64::from(byte & 0x7f);
        if shift >= 64 || (shift == 63 && data > 1) {
            return Err(CodecError::BadVarint { offset: start });
        }
        value |= data << shift;
        if byte & 0x80 == 0 {
            if byte == 0 && *pos - start > 1 {
                return Err(CodecError::BadVarint { offset: start });
            }
            return Ok(value);
        }
    }
    unreachable!()
}

/// Lower bound on the payload width, cheap to evaluate for any admissible
/// header: each order contributes `M_i` side bits plus at least
/// `min(2N_{i+1} - 2, M_i)` bits of binomial.
fn width_lower_bound(counts: &[u64]) -> u128 {
    counts
        .windows(2)
        .map(|w| {
            let extra = u128::from(w[0] - 2 * w[1]);
            extra + extra.min(u128::from(2 * w[1] - 2))
        })
        .sum()
}

impl WireMessage {
    pub fn new(rank: TreeRank) -> Self {
        WireMessage {
            sequence: rank.sequence,
            index: rank.index,
        }
    }

    pub fn header(&self) -> Vec<u8> {
        let mut out = Vec::new();
        put_varint(&mut out, self.sequence.order() as u64);
        for &n in self.sequence.as_slice() {
            put_varint(&mut out, n);
        }
        out
    }

    /// Payload width in bits, `ceil(log2 count)`.
    pub fn payload_bits(&self) -> u64 {
        ceil_log2(&count_trees(&self.sequence))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = self.header();
        let width = self.payload_bits();
        let nbytes = width.div_ceil(8) as usize;
        if nbytes > 0 {
            let pad = nbytes as u64 * 8 - width;
            let body = (&self.index << pad).to_bytes_be();
            out.extend(std::iter::repeat_n(0u8, nbytes - body.len()));
            out.extend(body);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        let mut pos = 0;
        let k = get_varint(bytes, &mut pos)?;
        let mut counts = Vec::new();
        for _ in 0..k {
            counts.push(get_varint(bytes, &mut pos)?);
        }
        check_admissible(&counts).map_err(CodecError::Inadmissible)?;
        let available = (bytes.len() - pos) as u128 * 8;
        if width_lower_bound(&counts) > available {
            return Err(CodecError::Truncated { offset: bytes.len() });
        }
        let sequence = HortonSequence::new(counts).expect("checked above");
        let size = count_trees(&sequence);
        let width = ceil_log2(&size);
        let nbytes = width.div_ceil(8) as usize;
        if bytes.len() - pos < nbytes {
            return Err(CodecError::Truncated { offset: bytes.len() });
        }
        let payload = &bytes[pos..pos + nbytes];
        let pad = nbytes as u64 * 8 - width;
        if let Some(&last) = payload.last() {
            if last & ((1u16 << pad) - 1) as u8 != 0 {
                return Err(CodecError::NonZeroPadding);
            }
        }
        let index = BigUint::from_bytes_be(payload) >> pad;
        if index >= size {
            return Err(CodecError::PayloadOutOfRange {
                index: index.to_string(),
                size: size.to_string(),
            });
        }
        let extra = bytes.len() - pos - nbytes;
        if extra > 0 {
            return Err(CodecError::TrailingData { extra });
        }
        Ok(WireMessage { sequence, index })
    }
}

pub fn encode(tree: &PlaneTree) -> WireMessage {
    WireMessage::new(rank(tree))
}

pub fn decode(msg: &WireMessage) -> Result<PlaneTree> {
    unrank(&TreeRank::new(msg.sequence.clone(), msg.index.clone())?)
}

pub fn encode_bytes(tree: &PlaneTree) -> Vec<u8> {
    encode(tree).to_bytes()
}

pub fn decode_bytes(bytes: &[u8]) -> Result<PlaneTree> {
    decode(&WireMessage::from_bytes(bytes)?)
}

/// Cost of coding one tree of a given space, in bits per vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    pub header_bits: u64,
    pub payload_bits: u64,
    /// `2 N_1`
    pub vertices: u64,
    pub payload_rate: f64,
    pub total_rate: f64,
}

pub fn measure_rate(seq: &HortonSequence) -> RateReport {
    let msg = WireMessage {
        sequence: seq.clone(),
        index: BigUint::zero(),
    };
    let header_bits = msg.header().len() as u64 * 8;
    let payload_bits = msg.payload_bits();
    let vertices = 2 * seq.leaves();
    RateReport {
        header_bits,
        payload_bits,
        vertices,
        payload_rate: payload_bits as f64 / vertices as f64,
        total_rate: (header_bits + payload_bits) as f64 / vertices as f64,
    }
}
