use std::fmt;
use std::str::FromStr;

use super::{Node, PlaneTree};
use crate::error::{Error, Result};

/// Preorder bit string of the full binary tree above the stem:
/// `1` for an internal vertex, `0` for a leaf. A tree with `n` leaves has
/// `2n - 1` bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBits(Vec<bool>);

impl CanonicalBits {
    /// Validates a raw bit sequence.
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let mut need: usize = 1;
        for (offset, &b) in bits.iter().enumerate() {
            if need == 0 {
                return Err(Error::format(offset, "tree is already complete"));
            }
            if b {
                need += 1;
            } else {
                need -= 1;
            }
        }
        if need != 0 {
            return Err(Error::format(bits.len(), "truncated: tree is incomplete"));
        }
        Ok(CanonicalBits(bits))
    }

    pub(crate) fn new_unchecked(bits: Vec<bool>) -> Self {
        CanonicalBits(bits)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CanonicalBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for CanonicalBits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .bytes()
            .enumerate()
            .map(|(i, c)| match c {
                b'0' => Ok(false),
                b'1' => Ok(true),
                _ => Err(Error::format(i, format!("unexpected character {:?}", c as char))),
            })
            .collect::<Result<Vec<_>>>()?;
        CanonicalBits::new(bits)
    }
}

pub fn encode_bits(tree: &PlaneTree) -> CanonicalBits {
    CanonicalBits(
        tree.nodes
            .iter()
            .map(|n| matches!(n, Node::Internal { .. }))
            .collect(),
    )
}

pub fn decode_bits(bits: &CanonicalBits) -> PlaneTree {
    let bits = bits.as_slice();
    let mut nodes = Vec::with_capacity(bits.len());
    // internal vertices still waiting for their right child
    let mut open: Vec<usize> = Vec::new();
    for (i, &b) in bits.iter().enumerate() {
        if i > 0 && matches!(nodes[i - 1], Node::Leaf) {
            let parent = open.pop().expect("validated bit string");
            if let Node::Internal { right, .. } = &mut nodes[parent] {
                *right = i;
            }
        }
        if b {
            nodes.push(Node::Internal { left: i + 1, right: 0 });
            open.push(i);
        } else {
            nodes.push(Node::Leaf);
        }
    }
    PlaneTree { nodes }
}

impl PlaneTree {
    pub fn to_bits(&self) -> CanonicalBits {
        encode_bits(self)
    }

    pub fn from_bits(bits: &CanonicalBits) -> Self {
        decode_bits(bits)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bits())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(decode_bits(&s.parse()?))
    }
}
