//! Rank/unrank between a space of trees with fixed branch counts and the
//! integers below its size.
//!
//! A tree of order `K` is grown from the perfect tree of order `K` (the main
//! frame). For `i = K-1, ..., 1` the `M_i = N_i - 2 N_{i+1}` extra frames of
//! order `i` (perfect trees of order `i`) are attached to the `2 N_{i+1} - 1`
//! edges of order above `i`. Host edges are numbered by the preorder position
//! of their lower endpoint, the stem being edge 0. Each extra frame
//! subdivides its host edge; the new vertex keeps the host's order and takes
//! the frame as its left (side bit 0) or right (side bit 1) child. Frames on
//! the same edge stack root side first.
//!
//! The index is a mixed-radix number. From most to least significant, for
//! `i = K-1` down to `1`: the composition rank of the frame counts per host
//! edge, then one side bit per frame in stack order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::composition::{composition_count, composition_rank, composition_unrank};
use super::{count_trees, parse_counts, HortonSequence};
use crate::error::{Error, Result};
use crate::tree::{hs_orders, Arena, Node, PlaneTree};

/// Address of one tree: its branch counts and its index within that space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeRank {
    pub sequence: HortonSequence,
    pub index: BigUint,
}

impl TreeRank {
    pub fn new(sequence: HortonSequence, index: BigUint) -> Result<Self> {
        let size = count_trees(&sequence);
        if index >= size {
            return Err(Error::OutOfRange {
                index: index.to_string(),
                size: size.to_string(),
            });
        }
        Ok(TreeRank { sequence, index })
    }
}

impl fmt::Display for TreeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.sequence, self.index)
    }
}

impl FromStr for TreeRank {
    type Err = Error;

    /// Parses `"N1,...,NK@index"`.
    fn from_str(s: &str) -> Result<Self> {
        let (seq, idx) = s
            .split_once('@')
            .ok_or_else(|| Error::format(s.len(), "expected \"N1,...,NK@index\""))?;
        let sequence = HortonSequence::new(parse_counts(seq)?)?;
        let index = idx
            .trim()
            .parse::<BigUint>()
            .map_err(|_| Error::format(seq.len() + 1, format!("bad index {idx:?}")))?;
        TreeRank::new(sequence, index)
    }
}

/// Attachment choices for the extra frames of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderFrames {
    pub order: u32,
    /// `L_i = 2 N_{i+1}`
    pub necessary: u64,
    /// `M_i = N_i - 2 N_{i+1}`
    pub extra: u64,
    /// Number of extra frames stacked on each host edge (`2 N_{i+1} - 1` entries).
    pub per_host: Vec<u64>,
    /// Side bit of every extra frame, in host order then stack order.
    pub sides: Vec<bool>,
}

impl OrderFrames {
    pub fn hosts(&self) -> u64 {
        self.necessary - 1
    }

    /// `(host position, side bit, stack slot)` for every extra frame.
    pub fn frames(&self) -> impl Iterator<Item = (usize, bool, u64)> + '_ {
        self.per_host
            .iter()
            .enumerate()
            .flat_map(|(host, &n)| (0..n).map(move |slot| (host, slot)))
            .zip(self.sides.iter())
            .map(|((host, slot), &side)| (host, side, slot))
    }
}

/// Complete description of how a tree is assembled from frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameLayout {
    pub sequence: HortonSequence,
    /// One entry per order `i = 1..K-1`, lowest order first.
    pub orders: Vec<OrderFrames>,
}

impl FrameLayout {
    /// Splits a rank index into per-order attachment choices.
    pub fn from_rank(rank: &TreeRank) -> Result<Self> {
        let seq = &rank.sequence;
        let n = seq.as_slice();
        let mut idx = rank.index.clone();
        let mut orders = Vec::with_capacity(n.len().saturating_sub(1));
        // least significant digits belong to order 1
        for i in 0..n.len().saturating_sub(1) {
            let extra = n[i] - 2 * n[i + 1];
            let hosts = 2 * n[i + 1] - 1;
            let mut sides = Vec::with_capacity(extra as usize);
            for f in 0..extra {
                sides.push(idx.bit(extra - 1 - f));
            }
            idx >>= extra;
            let (rest, digit) = idx.div_rem(&composition_count(extra, hosts));
            idx = rest;
            orders.push(OrderFrames {
                order: i as u32 + 1,
                necessary: 2 * n[i + 1],
                extra,
                per_host: composition_unrank(extra, hosts, &digit)?,
                sides,
            });
        }
        if !idx.is_zero() {
            return Err(Error::OutOfRange {
                index: rank.index.to_string(),
                size: count_trees(seq).to_string(),
            });
        }
        Ok(FrameLayout {
            sequence: seq.clone(),
            orders,
        })
    }

    pub fn index(&self) -> BigUint {
        let mut idx = BigUint::zero();
        for level in self.orders.iter().rev() {
            idx *= composition_count(level.extra, level.hosts());
            idx += composition_rank(&level.per_host);
            idx <<= level.extra;
            for (f, &side) in level.sides.iter().enumerate() {
                if side {
                    idx.set_bit(level.extra - 1 - f as u64, true);
                }
            }
        }
        idx
    }

    /// Recovers the frame attachments of an existing tree.
    pub fn of_tree(tree: &PlaneTree) -> Self {
        let labeling = hs_orders(tree);
        let order = &labeling.vertex_order;
        let seq = labeling.branch_count;
        let n = seq.as_slice();
        let nodes = tree.nodes();
        let mut orders = Vec::with_capacity(n.len().saturating_sub(1));
        for i in 1..n.len() as u32 {
            let hosts = 2 * n[i as usize] - 1;
            let mut per_host = vec![0u64; hosts as usize];
            let mut sides = Vec::new();
            // Vertices of order > i that survive once frames of order <= i are
            // pruned, counted in preorder; the arena is already in preorder.
            let mut survivors = 0usize;
            for (v, node) in nodes.iter().enumerate() {
                let Node::Internal { left, right } = *node else {
                    continue;
                };
                if order[v] <= i {
                    continue;
                }
                let (a, b) = (order[left], order[right]);
                let side_order = a.min(b);
                if a == b || side_order > i {
                    survivors += 1;
                } else if side_order == i {
                    per_host[survivors] += 1;
                    sides.push(b < a);
                }
            }
            debug_assert_eq!(survivors as u64, hosts);
            orders.push(OrderFrames {
                order: i,
                necessary: 2 * n[i as usize],
                extra: n[i as usize - 1] - 2 * n[i as usize],
                per_host,
                sides,
            });
        }
        FrameLayout {
            sequence: seq,
            orders,
        }
    }

    /// Grows the tree described by this layout.
    pub fn build(&self) -> PlaneTree {
        let k = self.sequence.order();
        let mut b = Builder::default();
        b.top = b.perfect(k);
        for level in self.orders.iter().rev() {
            let i = level.order;
            let hosts = b.preorder_above(i);
            debug_assert_eq!(hosts.len() as u64, level.hosts());
            let mut sides = level.sides.iter().copied();
            for (&host, &count) in hosts.iter().zip(&level.per_host) {
                if count == 0 {
                    continue;
                }
                let slot = b.parent[host];
                let stack: Vec<bool> = sides.by_ref().take(count as usize).collect();
                // assemble the chain from the leaf side up
                let mut below = host;
                for &right in stack.iter().rev() {
                    let frame = b.perfect(i);
                    below = if right {
                        b.internal(below, frame)
                    } else {
                        b.internal(frame, below)
                    };
                }
                b.attach(slot, below);
            }
        }
        b.arena.to_tree(b.top)
    }
}

#[derive(Default)]
struct Builder {
    arena: Arena,
    order: Vec<u32>,
    parent: Vec<Option<(usize, bool)>>,
    top: usize,
}

impl Builder {
    fn leaf(&mut self) -> usize {
        self.order.push(1);
        self.parent.push(None);
        self.arena.push_leaf()
    }

    fn internal(&mut self, left: usize, right: usize) -> usize {
        let (a, b) = (self.order[left], self.order[right]);
        self.order.push(if a == b { a + 1 } else { a.max(b) });
        self.parent.push(None);
        let v = self.arena.push_internal(left, right);
        self.parent[left] = Some((v, false));
        self.parent[right] = Some((v, true));
        v
    }

    fn perfect(&mut self, order: u32) -> usize {
        let mut level: Vec<usize> = (0..1usize << (order - 1)).map(|_| self.leaf()).collect();
        while level.len() > 1 {
            level = level
                .chunks(2)
                .map(|pair| self.internal(pair[0], pair[1]))
                .collect();
        }
        level[0]
    }

    fn attach(&mut self, slot: Option<(usize, bool)>, v: usize) {
        self.parent[v] = slot;
        match slot {
            None => self.top = v,
            Some((p, right)) => {
                let kids = self.arena.kids[p].as_mut().expect("parent is internal");
                if right {
                    kids.1 = v;
                } else {
                    kids.0 = v;
                }
            }
        }
    }

    /// Vertices of order above `i`, in preorder.
    fn preorder_above(&self, i: u32) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.top];
        while let Some(v) = stack.pop() {
            if self.order[v] <= i {
                continue;
            }
            out.push(v);
            if let Some((l, r)) = self.arena.kids[v] {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }
}

/// The tree at position `rank.index` of its space.
pub fn unrank(rank: &TreeRank) -> Result<PlaneTree> {
    Ok(FrameLayout::from_rank(rank)?.build())
}

/// Position of a tree within the space of its own branch counts.
pub fn rank(tree: &PlaneTree) -> TreeRank {
    let layout = FrameLayout::of_tree(tree);
    TreeRank {
        index: layout.index(),
        sequence: layout.sequence,
    }
}

impl PlaneTree {
    pub fn rank(&self) -> TreeRank {
        rank(self)
    }
}
