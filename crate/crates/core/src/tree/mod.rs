//! Planted binary plane trees.
//!
//! A tree is stored as the full binary tree sitting on top of the stem; the
//! planted root and the stem itself are implicit. Nodes live in a flat arena
//! laid out in preorder (left subtree before right), so two trees are equal
//! exactly when their arenas are equal.

mod bits;
mod enumerate;
mod order;

pub use bits::{decode_bits, encode_bits, CanonicalBits};
pub use enumerate::{enumerate_trees, EnumerateTrees};
pub use order::{hs_orders, OrderLabeling};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf,
    Internal { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    nodes: Vec<Node>,
}

impl PlaneTree {
    /// The planted tree with a single leaf on top of the stem.
    pub fn leaf() -> Self {
        PlaneTree {
            nodes: vec![Node::Leaf],
        }
    }

    /// Joins two trees under a new internal vertex.
    pub fn join(left: &PlaneTree, right: &PlaneTree) -> Self {
        let shift_l = 1;
        let shift_r = 1 + left.nodes.len();
        let mut nodes = Vec::with_capacity(1 + left.nodes.len() + right.nodes.len());
        nodes.push(Node::Internal {
            left: shift_l,
            right: shift_r,
        });
        nodes.extend(left.nodes.iter().map(|n| n.shifted(shift_l)));
        nodes.extend(right.nodes.iter().map(|n| n.shifted(shift_r)));
        PlaneTree { nodes }
    }

    /// Perfect tree of Horton-Strahler order `order` (with `2^(order-1)` leaves).
    pub fn perfect(order: u32) -> Self {
        assert!(order >= 1, "order starts at 1");
        let mut arena = Arena::default();
        let top = arena.push_perfect(order);
        arena.to_tree(top)
    }

    /// Builds a tree from explicit child lists. Vertex 0 is the planted root and
    /// must have exactly one child; every other vertex must have zero or two
    /// children, ordered left to right.
    pub fn from_children(children: &[Vec<usize>]) -> Result<Self> {
        let structure = |vertex: usize, reason: String| Error::Structure { vertex, reason };
        if children.is_empty() {
            return Err(structure(0, "no vertices".into()));
        }
        if children[0].len() != 1 {
            return Err(structure(
                0,
                format!("planted root must have degree 1, found {}", children[0].len()),
            ));
        }
        let mut arena = Arena::default();
        let mut ids = vec![usize::MAX; children.len()];
        let mut seen = vec![false; children.len()];
        seen[0] = true;
        // Post-order so that children get arena ids before their parents.
        let mut stack = vec![(children[0][0], false)];
        while let Some((v, expanded)) = stack.pop() {
            if v >= children.len() {
                return Err(structure(v, "child reference out of range".into()));
            }
            if !expanded {
                if seen[v] {
                    return Err(structure(v, "vertex reached twice (cycle or shared child)".into()));
                }
                seen[v] = true;
                match children[v].len() {
                    0 => ids[v] = arena.push_leaf(),
                    2 => {
                        stack.push((v, true));
                        stack.push((children[v][1], false));
                        stack.push((children[v][0], false));
                    }
                    d => {
                        return Err(structure(
                            v,
                            format!("vertex must have 0 or 2 children, found {d}"),
                        ))
                    }
                }
            } else {
                let (l, r) = (children[v][0], children[v][1]);
                ids[v] = arena.push_internal(ids[l], ids[r]);
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(structure(v, "unreachable from the root".into()));
        }
        Ok(arena.to_tree(ids[children[0][0]]))
    }

    /// Nodes in preorder; index 0 is the top of the stem.
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn children(&self, node: usize) -> Option<(usize, usize)> {
        match self.nodes[node] {
            Node::Leaf => None,
            Node::Internal { left, right } => Some((left, right)),
        }
    }

    /// Number of leaves `n`.
    pub fn leaf_count(&self) -> usize {
        self.nodes.len().div_ceil(2)
    }

    /// Vertex count including the planted root: `2n`.
    pub fn vertex_count(&self) -> usize {
        self.nodes.len() + 1
    }

    /// Edge count including the stem: `2n - 1`.
    pub fn edge_count(&self) -> usize {
        self.nodes.len()
    }
}

impl Node {
    fn shifted(self, by: usize) -> Node {
        match self {
            Node::Leaf => Node::Leaf,
            Node::Internal { left, right } => Node::Internal {
                left: left + by,
                right: right + by,
            },
        }
    }
}

/// Mutable scratch arena for building trees in arbitrary node order.
#[derive(Debug, Default)]
pub(crate) struct Arena {
    pub kids: Vec<Option<(usize, usize)>>,
}

impl Arena {
    pub fn push_leaf(&mut self) -> usize {
        self.kids.push(None);
        self.kids.len() - 1
    }

    pub fn push_internal(&mut self, left: usize, right: usize) -> usize {
        self.kids.push(Some((left, right)));
        self.kids.len() - 1
    }

    /// Appends a perfect tree of the given order and returns its top vertex.
    pub fn push_perfect(&mut self, order: u32) -> usize {
        let mut level: Vec<usize> = (0..1usize << (order - 1))
            .map(|_| self.push_leaf())
            .collect();
        while level.len() > 1 {
            level = level
                .chunks(2)
                .map(|pair| self.push_internal(pair[0], pair[1]))
                .collect();
        }
        level[0]
    }

    /// Relabels the subtree under `top` into a preorder [`PlaneTree`].
    pub fn to_tree(&self, top: usize) -> PlaneTree {
        let mut nodes = Vec::new();
        // (arena vertex, parent slot to patch: (new parent index, is_right))
        let mut stack: Vec<(usize, Option<(usize, bool)>)> = vec![(top, None)];
        while let Some((v, slot)) = stack.pop() {
            let id = nodes.len();
            if let Some((parent, is_right)) = slot {
                if let Node::Internal { left, right } = &mut nodes[parent] {
                    if is_right {
                        *right = id;
                    } else {
                        *left = id;
                    }
                }
            }
            match self.kids[v] {
                None => nodes.push(Node::Leaf),
                Some((l, r)) => {
                    nodes.push(Node::Internal { left: 0, right: 0 });
                    stack.push((r, Some((id, true))));
                    stack.push((l, Some((id, false))));
                }
            }
        }
        PlaneTree { nodes }
    }
}
