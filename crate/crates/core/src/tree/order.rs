use super::{Node, PlaneTree};
use crate::counting::HortonSequence;

/// Horton-Strahler orders of every vertex of a tree and its branch counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderLabeling {
    /// Order of each arena node (preorder index). The stem, and hence the
    /// planted root, carries the order of node 0.
    pub vertex_order: Vec<u32>,
    pub branch_count: HortonSequence,
    pub tree_order: u32,
}

impl OrderLabeling {
    pub fn stem_order(&self) -> u32 {
        self.vertex_order[0]
    }
}

/// Leaves get order 1; a vertex whose children have orders `i` and `j` gets
/// `max(i, j)` plus one when `i == j`. A branch is a maximal run of vertices of
/// one order joined by parental edges, so a new branch starts at every vertex
/// whose parent has a different order, and at the top of the stem.
pub fn hs_orders(tree: &PlaneTree) -> OrderLabeling {
    let nodes = tree.nodes();
    let mut order = vec![0u32; nodes.len()];
    // children always sit after their parent in preorder
    for i in (0..nodes.len()).rev() {
        order[i] = match nodes[i] {
            Node::Leaf => 1,
            Node::Internal { left, right } => {
                let (a, b) = (order[left], order[right]);
                if a == b {
                    a + 1
                } else {
                    a.max(b)
                }
            }
        };
    }
    let k = order[0];
    let mut counts = vec![0u64; k as usize];
    counts[k as usize - 1] = 1;
    for (i, node) in nodes.iter().enumerate() {
        if let Node::Internal { left, right } = *node {
            for c in [left, right] {
                if order[c] != order[i] {
                    counts[order[c] as usize - 1] += 1;
                }
            }
        }
    }
    OrderLabeling {
        vertex_order: order,
        branch_count: HortonSequence::new_unchecked(counts),
        tree_order: k,
    }
}

impl PlaneTree {
    pub fn horton_sequence(&self) -> HortonSequence {
        hs_orders(self).branch_count
    }
}
