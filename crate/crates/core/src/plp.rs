//! Primary leaf pointers.
//!
//! Every node with children marks exactly one child primary; the root and
//! all other children are secondary. Following primary edges from a
//! secondary node ends at a leaf, and that leaf is the node's primary leaf
//! pointer (PLP). The primary edges split the tree into disjoint paths, each
//! starting at a secondary node and ending at a leaf, so every leaf is the
//! target of exactly one PLP. Each leaf keeps the inverse (`plp_inv`), which
//! lets a leaf insertion or deletion repair the structure with at most four
//! field writes.
//!
//! Secondary leaves point at themselves. That self pointer is not stored in
//! `plp`; only `plp_inv` records it.

use crate::node::NodeId;
use crate::tree::{IndexPair, SlidingSuffixTree};

impl SlidingSuffixTree {
    /// Leaf-pointer query: `plp(x)` for a secondary node, otherwise the PLP
    /// of the lowest-symbol secondary child.
    pub fn plp_query(&self, x: NodeId) -> NodeId {
        let n = &self.nodes[x];
        if n.is_leaf {
            return x;
        }
        if !n.prim {
            return n.plp;
        }
        let y = self.first_secondary_child(x, NodeId::NULL);
        self.plp_of_secondary(y)
    }

    /// The secondary node whose PLP targets `leaf` (the leaf itself when it
    /// is secondary).
    pub fn plp_inv(&self, leaf: NodeId) -> NodeId {
        self.nodes[leaf].plp_inv
    }

    /// Index pair for the internal edge `u -> v`, read through the leaf
    /// pointer of `v`. Both the label and the preceding string of `u` lie in
    /// the window.
    pub fn fresh_index_pair(&self, u: NodeId, v: NodeId) -> IndexPair {
        debug_assert_eq!(self.nodes[v].parent, u);
        debug_assert!(!self.nodes[v].is_leaf);
        let k = self.nodes[self.leafptr(v)].spos;
        IndexPair {
            start: k + self.nodes[u].depth,
            end: k + self.nodes[v].depth - 1,
        }
    }

    #[inline]
    fn plp_of_secondary(&self, y: NodeId) -> NodeId {
        if self.nodes[y].is_leaf {
            y
        } else {
            self.nodes[y].plp
        }
    }

    fn first_secondary_child(&self, x: NodeId, skip: NodeId) -> NodeId {
        self.nodes[x]
            .children
            .iter()
            .map(|&(_, c)| c)
            .find(|&c| c != skip && !self.nodes[c].prim)
            .expect("a node with several children has a secondary child")
    }

    #[inline]
    fn set_prim(&mut self, v: NodeId, prim: bool) {
        self.nodes[v].prim = prim;
        self.counters.plp_write(1);
    }

    /// `plp(x) = leaf`, with the inverse link.
    #[inline]
    fn set_plp(&mut self, x: NodeId, leaf: NodeId) {
        if x == leaf {
            self.nodes[leaf].plp_inv = leaf;
            self.counters.plp_write(1);
        } else {
            self.nodes[x].plp = leaf;
            self.nodes[leaf].plp_inv = x;
            self.counters.plp_write(2);
        }
    }

    /// Called after leaf `u` was attached under `w`. `split` is `(x, y)` when
    /// `w` was just created on the edge `x -> y`.
    pub(crate) fn plp_on_insert(&mut self, u: NodeId, w: NodeId, split: Option<(NodeId, NodeId)>) {
        match split {
            None if self.nodes[w].children.len() == 1 => {
                // w had no child; only the root can be childless.
                self.set_prim(u, true);
                self.set_plp(w, u);
            }
            None => {
                self.set_prim(u, false);
                self.set_plp(u, u);
            }
            Some((_, y)) if self.nodes[y].prim => {
                // w takes over y's place on its primary path.
                self.set_prim(w, true);
                self.set_prim(u, false);
                self.set_plp(u, u);
            }
            Some(_) => {
                self.set_prim(w, false);
                self.set_prim(u, true);
                self.set_plp(w, u);
            }
        }
    }

    /// Called before leaf `u` is detached from `w`. When `w` is left with a
    /// single child it is merged away by the caller afterwards.
    pub(crate) fn plp_on_delete(&mut self, u: NodeId, w: NodeId) {
        let children = self.nodes[w].children.len();
        if w.is_root() {
            if !self.nodes[u].prim {
                return;
            }
            if children == 1 {
                self.nodes[w].plp = w;
                self.counters.plp_write(1);
            } else {
                let y = self.first_secondary_child(w, u);
                let v = self.plp_of_secondary(y);
                self.set_prim(y, true);
                self.set_plp(w, v);
            }
        } else if self.nodes[u].prim {
            // With exactly two children and w secondary, w is deleted and y
            // inherits w's role and PLP unchanged.
            if children > 2 || self.nodes[w].prim {
                let y = self.first_secondary_child(w, u);
                let v = self.plp_of_secondary(y);
                let z = self.nodes[u].plp_inv;
                self.set_prim(y, true);
                self.set_plp(z, v);
            }
        } else if children == 2 && !self.nodes[w].prim {
            let y = self.nodes[w]
                .children
                .iter()
                .map(|&(_, c)| c)
                .find(|&c| c != u)
                .expect("w has two children");
            let v = self.nodes[w].plp;
            self.set_prim(y, false);
            self.set_plp(y, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::tree::{Mode, SlidingSuffixTree};

    fn build(cap: usize, s: &[u8]) -> SlidingSuffixTree {
        let mut t = SlidingSuffixTree::new(cap, Mode::Plp).unwrap();
        for &c in s {
            t.slide(c).unwrap();
        }
        t
    }

    #[test]
    fn first_leaf_is_primary_child_of_root() {
        let t = build(4, b"a");
        let u = t.leaf(1).unwrap();
        assert!(t.is_primary(u));
        assert_eq!(t.plp_query(t.root()), u);
        assert_eq!(t.counters().plp_field_writes_last_event, 3);
    }

    #[test]
    fn second_root_leaf_is_secondary() {
        let t = build(4, b"ab");
        let b = t.leaf(2).unwrap();
        assert!(!t.is_primary(b));
        assert_eq!(t.plp_query(b), b);
        assert_eq!(t.plp_query(t.root()), t.leaf(1).unwrap());
    }

    #[test]
    fn split_of_secondary_edge() {
        // Leaves: 1 "abb" (primary), 2 "bb" (secondary); the lrs "b" lies on
        // the secondary edge root -> leaf 2.
        let mut t = build(8, b"abb");
        assert_eq!(t.lrs_len(), 1);
        t.append(b'c').unwrap();
        let b_node = t.child(t.root(), b'b').unwrap();
        assert!(!t.is_leaf(b_node));
        // Case 2-2: the new node stays secondary, the new leaf is primary.
        assert!(!t.is_primary(b_node));
        let new_leaf = t.child(b_node, b'c').unwrap();
        assert!(t.is_primary(new_leaf));
        assert_eq!(t.plp_query(b_node), new_leaf);
    }

    #[test]
    fn root_loses_only_leaf() {
        let mut t = build(1, b"a");
        t.delete_front().unwrap();
        assert_eq!(t.plp_query(t.root()), t.root());
        t.append(b'b').unwrap();
        assert_eq!(t.plp_query(t.root()), t.leaf(2).unwrap());
    }
}
