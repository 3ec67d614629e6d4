//! Credit-based leaf pointers.
//!
//! Each internal node records the start position `lp` of some descendant
//! leaf plus a one-bit credit. A new leaf issues a credit to its parent; a
//! node receiving a credit while already holding one passes it (with its
//! newest `lp`) to its own parent. A node merged away while holding a credit
//! passes it on as well. This keeps every `lp` pointing at a live leaf, but a
//! single event can cascade all the way to the root.

use crate::node::NodeId;
use crate::tree::SlidingSuffixTree;

impl SlidingSuffixTree {
    /// Raises `lp(v)` to at least `k` and toggles its credit, continuing at
    /// the parent whenever the credit is used up.
    pub(crate) fn credit_update(&mut self, mut v: NodeId, mut k: u64) {
        while !v.is_null() {
            self.counters.credit_call();
            let n = &mut self.nodes[v];
            n.lp = n.lp.max(k);
            n.cred = !n.cred;
            if n.cred {
                break;
            }
            k = n.lp;
            v = n.parent;
        }
    }

    /// Recorded leaf position of an internal node.
    pub fn credit_lp(&self, v: NodeId) -> u64 {
        self.nodes[v].lp
    }

    pub fn credit_flag(&self, v: NodeId) -> bool {
        self.nodes[v].cred
    }

    pub(crate) fn credit_leaf(&self, x: NodeId) -> NodeId {
        let lp = self.nodes[x].lp;
        self.leaf(lp).unwrap_or_else(|| {
            panic!(
                "stale leaf pointer {lp} on {x:?} (window starts at {})",
                self.tail()
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::tree::{Mode, SlidingSuffixTree};

    #[test]
    fn null_update_is_a_no_op() {
        let mut t = SlidingSuffixTree::new(4, Mode::Credit).unwrap();
        t.credit_update(crate::node::NodeId::NULL, 5);
        assert_eq!(t.counters().credit_update_calls, 0);
    }

    #[test]
    fn single_toggle_without_cascade() {
        let mut t = SlidingSuffixTree::new(8, Mode::Credit).unwrap();
        for &c in b"aab" {
            t.append(c).unwrap();
        }
        // Node "a" was created by the split for leaf 2 and got its credit.
        let a = t.child(t.root(), b'a').unwrap();
        assert!(t.credit_flag(a));
        assert_eq!(t.credit_lp(a), 2);
    }

    #[test]
    fn split_initializes_lp_to_new_leaf() {
        let mut t = SlidingSuffixTree::new(8, Mode::Credit).unwrap();
        for &c in b"abab" {
            t.append(c).unwrap();
        }
        t.append(b'c').unwrap();
        let ab = t.child(t.root(), b'a').unwrap();
        assert_eq!(t.depth(ab), 2);
        // leaf 3 "abc" was created under the new node "ab".
        assert_eq!(t.credit_lp(ab), 3);
        assert!(t.credit_flag(ab));
    }

    #[test]
    fn merged_node_passes_credit_only_if_it_holds_one() {
        let stream = b"abaabbabaaabbbabababbaabaaababbbaaabbababaabbbbaab";
        let mut t = SlidingSuffixTree::new(7, Mode::Credit).unwrap();
        let (mut with, mut without) = (0, 0);
        for &c in stream.iter().cycle().take(400) {
            if t.is_full() {
                let u = t.leaf(t.tail()).unwrap();
                let w = t.parent(u);
                let below = t.clone().canonize();
                let merges = below != u && !w.is_root() && t.children(w).count() == 2;
                let held = t.credit_flag(w);
                let before = t.counters().nodes_deleted;
                t.delete_front().unwrap();
                assert_eq!(t.counters().nodes_deleted - before, merges as u64);
                if merges {
                    let calls = t.counters().credit_update_calls_last_event;
                    if held {
                        with += 1;
                        assert!(calls >= 1);
                    } else {
                        without += 1;
                        assert_eq!(calls, 0);
                    }
                }
            }
            t.append(c).unwrap();
        }
        assert!(with > 0 && without > 0, "with={with} without={without}");
    }
}
