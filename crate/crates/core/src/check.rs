//! Invariant sweeps over a live tree, for property tests and `verify`.
//!
//! These walk the whole tree and compare against [`crate::oracle`], so they
//! cost far more than the operations they check.

use std::collections::HashSet;

use thiserror::Error;

use crate::node::NodeId;
use crate::oracle::{self, TreeDescription};
use crate::tree::{Mode, SlidingSuffixTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{invariant}: {detail}")]
pub struct Violation {
    pub invariant: &'static str,
    pub detail: String,
}

fn fail<T>(invariant: &'static str, detail: impl Into<String>) -> Result<T, Violation> {
    Err(Violation {
        invariant,
        detail: detail.into(),
    })
}

fn show(s: &[u8]) -> String {
    String::from_utf8_lossy(s).into_owned()
}

impl SlidingSuffixTree {
    /// Canonical description of the current tree, comparable with
    /// [`oracle::naive_suffix_tree`] of the window contents.
    pub fn describe(&self) -> TreeDescription {
        let offset = self.tail() - 1;
        let mut d = TreeDescription::default();
        for v in self.preorder() {
            if self.is_leaf(v) {
                d.leaves.insert(self.spos(v) - offset);
            } else {
                d.internal.insert(self.path_string(v));
            }
            if !v.is_root() {
                d.edges
                    .insert((self.path_string(self.parent(v)), self.path_string(v)));
            }
        }
        d
    }
}

fn is_descendant(t: &SlidingSuffixTree, mut leaf: NodeId, ancestor: NodeId) -> bool {
    loop {
        if leaf == ancestor {
            return true;
        }
        if leaf.is_root() || leaf.is_null() {
            return false;
        }
        leaf = t.parent(leaf);
    }
}

/// Parent/child links, depths, branching, leaf table and suffix links.
pub fn check_structure(t: &SlidingSuffixTree) -> Result<(), Violation> {
    let order = t.preorder();
    if order.len() != t.node_count() {
        return fail(
            "node accounting",
            format!("{} reachable, {} live", order.len(), t.node_count()),
        );
    }
    let lrs = t.lrs_len();
    let mut leaves = 0usize;
    for &v in &order {
        if t.is_leaf(v) {
            leaves += 1;
            let k = t.spos(v);
            if k < t.tail() || k + lrs > t.head() {
                return fail(
                    "leaf set",
                    format!("leaf {k} outside [{}..{}]", t.tail(), t.head() - lrs),
                );
            }
            if t.leaf(k) != Some(v) {
                return fail("leaf table", format!("leaf({k}) does not resolve to {v:?}"));
            }
            continue;
        }
        let nchildren = t.children(v).count();
        if !v.is_root() && nchildren < 2 {
            return fail(
                "branching",
                format!("{:?} has {nchildren} children", show(&t.path_string(v))),
            );
        }
        let vs = t.path_string(v);
        for (c, child) in t.children(v) {
            if t.parent(child) != v {
                return fail(
                    "parent link",
                    format!("child {child:?} of {v:?} points at {:?}", t.parent(child)),
                );
            }
            if t.depth(child) <= t.depth(v) {
                return fail("depth", format!("{child:?} not deeper than {v:?}"));
            }
            let cs = t.path_string(child);
            if !cs.starts_with(&vs) || cs[vs.len()] != c {
                return fail(
                    "child key",
                    format!(
                        "edge {:?} -> {:?} keyed {:?}",
                        show(&vs),
                        show(&cs),
                        c as char
                    ),
                );
            }
        }
        if !v.is_root() {
            let link = t.suffix_link(v);
            if link.is_null() || t.is_leaf(link) || t.path_string(link) != vs[1..] {
                return fail("suffix link", format!("node {:?}", show(&vs)));
            }
        }
    }
    if leaves != t.leaf_count() {
        return fail(
            "leaf count",
            format!("{leaves} leaves, expected {}", t.leaf_count()),
        );
    }
    Ok(())
}

/// Topology, leaf starts and lrs length equal the brute-force reference.
pub fn check_oracle(t: &SlidingSuffixTree) -> Result<(), Violation> {
    let w = t.window().contents();
    let lrs = oracle::naive_lrs(&w) as u64;
    if t.lrs_len() != lrs {
        return fail(
            "lrs",
            format!("{} vs naive {lrs} on {:?}", t.lrs_len(), show(&w)),
        );
    }
    let ours = t.describe();
    let want = oracle::naive_suffix_tree(&w);
    if ours != want {
        return fail(
            "topology",
            format!("window {:?}: got {ours:?}, expected {want:?}", show(&w)),
        );
    }
    Ok(())
}

/// Every internal node's leaf pointer is a live descendant leaf.
pub fn check_leafptr(t: &SlidingSuffixTree) -> Result<(), Violation> {
    for v in t.preorder() {
        if t.is_leaf(v) || (v.is_root() && t.is_empty()) {
            continue;
        }
        let l = t.leafptr(v);
        if !t.is_leaf(l) || t.spos(l) < t.tail() || !is_descendant(t, l, v) {
            return fail("leaf pointer", format!("{v:?} -> {l:?}"));
        }
    }
    Ok(())
}

/// Primary flags, primary paths, PLP injectivity and inverse links.
pub fn check_plp(t: &SlidingSuffixTree) -> Result<(), Violation> {
    let root = t.root();
    if t.is_primary(root) {
        return fail("root secondary", "root is flagged primary");
    }
    if t.is_empty() {
        return if t.plp_query(root) == root {
            Ok(())
        } else {
            fail("empty root", "plp(root) is not the root")
        };
    }
    let mut secondary = 0usize;
    let mut targets = HashSet::new();
    for v in t.preorder() {
        if !t.is_leaf(v) {
            let primaries = t.children(v).filter(|&(_, c)| t.is_primary(c)).count();
            if primaries != 1 {
                return fail("one primary child", format!("{v:?} has {primaries}"));
            }
        }
        if t.is_primary(v) {
            continue;
        }
        secondary += 1;
        let mut end = v;
        while !t.is_leaf(end) {
            end = t
                .children(end)
                .map(|(_, c)| c)
                .find(|&c| t.is_primary(c))
                .expect("checked above");
        }
        let got = t.plp_query(v);
        if got != end {
            return fail(
                "primary path",
                format!("plp({v:?}) = {got:?}, path ends at {end:?}"),
            );
        }
        if t.plp_inv(end) != v {
            return fail(
                "plp inverse",
                format!("plp_inv({end:?}) = {:?}, expected {v:?}", t.plp_inv(end)),
            );
        }
        targets.insert(end);
    }
    if targets.len() != secondary || secondary != t.leaf_count() {
        return fail(
            "plp injection",
            format!(
                "{secondary} secondary nodes, {} targets, {} leaves",
                targets.len(),
                t.leaf_count()
            ),
        );
    }
    Ok(())
}

/// Every non-root internal node records a live leaf.
pub fn check_credit(t: &SlidingSuffixTree) -> Result<(), Violation> {
    for v in t.preorder() {
        // No edge enters the root, so its lp is never read and may go stale.
        if t.is_leaf(v) || v.is_root() {
            continue;
        }
        let lp = t.credit_lp(v);
        if lp < t.tail() {
            return fail(
                "credit liveness",
                format!("lp({v:?}) = {lp} < tail {}", t.tail()),
            );
        }
    }
    Ok(())
}

/// Index pairs derived from leaf pointers spell the right labels and stay
/// inside the window together with the parent's string.
pub fn check_freshness(t: &SlidingSuffixTree) -> Result<(), Violation> {
    for v in t.preorder() {
        if v.is_root() {
            continue;
        }
        let u = t.parent(v);
        let pair = if t.is_leaf(v) {
            t.edge_label(v).expect("not the root")
        } else {
            t.fresh_index_pair(u, v)
        };
        let du = t.depth(u);
        if pair.start < t.tail() + du || pair.end > t.head() || pair.is_empty() {
            return fail(
                "strong freshness",
                format!("{pair:?} for depth {du} in [{}..{}]", t.tail(), t.head()),
            );
        }
        let label = t
            .window()
            .substring(pair.start, pair.end)
            .expect("inside window");
        let want = &t.path_string(v)[du as usize..];
        if label != want {
            return fail(
                "edge label",
                format!("{:?} vs {:?}", show(&label), show(want)),
            );
        }
    }
    Ok(())
}

/// Runs every sweep that applies to the tree's mode.
pub fn check_all(t: &SlidingSuffixTree) -> Result<(), Violation> {
    check_structure(t)?;
    check_oracle(t)?;
    check_leafptr(t)?;
    match t.mode() {
        Mode::Plp => check_plp(t)?,
        Mode::Credit => check_credit(t)?,
    }
    check_freshness(t)
}
