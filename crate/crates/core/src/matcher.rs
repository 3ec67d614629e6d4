//! Online pattern matching over the current window.
//!
//! Leaves below the locus of `P` give every occurrence that starts before
//! the rightmost occurrence of the lrs, i.e. at a window-relative start
//! `<= |W| - |lrs|`. The remaining occurrences start inside the rightmost
//! lrs occurrence `[p1..q1]` and are recovered from an earlier lrs
//! occurrence `[p2..q2]`, found through the leaf pointer of the node below
//! the active point:
//!
//! - `|P| > |lrs|`: none exist.
//! - `|P| = |lrs|`: only `p1`, when `P` equals the lrs.
//! - `|P| < |lrs|`, `q2 < p1`: shift each hit contained in `[p2..q2]` by
//!   `p1 - p2`.
//! - `|P| < |lrs|`, `q2 >= p1`: the lrs has period `p1 - p2`; repeat each
//!   hit in `[p2..p1)` by that period while it still fits in the window.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::node::NodeId;
use crate::tree::SlidingSuffixTree;

/// Position of a pattern in the tree: `node` is the node at or below the
/// pattern, `residual` the number of symbols between the pattern's end and
/// `node` (0 when the pattern ends exactly on `node`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Locus {
    pub node: NodeId,
    pub residual: u64,
}

/// Which way the occurrences inside the rightmost lrs were derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchCase {
    /// The pattern does not occur.
    Absent,
    /// Longer than the lrs.
    LongerThanLrs,
    /// Same length as the lrs.
    EqualToLrs,
    /// Shorter; the two lrs occurrences do not overlap.
    Disjoint,
    /// Shorter; the two lrs occurrences overlap.
    Periodic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    /// Ascending window-relative (1-based) start positions.
    pub occurrences: Vec<u64>,
    pub case: MatchCase,
    /// Tree edges visited while locating and collecting.
    pub edges_touched: u64,
}

impl SlidingSuffixTree {
    /// Descends from the root along `pattern`.
    pub fn locate(&self, pattern: &[u8]) -> Option<Locus> {
        self.locate_counting(pattern, &mut 0)
    }

    fn locate_counting(&self, pattern: &[u8], edges: &mut u64) -> Option<Locus> {
        let mut node = self.root();
        let mut matched = 0usize;
        if pattern.is_empty() {
            return Some(Locus { node, residual: 0 });
        }
        while matched < pattern.len() {
            let child = self.child(node, pattern[matched])?;
            *edges += 1;
            let label = self.edge_label(child).ok()?;
            let take = (label.len() as usize).min(pattern.len() - matched);
            // The first symbol already matched through the child lookup.
            for i in 1..take {
                if self.window.at(label.start + i as u64) != pattern[matched + i] {
                    return None;
                }
            }
            matched += take;
            node = child;
            if take < label.len() as usize {
                return Some(Locus {
                    node,
                    residual: label.len() - take as u64,
                });
            }
        }
        Some(Locus { node, residual: 0 })
    }

    /// Window-relative starts of all leaves in the subtree of `node`.
    pub fn collect_subtree_leaves(&self, node: NodeId) -> Vec<u64> {
        self.collect_counting(node, &mut 0)
    }

    fn collect_counting(&self, node: NodeId, edges: &mut u64) -> Vec<u64> {
        let offset = self.tail() - 1;
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            if self.is_leaf(v) {
                out.push(self.spos(v) - offset);
                continue;
            }
            for (_, c) in self.children(v) {
                *edges += 1;
                stack.push(c);
            }
        }
        out
    }

    /// All occurrences of `pattern` in the window.
    pub fn find_all(&self, pattern: &[u8]) -> Result<MatchResult> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let mut edges = 0;
        let absent = |edges| MatchResult {
            occurrences: Vec::new(),
            case: MatchCase::Absent,
            edges_touched: edges,
        };
        if pattern.len() > self.len() {
            return Ok(absent(0));
        }
        let Some(locus) = self.locate_counting(pattern, &mut edges) else {
            return Ok(absent(edges));
        };
        let mut occ = self.collect_counting(locus.node, &mut edges);

        let m = pattern.len() as u64;
        let w = self.len() as u64;
        let lrs = self.lrs_len();
        let p1 = w - lrs + 1;
        let case = if m > lrs {
            MatchCase::LongerThanLrs
        } else if m == lrs {
            let start = self.tail() + p1 - 1;
            if (0..m).all(|i| self.window.at(start + i) == pattern[i as usize]) {
                occ.push(p1);
            }
            MatchCase::EqualToLrs
        } else {
            let (_, _, below) = self.resolve_active(self.head());
            edges += 1;
            let p2 = self.spos(self.leafptr(below)) - (self.tail() - 1);
            debug_assert!(p2 < p1);
            let q2 = p2 + lrs - 1;
            let hits = occ.len();
            if q2 < p1 {
                for i in 0..hits {
                    let k = occ[i];
                    if k >= p2 && k + m - 1 <= q2 {
                        occ.push(k + p1 - p2);
                    }
                }
                MatchCase::Disjoint
            } else {
                let period = p1 - p2;
                for i in 0..hits {
                    let k = occ[i];
                    if k >= p2 && k < p1 {
                        let mut j = k + period;
                        while j + m - 1 <= w {
                            occ.push(j);
                            j += period;
                        }
                    }
                }
                MatchCase::Periodic
            }
        };
        occ.sort_unstable();
        Ok(MatchResult {
            occurrences: occ,
            case,
            edges_touched: edges,
        })
    }
}
