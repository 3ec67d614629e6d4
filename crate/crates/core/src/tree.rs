//! Implicit suffix tree of a sliding window.
//!
//! Appending runs one phase of Ukkonen's algorithm; deleting the oldest
//! symbol removes or shortens the longest leaf and merges a parent left with
//! a single child. The active point is kept as `(ins, proj)`: `ins` is the
//! closest node at or above the locus of the longest repeating suffix (lrs)
//! and `proj` counts the symbols below it. The edge toward the active point
//! starts with `T[head - proj + 1]`, so it is never stored.
//!
//! Edge labels are not stored either. Every edge label is recovered from a
//! leaf pointer, which is kept valid by one of two schemes selected by
//! [`Mode`]: primary leaf pointers (see `plp.rs`) or credits (see
//! `credit.rs`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::counters::{Counters, EventCost, EventKind};
use crate::error::{Error, Result};
use crate::node::{NodeId, NodeStore};
use crate::window::TextWindow;

/// Leaf-pointer maintenance scheme, fixed for the lifetime of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Primary/secondary flags with primary leaf pointers; O(1) per leaf event.
    Plp,
    /// Credit passing; amortized O(1), Θ(|W|) worst case per leaf event.
    Credit,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plp => "plp",
            Mode::Credit => "credit",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "plp" => Ok(Mode::Plp),
            "credit" => Ok(Mode::Credit),
            other => Err(format!("unknown mode {other:?} (expected plp or credit)")),
        }
    }
}

/// Absolute, inclusive position interval `T[start..=end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexPair {
    pub start: u64,
    pub end: u64,
}

impl IndexPair {
    pub fn len(&self) -> u64 {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActivePoint {
    pub ins: NodeId,
    pub proj: u64,
}

#[derive(Debug, Clone)]
pub struct SlidingSuffixTree {
    pub(crate) window: TextWindow,
    pub(crate) nodes: NodeStore,
    /// `leaf(k)` for live start positions, slot `(k - 1) % capacity`.
    leaves: Vec<NodeId>,
    pub(crate) ins: NodeId,
    pub(crate) proj: u64,
    mode: Mode,
    pub(crate) counters: Counters,
    trace: Option<Vec<EventCost>>,
}

impl SlidingSuffixTree {
    pub fn new(capacity: usize, mode: Mode) -> Result<Self> {
        let window = TextWindow::new(capacity)?;
        let mut nodes = NodeStore::new();
        // An empty root points at itself.
        nodes[NodeId::ROOT].plp = NodeId::ROOT;
        Ok(Self {
            window,
            nodes,
            leaves: vec![NodeId::NULL; capacity],
            ins: NodeId::ROOT,
            proj: 0,
            mode,
            counters: Counters::default(),
            trace: None,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn window(&self) -> &TextWindow {
        &self.window
    }

    pub fn capacity(&self) -> usize {
        self.window.capacity()
    }

    pub fn tail(&self) -> u64 {
        self.window.tail()
    }

    pub fn head(&self) -> u64 {
        self.window.head()
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.window.is_full()
    }

    pub fn counters(&self) -> &Counters {
        &self.counters
    }

    pub fn reset_event_maxima(&mut self) {
        self.counters.reset_event_maxima();
    }

    /// Starts recording the cost of every leaf event.
    pub fn enable_trace(&mut self) {
        self.trace = Some(Vec::new());
    }

    /// Events recorded since the last call.
    pub fn take_trace(&mut self) -> Vec<EventCost> {
        self.trace.as_mut().map(std::mem::take).unwrap_or_default()
    }

    fn end_event(&mut self, kind: EventKind) {
        if let Some(trace) = &mut self.trace {
            trace.push(EventCost {
                kind,
                plp_field_writes: self.counters.plp_field_writes_last_event,
                credit_update_calls: self.counters.credit_update_calls_last_event,
            });
        }
    }

    pub fn active_point(&self) -> ActivePoint {
        ActivePoint {
            ins: self.ins,
            proj: self.proj,
        }
    }

    /// Length of the longest repeating suffix of the window.
    pub fn lrs_len(&self) -> u64 {
        self.nodes[self.ins].depth + self.proj
    }

    /// Live nodes, root and leaves included.
    pub fn node_count(&self) -> usize {
        self.nodes.live()
    }

    /// Number of leaves; equals `len() - lrs_len()`.
    pub fn leaf_count(&self) -> usize {
        self.len() - self.lrs_len() as usize
    }

    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v].is_leaf
    }

    pub fn parent(&self, v: NodeId) -> NodeId {
        self.nodes[v].parent
    }

    /// Children in ascending order of first symbol.
    pub fn children(&self, v: NodeId) -> impl Iterator<Item = (u8, NodeId)> + '_ {
        self.nodes[v].children.iter().copied()
    }

    pub fn child(&self, v: NodeId, c: u8) -> Option<NodeId> {
        let w = self.nodes[v].child(c);
        (!w.is_null()).then_some(w)
    }

    pub fn suffix_link(&self, v: NodeId) -> NodeId {
        self.nodes[v].suffix_link
    }

    /// Start position of a leaf.
    pub fn spos(&self, leaf: NodeId) -> u64 {
        debug_assert!(self.nodes[leaf].is_leaf);
        self.nodes[leaf].spos
    }

    /// String depth of any node; a leaf reaches to the current head.
    pub fn depth(&self, v: NodeId) -> u64 {
        let n = &self.nodes[v];
        if n.is_leaf {
            self.window.head() + 1 - n.spos
        } else {
            n.depth
        }
    }

    pub fn is_primary(&self, v: NodeId) -> bool {
        self.nodes[v].prim
    }

    /// `leaf(k)`, if a leaf with start position `k` is live.
    pub fn leaf(&self, k: u64) -> Option<NodeId> {
        if k < self.tail() || k > self.head() {
            return None;
        }
        let v = self.leaves[self.leaf_slot(k)];
        (!v.is_null()).then_some(v)
    }

    #[inline]
    fn leaf_slot(&self, k: u64) -> usize {
        ((k - 1) % self.leaves.len() as u64) as usize
    }

    /// Some live descendant leaf of `x` (or `x` itself for a leaf).
    pub fn leafptr(&self, x: NodeId) -> NodeId {
        if self.nodes[x].is_leaf {
            return x;
        }
        match self.mode {
            Mode::Plp => self.plp_query(x),
            Mode::Credit => self.credit_leaf(x),
        }
    }

    /// Label interval of the edge entering `v`.
    pub fn edge_label(&self, v: NodeId) -> Result<IndexPair> {
        if v.is_root() {
            return Err(Error::RootEdge);
        }
        let parent_depth = self.nodes[self.nodes[v].parent].depth;
        let n = &self.nodes[v];
        Ok(if n.is_leaf {
            IndexPair {
                start: n.spos + parent_depth,
                end: self.window.head(),
            }
        } else {
            let k = self.nodes[self.leafptr(v)].spos;
            IndexPair {
                start: k + parent_depth,
                end: k + n.depth - 1,
            }
        })
    }

    /// Start of the label of the edge entering `v`.
    #[inline]
    fn edge_start(&self, v: NodeId) -> u64 {
        let parent_depth = self.nodes[self.nodes[v].parent].depth;
        let n = &self.nodes[v];
        let k = if n.is_leaf {
            n.spos
        } else {
            self.nodes[self.leafptr(v)].spos
        };
        k + parent_depth
    }

    /// Resolves the active point without mutating it: returns the closest
    /// node at or above it, the remaining offset, and the node below the
    /// active point (equal to the first value when the offset is zero).
    pub(crate) fn resolve_active(&self, end: u64) -> (NodeId, u64, NodeId) {
        let (mut ins, mut proj) = (self.ins, self.proj);
        loop {
            if proj == 0 {
                return (ins, 0, ins);
            }
            let b = self.nodes[ins].child(self.window.at(end - proj + 1));
            debug_assert!(!b.is_null(), "active point leaves the tree");
            let nb = &self.nodes[b];
            if nb.is_leaf {
                return (ins, proj, b);
            }
            let len = nb.depth - self.nodes[ins].depth;
            if proj < len {
                return (ins, proj, b);
            }
            ins = b;
            proj -= len;
        }
    }

    fn canonize_at(&mut self, end: u64) -> NodeId {
        let (ins, proj, below) = self.resolve_active(end);
        self.ins = ins;
        self.proj = proj;
        below
    }

    /// Moves `ins` down as far as `proj` allows and returns the node below
    /// the active point (`ins` itself when the active point sits on it).
    pub fn canonize(&mut self) -> NodeId {
        let head = self.window.head();
        self.canonize_at(head)
    }

    /// Moves the active point to the suffix one symbol shorter.
    #[inline]
    fn drop_first_symbol(&mut self) {
        if self.ins.is_root() {
            self.proj -= 1;
        } else {
            self.ins = self.nodes[self.ins].suffix_link;
            debug_assert!(!self.ins.is_null());
        }
    }

    pub fn append(&mut self, c: u8) -> Result<()> {
        let end = self.window.head();
        self.window.push(c)?;
        let mut pending = NodeId::NULL;
        loop {
            self.counters.explicit_extensions += 1;
            let b = self.canonize_at(end);
            let ins = self.ins;
            let mut split = None;
            let w = if self.proj == 0 {
                if !self.nodes[ins].child(c).is_null() {
                    if !pending.is_null() {
                        self.nodes[pending].suffix_link = ins;
                    }
                    self.proj += 1;
                    break;
                }
                self.counters.begin_event();
                ins
            } else {
                let next = self.window.at(self.edge_start(b) + self.proj);
                if next == c {
                    // A node created in the previous sub-iteration branches,
                    // so its suffix is a node too and never ends up here.
                    debug_assert!(pending.is_null());
                    self.proj += 1;
                    break;
                }
                self.counters.begin_event();
                let w = self.nodes.alloc(false);
                let first = self.window.at(end - self.proj + 1);
                let depth = self.nodes[ins].depth + self.proj;
                {
                    let nw = &mut self.nodes[w];
                    nw.depth = depth;
                    nw.parent = ins;
                    nw.set_child(next, b);
                    nw.lp = end + 1 - depth;
                }
                self.nodes[ins].set_child(first, w);
                self.nodes[b].parent = w;
                self.counters.nodes_created += 1;
                split = Some((ins, b));
                w
            };

            let spos = end + 1 - self.nodes[w].depth;
            let u = self.nodes.alloc(true);
            self.nodes[u].spos = spos;
            self.nodes[u].parent = w;
            self.nodes[w].set_child(c, u);
            let slot = self.leaf_slot(spos);
            self.leaves[slot] = u;
            self.counters.leaves_created += 1;
            match self.mode {
                Mode::Plp => self.plp_on_insert(u, w, split),
                Mode::Credit => self.credit_update(w, spos),
            }
            self.end_event(EventKind::Insert);

            if !pending.is_null() {
                self.nodes[pending].suffix_link = w;
            }
            if w.is_root() {
                break;
            }
            pending = w;
            self.drop_first_symbol();
        }
        Ok(())
    }

    pub fn delete_front(&mut self) -> Result<()> {
        if self.window.is_empty() {
            return Err(Error::WindowEmpty);
        }
        let tail = self.window.tail();
        let head = self.window.head();
        self.counters.begin_event();
        let b = self.canonize_at(head);
        let u = self.leaves[self.leaf_slot(tail)];
        debug_assert!(!u.is_null(), "oldest suffix has no leaf");

        if u == b {
            // The lrs lies on the edge into leaf(tail): it occurs exactly
            // twice and is also the longest repeating prefix. Shorten the
            // leaf so it spells the lrs ending at head.
            let k = head - self.lrs_len() + 1;
            self.nodes[u].spos = k;
            let old = self.leaf_slot(tail);
            self.leaves[old] = NodeId::NULL;
            let new = self.leaf_slot(k);
            self.leaves[new] = u;
            self.counters.leaves_relabeled += 1;
            if self.mode == Mode::Credit {
                self.credit_update(self.ins, k);
            }
            self.drop_first_symbol();
        } else {
            let w = self.nodes[u].parent;
            let merge = !w.is_root() && self.nodes[w].children.len() == 2;
            if self.mode == Mode::Plp {
                self.plp_on_delete(u, w);
            }
            let wdepth = self.nodes[w].depth;
            self.nodes[w].remove_child(self.window.at(tail + wdepth));
            let slot = self.leaf_slot(tail);
            self.leaves[slot] = NodeId::NULL;
            self.nodes.release(u);
            self.counters.leaves_deleted += 1;

            if merge {
                let y = self.nodes[w].children[0].1;
                let x = self.nodes[w].parent;
                if self.mode == Mode::Credit && self.nodes[w].cred {
                    let lp = self.nodes[w].lp;
                    self.credit_update(x, lp);
                }
                let xdepth = self.nodes[x].depth;
                self.nodes[x].set_child(self.window.at(tail + xdepth), y);
                self.nodes[y].parent = x;
                if self.ins == w {
                    self.ins = x;
                    self.proj += wdepth - xdepth;
                }
                self.nodes.release(w);
                self.counters.nodes_deleted += 1;
            }
        }
        self.window.pop()?;
        self.end_event(EventKind::Delete);
        Ok(())
    }

    /// Appends `c`, first dropping the oldest symbol if the window is full.
    pub fn slide(&mut self, c: u8) -> Result<()> {
        if self.window.is_full() {
            self.delete_front()?;
        }
        self.append(c)
    }

    /// Node spelling, read through a leaf found by descending first children.
    /// Independent of both leaf-pointer schemes.
    pub fn path_string(&self, v: NodeId) -> Vec<u8> {
        let depth = self.depth(v);
        if depth == 0 {
            return Vec::new();
        }
        let mut leaf = v;
        while !self.nodes[leaf].is_leaf {
            leaf = self.nodes[leaf].children[0].1;
        }
        let k = self.nodes[leaf].spos;
        (k..k + depth).map(|p| self.window.at(p)).collect()
    }

    /// All live nodes in preorder, children in ascending symbol order.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.live());
        let mut stack = vec![NodeId::ROOT];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.nodes[v].children.iter().rev().map(|&(_, c)| c));
        }
        out
    }
}
