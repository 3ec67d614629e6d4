//! Slot arena for internal nodes and leaves.

use std::fmt;

/// Index of a node slot. `ROOT` is slot 0 and is never freed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);
    pub const NULL: NodeId = NodeId(u32::MAX);

    #[inline]
    pub fn is_null(self) -> bool {
        self == Self::NULL
    }

    #[inline]
    pub fn is_root(self) -> bool {
        self == Self::ROOT
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::NULL => f.write_str("null"),
            Self::ROOT => f.write_str("root"),
            NodeId(i) => write!(f, "#{i}"),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub parent: NodeId,
    pub is_leaf: bool,
    /// String depth; internal nodes only.
    pub depth: u64,
    /// Start position of the represented suffix; leaves only.
    pub spos: u64,
    pub suffix_link: NodeId,
    /// Sorted by first symbol.
    pub children: Vec<(u8, NodeId)>,

    pub prim: bool,
    /// Primary leaf pointer of a secondary internal node.
    pub plp: NodeId,
    /// For a leaf, the secondary node whose PLP lands here (itself when the
    /// leaf is secondary).
    pub plp_inv: NodeId,

    pub cred: bool,
    /// Start position of the recorded descendant leaf (credit scheme).
    pub lp: u64,
}

impl Node {
    fn blank() -> Self {
        Self {
            parent: NodeId::NULL,
            is_leaf: false,
            depth: 0,
            spos: 0,
            suffix_link: NodeId::NULL,
            children: Vec::new(),
            prim: false,
            plp: NodeId::NULL,
            plp_inv: NodeId::NULL,
            cred: false,
            lp: 0,
        }
    }

    #[inline]
    pub fn child(&self, c: u8) -> NodeId {
        match self.children.binary_search_by_key(&c, |&(k, _)| k) {
            Ok(i) => self.children[i].1,
            Err(_) => NodeId::NULL,
        }
    }

    pub fn set_child(&mut self, c: u8, v: NodeId) {
        match self.children.binary_search_by_key(&c, |&(k, _)| k) {
            Ok(i) => self.children[i].1 = v,
            Err(i) => self.children.insert(i, (c, v)),
        }
    }

    pub fn remove_child(&mut self, c: u8) -> NodeId {
        match self.children.binary_search_by_key(&c, |&(k, _)| k) {
            Ok(i) => self.children.remove(i).1,
            Err(_) => NodeId::NULL,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct NodeStore {
    nodes: Vec<Node>,
    free: Vec<u32>,
}

impl NodeStore {
    pub fn new() -> Self {
        Self {
            nodes: vec![Node::blank()],
            free: Vec::new(),
        }
    }

    pub fn alloc(&mut self, is_leaf: bool) -> NodeId {
        let mut node = Node::blank();
        node.is_leaf = is_leaf;
        if let Some(i) = self.free.pop() {
            self.nodes[i as usize] = node;
            NodeId(i)
        } else {
            assert!(self.nodes.len() < u32::MAX as usize, "node arena exhausted");
            self.nodes.push(node);
            NodeId(self.nodes.len() as u32 - 1)
        }
    }

    /// Returns the slot to the free list. Every reference to `v` must already
    /// be gone.
    pub fn release(&mut self, v: NodeId) {
        debug_assert!(!v.is_root() && !v.is_null());
        let node = &mut self.nodes[v.index()];
        node.parent = NodeId::NULL;
        node.children = Vec::new();
        self.free.push(v.0);
    }

    /// Number of live nodes including the root.
    pub fn live(&self) -> usize {
        self.nodes.len() - self.free.len()
    }
}

impl std::ops::Index<NodeId> for NodeStore {
    type Output = Node;

    #[inline]
    fn index(&self, v: NodeId) -> &Node {
        &self.nodes[v.index()]
    }
}

impl std::ops::IndexMut<NodeId> for NodeStore {
    #[inline]
    fn index_mut(&mut self, v: NodeId) -> &mut Node {
        &mut self.nodes[v.index()]
    }
}
