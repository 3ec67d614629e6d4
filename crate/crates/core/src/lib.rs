//! Suffix tree over a sliding window of a byte stream.
//!
//! [`SlidingSuffixTree`] keeps the implicit suffix tree of the last `capacity`
//! bytes. Symbols are appended with Ukkonen's online step and dropped from the
//! front by removing or shortening the oldest leaf. Edge labels are never
//! stored; each one is read through a *leaf pointer*, a live leaf below the
//! edge, so labels can never fall out of the window.
//!
//! Leaf pointers are maintained by one of two schemes ([`Mode`]):
//!
//! - [`Mode::Plp`] designates one primary child per node and keeps, for every
//!   secondary node, a pointer to the leaf at the end of its primary path.
//!   Each leaf insertion or deletion repairs this with at most four writes.
//! - [`Mode::Credit`] passes one-bit credits toward the root. Cheap on
//!   average, but a single event can walk the whole height of the tree.
//!
//! ```
//! use slidingtree_core::{Mode, SlidingSuffixTree};
//!
//! let mut t = SlidingSuffixTree::new(5, Mode::Plp).unwrap();
//! for &c in b"abacabaca" {
//!     t.slide(c).unwrap();
//! }
//! assert_eq!(t.window().contents(), b"abaca");
//! assert_eq!(t.find_all(b"a").unwrap().occurrences, vec![1, 3, 5]);
//! ```

pub mod check;
mod counters;
mod credit;
mod error;
pub mod lcg;
mod matcher;
mod node;
pub mod oracle;
mod plp;
mod tree;
pub mod verify;
mod window;
pub mod worstcase;

pub use counters::{Counters, EventCost, EventKind};
pub use error::{Error, Result};
pub use matcher::{Locus, MatchCase, MatchResult};
pub use node::NodeId;
pub use tree::{ActivePoint, IndexPair, Mode, SlidingSuffixTree};
pub use window::TextWindow;
