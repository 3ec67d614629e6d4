//! The two streams on which credit passing cascades to the root.
//!
//! Insertion: build `a^n b a^(n-1)` and append `c`. The first leaf of that
//! phase lands under node `a^(n-1)`, and every node `a^k` on the way up
//! already holds a credit.
//!
//! Deletion: build `a^n b` and delete the leftmost `a`. Node `a^(n-1)` is
//! merged away holding a credit, which again cascades to the root.

use serde::{Deserialize, Serialize};

use crate::counters::EventCost;
use crate::error::Result;
use crate::tree::{Mode, SlidingSuffixTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Insert,
    Delete,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "insert" => Ok(Variant::Insert),
            "delete" => Ok(Variant::Delete),
            other => Err(format!(
                "unknown variant {other:?} (expected insert or delete)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorstCaseReport {
    pub n: usize,
    pub mode: Mode,
    pub variant: Variant,
    pub window: String,
    /// The first leaf event of the critical operation.
    pub critical: EventCost,
    /// Every leaf event of the critical operation, in order.
    pub events: Vec<EventCost>,
}

impl WorstCaseReport {
    /// The counter that matters for the mode.
    pub fn critical_cost(&self) -> u64 {
        match self.mode {
            Mode::Plp => self.critical.plp_field_writes,
            Mode::Credit => self.critical.credit_update_calls,
        }
    }
}

pub fn run_worstcase(n: usize, mode: Mode, variant: Variant) -> Result<WorstCaseReport> {
    let n = n.max(2);
    let a = |k: usize| std::iter::repeat_n(b'a', k);
    let (capacity, prefix): (usize, Vec<u8>) = match variant {
        Variant::Insert => (
            2 * n + 1,
            a(n).chain(std::iter::once(b'b')).chain(a(n - 1)).collect(),
        ),
        Variant::Delete => (n + 1, a(n).chain(std::iter::once(b'b')).collect()),
    };
    let mut t = SlidingSuffixTree::new(capacity, mode)?;
    for c in prefix {
        t.append(c)?;
    }
    t.enable_trace();
    match variant {
        Variant::Insert => t.append(b'c')?,
        Variant::Delete => t.delete_front()?,
    }
    let events = t.take_trace();
    Ok(WorstCaseReport {
        n,
        mode,
        variant,
        window: String::from_utf8_lossy(&t.window().contents()).into_owned(),
        critical: events[0],
        events,
    })
}
