use serde::{Deserialize, Serialize};

/// Instrumentation for structural churn and leaf-pointer maintenance cost.
///
/// An *event* is a single leaf insertion (one explicit extension that creates
/// a leaf) or a single leaf deletion (one `delete_front`, whether it removes or
/// shortens the oldest leaf). `*_last_event` fields are reset when an event
/// starts; `*_max_event` keep the largest per-event value seen since the last
/// [`Counters::reset_event_maxima`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub explicit_extensions: u64,
    pub nodes_created: u64,
    pub nodes_deleted: u64,
    pub leaves_created: u64,
    pub leaves_deleted: u64,
    pub leaves_relabeled: u64,
    pub leaf_events: u64,

    pub plp_field_writes_last_event: u64,
    pub credit_update_calls_last_event: u64,

    pub plp_field_writes: u64,
    pub credit_update_calls: u64,

    pub plp_field_writes_max_event: u64,
    pub credit_update_calls_max_event: u64,
}

impl Counters {
    pub(crate) fn begin_event(&mut self) {
        self.leaf_events += 1;
        self.plp_field_writes_last_event = 0;
        self.credit_update_calls_last_event = 0;
    }

    #[inline]
    pub(crate) fn plp_write(&mut self, n: u64) {
        self.plp_field_writes_last_event += n;
        self.plp_field_writes += n;
        self.plp_field_writes_max_event = self
            .plp_field_writes_max_event
            .max(self.plp_field_writes_last_event);
    }

    #[inline]
    pub(crate) fn credit_call(&mut self) {
        self.credit_update_calls_last_event += 1;
        self.credit_update_calls += 1;
        self.credit_update_calls_max_event = self
            .credit_update_calls_max_event
            .max(self.credit_update_calls_last_event);
    }

    pub fn reset_event_maxima(&mut self) {
        self.plp_field_writes_max_event = 0;
        self.credit_update_calls_max_event = 0;
    }

    /// Node and leaf creations plus deletions.
    pub fn churn(&self) -> u64 {
        self.nodes_created + self.nodes_deleted + self.leaves_created + self.leaves_deleted
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Insert,
    Delete,
}

/// Leaf-pointer maintenance cost of one leaf event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventCost {
    pub kind: EventKind,
    pub plp_field_writes: u64,
    pub credit_update_calls: u64,
}
