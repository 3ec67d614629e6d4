//! Randomized differential run of both leaf-pointer schemes against the
//! brute-force oracle.
//!
//! Each step draws a symbol `a + below(sigma)` and a number `below(8)`. The
//! oldest symbol is deleted first when the window is full, or when the draw
//! is 0 and the window is non-empty, so window lengths vary. Then the symbol
//! is appended. After every append and every deletion both trees are swept
//! with [`crate::check::check_all`], compared with each other, and queried
//! with a batch of sampled patterns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::check::{self, Violation};
use crate::lcg::Lcg;
use crate::matcher::MatchCase;
use crate::oracle;
use crate::tree::{Mode, SlidingSuffixTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Number of symbols pushed.
    pub iters: u64,
    pub sigma: u8,
    pub window: usize,
    pub patterns_per_state: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            iters: 2000,
            sigma: 2,
            window: 8,
            patterns_per_state: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "op", content = "sym")]
pub enum StreamEvent {
    Append(u8),
    DeleteFront,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub event_index: usize,
    pub mode: Option<Mode>,
    pub message: String,
    /// Every event up to and including the failing one.
    pub log: Vec<StreamEvent>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub events: u64,
    pub symbols_pushed: u64,
    pub states_checked: u64,
    pub patterns_checked: u64,
    pub match_cases: BTreeMap<MatchCase, u64>,
    pub max_plp_writes_per_event: u64,
    pub max_credit_calls_per_event: u64,
    /// Node and leaf creations plus deletions, identical in both modes.
    pub churn: u64,
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Largest per-event PLP write count allowed.
pub const PLP_WRITE_BOUND: u64 = 4;
/// Allowed node churn per pushed symbol.
pub const CHURN_PER_SYMBOL: u64 = 4;

pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    let (Ok(mut plp), Ok(mut credit)) = (
        SlidingSuffixTree::new(cfg.window, Mode::Plp),
        SlidingSuffixTree::new(cfg.window, Mode::Credit),
    ) else {
        report.failure = Some(VerifyFailure {
            event_index: 0,
            mode: None,
            message: "window must be at least 1".into(),
            log: Vec::new(),
        });
        return report;
    };
    let sigma = u64::from(cfg.sigma.max(1));
    let mut rng = Lcg::new(cfg.seed);
    let mut log = Vec::new();

    for _ in 0..cfg.iters {
        let c = b'a' + rng.below(sigma) as u8;
        let r = rng.below(8);
        let mut step = Vec::with_capacity(2);
        if plp.is_full() || (r == 0 && !plp.is_empty()) {
            step.push(StreamEvent::DeleteFront);
        }
        step.push(StreamEvent::Append(c));
        for ev in step {
            log.push(ev);
            report.events += 1;
            if let StreamEvent::Append(_) = ev {
                report.symbols_pushed += 1;
            }
            if let Err((mode, message)) =
                apply_and_check(&mut plp, &mut credit, ev, &mut rng, cfg, &mut report)
            {
                report.failure = Some(VerifyFailure {
                    event_index: log.len() - 1,
                    mode,
                    message,
                    log,
                });
                return report;
            }
        }
    }
    report
}

type StepError = (Option<Mode>, String);

fn tagged(mode: Mode) -> impl Fn(Violation) -> StepError {
    move |v| (Some(mode), v.to_string())
}

fn apply(t: &mut SlidingSuffixTree, ev: StreamEvent) -> Result<(), StepError> {
    let r = match ev {
        StreamEvent::Append(c) => t.append(c),
        StreamEvent::DeleteFront => t.delete_front(),
    };
    r.map_err(|e| (Some(t.mode()), e.to_string()))
}

fn apply_and_check(
    plp: &mut SlidingSuffixTree,
    credit: &mut SlidingSuffixTree,
    ev: StreamEvent,
    rng: &mut Lcg,
    cfg: &VerifyConfig,
    report: &mut VerifyReport,
) -> Result<(), StepError> {
    apply(plp, ev)?;
    apply(credit, ev)?;
    check::check_all(plp).map_err(tagged(Mode::Plp))?;
    check::check_all(credit).map_err(tagged(Mode::Credit))?;
    report.states_checked += 1;

    let (pc, cc) = (plp.counters(), credit.counters());
    let topology = |c: &crate::Counters| {
        (
            c.nodes_created,
            c.nodes_deleted,
            c.leaves_created,
            c.leaves_deleted,
            c.leaves_relabeled,
            c.explicit_extensions,
        )
    };
    if topology(pc) != topology(cc) || plp.active_point().proj != credit.active_point().proj {
        return Err((None, format!("modes diverged: {pc:?} vs {cc:?}")));
    }
    if pc.plp_field_writes_max_event > PLP_WRITE_BOUND {
        return Err((
            Some(Mode::Plp),
            format!("{} PLP writes in one event", pc.plp_field_writes_max_event),
        ));
    }
    if pc.churn() > CHURN_PER_SYMBOL * report.symbols_pushed {
        return Err((
            None,
            format!(
                "churn {} exceeds {}x{}",
                pc.churn(),
                CHURN_PER_SYMBOL,
                report.symbols_pushed
            ),
        ));
    }
    report.max_plp_writes_per_event = pc.plp_field_writes_max_event;
    report.max_credit_calls_per_event = cc.credit_update_calls_max_event;
    report.churn = pc.churn();

    let w = plp.window().contents();
    for p in sample_patterns(&w, plp.lrs_len() as usize, cfg, rng) {
        let want = oracle::naive_occurrences(&w, &p);
        for t in [&*plp, &*credit] {
            let got = t
                .find_all(&p)
                .map_err(|e| (Some(t.mode()), e.to_string()))?;
            if got.occurrences != want {
                return Err((
                    Some(t.mode()),
                    format!(
                        "find_all({:?}) in {:?} = {:?} ({:?}), expected {want:?}",
                        String::from_utf8_lossy(&p),
                        String::from_utf8_lossy(&w),
                        got.occurrences,
                        got.case
                    ),
                ));
            }
            if t.mode() == Mode::Plp {
                *report.match_cases.entry(got.case).or_default() += 1;
            }
        }
        report.patterns_checked += 1;
    }
    Ok(())
}

/// Patterns aimed at every matching case: the lrs itself, pieces of it,
/// substrings around its length, one longer suffix and random strings that
/// may not occur at all.
pub fn sample_patterns(w: &[u8], lrs: usize, cfg: &VerifyConfig, rng: &mut Lcg) -> Vec<Vec<u8>> {
    let n = w.len();
    let mut out = Vec::with_capacity(cfg.patterns_per_state);
    if n == 0 {
        return out;
    }
    let suffix = |len: usize| w[n - len..].to_vec();
    if lrs > 0 {
        out.push(suffix(lrs));
    }
    if lrs > 1 {
        let len = 1 + rng.below(lrs as u64 - 1) as usize;
        out.push(w[n - lrs..n - lrs + len].to_vec());
        let len = 1 + rng.below(lrs as u64 - 1) as usize;
        out.push(suffix(len));
    }
    if lrs < n {
        out.push(suffix(lrs + 1));
    }
    while out.len() + 1 < cfg.patterns_per_state {
        let max_len = (lrs + 2).min(n) as u64;
        let len = 1 + rng.below(max_len) as usize;
        let start = rng.below((n - len + 1) as u64) as usize;
        out.push(w[start..start + len].to_vec());
    }
    if out.len() < cfg.patterns_per_state {
        let len = 1 + rng.below(4) as usize;
        let alphabet = u64::from(cfg.sigma) + 1;
        out.push((0..len).map(|_| b'a' + rng.below(alphabet) as u8).collect());
    }
    out.truncate(cfg.patterns_per_state);
    out
}

/// Replays a logged stream into a fresh tree.
pub fn replay(window: usize, mode: Mode, log: &[StreamEvent]) -> crate::Result<SlidingSuffixTree> {
    let mut t = SlidingSuffixTree::new(window, mode)?;
    for ev in log {
        match *ev {
            StreamEvent::Append(c) => t.append(c)?,
            StreamEvent::DeleteFront => t.delete_front()?,
        }
    }
    Ok(t)
}
