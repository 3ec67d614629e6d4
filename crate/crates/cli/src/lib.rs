//! Drivers behind the `slidingtree` binary, kept in a library so the
//! integration tests can call them without spawning a process.

use std::io::{BufRead, Write};
use std::time::Instant;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use slidingtree_core::worstcase::WorstCaseReport;
use slidingtree_core::{check, Counters, Mode, SlidingSuffixTree};

#[derive(Debug, Clone, Serialize)]
pub struct StreamReport {
    pub window: usize,
    pub mode: Mode,
    pub bytes: u64,
    pub appends: u64,
    pub deletions: u64,
    /// Lossy UTF-8 rendering of the window after the last byte.
    pub final_window: String,
    pub final_tail: u64,
    pub final_head: u64,
    pub lrs: u64,
    pub nodes: usize,
    pub leaves: usize,
    #[serde(flatten)]
    pub counters: Counters,
    pub checked: bool,
    pub elapsed_ms: f64,
}

/// Feeds `text` through a window of `window` bytes, deleting the front
/// symbol whenever the window is full. With `check` set, every invariant
/// sweep runs after every event and the first breach aborts the stream.
pub fn run_stream(
    text: &[u8],
    window: usize,
    mode: Mode,
    check: bool,
) -> anyhow::Result<StreamReport> {
    let mut t = SlidingSuffixTree::new(window, mode)?;
    let start = Instant::now();
    let (mut appends, mut deletions) = (0, 0);
    for (i, &c) in text.iter().enumerate() {
        if t.is_full() {
            t.delete_front()?;
            deletions += 1;
            if check {
                check::check_all(&t)
                    .with_context(|| format!("after deleting before byte {}", i + 1))?;
            }
        }
        t.append(c)?;
        appends += 1;
        if check {
            check::check_all(&t).with_context(|| format!("after appending byte {}", i + 1))?;
        }
    }
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(StreamReport {
        window,
        mode,
        bytes: text.len() as u64,
        appends,
        deletions,
        final_window: String::from_utf8_lossy(&t.window().contents()).into_owned(),
        final_tail: t.tail(),
        final_head: t.head(),
        lrs: t.lrs_len(),
        nodes: t.node_count(),
        leaves: t.leaf_count(),
        counters: *t.counters(),
        checked: check,
        elapsed_ms,
    })
}

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
enum Request {
    Append { sym: String },
    Slide { sym: String },
    Query { pattern: String },
    Stats,
}

/// State of one `interact` session. Each input line maps to exactly one
/// output object, and the output depends only on the line and the tree.
pub struct Session {
    tree: SlidingSuffixTree,
}

impl Session {
    pub fn new(window: usize, mode: Mode) -> anyhow::Result<Self> {
        Ok(Self {
            tree: SlidingSuffixTree::new(window, mode)?,
        })
    }

    pub fn tree(&self) -> &SlidingSuffixTree {
        &self.tree
    }

    /// Handles one protocol line. Errors are reported in-band.
    pub fn handle_line(&mut self, line: &str) -> Value {
        match self.try_handle(line) {
            Ok(v) => v,
            Err(e) => json!({ "error": format!("{e:#}") }),
        }
    }

    fn try_handle(&mut self, line: &str) -> anyhow::Result<Value> {
        let req: Request = serde_json::from_str(line).context("malformed request")?;
        match req {
            Request::Append { sym } => {
                self.tree.append(single_byte(&sym)?)?;
                Ok(self.ack())
            }
            Request::Slide { sym } => {
                let c = single_byte(&sym)?;
                self.tree.slide(c)?;
                Ok(self.ack())
            }
            Request::Query { pattern } => {
                let p = pattern.as_bytes();
                if p.is_empty() {
                    bail!("empty pattern");
                }
                let r = self.tree.find_all(p)?;
                let offset = self.tree.tail() - 1;
                let absolute: Vec<u64> = r.occurrences.iter().map(|k| k + offset).collect();
                Ok(json!({
                    "occurrences": r.occurrences,
                    "absolute": absolute,
                    "case": r.case,
                }))
            }
            Request::Stats => Ok(serde_json::to_value(self.tree.counters())?),
        }
    }

    fn ack(&self) -> Value {
        json!({
            "ok": true,
            "tail": self.tree.tail(),
            "head": self.tree.head(),
            "len": self.tree.len(),
        })
    }
}

fn single_byte(sym: &str) -> anyhow::Result<u8> {
    match sym.as_bytes() {
        [c] => Ok(*c),
        _ => bail!("sym must be exactly one byte, got {sym:?}"),
    }
}

/// Runs the JSONL loop until `input` is exhausted. Blank lines are skipped.
pub fn run_interact<R: BufRead, W: Write>(
    session: &mut Session,
    input: R,
    mut output: W,
) -> anyhow::Result<()> {
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let reply = session.handle_line(&line);
        serde_json::to_writer(&mut output, &reply)?;
        output.write_all(b"\n")?;
        output.flush()?;
    }
    Ok(())
}

/// Plain-text table of the events traced by a worst-case run.
pub fn worstcase_table(r: &WorstCaseReport) -> String {
    let mut s = format!(
        "n={} mode={} variant={} window={}\n",
        r.n,
        r.mode,
        format!("{:?}", r.variant).to_lowercase(),
        r.window
    );
    s.push_str("event  kind    plp_field_writes  credit_update_calls\n");
    for (i, e) in r.events.iter().enumerate() {
        s.push_str(&format!(
            "{:<6} {:<7} {:<17} {}\n",
            i + 1,
            format!("{:?}", e.kind).to_lowercase(),
            e.plp_field_writes,
            e.credit_update_calls
        ));
    }
    let counter = match r.mode {
        Mode::Plp => "plp_field_writes_last_event",
        Mode::Credit => "credit_update_calls_last_event",
    };
    s.push_str(&format!(
        "critical event: {counter} = {}\n",
        r.critical_cost()
    ));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_byte_rejects_longer_strings() {
        assert_eq!(single_byte("x").unwrap(), b'x');
        assert!(single_byte("").is_err());
        assert!(single_byte("xy").is_err());
    }

    #[test]
    fn unknown_op_is_an_error() {
        let mut s = Session::new(4, Mode::Plp).unwrap();
        assert!(s.handle_line(r#"{"op":"pop"}"#).get("error").is_some());
    }
}
