use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use slidingtree_cli::{run_interact, run_stream, worstcase_table, Session};
use slidingtree_core::verify::{run_verify, VerifyConfig};
use slidingtree_core::worstcase::{run_worstcase, Variant};
use slidingtree_core::Mode;

#[derive(Parser)]
#[command(
    name = "slidingtree",
    version,
    about = "Suffix tree over a sliding window"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a file through the window and print a JSON stats report.
    Stream {
        #[arg(long)]
        window: usize,
        #[arg(long, default_value = "plp")]
        mode: Mode,
        /// Run every invariant sweep after every event (slow).
        #[arg(long)]
        check: bool,
        file: PathBuf,
    },
    /// Read JSONL requests from stdin and answer each on stdout.
    Interact {
        #[arg(long)]
        window: usize,
        #[arg(long, default_value = "plp")]
        mode: Mode,
    },
    /// Randomized differential check of both modes against the oracle.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        iters: u64,
        #[arg(long, default_value_t = 2)]
        sigma: u8,
        #[arg(long, default_value_t = 8)]
        window: usize,
        #[arg(long, default_value_t = 10)]
        patterns: usize,
    },
    /// Replay a construction that makes credit passing walk to the root.
    Worstcase {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "credit")]
        mode: Mode,
        #[arg(long, default_value = "insert")]
        variant: Variant,
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Stream {
            window,
            mode,
            check,
            file,
        } => {
            let text =
                std::fs::read(&file).with_context(|| format!("reading {}", file.display()))?;
            let report = run_stream(&text, window, mode, check)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Interact { window, mode } => {
            let mut session = Session::new(window, mode)?;
            run_interact(
                &mut session,
                io::stdin().lock(),
                BufWriter::new(io::stdout().lock()),
            )?;
        }
        Command::Verify {
            seed,
            iters,
            sigma,
            window,
            patterns,
        } => {
            anyhow::ensure!(
                sigma >= 1 && window >= 1 && patterns >= 1,
                "parameters must be positive"
            );
            let cfg = VerifyConfig {
                seed,
                iters,
                sigma,
                window,
                patterns_per_state: patterns,
            };
            let report = run_verify(&cfg);
            println!("{}", serde_json::to_string_pretty(&report)?);
            if let Some(f) = &report.failure {
                eprintln!("FAIL at event {}: {}", f.event_index, f.message);
                return Ok(ExitCode::FAILURE);
            }
            eprintln!(
                "PASS: {} events, {} patterns",
                report.events, report.patterns_checked
            );
        }
        Command::Worstcase {
            n,
            mode,
            variant,
            json,
        } => {
            anyhow::ensure!(n >= 2, "n must be at least 2");
            let report = run_worstcase(n, mode, variant)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", worstcase_table(&report));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
