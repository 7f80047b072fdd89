//! Runs every acceptance criterion and prints one PASS/FAIL line per
//! criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hk_core::suite::{criterion, criterion_title, CRITERIA};

/// Wall-clock budgets for the criteria that have one.
fn budget(n: usize) -> Option<Duration> {
    match n {
        // four examples at 1 ms each
        1 => Some(Duration::from_millis(4)),
        3 => Some(Duration::from_secs(10)),
        5 => Some(Duration::from_secs(1)),
        9 => Some(Duration::from_secs(5)),
        11 => Some(Duration::from_secs(30)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let seed = std::env::var("HK_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let mut failed = Vec::new();
    for n in 1..=CRITERIA {
        let start = Instant::now();
        let outcome = criterion(n, seed);
        let elapsed = start.elapsed();
        let mut problems: Vec<String> = Vec::new();
        let checks = match &outcome {
            Ok(r) => {
                problems.extend(
                    r.failures()
                        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.got)),
                );
                r.checks.len()
            }
            Err(e) => {
                problems.push(format!("error: {e}"));
                0
            }
        };
        if let Some(limit) = budget(n) {
            if elapsed > limit {
                problems.push(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2}: {tag}  {} ({checks} checks, {} ms)",
            criterion_title(n),
            elapsed.as_millis()
        );
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("all {CRITERIA} criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
