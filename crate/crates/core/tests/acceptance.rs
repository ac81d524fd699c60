//! Acceptance run: one line per criterion, nonzero exit if any fails.
//! `cargo test -p fusion-sos --test acceptance [-- ID...]`

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fusion_sos::suite;

fn budget(id: usize) -> Option<Duration> {
    match id {
        1 | 2 => Some(Duration::from_secs(1)),
        3 => Some(Duration::from_secs(120)),
        7 => Some(Duration::from_secs(300)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in suite::standard() {
        if !only.is_empty() && !only.contains(&c.id) {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = budget(c.id).filter(|b| elapsed > *b);
        let ok = outcome.passed() && over.is_none();
        if !ok {
            failed += 1;
        }
        println!(
            "[{:>2}] {} {} ({} cases, {} failed) {:.2}s",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            outcome.name,
            outcome.cases,
            outcome.failures.len(),
            elapsed.as_secs_f64()
        );
        for line in outcome.details() {
            println!("{line}");
        }
        if let Some(b) = over {
            println!("    over the {b:?} time budget");
        }
    }
    println!("{failed} criteria failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
