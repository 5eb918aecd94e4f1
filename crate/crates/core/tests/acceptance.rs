//! One line per acceptance criterion. Every comparison is exact; the only
//! tolerances are the wall-clock limits below.

use std::process::ExitCode;
use std::time::Duration;

use ribbonlink::verify;

/// Time limit per criterion, in seconds.
const LIMITS: [(usize, u64); 11] = [(1, 60), (2, 1), (3, 30), (4, 300), (5, 300), (6, 60), (7, 60), (8, 30), (9, 300), (10, 60), (11, 10)];

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, secs) in LIMITS {
        let r = verify::run(id).expect("known suite");
        let limit = Duration::from_secs(secs);
        let ok = r.pass && r.elapsed < limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<30} {}  cases={} time={:.2?} limit={}s{}",
            id,
            r.name,
            if ok { "PASS" } else { "FAIL" },
            r.cases,
            r.elapsed,
            secs,
            if r.detail.is_empty() { String::new() } else { format!("  [{}]", r.detail) }
        );
    }
    println!("acceptance: {} of {} criteria pass", LIMITS.len() - failed, LIMITS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
