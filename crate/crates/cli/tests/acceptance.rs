//! Acceptance criteria 1-7, one pass/fail line each.
//!
//! A criterion may fail only on the sub-checks listed in `KNOWN_FAILURES`;
//! the run exits non-zero on any other failure, on an oracle
//! inconsistency, or when a listed sub-check starts passing.

use std::process::ExitCode;

use socle::selftest::{self, Options};

/// Sub-checks that fail for mathematical reasons, by criterion and line
/// prefix (after the `[FAILED] ` marker).
///
/// Two planes meeting in a point, `q = m` (adic depth 1): `e_1(q) = -1`,
/// `e_1(m) = 0`, so `e_1(I) - e_1(q) = 1`, which does not exceed `r_2 = 2`.
const KNOWN_FAILURES: &[(u8, &str)] = &[(4, "depth 1: main1")];

fn known(id: u8, line: &str) -> bool {
    KNOWN_FAILURES.iter().any(|(k, prefix)| *k == id && line.starts_with(prefix))
}

fn main() -> ExitCode {
    let opts = Options::default();
    let results = selftest::run(None, &opts);
    let mut unexpected = Vec::new();
    let mut seen = Vec::new();
    for r in &results {
        print!("{}", r.render());
        if r.inconsistent {
            unexpected.push(format!("criterion {}: oracle inconsistency", r.id));
        }
        for line in &r.lines {
            if let Some(rest) = line.strip_prefix("[FAILED] ") {
                if known(r.id, rest) {
                    seen.push((r.id, rest));
                } else {
                    unexpected.push(format!("criterion {}: {rest}", r.id));
                }
            }
        }
    }
    for (id, prefix) in KNOWN_FAILURES {
        if !seen.iter().any(|(k, l)| k == id && l.starts_with(prefix)) {
            unexpected.push(format!("criterion {id}: expected failure '{prefix}' now passes"));
        }
    }
    println!();
    for r in &results {
        let tag = if r.passed {
            ""
        } else if r.lines.iter().filter_map(|l| l.strip_prefix("[FAILED] ")).all(|l| known(r.id, l)) {
            " (known failure)"
        } else {
            ""
        };
        println!("{}{tag}", r.headline());
    }
    if results.len() != 7 {
        unexpected.push(format!("expected 7 criteria, ran {}", results.len()));
    }
    if unexpected.is_empty() {
        println!("acceptance: all results as expected");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
