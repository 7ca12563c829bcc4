//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Run with `cargo test -p adeg-core --test acceptance`.

use std::process::ExitCode;

use adeg::checks::{self, SuiteResult, SEED};
use adeg::corpus::bundled;

fn main() -> ExitCode {
    let parallel = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8);
    let entries = bundled();
    let parsed = checks::parse_entries(&entries).expect("corpus parses");
    let pairs = checks::corpus_pairs(&parsed).expect("corpus pairs");
    let modules = checks::corpus_modules(&parsed).expect("corpus modules");

    let criteria: Vec<(&str, Box<dyn Fn() -> SuiteResult>)> = vec![
        (
            "groebner soundness on 200 seeded ideals",
            Box::new(|| checks::gb_soundness(200, SEED)),
        ),
        (
            "hilbert values against brute force",
            Box::new(|| checks::hilbert_oracle(&modules, 30)),
        ),
        (
            "difference calculus",
            Box::new(|| checks::delta_calculus(100, SEED, &modules)),
        ),
        (
            "ext route against standard pairs",
            Box::new(|| checks::monomial_adeg(50, SEED)),
        ),
        (
            "m-primary degeneration",
            Box::new(checks::clad_degeneration),
        ),
        (
            "sum identity on corpus pairs",
            Box::new(|| checks::prop_sum(&pairs)),
        ),
        (
            "verification on the full corpus",
            Box::new(|| checks::corpus_verification(&entries, parallel)),
        ),
        ("GG consistency gate", Box::new(|| checks::gg_gate(&pairs))),
        (
            "determinism of corpus JSON",
            Box::new(|| checks::determinism(&entries, parallel)),
        ),
    ];

    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let r = run();
        let status = if r.pass() { "pass" } else { "FAIL" };
        println!(
            "criterion {}: {status}  {title} ({} cases, {} ms)",
            k + 1,
            r.cases,
            r.millis
        );
        if !r.pass() {
            failed += 1;
            println!("{r}");
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
