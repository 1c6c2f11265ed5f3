use std::collections::BTreeMap;
use std::io::Write;

use constacode_cli::report::Status;
use constacode_cli::suites::{checks, Ctx, Suite};

/// Runs the checks of the given criteria and prints one line per criterion.
fn run_criteria(keep: impl Fn(u8) -> bool, extended: bool) -> bool {
    let ctx = Ctx::default();
    let mut by_criterion: BTreeMap<u8, Vec<(String, Status, String, String)>> = BTreeMap::new();
    for check in checks(Suite::All, extended).iter().filter(|c| keep(c.criterion)) {
        let rec = check.run(&ctx);
        by_criterion
            .entry(rec.criterion)
            .or_default()
            .push((rec.id, rec.status, rec.expected, rec.computed));
    }
    // not captured by the harness
    let mut out = std::io::stdout().lock();
    let mut all_ok = true;
    for (criterion, recs) in &by_criterion {
        let failed: Vec<_> = recs.iter().filter(|r| r.1 == Status::Fail).collect();
        let flagged = recs.iter().filter(|r| r.1 == Status::Flagged).count();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {criterion}: {verdict} ({} checks", recs.len());
        if flagged > 0 {
            line += &format!(", {flagged} flagged");
        }
        line += ")";
        writeln!(out, "{line}").unwrap();
        for (id, _, expected, computed) in failed {
            writeln!(out, "    {id}: expected {expected}, computed {computed}").unwrap();
        }
        all_ok &= verdict == "PASS";
    }
    all_ok
}

#[test]
fn acceptance() {
    let ok = run_criteria(|c| (1..=9).contains(&c), false);
    assert!(ok, "at least one criterion failed");
}

#[test]
#[ignore = "enumerates 4^15 codewords; run with --ignored"]
fn acceptance_extended() {
    let ok = run_criteria(|c| c == 10, true);
    assert!(ok, "criterion 10 failed");
}
