//! Runs the numbered reproduction suite and prints one line per
//! criterion. `cargo test acceptance -- --nocapture` shows the table.

use turaev::suite;

#[test]
fn acceptance_criteria() {
    let results = suite::run_all();
    assert_eq!(results.len(), 10);
    let mut ok = true;
    for r in &results {
        println!(
            "criterion {:>2} [{}] {} -- {}",
            r.id,
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        ok &= r.pass;
    }
    assert!(ok, "some acceptance criteria failed");
}
