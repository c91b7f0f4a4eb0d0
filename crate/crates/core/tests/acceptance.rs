use dwork_core::suite;
use std::time::Instant;

#[test]
fn acceptance() {
    let seed = 0;
    let checks: Vec<(u32, fn(u64) -> suite::CheckOutcome)> = vec![
        (1, |_| suite::reciprocity_grid()),
        (2, |_| suite::parity_grid()),
        (3, |_| suite::lemma_chain()),
        (4, |_| suite::class_dictionary()),
        (5, suite::group_dictionary),
        (6, |_| suite::sym3_image()),
        (7, |_| suite::galois_verdicts()),
        (8, suite::diophantine),
        (9, |_| suite::weil_bounds()),
    ];
    let mut failed = Vec::new();
    for (n, check) in checks {
        let t = Instant::now();
        let out = check(seed);
        println!(
            "criterion {n}: {} - {} ({}) [{:.2?}]",
            if out.ok { "PASS" } else { "FAIL" },
            out.name,
            out.detail,
            t.elapsed()
        );
        if !out.ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
