use qzeta::qkit::{all_pairs, bailey_check, classical_suite, CLASSICAL_IDS};

#[test]
fn classical_identities_at_deterministic_points() {
    let reports = classical_suite(30, 2024, 5);
    assert_eq!(reports.len(), 5 * CLASSICAL_IDS.len());
    for r in &reports {
        assert!(r.passed(), "{}", r);
    }
}

#[test]
fn bailey_pairs_to_six() {
    for p in all_pairs() {
        assert!(bailey_check(&p, 6).passed());
    }
}
