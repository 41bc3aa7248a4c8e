use qzeta::oracle::{hall_check, oracle_suite};
use qzeta::partitions::Partition;
use qzeta::report::Status;

#[test]
fn oracle_battery() {
    let reports = oracle_suite();
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}", r);
    }
    assert!(reports.len() > 150, "only {} checks ran", reports.len());
    for q in ["2", "3", "4"] {
        assert!(reports.iter().any(|r| r.params.get("q").map(String::as_str) == Some(q)));
    }
}

#[test]
fn out_of_cap_instances_are_skipped_not_failed() {
    let big = Partition::new(&[3, 2, 1]).unwrap();
    assert_eq!(hall_check(4, &big).status, Status::SkippedTooLarge);
}
