mod common;

use common::field;
use tilting::algebra::SearchParams;
use tilting::golden::verify_tables;
use tilting::tilt::DEFAULT_CAP;

#[test]
fn tables_hold_over_other_primes() {
    for p in [3, 5] {
        let report = verify_tables(field(p), SearchParams::default(), DEFAULT_CAP).unwrap();
        assert!(report.checks.len() > 80);
        assert!(report.passed(), "p = {p}:\n{}", report.lines().join("\n"));
        assert_eq!(report.failures().count(), 0);
    }
}
