use ncshuffle_core::verify::{run_suite, suites, SuiteConfig};

#[test]
fn every_suite_passes_at_default_size() {
    for (name, _) in suites() {
        let report = run_suite(name, &SuiteConfig::default()).unwrap();
        print!("{report}");
        assert!(report.passed(), "{report}");
    }
}
