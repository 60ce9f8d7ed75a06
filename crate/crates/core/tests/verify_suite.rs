use clusterforge::checks::run;

#[test]
fn every_check_passes() {
    let results = run(None);
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} / {}: {}", r.module, r.name, r.outcome.as_ref().unwrap_err()))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}
