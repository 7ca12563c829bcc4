use super::*;

#[test]
fn small_suites_pass() {
    let gb = gb_soundness(12, 1);
    assert!(gb.pass(), "{gb}");
    let adeg = monomial_adeg(6, 2);
    assert!(adeg.pass(), "{adeg}");
    let delta = delta_calculus(10, 3, &[]);
    assert!(delta.pass(), "{delta}");
}

#[test]
fn corpus_is_mined_for_pairs_and_modules() {
    let parsed = parse_entries(&bundled()).unwrap();
    let pairs = corpus_pairs(&parsed).unwrap();
    assert!(pairs.iter().any(|p| p.label.starts_with("strict-line")));
    let modules = corpus_modules(&parsed).unwrap();
    assert!(modules.len() >= 30, "{}", modules.len());
    assert!(modules.iter().any(|(_, m)| m.ring().is_bigraded()));
}

#[test]
fn failures_are_counted() {
    let mut s = SuiteResult::new("demo", 2);
    s.check(true, String::new);
    assert!(!s.pass());
    s.check(false, || "broken".into());
    assert!(!s.pass());
    assert!(s.to_string().starts_with("FAIL demo: 2 cases"));
}
