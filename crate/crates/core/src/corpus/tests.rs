use super::*;

#[test]
fn bundled_entries_are_well_formed() {
    let all = bundled();
    assert!(all.len() >= 36, "{}", all.len());
    let mut ids: Vec<&str> = all.iter().map(|e| e.id.as_str()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), all.len());
    for e in &all {
        e.parse().unwrap();
    }
}

#[test]
fn random_entries_are_seeded() {
    let a = random_monomial_entries(6, 7);
    let b = random_monomial_entries(6, 7);
    assert_eq!(
        a.iter().map(|e| &e.script).collect::<Vec<_>>(),
        b.iter().map(|e| &e.script).collect::<Vec<_>>()
    );
}

#[test]
fn local_tasks_need_the_certificate() {
    let e = CorpusEntry::new(
        "bad",
        "ring S = Q[x];\nideal J = x^2;\nideal I = x;\ntask gg J I;\n",
    );
    assert!(e.parse().is_err());
}

#[test]
fn small_run_matches_expectations() {
    let entries: Vec<CorpusEntry> = worked_examples().into_iter().take(4).collect();
    let cfg = RunConfig::default();
    let run = run_corpus(&entries, &cfg, 2).unwrap();
    for e in &run.entries {
        assert!(
            e.pass(),
            "{}: {:?}",
            e.id,
            e.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
        );
    }
    assert_eq!(run.code, 0);
    let csv = run.to_csv().unwrap();
    assert!(csv.starts_with("entry,task,i,value,status\n"));
    assert!(csv.contains("adeg-x2-xy,adeg J,1,1,pass"), "{csv}");
    let again = run_corpus(&entries, &cfg, 1).unwrap();
    assert_eq!(run.to_json(), again.to_json());
}
