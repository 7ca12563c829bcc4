use super::*;
use crate::session::parse_session;

fn run(text: &str) -> RunReport {
    run_script(&parse_session(text).unwrap(), &RunConfig::default()).unwrap()
}

#[test]
fn adeg_json_shape() {
    let r = run("ring S = Q[x,y]; ideal J = x^2, x*y; task adeg J;");
    assert_eq!(r.code, 0);
    let text = render(&r.to_json());
    assert!(
        text.contains("\"adeg\": {\n        \"1\": 1,\n        \"0\": 1\n      }"),
        "{text}"
    );
    let v = r.to_json();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        vec!["ring", "tasks", "results", "timings", "provenance"]
    );
    assert_eq!(r.to_json()["timings"], json!({}));
}

#[test]
fn every_task_kind_runs() {
    let r = run("
        ring S = Q[x, y];
        ideal J = x^2, x*y;
        ideal m = x, y;
        certify origin J;
        task gb J; task hilbert J; task stdpairs J; task adeg J;
        task gg J m; task gmult J m; task ladeg J m; task verify J m;
    ");
    for o in &r.outcomes {
        assert!(o.value.is_ok(), "{}: {:?}", o.task, o.value);
    }
    let v = r.to_json();
    assert_eq!(v["results"][2]["pairs"], json!(["(1, {y})", "(x, {})"]));
    assert_eq!(v["results"][6]["ladeg"], json!({"1": [1, 0], "0": [1]}));
    assert_eq!(v["results"][7]["record"]["pass"], json!(true));
}

#[test]
fn local_tasks_need_the_certificate() {
    let r = run("ring S = Q[x]; ideal J = 0; ideal I = x^2; task verify J I;");
    assert_eq!(r.code, 1);
    assert!(r.outcomes[0]
        .value
        .as_ref()
        .unwrap_err()
        .contains("certify origin J"));
}

#[test]
fn caps_map_to_exit_three() {
    let text = "ring S = Q[x,y,z]; option max_deg = 2; ideal J = x^2 + y*z, x*y + z^2; task gb J;";
    let r = run(text);
    assert_eq!(r.code, 3);
    assert!(r.outcomes[0]
        .value
        .as_ref()
        .unwrap_err()
        .starts_with("resource-limit"));
}

#[test]
fn inhomogeneous_and_bigraded_input() {
    let r = run("ring S = Q[x,y]; ideal J = y^2 - x^3; task adeg J; task hilbert J;");
    let v = r.to_json();
    assert_eq!(v["results"][0]["adeg"], json!({"1": 2, "0": 0}));
    assert_eq!(v["results"][1]["multiplicity"], json!(2));
    let r = run("ring T = Q[x | y]; ideal J = x^2; task adeg J;");
    assert_eq!(
        r.to_json()["results"][0]["biadeg"],
        json!({"1": [2, 0], "0": [0]})
    );
}

#[test]
fn worst_code_ordering() {
    assert_eq!(worst(1, 3), 3);
    assert_eq!(worst(3, 2), 2);
    assert_eq!(worst(2, 1), 2);
    assert_eq!(worst(0, 1), 1);
}

#[test]
fn reproducer_text_is_a_valid_script() {
    let s = parse_session(
        "ring S = Q[x,y]; ideal J = x^2, x*y; ideal m = x, y; ideal K = y; certify origin J; task adeg K; task verify J m;",
    )
    .unwrap();
    let ring = s.ring.build().unwrap();
    let j = vec![crate::parse::parse_polynomial(&ring, "x^2").unwrap()];
    let text = reproducer_script(&s, &s.tasks[1], &j, &s.ideal("m").unwrap().gens);
    let back = parse_session(&text).unwrap();
    assert_eq!(back.ideals.len(), 2);
    assert_eq!(back.tasks.len(), 1);
    assert_eq!(back.ideal("J").unwrap().gens, j);
    let dir = std::env::temp_dir().join(format!("adeg-test-{}", std::process::id()));
    let p = write_reproducer(&dir, &text).unwrap();
    assert_eq!(std::fs::read_to_string(&p).unwrap(), text);
    std::fs::remove_dir_all(&dir).unwrap();
}
