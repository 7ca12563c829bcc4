use proptest::prelude::*;

use super::*;

#[test]
fn minimal_script() {
    let s = parse_session("ring S=Q[x,y]; ideal J=x^2,x*y; task adeg J;").unwrap();
    assert_eq!(s.ring.xs, vec!["x", "y"]);
    assert_eq!(s.ideals.len(), 1);
    assert_eq!(s.ideals[0].gens.len(), 2);
    assert_eq!(
        s.tasks,
        vec![Task {
            kind: TaskKind::Adeg,
            args: vec!["J".into()]
        }]
    );
}

fn parse_err(text: &str) -> (usize, usize, usize, String) {
    match parse_session(text) {
        Err(Error::Parse {
            line,
            column,
            offset,
            message,
        }) => (line, column, offset, message),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn missing_semicolon_is_located() {
    let (line, column, offset, msg) = parse_err("ring S = Q[x,y]\nideal J = x;");
    assert_eq!((line, column, offset), (2, 1, 16));
    assert!(msg.contains("expected ';'"), "{msg}");
    let (_, _, offset, _) = parse_err("ring S = Q[x,y]; ideal J = x^2, x*y task adeg J;");
    assert_eq!(offset, 36);
}

#[test]
fn names_are_resolved() {
    let (_, _, offset, msg) = parse_err("ring S = Q[x]; ideal J = x; task verify J I;");
    assert_eq!(offset, 42);
    assert!(msg.contains("undeclared ideal 'I'"));
    let (_, _, _, msg) = parse_err("ring S = Q[x]; ideal J = x; ideal J = x^2;");
    assert!(msg.contains("duplicate name"));
    let (_, _, offset, msg) = parse_err("ring S = Q[x]; ideal J = x + z;");
    assert_eq!(offset, 29);
    assert!(msg.contains("unknown variable 'z'"));
    let (_, _, _, msg) = parse_err("ring S = Q[x]; ideal J = x; task frob J;");
    assert!(msg.contains("unknown task"));
    let (_, _, _, msg) = parse_err("ring S = Q[x]; ideal J = x; task gg J;");
    assert!(msg.contains("takes 2"));
    let (_, _, _, msg) = parse_err("ideal J = x;");
    assert!(msg.contains("ring must be declared first"));
}

#[test]
fn multi_line_positions() {
    let text = "ring S = Q[x,y];\n# a comment\nideal J = x^2,\n    x*q;\n";
    let (line, column, _, _) = parse_err(text);
    assert_eq!((line, column), (4, 7));
}

#[test]
fn full_grammar_round_trips() {
    let text = "
        ring R = Zp(32003)[x, y | u];   # bigraded
        option order = lex;
        option max_deg = 12;
        ideal J = x^2 - 3/2*y, x*u;     # trailing comment
        ideal P = x, y;
        ideal Z = ;
        certify origin J;
        certify equidimensional J;
        components J = P:2;
        task gb J; task hilbert J; task verify J P;
    ";
    let s = parse_session(text).unwrap();
    assert_eq!(s.ring.field, Field::Prime(32003));
    assert_eq!(s.ring.ys, vec!["u"]);
    assert!(s.ideal("Z").unwrap().gens.is_empty());
    assert_eq!(s.components[0].parts, vec![("P".to_string(), 2)]);
    assert!(s.certified(CertKind::Origin, "J"));
    let again = parse_session(&s.emit()).unwrap();
    assert_eq!(again, s);
    assert_eq!(again.emit(), s.emit());
}

fn script() -> impl Strategy<Value = String> {
    let poly = prop::collection::vec((-3i32..4, 0u32..3, 0u32..3), 1..4).prop_map(|ts| {
        ts.iter()
            .map(|(c, a, b)| format!("({c})*x^{a}*y^{b}"))
            .collect::<Vec<_>>()
            .join(" + ")
    });
    (prop::collection::vec(poly, 1..4), prop::bool::ANY, 0usize..8).prop_map(|(gens, prime, k)| {
        let field = if prime { "Zp(101)" } else { "Q" };
        let kind = TaskKind::ALL[k];
        let args = if kind.arity() == 1 { "J" } else { "J I" };
        format!(
            "ring S = {field}[x, y];\nideal J = {};\nideal I = x, y;\ncertify origin J;\ntask {kind} {args};\n",
            gens.join(", ")
        )
    })
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(text in script()) {
        let s = parse_session(&text).unwrap();
        let again = parse_session(&s.emit()).unwrap();
        prop_assert_eq!(&again, &s);
    }
}
