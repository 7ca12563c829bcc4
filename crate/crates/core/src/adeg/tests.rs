use super::*;
use crate::field::Field;
use crate::parse::parse_polynomial;
use crate::ring::Ring;

fn ring(names: &[&str]) -> RingRef {
    Ring::standard(names, Field::Rational).unwrap()
}

fn polys(r: &RingRef, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter()
        .map(|g| parse_polynomial(r, g).unwrap())
        .collect()
}

fn ideal(r: &RingRef, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(r, polys(r, gens)).unwrap()
}

fn quotient(r: &RingRef, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::cyclic(&ideal(r, gens))
}

fn mv(c: &[i128]) -> MultiplicityVector {
    MultiplicityVector::new(c.to_vec())
}

#[test]
fn graded_examples() {
    let r = ring(&["x", "y"]);
    let free = quotient(&r, &[]);
    assert_eq!(
        (0..=2)
            .map(|i| adeg_graded(&free, i).unwrap())
            .collect::<Vec<_>>(),
        vec![0, 0, 1]
    );
    let m = quotient(&r, &["x^2", "x*y"]);
    assert_eq!(adeg_graded(&m, 1).unwrap(), 1);
    assert_eq!(adeg_graded(&m, 0).unwrap(), 1);
    let rep = adeg_report(&m).unwrap();
    assert_eq!(rep.values_json().to_string(), r#"{"1":1,"0":1}"#);
    assert_eq!(rep.entries[0].checks, vec![Provenance::MonomialOracle]);
    let m = quotient(&r, &["x*y"]);
    assert_eq!(adeg_graded(&m, 1).unwrap(), 2);
    assert_eq!(adeg_graded(&m, 0).unwrap(), 0);
    assert!(matches!(
        adeg_graded(&quotient(&r, &["y^2 - x^3"]), 1),
        Err(Error::NotHomogeneous(_))
    ));
}

#[test]
fn bigraded_examples() {
    let b = Ring::bigraded(&["x"], &["y"], Field::Rational).unwrap();
    let free = ModulePresentation::cyclic(&IdealHandle::zero(&b));
    assert_eq!(biadeg(&free, 2).unwrap(), mv(&[0, 1, 0]));
    assert!(biadeg(&free, 1).unwrap().is_zero());
    assert!(biadeg(&free, 0).unwrap().is_zero());
    let x2 = IdealHandle::new(&b, vec![parse_polynomial(&b, "x^2").unwrap()]).unwrap();
    assert_eq!(
        biadeg(&ModulePresentation::cyclic(&x2), 1).unwrap(),
        mv(&[2, 0])
    );
    let zero = ModulePresentation::cyclic(&IdealHandle::unit(&b));
    for i in 0..3 {
        assert!(biadeg(&zero, i).unwrap().is_zero());
    }
}

#[test]
fn gmult_examples() {
    let r = ring(&["x"]);
    let zero = IdealHandle::zero(&r);
    assert_eq!(gmult(&zero, &polys(&r, &["x^2"]), 1).unwrap(), mv(&[2, 0]));
    assert!(gmult(&zero, &polys(&r, &["x^2"]), 0).unwrap().is_zero());
    // m-adic: the ordinary multiplicity in component 0.
    let r = ring(&["x", "y"]);
    let j = ideal(&r, &["x^2 - y^3"]);
    let m = polys(&r, &["x", "y"]);
    assert_eq!(gmult(&j, &m, 1).unwrap(), mv(&[2, 0]));
}

#[test]
fn ladeg_examples() {
    let r = ring(&["x", "y"]);
    let m = polys(&r, &["x", "y"]);
    let j = ideal(&r, &["x^2", "x*y"]);
    let l = ladeg(&j, &m, 0, None).unwrap();
    assert_eq!(l.value.sum(), 1);
    assert_eq!(l.value, mv(&[1]));
    assert_eq!(l.provenance, Provenance::Remark);
    assert!(l.checks.contains(&Provenance::Definition));
    assert!(l.checks.contains(&Provenance::LocalDuality));
    assert_eq!(ladeg(&j, &m, 1, None).unwrap().value, mv(&[1, 0]));

    // Prime J: ladeg at the top equals gmult.
    let zero = IdealHandle::zero(&r);
    let i = polys(&r, &["x^2", "y"]);
    assert_eq!(
        ladeg(&zero, &i, 2, None).unwrap().value,
        gmult(&zero, &i, 2).unwrap()
    );
    assert!(ladeg(&zero, &i, 1, None).unwrap().value.is_zero());

    // Non-monomial J without components: local duality alone.
    let cusp = ideal(&r, &["y^2 - x^3"]);
    let l = ladeg(&cusp, &m, 1, None).unwrap();
    assert_eq!(l.provenance, Provenance::LocalDuality);
    assert_eq!(l.value, mv(&[2, 0]));

    // Supplied components: the definition, checked by local duality.
    let comps = ComponentData {
        primes: vec![(cusp.clone(), 1)],
    };
    let l = ladeg(&cusp, &m, 1, Some(&comps)).unwrap();
    assert_eq!(l.provenance, Provenance::Definition);
    assert_eq!(l.checks, vec![Provenance::LocalDuality]);
}

#[test]
fn local_degrees() {
    let r = ring(&["x", "y"]);
    let cusp = quotient(&r, &["y^2 - x^3"]);
    assert_eq!(adeg_local(&cusp, 1).unwrap(), 2);
    assert_eq!(adeg_local(&cusp, 0).unwrap(), 0);
    // A line through the origin and an embedded point on a curved component.
    let j = ideal(&r, &["x*y - x^3", "x^2 - x^3"]);
    let c = ComponentData {
        primes: vec![(ideal(&r, &["x"]), 1), (ideal(&r, &["x", "y"]), 1)],
    };
    for i in 0..=1 {
        assert_eq!(
            adeg_local(&ModulePresentation::cyclic(&j), i).unwrap(),
            adeg_from_components(&c, i).unwrap()
        );
    }
}

#[test]
fn verify_examples() {
    let r = ring(&["x"]);
    let rec = verify_strict(
        &IdealHandle::zero(&r),
        &polys(&r, &["x^2"]),
        &VerifyOptions::default(),
    )
    .unwrap();
    // adeg_1(gr_I A) = adeg_1(k[x,u]/(x^2)) = 2 against adeg_1(k[x]) = 1.
    assert_eq!(rec.corollary1[1], Comparison::at_least(1, 2, 1));
    assert!(rec.corollary1[1].lhs > rec.corollary1[1].rhs);
    assert_eq!(rec.theorem[1], Comparison::at_least(1, 2, 2));

    let r = ring(&["x", "y"]);
    let m = polys(&r, &["x", "y"]);
    let rec = verify_strict(&ideal(&r, &["y^2 - x^3"]), &m, &VerifyOptions::default()).unwrap();
    assert_eq!(rec.corollary1[1], Comparison::at_least(1, 2, 2));
    assert_eq!(rec.theorem[1], Comparison::at_least(1, 2, 2));
    assert_eq!(
        rec.prop_clad.as_ref().map(|c| (c.samuel, c.gmult.clone())),
        Some((2, mv(&[2, 0])))
    );

    let rec = verify_strict(&ideal(&r, &["x^2", "x*y"]), &m, &VerifyOptions::default()).unwrap();
    for c in &rec.corollary1 {
        assert_eq!(c.lhs, c.rhs);
    }
    assert_eq!(rec.corollary2.equidimensional, Some(true));
    assert_eq!(rec.corollary2.embedded_a, vec![0]);
    assert_eq!(rec.corollary2.embedded_gr, vec![0]);

    // m-primary I: degeneration to the Samuel multiplicity.
    let rec = verify_strict(
        &IdealHandle::zero(&r),
        &polys(&r, &["x^2", "y^3"]),
        &VerifyOptions::default(),
    )
    .unwrap();
    let c = rec.prop_clad.unwrap();
    assert_eq!(c.samuel, 6);
    assert_eq!(c.gmult, mv(&[6, 0, 0]));
}

#[test]
fn failing_records_are_reported() {
    let mut rec = VerificationRecord {
        dim: 0,
        theorem: vec![Comparison::at_least(0, 1, 2)],
        corollary1: Vec::new(),
        corollary2: EmbeddedCheck {
            equidimensional: None,
            embedded_a: Vec::new(),
            embedded_gr: Vec::new(),
            holds: true,
        },
        prop_sum: Vec::new(),
        prop_clad: None,
        dimension_transfer: (0, 0),
        ladeg: Vec::new(),
        gmult: Vec::new(),
        pass: true,
    };
    rec.pass = rec.failures().is_empty();
    assert!(!rec.pass);
    assert_eq!(rec.failures(), vec!["theorem at r = 0: 1 < 2".to_string()]);
}

fn monomial_ideal(n: usize) -> impl proptest::strategy::Strategy<Value = Vec<Vec<u32>>> {
    use proptest::prelude::*;
    prop::collection::vec(prop::collection::vec(0u32..3, n), 1..4)
}

fn from_exps(r: &RingRef, gens: &[Vec<u32>]) -> IdealHandle {
    let monos: Vec<crate::monomial::Monomial> = gens
        .iter()
        .filter(|e| e.iter().any(|&x| x > 0))
        .map(|e| crate::monomial::Monomial::from_exponents(e))
        .collect();
    IdealHandle::from_monomials(r, &monos)
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

    #[test]
    fn monomial_pairs_pass_every_check(j in monomial_ideal(3), i in monomial_ideal(3)) {
        let r = ring(&["x", "y", "z"]);
        let j = from_exps(&r, &j);
        let i = from_exps(&r, &i);
        proptest::prop_assume!(!j.is_unit().unwrap() && !i.is_zero() && !i.is_unit().unwrap());
        let rec = verify(&j, i.gens(), &VerifyOptions::default()).unwrap();
        proptest::prop_assert!(rec.pass, "{:?}", rec.failures());
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

    // Binomial J through the origin: only local duality applies.
    #[test]
    fn binomial_pairs_pass_every_check(a in monomial_ideal(2), b in monomial_ideal(2), i in monomial_ideal(2)) {
        let r = ring(&["x", "y"]);
        let i = from_exps(&r, &i);
        let (a, b) = (from_exps(&r, &a), from_exps(&r, &b));
        let gens: Vec<Polynomial> = a.gens().iter().zip(b.gens()).map(|(p, q)| p - q).filter(|p| !p.is_zero()).collect();
        let j = IdealHandle::new(&r, gens).unwrap();
        proptest::prop_assume!(!i.is_zero() && !i.is_unit().unwrap());
        proptest::prop_assume!(local_dimension(&j).unwrap() >= 0);
        let rec = verify(&j, i.gens(), &VerifyOptions::default()).unwrap();
        proptest::prop_assert!(rec.pass, "{:?}", rec.failures());
    }
}
