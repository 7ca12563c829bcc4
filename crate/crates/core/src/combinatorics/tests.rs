use proptest::prelude::*;

use super::*;
use crate::field::Field;
use crate::oracle::{pairs_cover_box, standard_pairs_brute};
use crate::parse::parse_polynomial;
use crate::ring::Ring;

fn ideal(names: &[&str], gens: &[&str]) -> IdealHandle {
    let r = Ring::standard(names, Field::Rational).unwrap();
    let gens = gens
        .iter()
        .map(|g| parse_polynomial(&r, g).unwrap())
        .collect();
    IdealHandle::new(&r, gens).unwrap()
}

fn shown(i: &IdealHandle) -> Vec<String> {
    let names = i.ring().names().to_vec();
    standard_pairs(i)
        .unwrap()
        .iter()
        .map(|p| p.display(&names))
        .collect()
}

#[test]
fn standard_pair_examples() {
    assert_eq!(
        shown(&ideal(&["x", "y"], &["x^2", "x*y"])),
        vec!["(1, {y})", "(x, {})"]
    );
    assert_eq!(
        shown(&ideal(&["x", "y"], &["x*y"])),
        vec!["(1, {x})", "(1, {y})"]
    );
    assert_eq!(shown(&ideal(&["x"], &["x"])), vec!["(1, {})"]);
    assert_eq!(shown(&ideal(&["x", "y"], &[])), vec!["(1, {x, y})"]);
    assert!(shown(&ideal(&["x", "y"], &["1"])).is_empty());
}

#[test]
fn non_monomial_input_is_the_wrong_oracle() {
    let i = ideal(&["x", "y"], &["x^2 - y"]);
    assert!(matches!(standard_pairs(&i), Err(Error::WrongOracle(_))));
    assert!(matches!(decompose(&i), Err(Error::WrongOracle(_))));
    // A non-monomial generating set of a monomial ideal is fine: (x + y, y) = (x, y).
    let j = ideal(&["x", "y"], &["x + y", "y"]);
    assert_eq!(adeg_monomial(&j).unwrap(), vec![1, 0, 0]);
}

#[test]
fn adeg_examples() {
    assert_eq!(
        adeg_monomial(&ideal(&["x", "y"], &["x^2", "x*y"])).unwrap(),
        vec![1, 1, 0]
    );
    assert_eq!(
        adeg_monomial(&ideal(&["x", "y"], &["x*y"])).unwrap(),
        vec![0, 2, 0]
    );
    assert_eq!(
        adeg_monomial(&ideal(&["x", "y"], &[])).unwrap(),
        vec![0, 0, 1]
    );
}

fn prime_names(i: &IdealHandle, p: &[usize]) -> String {
    let n: Vec<&str> = p.iter().map(|&v| i.ring().names()[v].as_str()).collect();
    format!("({})", n.join(","))
}

#[test]
fn decomposition_examples() {
    let i = ideal(&["x", "y"], &["x^2", "x*y"]);
    let d = decompose(&i).unwrap();
    let comps: Vec<String> = d.irreducible.iter().map(|c| c.to_string()).collect();
    assert_eq!(comps, vec!["(x0^1)", "(x0^2, x1^1)"]);
    let assoc: Vec<String> = d.associated.iter().map(|p| prime_names(&i, p)).collect();
    assert_eq!(assoc, vec!["(x)", "(x,y)"]);
    let emb: Vec<String> = d.embedded.iter().map(|p| prime_names(&i, p)).collect();
    assert_eq!(emb, vec!["(x,y)"]);
    assert!(d.is_equidimensional());

    let d = decompose(&ideal(&["x", "y"], &["x*y"])).unwrap();
    assert_eq!(d.irreducible.len(), 2);
    assert!(d.embedded.is_empty());

    let d = decompose(&ideal(&["x", "y"], &["x^2"])).unwrap();
    assert_eq!(d.irreducible.len(), 1);
    assert_eq!(d.associated, vec![vec![0]]);
}

#[test]
fn m_leq_examples() {
    let i = ideal(&["x", "y"], &["x^2", "x*y"]);
    let j0 = m_leq_monomial(&i, 0).unwrap();
    assert!(j0.equals(&ideal(&["x", "y"], &["x"])).unwrap());
    // M_{<=0} = (x)/(x^2, xy) is one-dimensional over k.
    let sub = crate::hilbert::ideal_series(&i).unwrap();
    let big = crate::hilbert::ideal_series(&j0).unwrap();
    let len: i128 = (0..8).map(|d| sub.value(d, 0) - big.value(d, 0)).sum();
    assert_eq!(len, 1);
    assert!(m_leq_monomial(&i, 1).unwrap().is_unit().unwrap());
    let xy = ideal(&["x", "y"], &["x*y"]);
    assert!(m_leq_monomial(&xy, 0).unwrap().equals(&xy).unwrap());
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(prop::collection::vec(0u32..=4, n), 1..=4).prop_map(|gs| {
        gs.into_iter()
            .map(|e| {
                // Keep total degree at most 4.
                let mut left = 4u32;
                let capped: Vec<u32> = e
                    .into_iter()
                    .map(|x| {
                        let y = x.min(left);
                        left -= y;
                        y
                    })
                    .collect();
                Monomial::from_exponents(&capped)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairs_match_the_definition(gens in monomial_ideal(3)) {
        let pairs = standard_pairs_of(&gens, 3).unwrap();
        let gens = minimal_monomials(&gens);
        prop_assert_eq!(pairs_cover_box(&pairs, &gens, 3, 6), Ok(()));
        let mut brute = standard_pairs_brute(&gens, 3, 4);
        brute.sort();
        let mut ours: Vec<(Monomial, Vec<usize>)> = pairs.into_iter().map(|p| (p.u, p.z)).collect();
        ours.sort();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn decomposition_is_exact(gens in monomial_ideal(4)) {
        let d = decompose_monomials(&gens).unwrap();
        let gens = minimal_monomials(&gens);
        if gens.iter().any(|g| g.is_one()) {
            return Ok(());
        }
        // Membership on a box: in I iff in every component.
        for m in crate::oracle::exponent_box(4, 5) {
            let inside = gens.iter().any(|g| g.divides(&m));
            let all = d.irreducible.iter().all(|c| c.generators().iter().any(|g| g.divides(&m)));
            prop_assert_eq!(inside, all);
        }
        // Associated primes agree with the pair supports, and the count
        // bound holds.
        let pairs = standard_pairs_of(&gens, 4).unwrap();
        let mut from_pairs: Vec<Vec<usize>> = pairs
            .iter()
            .map(|p| (0..4).filter(|v| !p.z.contains(v)).collect())
            .collect();
        from_pairs.sort();
        from_pairs.dedup();
        let mut assoc = d.associated.clone();
        assoc.sort();
        prop_assert_eq!(&from_pairs, &assoc);
        prop_assert!(pairs.len() >= assoc.len());
        let all_one = from_pairs.len() == pairs.len();
        let r = Ring::standard(&["a", "b", "c", "e"], Field::Rational).unwrap();
        let lengths = local_lengths(&IdealHandle::from_monomials(&r, &gens)).unwrap();
        prop_assert_eq!(all_one, lengths.values().all(|&l| l == 1));
    }
}
