use proptest::prelude::*;

use super::*;
use crate::field::Field;
use crate::parse::parse_polynomial;
use crate::ring::Ring;

fn ring(names: &[&str]) -> RingRef {
    Ring::standard(names, Field::Rational).unwrap()
}

fn p(r: &RingRef, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn ideal(r: &RingRef, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(r, gens.iter().map(|g| p(r, g)).collect()).unwrap()
}

fn same(a: &IdealHandle, b: &IdealHandle) -> bool {
    a.equals(b).unwrap()
}

#[test]
fn lex_basis_contains_eliminant() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
    let gb = i.groebner_basis(&TermOrder::Lex).unwrap();
    // Certificate: y^3 - 1 = -y^2 (x^2 - y) + (x y + 1)(x y - 1).
    let cert = &(&p(&r, "-y^2") * &p(&r, "x^2 - y")) + &(&p(&r, "x*y + 1") * &p(&r, "x*y - 1"));
    assert_eq!(cert, p(&r, "y^3 - 1"));
    assert!(gb.elements().contains(&p(&r, "y^3 - 1")));
}

#[test]
fn monomial_input_is_minimalized() {
    let r = ring(&["x", "y"]);
    let gb = ideal(&r, &["x^2", "x^3", "x*y", "x^2*y"])
        .groebner_basis(&TermOrder::Degrevlex)
        .unwrap();
    assert_eq!(gb.elements(), &[p(&r, "x*y"), p(&r, "x^2")]);
}

#[test]
fn zero_ideal_has_empty_basis() {
    let r = ring(&["x"]);
    let i = IdealHandle::new(&r, vec![Polynomial::zero(&r)]).unwrap();
    assert!(i.groebner_basis(&TermOrder::Degrevlex).unwrap().is_empty());
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y"]);
    let gb = groebner_basis(&r, &[p(&r, "x^2 - y")], &TermOrder::Degrevlex).unwrap();
    assert_eq!(normal_form(&p(&r, "x^2"), &gb).unwrap(), p(&r, "y"));

    let i = ideal(&r, &["x^2 + y", "x*y - 1"]);
    let g = &(&p(&r, "x + 3") * &p(&r, "x^2 + y")) + &(&p(&r, "y^2 - x") * &p(&r, "x*y - 1"));
    assert!(i.contains(&g).unwrap());
    assert!(!i.contains(&p(&r, "x + 1")).unwrap());
}

#[test]
fn quotients_and_saturation() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    assert!(same(
        &i.quotient(&p(&r, "x")).unwrap(),
        &ideal(&r, &["x", "y"])
    ));
    // x^2 * 1 lies in I, so the saturation is the unit ideal.
    assert!(i.saturate(&p(&r, "x")).unwrap().is_unit().unwrap());
    assert!(same(&i.quotient(&p(&r, "1")).unwrap(), &i));
    // (x^2, xy) : y^inf = (x^2, xy) : y = (x)
    assert!(same(&i.saturate(&p(&r, "y")).unwrap(), &ideal(&r, &["x"])));
    assert_eq!(
        i.quotient(&Polynomial::zero(&r)).unwrap_err(),
        Error::InvalidDivisor("division by the zero polynomial".into())
    );
    assert!(matches!(
        i.saturate(&Polynomial::zero(&r)),
        Err(Error::InvalidDivisor(_))
    ));
}

#[test]
fn elimination() {
    let r = ring(&["t", "x", "y"]);
    assert!(ideal(&r, &["y - t*x"]).eliminate(&[0]).unwrap().is_zero());
    let i = ideal(&r, &["x^2", "y - x"]);
    assert!(same(&i.eliminate(&[]).unwrap(), &i));
}

/// Every binomial in the kernel of `x -> x, y1 -> t x^2, y2 -> t x^3` up to
/// degree 4 lies in the eliminated ideal, and the generators map to zero.
#[test]
fn elimination_matches_toric_kernel() {
    let r = ring(&["t", "x", "y1", "y2"]);
    let i = ideal(&r, &["y1 - t*x^2", "y2 - t*x^3"]);
    let e = i.eliminate(&[0]).unwrap();
    let image = |a: u32, b1: u32, b2: u32| (a + 2 * b1 + 3 * b2, b1 + b2);
    let mut monos = Vec::new();
    for a in 0..=4u32 {
        for b1 in 0..=4 - a {
            for b2 in 0..=4 - a - b1 {
                monos.push((a, b1, b2));
            }
        }
    }
    let mono = |m: (u32, u32, u32)| {
        Polynomial::monomial(
            &r,
            Monomial::from_exponents(&[0, m.0, m.1, m.2]),
            Field::Rational.one(),
        )
    };
    for &u in &monos {
        for &v in &monos {
            if u < v && image(u.0, u.1, u.2) == image(v.0, v.1, v.2) {
                assert!(e.contains(&(&mono(u) - &mono(v))).unwrap(), "{u:?} {v:?}");
            }
        }
    }
    let t = p(&r, "t");
    let images = [t.clone(), p(&r, "x"), p(&r, "t*x^2"), p(&r, "t*x^3")];
    for g in e.gens() {
        assert!(g.support_vars().iter().all(|&v| v != 0));
        assert!(g.substitute(&r, &images).is_zero());
    }
    assert!(same(&e, &ideal(&r, &["x*y1 - y2"])));
}

#[test]
fn intersections() {
    let r = ring(&["x", "y"]);
    let x = ideal(&r, &["x"]);
    let y = ideal(&r, &["y"]);
    assert!(same(&x.intersect(&y).unwrap(), &ideal(&r, &["x*y"])));
    let i = ideal(&r, &["x^2 - y", "x*y^2"]);
    assert!(same(&i.intersect(&i).unwrap(), &i));
    assert!(same(&i.intersect(&IdealHandle::unit(&r)).unwrap(), &i));
    // Principal ideals meet in the lcm.
    let f = ideal(&r, &["x^2*y"]);
    let g = ideal(&r, &["x*y^3 + x^2*y^3"]);
    assert!(same(
        &f.intersect(&g).unwrap(),
        &ideal(&r, &["x^2*y^3 + x^3*y^3"])
    ));
}

#[test]
fn bigraded_rings_support_eliminations() {
    let r = Ring::bigraded(&["x"], &["y"], Field::Rational).unwrap();
    let i = IdealHandle::new(&r, vec![p(&r, "x*y"), p(&r, "x^2")]).unwrap();
    let q = i.saturate(&p(&r, "y")).unwrap();
    assert!(same(&q, &IdealHandle::new(&r, vec![p(&r, "x")]).unwrap()));
}

fn koszul_like(r: &RingRef, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::cyclic(&ideal(r, gens))
}

#[test]
fn syzygy_examples() {
    let r = ring(&["x", "y"]);
    let gb = koszul_like(&r, &["x", "y"])
        .groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))
        .unwrap();
    let syz = syzygies(&gb).unwrap();
    assert_eq!(syz.relations().len(), 1);
    let col = &syz.relations()[0];
    let cols = gb.columns();
    let combo = &(&col[0] * &cols[0][0]) + &(&col[1] * &cols[1][0]);
    assert!(combo.is_zero());
    assert!(col.iter().all(|e| e.degree() == Some(1)));

    let single = koszul_like(&r, &["x^2 + y"])
        .groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))
        .unwrap();
    assert!(syzygies(&single).unwrap().relations().is_empty());

    let gb = koszul_like(&r, &["x^2", "x*y"])
        .groebner_basis(&ModuleOrder::pot(TermOrder::Degrevlex))
        .unwrap();
    let syz = syzygies(&gb).unwrap();
    let cols = gb.columns();
    for c in syz.relations() {
        let combo = &(&c[0] * &cols[0][0]) + &(&c[1] * &cols[1][0]);
        assert!(combo.is_zero());
    }
    // (y, -x) against (x^2, xy), in basis order xy < x^2.
    let want = [p(&r, "-x"), p(&r, "y")];
    assert!(syz
        .relations()
        .iter()
        .any(|c| c[..] == want[..] || c[..] == [-&want[0], -&want[1]][..]));
}

#[test]
fn resolution_examples() {
    let r = ring(&["x"]);
    let cx = free_resolution(&koszul_like(&r, &["x"]), 5).unwrap();
    assert_eq!(cx.ranks(), vec![1, 1]);

    let r = ring(&["x", "y"]);
    let cx = free_resolution(&koszul_like(&r, &["x", "y"]), 5).unwrap();
    assert_eq!(cx.ranks(), vec![1, 2, 1]);
    assert!(cx.compositions_vanish());
    assert!(cx.is_minimal());

    let cx = free_resolution(&koszul_like(&r, &["x^2", "x*y"]), 5).unwrap();
    assert_eq!(cx.ranks(), vec![1, 2, 1]);
    assert!(cx.compositions_vanish());
    assert_eq!(cx.shifts(2), &[[3, 0]]);
}

#[test]
fn resolution_of_twisted_cubic() {
    let r = ring(&["a", "b", "c", "d"]);
    let m = koszul_like(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    let cx = free_resolution(&m, 10).unwrap();
    assert_eq!(cx.ranks(), vec![1, 3, 2]);
    assert!(cx.compositions_vanish());
    assert!(cx.is_complete());
}

#[test]
fn resolution_respects_the_length_cap() {
    let r = ring(&["x", "y", "z"]);
    let cx = free_resolution(&koszul_like(&r, &["x", "y", "z"]), 2).unwrap();
    assert!(!cx.is_complete());
    assert_eq!(
        free_resolution(&koszul_like(&r, &["x"]), 0).unwrap_err(),
        Error::InvalidArgument("resolution length must be at least 1".into())
    );
}

#[test]
fn ext_examples() {
    let r = ring(&["x", "y"]);
    let s = ModulePresentation::free(&r, vec![[0, 0]]);
    let e0 = ext_presentation(&s, 0).unwrap();
    assert_eq!(e0.rank(), 1);
    assert!(e0.relations().is_empty());
    assert!(ext_presentation(&s, 1).unwrap().rank() == 0);

    let k = koszul_like(&r, &["x", "y"]);
    let e2 = ext_presentation(&k, 2).unwrap();
    assert_eq!(e2.rank(), 1);
    assert_eq!(e2.shifts(), &[[-2, 0]]);
    let rel = IdealHandle::new(&r, e2.relations().iter().map(|c| c[0].clone()).collect()).unwrap();
    assert!(same(&rel, &IdealHandle::maximal(&r)));
    assert_eq!(ext_presentation(&k, 1).unwrap().rank(), 0);
    assert_eq!(ext_presentation(&k, 0).unwrap().rank(), 0);

    let f = p(&r, "x^2*y + y^3 + x");
    let m = ModulePresentation::cyclic(&IdealHandle::new(&r, vec![f.clone()]).unwrap());
    let e1 = ext_presentation(&m, 1).unwrap();
    assert_eq!(e1.rank(), 1);
    let rel = IdealHandle::new(&r, e1.relations().iter().map(|c| c[0].clone()).collect()).unwrap();
    assert!(same(&rel, &IdealHandle::new(&r, vec![f]).unwrap()));
}

fn small_poly(r: &RingRef) -> impl Strategy<Value = Polynomial> {
    let r = r.clone();
    prop::collection::vec(((-3i64..=3), prop::collection::vec(0u32..3, 3)), 1..4).prop_map(
        move |ts| {
            let mut f = Polynomial::zero(&r);
            for (c, e) in ts {
                f.add_term(Monomial::from_exponents(&e), &Field::Rational.from_i64(c));
            }
            f
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bases_are_reduced_and_closed(
        gens in prop::collection::vec(small_poly(&ring(&["x", "y", "z"])), 1..4),
        f in small_poly(&ring(&["x", "y", "z"])),
    ) {
        let r = gens[0].ring().clone();
        let i = IdealHandle::new(&r, gens.clone()).unwrap();
        for ord in [TermOrder::Degrevlex, TermOrder::Lex] {
            let Ok(gb) = i.groebner_basis(&ord) else { continue };
            let els = gb.elements();
            for g in &gens {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
            let lms = gb.leading_monomials();
            for (a, ga) in els.iter().enumerate() {
                let (lm, c) = ga.leading_term(&ord).unwrap();
                prop_assert!(c.is_one());
                for (b, m) in lms.iter().enumerate() {
                    if a != b {
                        for (t, _) in ga.terms() {
                            prop_assert!(!m.divides(t));
                        }
                        prop_assert!(!m.divides(&lm));
                    }
                }
                for gb2 in &els[a + 1..] {
                    let (l1, _) = ga.leading_term(&ord).unwrap();
                    let (l2, _) = gb2.leading_term(&ord).unwrap();
                    let l = l1.lcm(&l2);
                    let one = Field::Rational.one();
                    let s = &ga.mul_term(&l1.quotient_of(&l).unwrap(), &one)
                        - &gb2.mul_term(&l2.quotient_of(&l).unwrap(), &one);
                    prop_assert!(gb.normal_form(&s).unwrap().is_zero());
                }
            }
            let nf = gb.normal_form(&f).unwrap();
            prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
            prop_assert!(i.contains(&(&f - &nf)).unwrap());
        }
    }

    #[test]
    fn resolutions_are_complexes(gens in prop::collection::vec(small_poly(&ring(&["x", "y", "z"])), 1..4)) {
        let r = gens[0].ring().clone();
        let m = ModulePresentation::cyclic(&IdealHandle::new(&r, gens).unwrap());
        if let Ok(cx) = free_resolution(&m, 4) {
            prop_assert!(cx.compositions_vanish());
            prop_assert!(cx.is_complete());
            prop_assert!(cx.length() <= 3);
        }
    }
}
