use super::*;
use crate::field::Field;
use crate::hilbert::{dimension, ee_vector, ideal_dimension};
use crate::parse::parse_polynomial;

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

#[test]
fn tangent_cone_examples() {
    let r = ring(&["x", "y"]);
    let tc = tangent_cone(&ideal(&r, &["y^2 - x^3"])).unwrap();
    assert!(tc.equals(&ideal(&r, &["y^2"])).unwrap());
    let h = ideal(&r, &["x^2 - x*y", "y^3"]);
    assert!(tangent_cone(&h).unwrap().equals(&h).unwrap());
    let tc = tangent_cone(&ideal(&r, &["x - x^2", "y"])).unwrap();
    assert!(tc.equals(&ideal(&r, &["x", "y"])).unwrap());
    // The node: lowest form of y^2 - x^2 - x^3.
    let tc = tangent_cone(&ideal(&r, &["y^2 - x^2 - x^3"])).unwrap();
    assert!(tc.equals(&ideal(&r, &["y^2 - x^2"])).unwrap());
}

#[test]
fn tangent_cone_needs_a_standard_basis() {
    // Lowest forms of the generators alone give (x, y^2 ...) wrongly; the
    // standard basis picks up y^3.
    let r = ring(&["x", "y"]);
    let j = ideal(&r, &["x - y^2", "x*y"]);
    let tc = tangent_cone(&j).unwrap();
    assert!(tc.equals(&ideal(&r, &["x", "y^3"])).unwrap());
}

#[test]
fn rees_examples() {
    let r = ring(&["x"]);
    let rees = rees_kernel(&IdealHandle::zero(&r), &polys(&r, &["x^2"])).unwrap();
    assert!(rees.kernel.is_zero() || rees.kernel.gens().iter().all(|g| g.is_zero()));

    let r = ring(&["x", "y"]);
    let rees = rees_kernel(&IdealHandle::zero(&r), &polys(&r, &["x", "y"])).unwrap();
    let koszul = parse_polynomial(&rees.ring, "x*u2 - y*u1").unwrap();
    let want = IdealHandle::new(&rees.ring, vec![koszul]).unwrap();
    assert!(rees.kernel.equals(&want).unwrap());

    let r = ring(&["x"]);
    let j = ideal(&r, &["x"]);
    let rees = rees_kernel(&j, &polys(&r, &["x"])).unwrap();
    // y1 maps to t * x = 0 in (S/J)[t].
    assert!(rees
        .kernel
        .contains(&parse_polynomial(&rees.ring, "u1").unwrap())
        .unwrap());
    assert!(rees.substitution_check(&j).unwrap());
}

#[test]
fn assoc_graded_examples() {
    let r = ring(&["x"]);
    let g = assoc_graded(&IdealHandle::zero(&r), &polys(&r, &["x^2"])).unwrap();
    assert!(g.ideal.equals(&ideal_in(&g.rees.ring, &["x^2"])).unwrap());

    let r = ring(&["x", "y"]);
    let g = assoc_graded(&IdealHandle::zero(&r), &polys(&r, &["x", "y"])).unwrap();
    // gr_m(S) = k[u1, u2]; dimension is preserved.
    assert_eq!(ideal_dimension(&g.ideal).unwrap(), 2);
    let j = ideal(&r, &["x^2", "x*y"]);
    let g = assoc_graded(&j, &polys(&r, &["x", "y"])).unwrap();
    assert_eq!(
        ideal_dimension(&g.ideal).unwrap(),
        dimension(&ModulePresentation::cyclic(&j)).unwrap()
    );
}

fn ideal_in(r: &RingRef, gens: &[&str]) -> IdealHandle {
    ideal(r, gens)
}

#[test]
fn gg_examples() {
    let r = ring(&["x"]);
    let gg = gg_presentation(&IdealHandle::zero(&r), &polys(&r, &["x^2"])).unwrap();
    let s = gg.series().unwrap();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(s.value(i, j), i128::from(i <= 1));
        }
    }
    assert_eq!(ee_vector(&gg.module, 1).unwrap().components, vec![2, 0]);

    let r = ring(&["x", "y"]);
    let cusp = ideal(&r, &["y^2 - x^3"]);
    let gg = gg_presentation(&cusp, &polys(&r, &["x", "y"])).unwrap();
    // Concentrated in x-degree zero: k[u1, u2] / (u2^2).
    let s = gg.series().unwrap();
    for j in 0..5 {
        assert_eq!(s.value(1, j), 0);
        assert_eq!(s.value(0, j), if j == 0 { 1 } else { 2 });
    }
}

#[test]
fn gg_of_a_submodule() {
    // M = (x)/(x^2, xy) inside k[x,y]/(x^2, xy), with I = m: one copy of k.
    let r = ring(&["x", "y"]);
    let j = ideal(&r, &["x^2", "x*y"]);
    let gg = gg_module(&j, &polys(&r, &["x", "y"]), &polys(&r, &["x"])).unwrap();
    let s = gg.series().unwrap();
    assert_eq!(s.value(0, 0), 1);
    assert_eq!(s.value(0, 1), 0);
    assert_eq!(s.value(1, 0), 0);
}

#[test]
fn bifiltration_examples() {
    let r = ring(&["x"]);
    let zero = IdealHandle::zero(&r);
    let i = polys(&r, &["x^2"]);
    for a in 0..5u32 {
        for b in 0..4u32 {
            assert_eq!(
                bifiltration_length(&zero, &i, a, b).unwrap(),
                (a as i128 + 1).min(2 * b as i128 + 2)
            );
        }
    }
    for b in 0..4u32 {
        assert_eq!(h11_direct(&zero, &i, 8, b).unwrap(), 2 * (b as i128 + 1));
    }
    // j = 0 and I = m: Hilbert-Samuel of A.
    let r = ring(&["x", "y"]);
    let cusp = ideal(&r, &["y^2 - x^3"]);
    let m = polys(&r, &["x", "y"]);
    for a in 0..5 {
        assert_eq!(
            bifiltration_length(&cusp, &m, a, 0).unwrap(),
            hilbert_samuel(&ModulePresentation::cyclic(&cusp), 0).unwrap()
        );
        assert_eq!(
            bifiltration_length(&cusp, &m, 0, a).unwrap(),
            hilbert_samuel(&ModulePresentation::cyclic(&cusp), 0).unwrap()
        );
        assert_eq!(
            bifiltration_length(&cusp, &m, a, a).unwrap(),
            hilbert_samuel(&ModulePresentation::cyclic(&cusp), a).unwrap()
        );
    }
}

#[test]
fn samuel_multiplicities() {
    let r = ring(&["x"]);
    assert_eq!(
        samuel_multiplicity(&IdealHandle::zero(&r), &polys(&r, &["x^2"]))
            .unwrap()
            .1,
        2
    );
    let r = ring(&["x", "y"]);
    let zero = IdealHandle::zero(&r);
    assert_eq!(
        samuel_multiplicity(&zero, &polys(&r, &["x", "y"]))
            .unwrap()
            .1,
        1
    );
    assert_eq!(
        samuel_multiplicity(&zero, &polys(&r, &["x^2", "y^3"]))
            .unwrap()
            .1,
        6
    );
    assert_eq!(
        samuel_multiplicity(&zero, &polys(&r, &["x^2", "x*y", "y^2"]))
            .unwrap()
            .1,
        4
    );
    let cusp = ideal(&r, &["y^2 - x^3"]);
    assert_eq!(
        samuel_multiplicity(&cusp, &polys(&r, &["x", "y"]))
            .unwrap()
            .1,
        2
    );
    assert!(samuel_multiplicity(&zero, &polys(&r, &["x"])).is_err());
}

#[test]
fn lengths() {
    let r = ring(&["x", "y"]);
    assert_eq!(colength(&ideal(&r, &["x^2", "y^3"])).unwrap(), 6);
    assert_eq!(colength(&ideal(&r, &["1"])).unwrap(), 0);
    assert!(colength(&ideal(&r, &["x"])).is_err());
    let q = ideal(&r, &["x^2", "x*y", "y^2"]);
    assert_eq!(
        subquotient_length(&polys(&r, &["x", "y"]), &q, 1).unwrap(),
        2
    );
    // (y, x^2 + x^3) meets the origin with length 2 and (-1, 0) with length 1.
    let node = ideal(&r, &["y", "x^2 + x^3"]);
    assert_eq!(colength(&node).unwrap(), 3);
    assert_eq!(local_colength(&node).unwrap(), 2);
    let (_, e) = samuel_multiplicity(&ideal(&r, &["y^2 - x^2 - x^3"]), &polys(&r, &["y"])).unwrap();
    assert_eq!(e, 2);
}
