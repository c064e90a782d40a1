use super::*;
use crate::analysis::{is_gg, vertical_chain, vertical_length, VerticalLength};
use crate::doublecat::decorated_horizontalization;
use crate::exec::Strategy;
use crate::fincat::iso::monoid_isomorphism;

#[test]
fn dihedral_endomorphisms() {
    let Fixture::Semidirect(s) = fixture("semidirect:z3:z2:inv").unwrap() else { panic!() };
    assert_eq!(s.endo.size(), 6);
    assert!(s.endo.is_group());
    assert!(!s.endo.is_commutative());
}

#[test]
fn trivial_action_gives_cyclic_six() {
    let Fixture::Semidirect(s) = fixture("semidirect:z3:z2:triv").unwrap() else { panic!() };
    assert!(monoid_isomorphism(&s.endo, &Monoid::cyclic(6)).found());
}

#[test]
fn trivial_everything_is_terminal() {
    let l = lift_fixture("semidirect:z1:z1:triv").unwrap();
    let d = l.double();
    assert_eq!((d.c0().num_morphisms(), d.c1().num_objects(), d.num_squares()), (1, 1, 1));
}

#[test]
fn graded_twist_matches() {
    let Fixture::Graded(g) = fixture("graded:z2:z3:inv").unwrap() else { panic!() };
    assert_eq!(g.vertical.base().num_objects(), 2);
    assert_eq!(g.vertical.base().hom(0, 0).len(), 3);
    assert!(g.vertical.functor_laws(&g.twisted, &g.witness).all_passed());
    // The twist is visible: the tensor is non-commutative on morphisms.
    let t = &g.twisted;
    assert_ne!(t.tensor(3 + 1, 1), t.tensor(1, 3 + 1));
    let Fixture::Graded(u) = fixture("graded:z2:z3:triv").unwrap() else { panic!() };
    assert!(u.witness.is_identity());
    assert!(fixture("graded:z2:z4:inv").unwrap().lift().is_some());
}

#[test]
fn every_fixture_lifts_cleanly() {
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        assert!(l.laws(Strategy::default()).all_passed(), "{name}");
        assert_eq!(vertical_length(l.double()), VerticalLength::Finite(1), "{name}");
        let h = decorated_horizontalization(l.double());
        assert_eq!(h.decoration(), l.dec().decoration(), "{name}");
        assert_eq!(h.bicat().to_data(), l.dec().bicat().to_data(), "{name}");
    }
}

#[test]
fn discrete_fixture_is_not_globularily_generated() {
    let l = lift_fixture("discrete:z2").unwrap();
    assert!(!is_gg(l.double()));
}

#[test]
fn length_two_fixture() {
    let d = length_two().unwrap();
    assert_eq!(d.num_squares(), 27);
    let chain = vertical_chain(&d);
    assert_eq!(chain.length, VerticalLength::Finite(2));
    assert_eq!(chain.sizes().last(), Some(&27));
}

#[test]
fn unknown_names_are_rejected() {
    for bad in ["", "semidirect:z3:z2", "graded:z2:y3:inv", "mat:x", "semidirect:z0:z2:triv"] {
        assert!(fixture(bad).is_err(), "{bad}");
    }
    assert!(fixture("mat:3").is_err());
}
