use doublelift::analysis::{
    find_cofolding, find_folding, framed, gg_criterion_surjective, is_gg, v1_membership, validate_family,
    vertical_chain, vertical_length, VerticalLength, DEFAULT_SEARCH_LIMIT,
};
use doublelift::doublecat::decorated_horizontalization;
use doublelift::examples::{self, cyclic_action, fixture, lift_fixture, Fixture, LIFT_FIXTURES};
use doublelift::exec::Strategy;
use doublelift::lift::interchange_sweep;
use doublelift::Monoid;
use itertools::Itertools;

#[test]
fn lifts_satisfy_every_law_and_recover_their_input() {
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        let report = l.laws(Strategy::Sequential);
        assert!(report.all_passed(), "{name}:\n{report}");
        let h = decorated_horizontalization(l.double());
        assert_eq!(h.decoration(), l.dec().decoration(), "{name}");
        assert_eq!(h.bicat().to_data(), l.dec().bicat().to_data(), "{name}");
    }
}

#[test]
fn twisted_interchange_holds_everywhere() {
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        let (seq, n) = interchange_sweep(l.phi(), Strategy::Sequential);
        let (par, m) = interchange_sweep(l.phi(), Strategy::Parallel);
        assert!(seq.all_passed() && par.all_passed(), "{name}");
        assert_eq!(n, m);
        assert!(n > 0, "{name}");
    }
}

#[test]
fn lifts_have_vertical_length_one() {
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        assert_eq!(vertical_length(l.double()), VerticalLength::Finite(1), "{name}");
    }
}

#[test]
fn factorization_agrees_with_the_chain() {
    let mut checked = 0;
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        let chain = vertical_chain(l.double());
        for p in l.pair_squares() {
            let m = v1_membership(&l, p).unwrap();
            assert_eq!(m.member(), chain.in_v1(p), "{name}: square {p}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn surjective_single_object_actions_are_gg() {
    for name in LIFT_FIXTURES {
        let l = lift_fixture(name).unwrap();
        let Ok(surjective) = gg_criterion_surjective(l.phi()) else { continue };
        if surjective {
            assert!(is_gg(l.double()), "{name}");
        }
    }
    let Fixture::Mat(r) = fixture("mat:4").unwrap() else { panic!() };
    assert_eq!(r.rank, 4);
    assert!(!r.membership.member());
}

#[test]
fn inversion_has_no_folding_and_identity_does() {
    let inv = lift_fixture("semidirect:z3:z2:inv").unwrap();
    let out = find_folding(inv.double(), DEFAULT_SEARCH_LIMIT).unwrap();
    assert_eq!(out.label(), "absent");
    assert_eq!(find_cofolding(inv.double(), DEFAULT_SEARCH_LIMIT).unwrap().label(), "absent");
    assert_eq!(framed(inv.double(), DEFAULT_SEARCH_LIMIT).unwrap(), Some(false));

    let id = lift_fixture("semidirect:z3:z2:triv").unwrap();
    let fam = find_folding(id.double(), DEFAULT_SEARCH_LIMIT).unwrap();
    let fam = fam.found().expect("identity action folds");
    assert!(validate_family(id.double(), fam).unwrap().all_passed());
    let co = find_cofolding(id.double(), DEFAULT_SEARCH_LIMIT).unwrap();
    assert!(validate_family(id.double(), co.found().unwrap()).unwrap().all_passed());

    let tiny = find_folding(inv.double(), 3).unwrap();
    assert_eq!(tiny.label(), "inconclusive");
}

// Every bijection of six elements, checked for multiplicativity.
fn brute_force_isomorphic(a: &Monoid, b: &Monoid) -> bool {
    (0..a.size()).permutations(a.size()).any(|p| {
        (0..a.size()).all(|x| (0..a.size()).all(|y| p[a.mul(x, y)] == b.mul(p[x], p[y])))
    })
}

#[test]
fn trivial_and_inverting_extensions_differ() {
    let endo = |invert| examples::build_semidirect_fixture(&cyclic_action(3, 2, invert).unwrap()).unwrap().endo;
    let (a, b) = (endo(false), endo(true));
    assert!(!brute_force_isomorphic(&a, &b));
    assert!(brute_force_isomorphic(&a, &Monoid::cyclic(6)));
    assert!(brute_force_isomorphic(&b, &b));
    assert!(!doublelift::fincat::iso::monoid_isomorphism(&a, &b).found());
}

#[test]
fn length_two_is_reached_outside_lifts() {
    let d = examples::length_two().unwrap();
    assert!(d.laws(Strategy::Sequential).all_passed());
    let chain = vertical_chain(&d);
    assert_eq!(chain.length, VerticalLength::Finite(2));
    assert_eq!(chain.sizes(), vec![23, 27]);
}
