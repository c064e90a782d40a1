use doublelift::analysis::{is_gg, vertical_length, VerticalLength};
use doublelift::examples::{all_cyclic_actions, build_semidirect_fixture, QMatrix};
use doublelift::exec::Strategy as Exec;
use doublelift::fincat::iso::monoid_isomorphism;
use doublelift::fincat::semidirect_product;
use doublelift::Monoid;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn relabel(m: &Monoid, perm: &[usize]) -> Monoid {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    Monoid::from_fn(m.size(), perm[m.unit()], |x, y| perm[m.mul(inv[x], inv[y])]).unwrap()
}

fn small_product() -> impl Strategy<Value = Monoid> {
    (1usize..5, 1usize..4, any::<bool>()).prop_map(|(a, b, boolean)| {
        let m = Monoid::cyclic(a).direct_product(&Monoid::cyclic(b));
        if boolean { m.direct_product(&Monoid::boolean()) } else { m }
    })
}

// Gaussian elimination over the rationals with pivots chosen as they come.
fn naive_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|r| (0..cols).map(|c| BigRational::from_integer(data[r * cols + c].into())).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeled_monoids_are_isomorphic(
        (m, perm) in small_product().prop_flat_map(|m| {
            let ids: Vec<usize> = (0..m.size()).collect();
            (Just(m), Just(ids).prop_shuffle())
        }),
    ) {
        let r = relabel(&m, &perm);
        prop_assert!(r.laws(Exec::Sequential).all_passed());
        let found = monoid_isomorphism(&m, &r);
        let w = found.witness.expect("relabeling is an isomorphism");
        prop_assert!(m.is_homomorphism_to(&r, &w));
    }

    #[test]
    fn cyclic_semidirect_lifts(n in 1usize..6, g in 1usize..5, pick in any::<usize>()) {
        let actions = all_cyclic_actions(g, &Monoid::cyclic(n));
        prop_assume!(!actions.is_empty());
        let action = &actions[pick % actions.len()];
        let s = semidirect_product(action).unwrap();
        prop_assert_eq!(s.size(), n * g);
        prop_assert!(s.is_group());
        let f = build_semidirect_fixture(action).unwrap();
        prop_assert!(f.lift.laws(Exec::default()).all_passed());
        prop_assert_eq!(vertical_length(f.lift.double()), VerticalLength::Finite(1));
        prop_assert!(is_gg(f.lift.double()));
    }

    #[test]
    fn bareiss_rank_matches_elimination(
        rows in 1usize..6,
        cols in 1usize..6,
        entries in proptest::collection::vec(-3i64..4, 36),
    ) {
        let data = &entries[..rows * cols];
        let m = QMatrix::from_ints(rows, cols, data).unwrap();
        prop_assert_eq!(m.rank(), naive_rank(rows, cols, data));
    }

    #[test]
    fn outer_products_have_rank_at_most_one(
        u in proptest::collection::vec(-4i64..5, 4),
        v in proptest::collection::vec(-4i64..5, 4),
    ) {
        let a = QMatrix::from_ints(4, 1, &u).unwrap();
        let b = QMatrix::from_ints(1, 4, &v).unwrap();
        let r = a.mul(&b).unwrap().rank();
        let nonzero = u.iter().any(|&x| x != 0) && v.iter().any(|&x| x != 0);
        prop_assert_eq!(r, usize::from(nonzero));
    }
}
