//! Isomorphism search between small structures by backtracking over
//! structure-preserving bijections, pruned by invariant signatures.

use super::{FiniteCategory, FunctorData, Monoid, StrictMonoidalCategory};

/// Result of an exhaustive search, with the number of partial assignments tried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search<T> {
    pub witness: Option<T>,
    pub nodes: u64,
}

impl<T> Search<T> {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

pub(crate) type BinOp<'a> = &'a dyn Fn(usize, usize) -> Option<usize>;

/// Assigns `0..n` to distinct targets in index order.
///
/// `compatible(i, j)` prunes single assignments; `consistent(i, map)` is called
/// with `map[..=i]` assigned and must check every constraint involving `i`.
/// Stops at the first complete map accepted by `on_complete`.
pub(crate) fn search_bijection(
    n: usize,
    compatible: &dyn Fn(usize, usize) -> bool,
    consistent: &dyn Fn(usize, &[usize]) -> bool,
    on_complete: &mut dyn FnMut(&[usize]) -> bool,
    nodes: &mut u64,
) -> bool {
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(n, compatible, consistent, on_complete, nodes, &mut map, &mut used)
}

fn extend(
    n: usize,
    compatible: &dyn Fn(usize, usize) -> bool,
    consistent: &dyn Fn(usize, &[usize]) -> bool,
    on_complete: &mut dyn FnMut(&[usize]) -> bool,
    nodes: &mut u64,
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = map.len();
    if i == n {
        return on_complete(map);
    }
    for j in 0..n {
        if used[j] || !compatible(i, j) {
            continue;
        }
        *nodes += 1;
        map.push(j);
        if consistent(i, map) {
            used[j] = true;
            if extend(n, compatible, consistent, on_complete, nodes, map, used) {
                return true;
            }
            used[j] = false;
        }
        map.pop();
    }
    false
}

// every operation instance among assigned ids that involves `i` is preserved
pub(crate) fn preserves(i: usize, map: &[usize], ops: &[(BinOp, BinOp)]) -> bool {
    for (src, tgt) in ops {
        for a in 0..=i {
            for b in 0..=i {
                match src(a, b) {
                    Some(p) if p <= i && (a == i || b == i || p == i) => {
                        if tgt(map[a], map[b]) != Some(map[p]) {
                            return false;
                        }
                    }
                    Some(_) => {}
                    None => {
                        if (a == i || b == i) && tgt(map[a], map[b]).is_some() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn monoid_signature(m: &Monoid, x: usize) -> [usize; 5] {
    let mut powers = vec![m.unit()];
    let mut p = x;
    while !powers.contains(&p) {
        powers.push(p);
        p = m.mul(p, x);
    }
    [
        powers.len(),
        m.elements().filter(|&y| m.mul(x, y) == m.mul(y, x)).count(),
        m.elements().filter(|&y| m.mul(x, y) == y).count(),
        m.elements().filter(|&y| m.mul(y, x) == y).count(),
        usize::from(x == m.unit()),
    ]
}

pub fn monoid_isomorphism(a: &Monoid, b: &Monoid) -> Search<Vec<usize>> {
    let mut nodes = 0;
    if a.size() != b.size() {
        return Search { witness: None, nodes };
    }
    let sa: Vec<_> = a.elements().map(|x| monoid_signature(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| monoid_signature(b, x)).collect();
    let ma = |x: usize, y: usize| Some(a.mul(x, y));
    let mb = |x: usize, y: usize| Some(b.mul(x, y));
    let ops: [(BinOp, BinOp); 1] = [(&ma, &mb)];
    let mut witness = None;
    search_bijection(
        a.size(),
        &|i, j| sa[i] == sb[j],
        &|i, map| preserves(i, map, &ops),
        &mut |map| {
            witness = Some(map.to_vec());
            true
        },
        &mut nodes,
    );
    Search { witness, nodes }
}

fn object_signature(c: &FiniteCategory, x: usize) -> [usize; 3] {
    let out = c.morphisms().filter(|&f| c.dom(f) == x).count();
    let inc = c.morphisms().filter(|&f| c.cod(f) == x).count();
    [c.hom(x, x).len(), out, inc]
}

fn morphism_search(
    a: &FiniteCategory,
    b: &FiniteCategory,
    objects: &[usize],
    extra: &[(BinOp, BinOp)],
    nodes: &mut u64,
) -> Option<Vec<usize>> {
    let ca = |g: usize, f: usize| a.compose(g, f);
    let cb = |g: usize, f: usize| b.compose(g, f);
    let mut ops: Vec<(BinOp, BinOp)> = vec![(&ca, &cb)];
    ops.extend_from_slice(extra);
    let mut witness = None;
    search_bijection(
        a.num_morphisms(),
        &|f, g| {
            b.dom(g) == objects[a.dom(f)] && b.cod(g) == objects[a.cod(f)] && a.is_identity(f) == b.is_identity(g)
        },
        &|i, map| preserves(i, map, &ops),
        &mut |map| {
            witness = Some(map.to_vec());
            true
        },
        nodes,
    );
    witness
}

fn category_search(
    a: &FiniteCategory,
    b: &FiniteCategory,
    object_ops: &[(BinOp, BinOp)],
    morphism_ops: &[(BinOp, BinOp)],
    fixed: Option<(usize, usize)>,
) -> Search<FunctorData> {
    let mut nodes = 0;
    if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
        return Search { witness: None, nodes };
    }
    let sa: Vec<_> = (0..a.num_objects()).map(|x| object_signature(a, x)).collect();
    let sb: Vec<_> = (0..b.num_objects()).map(|x| object_signature(b, x)).collect();
    let mut witness = None;
    let mut inner = 0;
    search_bijection(
        a.num_objects(),
        &|i, j| sa[i] == sb[j] && fixed.is_none_or(|(u, v)| (i == u) == (j == v)),
        &|i, map| {
            (0..=i).all(|x| {
                a.hom(x, i).len() == b.hom(map[x], map[i]).len() && a.hom(i, x).len() == b.hom(map[i], map[x]).len()
            }) && preserves(i, map, object_ops)
        },
        &mut |objects| match morphism_search(a, b, objects, morphism_ops, &mut inner) {
            Some(m) => {
                witness = Some(FunctorData { object_map: objects.to_vec(), morphism_map: m });
                true
            }
            None => false,
        },
        &mut nodes,
    );
    Search { witness, nodes: nodes + inner }
}

pub fn category_isomorphism(a: &FiniteCategory, b: &FiniteCategory) -> Search<FunctorData> {
    category_search(a, b, &[], &[], None)
}

/// Strict monoidal isomorphism: a category isomorphism preserving unit and both tensors.
pub fn monoidal_isomorphism(a: &StrictMonoidalCategory, b: &StrictMonoidalCategory) -> Search<FunctorData> {
    let oa = |x: usize, y: usize| Some(a.tensor_objects(x, y));
    let ob = |x: usize, y: usize| Some(b.tensor_objects(x, y));
    let ta = |f: usize, g: usize| Some(a.tensor(f, g));
    let tb = |f: usize, g: usize| Some(b.tensor(f, g));
    category_search(a.base(), b.base(), &[(&oa, &ob)], &[(&ta, &tb)], Some((a.unit(), b.unit())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delooping, semidirect_product, MonoidAction};
    use itertools::Itertools;

    fn brute_force_monoid_iso(a: &Monoid, b: &Monoid) -> bool {
        (0..a.size()).permutations(a.size()).any(|p| {
            a.elements().all(|x| a.elements().all(|y| p[a.mul(x, y)] == b.mul(p[x], p[y])))
        })
    }

    #[test]
    fn z6_is_z3_times_z2() {
        let z6 = Monoid::cyclic(6);
        let prod = Monoid::cyclic(3).direct_product(&Monoid::cyclic(2));
        let s = monoid_isomorphism(&z6, &prod);
        let w = s.witness.unwrap();
        assert!(z6.is_homomorphism_to(&prod, &w));
    }

    #[test]
    fn z4_is_not_klein() {
        let klein = Monoid::cyclic(2).direct_product(&Monoid::cyclic(2));
        assert!(!monoid_isomorphism(&Monoid::cyclic(4), &klein).found());
        assert!(!brute_force_monoid_iso(&Monoid::cyclic(4), &klein));
    }

    #[test]
    fn search_agrees_with_permutation_brute_force() {
        let d6 = semidirect_product(&MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap()).unwrap();
        let z6 = Monoid::cyclic(6);
        let b3 = Monoid::boolean().direct_product(&Monoid::cyclic(3));
        for (a, b) in [(&d6, &z6), (&z6, &d6), (&d6, &d6), (&z6, &b3), (&b3, &b3)] {
            assert_eq!(monoid_isomorphism(a, b).found(), brute_force_monoid_iso(a, b));
        }
    }

    #[test]
    fn category_isomorphism_respects_composition() {
        let a = delooping(&Monoid::cyclic(4));
        let klein = Monoid::cyclic(2).direct_product(&Monoid::cyclic(2));
        assert!(category_isomorphism(&a, &a).found());
        assert!(!category_isomorphism(&a, &delooping(&klein)).found());
        let swapped = FiniteCategory::from_fn(2, vec![(1, 1), (0, 0), (1, 0)], vec![1, 0], |g, f| {
            if g == 2 || f == 2 {
                2
            } else {
                g
            }
        })
        .unwrap();
        let arrow = FiniteCategory::from_fn(2, vec![(0, 0), (1, 1), (0, 1)], vec![0, 1], |g, f| {
            if g == 2 || f == 2 {
                2
            } else {
                g
            }
        })
        .unwrap();
        let w = category_isomorphism(&arrow, &swapped).witness.unwrap();
        assert_eq!(w.object_map, vec![1, 0]);
        assert!(w.laws(&arrow, &swapped).all_passed());
    }
}
