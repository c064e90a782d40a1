//! Foldings and cofoldings of double categories with one object and one horizontal 1-cell.
//!
//! A folding assigns to every vertical morphism `m` a bijection `λ_m` from the
//! squares with both vertical sides `m` onto the globular squares, such that
//! `λ` at the identity is the identity, horizontal identities go to the unit,
//! and `λ` respects both compositions. A cofolding is a family in the other
//! direction, globular squares onto squares over `m`, with the same conditions.

use std::cell::Cell;

use crate::doublecat::DoubleCategory;
use crate::error::{Error, Result};
use crate::fincat::iso::{preserves, search_bijection, BinOp};
use crate::laws::LawReport;

pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Folding,
    Cofolding,
}

/// One bijection per vertical morphism, as sorted `(from, to)` square pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub kind: FamilyKind,
    pub maps: Vec<Vec<(usize, usize)>>,
}

impl Family {
    pub fn apply(&self, m: usize, x: usize) -> Option<usize> {
        self.maps[m].iter().find(|&&(a, _)| a == x).map(|&(_, b)| b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found { value: T, nodes: u64 },
    /// The whole search space was exhausted.
    Absent { nodes: u64 },
    /// The node budget ran out first.
    Inconclusive { nodes: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. } | SearchOutcome::Absent { nodes } | SearchOutcome::Inconclusive { nodes } => {
                *nodes
            }
        }
    }

    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found { .. } => "found",
            SearchOutcome::Absent { .. } => "absent",
            SearchOutcome::Inconclusive { .. } => "inconclusive",
        }
    }
}

struct Shape {
    e: usize,
    glob: Vec<usize>,
    over: Vec<Vec<usize>>,
}

fn shape(c: &DoubleCategory) -> Result<Shape> {
    if c.c0().num_objects() != 1 || c.c1().num_objects() != 1 {
        return Err(Error::precondition(
            "unsupported shape: foldings need one object and one horizontal 1-cell",
        ));
    }
    let e = c.c0().identity(0);
    let mut over = vec![Vec::new(); c.c0().num_morphisms()];
    for p in 0..c.num_squares() {
        if c.src().mor(p) == c.tgt().mor(p) {
            over[c.src().mor(p)].push(p);
        }
    }
    Ok(Shape { e, glob: over[e].clone(), over })
}

impl Shape {
    fn domain(&self, kind: FamilyKind, m: usize) -> &[usize] {
        match kind {
            FamilyKind::Folding => &self.over[m],
            FamilyKind::Cofolding => &self.glob,
        }
    }

    fn codomain(&self, kind: FamilyKind, m: usize) -> &[usize] {
        match kind {
            FamilyKind::Folding => &self.glob,
            FamilyKind::Cofolding => &self.over[m],
        }
    }
}

fn unit_of(c: &DoubleCategory, kind: FamilyKind, m: usize, codomain: bool) -> usize {
    let e = c.c0().identity(0);
    match (kind, codomain) {
        (FamilyKind::Folding, false) | (FamilyKind::Cofolding, true) => c.hid().mor(m),
        _ => c.hid().mor(e),
    }
}

// all bijections D_m → E_m fixing units and respecting ⊟
fn candidates(c: &DoubleCategory, s: &Shape, kind: FamilyKind, m: usize, nodes: &Cell<u64>, limit: u64) -> Option<Vec<Vec<usize>>> {
    let (dom, cod) = (s.domain(kind, m), s.codomain(kind, m));
    if dom.len() != cod.len() {
        return Some(Vec::new());
    }
    let pos = |set: &[usize], x: usize| set.iter().position(|&y| y == x);
    let hd = |i: usize, j: usize| c.hcomp_square(dom[i], dom[j]).and_then(|r| pos(dom, r));
    let he = |i: usize, j: usize| c.hcomp_square(cod[i], cod[j]).and_then(|r| pos(cod, r));
    let ops: [(BinOp, BinOp); 1] = [(&hd, &he)];
    let (ud, ue) = (unit_of(c, kind, m, false), unit_of(c, kind, m, true));
    let mut out = Vec::new();
    let mut local = 0;
    let over_budget = Cell::new(false);
    search_bijection(
        dom.len(),
        &|i, j| (dom[i] == ud) == (cod[j] == ue),
        &|i, map| {
            nodes.set(nodes.get() + 1);
            if nodes.get() > limit {
                over_budget.set(true);
                return false;
            }
            preserves(i, map, &ops)
        },
        &mut |map| {
            out.push(map.iter().map(|&j| cod[j]).collect());
            false
        },
        &mut local,
    );
    (!over_budget.get()).then_some(out)
}

fn search(c: &DoubleCategory, kind: FamilyKind, limit: u64) -> Result<SearchOutcome<Family>> {
    let s = shape(c)?;
    let c0 = c.c0();
    let nodes = Cell::new(0u64);
    let nm0 = c0.num_morphisms();
    let mut cand: Vec<Vec<Vec<usize>>> = Vec::with_capacity(nm0);
    for m in 0..nm0 {
        if m == s.e {
            cand.push(vec![s.glob.clone()]);
            continue;
        }
        match candidates(c, &s, kind, m, &nodes, limit) {
            Some(list) => cand.push(list),
            None => return Ok(SearchOutcome::Inconclusive { nodes: nodes.get() }),
        }
    }
    let order: Vec<usize> = std::iter::once(s.e).chain((0..nm0).filter(|&m| m != s.e)).collect();
    let mut chosen: Vec<Option<usize>> = vec![None; nm0];
    let image = |m: usize, k: usize, x: usize| -> Option<usize> {
        let dom = s.domain(kind, m);
        dom.iter().position(|&y| y == x).map(|i| cand[m][k][i])
    };
    // every vertical-compatibility instance among assigned morphisms involving `m`
    let consistent = |m: usize, chosen: &[Option<usize>]| -> bool {
        for m1 in 0..nm0 {
            for m2 in 0..nm0 {
                let p = c0.compose(m2, m1).expect("one object");
                if m1 != m && m2 != m && p != m {
                    continue;
                }
                let (Some(k1), Some(k2), Some(kp)) = (chosen[m1], chosen[m2], chosen[p]) else { continue };
                for &x in s.domain(kind, m1) {
                    for &x2 in s.domain(kind, m2) {
                        let Some(r) = c.vcomp(x2, x) else { return false };
                        let lhs = image(p, kp, r);
                        let rhs = c.vcomp(image(m2, k2, x2).unwrap(), image(m1, k1, x).unwrap());
                        if lhs.is_none() || lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    };
    fn go(
        depth: usize,
        order: &[usize],
        cand: &[Vec<Vec<usize>>],
        chosen: &mut Vec<Option<usize>>,
        nodes: &Cell<u64>,
        limit: u64,
        consistent: &dyn Fn(usize, &[Option<usize>]) -> bool,
    ) -> Option<bool> {
        if depth == order.len() {
            return Some(true);
        }
        let m = order[depth];
        for k in 0..cand[m].len() {
            nodes.set(nodes.get() + 1);
            if nodes.get() > limit {
                return None;
            }
            chosen[m] = Some(k);
            if consistent(m, chosen) {
                match go(depth + 1, order, cand, chosen, nodes, limit, consistent) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
        }
        chosen[m] = None;
        Some(false)
    }
    match go(0, &order, &cand, &mut chosen, &nodes, limit, &consistent) {
        None => Ok(SearchOutcome::Inconclusive { nodes: nodes.get() }),
        Some(false) => Ok(SearchOutcome::Absent { nodes: nodes.get() }),
        Some(true) => {
            let maps = (0..nm0)
                .map(|m| {
                    let k = chosen[m].expect("complete assignment");
                    let mut pairs: Vec<(usize, usize)> =
                        s.domain(kind, m).iter().copied().zip(cand[m][k].iter().copied()).collect();
                    pairs.sort_unstable();
                    pairs
                })
                .collect();
            Ok(SearchOutcome::Found { value: Family { kind, maps }, nodes: nodes.get() })
        }
    }
}

pub fn find_folding(c: &DoubleCategory, limit: u64) -> Result<SearchOutcome<Family>> {
    search(c, FamilyKind::Folding, limit)
}

pub fn find_cofolding(c: &DoubleCategory, limit: u64) -> Result<SearchOutcome<Family>> {
    search(c, FamilyKind::Cofolding, limit)
}

/// Both a folding and a cofolding exist; `None` when either search is inconclusive.
pub fn framed(c: &DoubleCategory, limit: u64) -> Result<Option<bool>> {
    let f = find_folding(c, limit)?;
    let g = find_cofolding(c, limit)?;
    Ok(match (&f, &g) {
        (SearchOutcome::Inconclusive { .. }, _) | (_, SearchOutcome::Inconclusive { .. }) => None,
        _ => Some(f.found().is_some() && g.found().is_some()),
    })
}

/// Re-checks every condition of a family by exhaustive enumeration.
pub fn validate(c: &DoubleCategory, fam: &Family) -> Result<LawReport> {
    let s = shape(c)?;
    let c0 = c.c0();
    let nm0 = c0.num_morphisms();
    let kind = fam.kind;
    let mut r = LawReport::new(match kind {
        FamilyKind::Folding => "folding",
        FamilyKind::Cofolding => "cofolding",
    });
    let shape_ok = fam.maps.len() == nm0
        && (0..nm0).all(|m| {
            let mut dom: Vec<usize> = fam.maps[m].iter().map(|x| x.0).collect();
            dom.sort_unstable();
            let mut want = s.domain(kind, m).to_vec();
            want.sort_unstable();
            dom == want && fam.maps[m].iter().all(|x| s.codomain(kind, m).contains(&x.1))
        });
    r.push("defined on the right squares", (!shape_ok).then(Vec::new));
    if !shape_ok {
        return Ok(r);
    }
    let ap = |m: usize, x: usize| fam.apply(m, x).expect("in domain");
    let id_bad = s.glob.iter().find(|&&x| ap(s.e, x) != x).map(|&x| vec![x]);
    r.push("identity at the unit", id_bad);
    let units = (0..nm0)
        .find(|&m| ap(m, unit_of(c, kind, m, false)) != unit_of(c, kind, m, true))
        .map(|m| vec![m]);
    r.push("horizontal identities", units);
    let horiz = (0..nm0).find_map(|m| {
        let dom = s.domain(kind, m);
        dom.iter().find_map(|&x| {
            dom.iter()
                .find(|&&y| {
                    let xy = c.hcomp_square(x, y).expect("composable");
                    c.hcomp_square(ap(m, x), ap(m, y)) != Some(ap(m, xy))
                })
                .map(|&y| vec![m, x, y])
        })
    });
    r.push("horizontal compatibility", horiz);
    let vert = (0..nm0 * nm0).find_map(|i| {
        let (m2, m1) = (i / nm0, i % nm0);
        let p = c0.compose(m2, m1).expect("one object");
        s.domain(kind, m1).iter().find_map(|&x| {
            s.domain(kind, m2)
                .iter()
                .find(|&&x2| {
                    let r = c.vcomp(x2, x).expect("one 1-cell");
                    c.vcomp(ap(m2, x2), ap(m1, x)) != Some(ap(p, r))
                })
                .map(|&x2| vec![m2, m1, x2, x])
        })
    });
    r.push("vertical compatibility", vert);
    let bij = (0..nm0)
        .find(|&m| {
            let mut img: Vec<usize> = fam.maps[m].iter().map(|x| x.1).collect();
            img.sort_unstable();
            img.dedup();
            img.len() != s.codomain(kind, m).len() || fam.maps[m].len() != img.len()
        })
        .map(|m| vec![m]);
    r.push("bijectivity", bij);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delooping, monoidal_delooping, Monoid, MonoidAction};
    use crate::grothendieck::Precosheaf;
    use crate::lift::lift;
    use crate::twocat::{DecoratedBicategory, StrictBicategory};

    fn lifted(act: &MonoidAction) -> DoubleCategory {
        let dec = DecoratedBicategory::new(
            delooping(act.acting()),
            StrictBicategory::suspend(&monoidal_delooping(act.on()).unwrap()),
        )
        .unwrap();
        lift(&dec, &Precosheaf::from_monoid_action(act).unwrap()).unwrap().into_double()
    }

    #[test]
    fn identity_action_folds() {
        let d = lifted(&MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(3)));
        let f = find_folding(&d, DEFAULT_SEARCH_LIMIT).unwrap();
        let fam = f.found().unwrap();
        assert!(validate(&d, fam).unwrap().all_passed());
        // (m, a) ↦ (1, a)
        for &(x, y) in &fam.maps[1] {
            assert_eq!(x % 3, y);
        }
        let g = find_cofolding(&d, DEFAULT_SEARCH_LIMIT).unwrap();
        assert!(validate(&d, g.found().unwrap()).unwrap().all_passed());
        assert_eq!(framed(&d, DEFAULT_SEARCH_LIMIT).unwrap(), Some(true));
    }

    #[test]
    fn inversion_does_not_fold() {
        let d = lifted(&MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap());
        assert!(matches!(find_folding(&d, DEFAULT_SEARCH_LIMIT).unwrap(), SearchOutcome::Absent { .. }));
        assert!(matches!(find_cofolding(&d, DEFAULT_SEARCH_LIMIT).unwrap(), SearchOutcome::Absent { .. }));
        assert_eq!(framed(&d, DEFAULT_SEARCH_LIMIT).unwrap(), Some(false));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let d = lifted(&MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap());
        assert!(matches!(find_folding(&d, 1).unwrap(), SearchOutcome::Inconclusive { .. }));
    }

    #[test]
    fn trivial_coefficients_fold_uniquely() {
        let d = lifted(&MonoidAction::trivial(Monoid::cyclic(3), Monoid::trivial()));
        let f = find_folding(&d, DEFAULT_SEARCH_LIMIT).unwrap();
        assert!(validate(&d, f.found().unwrap()).unwrap().all_passed());
    }

    #[test]
    fn corrupted_family_fails_validation() {
        let d = lifted(&MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(3)));
        let mut fam = find_folding(&d, DEFAULT_SEARCH_LIMIT).unwrap().found().unwrap().clone();
        // swap the images of (1, 1) and (1, 2)
        let (a, b) = (fam.maps[1][1].1, fam.maps[1][2].1);
        fam.maps[1][1].1 = b;
        fam.maps[1][2].1 = a;
        assert!(!validate(&d, &fam).unwrap().all_passed());
    }

    #[test]
    fn multi_object_shape_is_rejected() {
        let b = StrictBicategory::locally_discrete(&crate::fincat::FiniteCategory::discrete(2));
        let d = DoubleCategory::from_bicategory(&b);
        assert!(find_folding(&d, 10).is_err());
    }
}
