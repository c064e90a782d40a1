use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::laws::LawReport;

/// A finite monoid given by its full multiplication table.
///
/// `mul(x, y)` is the product `x·y`; when the monoid is read as a one-object
/// category this is the composite "`y` first, then `x`".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monoid {
    size: usize,
    unit: usize,
    table: Vec<usize>,
}

impl Monoid {
    /// Builds a monoid and checks associativity and the unit laws.
    pub fn new(size: usize, unit: usize, table: Vec<usize>) -> Result<Self> {
        let m = Self::from_parts_unchecked(size, unit, table)?;
        m.laws(Strategy::default()).into_result()?;
        Ok(m)
    }

    /// Shape-checked but law-unchecked construction, for law reports on raw input.
    pub fn from_parts_unchecked(size: usize, unit: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::malformed("monoid", "a monoid has at least one element"));
        }
        if unit >= size {
            return Err(Error::malformed("monoid", format!("unit {unit} out of range")));
        }
        if table.len() != size * size {
            return Err(Error::malformed(
                "monoid",
                format!("table has {} entries, expected {}", table.len(), size * size),
            ));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= size) {
            return Err(Error::malformed("monoid", format!("product {bad} out of range")));
        }
        Ok(Monoid { size, unit, table })
    }

    pub fn from_fn(size: usize, unit: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..size * size).map(|i| f(i / size, i % size)).collect();
        Self::new(size, unit, table)
    }

    /// The cyclic group `Z_n` written additively, unit `0`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "Z_0 is not finite");
        Self::from_fn(n, 0, |x, y| (x + y) % n).expect("cyclic group table is valid")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `{0, 1}` under multiplication with unit `1`: the smallest non-group monoid.
    pub fn boolean() -> Self {
        Self::from_fn(2, 1, |x, y| x * y).expect("boolean monoid is valid")
    }

    /// Pairs `(x, y)` encoded as `x + |self|·y`.
    pub fn direct_product(&self, other: &Monoid) -> Monoid {
        let n = self.size;
        Monoid::from_fn(n * other.size, self.unit + n * other.unit, |a, b| {
            let (x1, y1) = (a % n, a / n);
            let (x2, y2) = (b % n, b / n);
            self.mul(x1, x2) + n * other.mul(y1, y2)
        })
        .expect("product of monoids is a monoid")
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let n = self.size;
        let mut report = LawReport::new("monoid");
        let left = (0..n).find(|&x| self.mul(self.unit, x) != x).map(|x| vec![self.unit, x]);
        report.push("left unit", left);
        let right = (0..n).find(|&x| self.mul(x, self.unit) != x).map(|x| vec![x, self.unit]);
        report.push("right unit", right);
        let assoc = exec::find_first(strategy, n, |x| {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
            None
        });
        report.push("associativity", assoc);
        report
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.elements()
            .find(|&y| self.mul(x, y) == self.unit && self.mul(y, x) == self.unit)
    }

    pub fn is_group(&self) -> bool {
        self.elements().all(|x| self.inverse(x).is_some())
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// `x^k` for `k ≥ 0`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.unit, |acc, _| self.mul(acc, x))
    }

    pub fn is_homomorphism_to(&self, target: &Monoid, map: &[usize]) -> bool {
        map.len() == self.size
            && map.iter().all(|&v| v < target.size)
            && map[self.unit] == target.unit
            && self.elements().all(|x| {
                self.elements()
                    .all(|y| map[self.mul(x, y)] == target.mul(map[x], map[y]))
            })
    }

    /// All monoid endomorphisms, in lexicographic order of their tables.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.size];
        self.extend_endomorphism(0, &mut map, &mut out);
        out
    }

    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.endomorphisms()
            .into_iter()
            .filter(|m| {
                let mut seen = vec![false; self.size];
                m.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            })
            .collect()
    }

    fn extend_endomorphism(&self, x: usize, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if x == self.size {
            out.push(map.clone());
            return;
        }
        let candidates: Vec<usize> = if x == self.unit {
            vec![self.unit]
        } else {
            self.elements().collect()
        };
        for v in candidates {
            map[x] = v;
            if self.consistent_upto(x, map) {
                self.extend_endomorphism(x + 1, map, out);
            }
        }
        map[x] = usize::MAX;
    }

    // products among the already assigned elements `0..=x` that involve `x`
    fn consistent_upto(&self, x: usize, map: &[usize]) -> bool {
        for a in 0..=x {
            for b in 0..=x {
                let p = self.mul(a, b);
                if p > x || (a != x && b != x && p != x) {
                    continue;
                }
                if map[p] != self.mul(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// A monoid homomorphism with its source and target attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMorphism {
    source: Monoid,
    target: Monoid,
    map: Vec<usize>,
}

impl MonoidMorphism {
    pub fn new(source: Monoid, target: Monoid, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() || map.iter().any(|&v| v >= target.size()) {
            return Err(Error::malformed("monoid morphism", "map has the wrong shape"));
        }
        if map[source.unit()] != target.unit() {
            return Err(Error::Law {
                structure: "monoid morphism".into(),
                law: "unit preservation".into(),
                witness: vec![source.unit()],
            });
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::Law {
                        structure: "monoid morphism".into(),
                        law: "multiplicativity".into(),
                        witness: vec![x, y],
                    });
                }
            }
        }
        Ok(MonoidMorphism { source, target, map })
    }

    pub fn source(&self) -> &Monoid {
        &self.source
    }

    pub fn target(&self) -> &Monoid {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

/// A monoid morphism `M → End(N)`, stored as one endomorphism table per element of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidAction {
    acting: Monoid,
    on: Monoid,
    maps: Vec<Vec<usize>>,
}

impl MonoidAction {
    pub fn new(acting: Monoid, on: Monoid, maps: Vec<Vec<usize>>) -> Result<Self> {
        if maps.len() != acting.size() {
            return Err(Error::malformed("monoid action", "one endomorphism per element required"));
        }
        for (m, map) in maps.iter().enumerate() {
            if !on.is_homomorphism_to(&on, map) {
                return Err(Error::Law {
                    structure: "monoid action".into(),
                    law: "action by endomorphisms".into(),
                    witness: vec![m],
                });
            }
        }
        if maps[acting.unit()].iter().enumerate().any(|(n, &v)| n != v) {
            return Err(Error::Law {
                structure: "monoid action".into(),
                law: "unit acts trivially".into(),
                witness: vec![acting.unit()],
            });
        }
        for m2 in acting.elements() {
            for m1 in acting.elements() {
                let prod = &maps[acting.mul(m2, m1)];
                if on.elements().any(|n| prod[n] != maps[m2][maps[m1][n]]) {
                    return Err(Error::Law {
                        structure: "monoid action".into(),
                        law: "functoriality".into(),
                        witness: vec![m2, m1],
                    });
                }
            }
        }
        Ok(MonoidAction { acting, on, maps })
    }

    pub fn trivial(acting: Monoid, on: Monoid) -> Self {
        let id: Vec<usize> = on.elements().collect();
        let maps = vec![id; acting.size()];
        MonoidAction { acting, on, maps }
    }

    /// Action of a cyclic group `Z_k` determined by the endomorphism assigned to `1`.
    pub fn cyclic(k: usize, on: Monoid, generator: Vec<usize>) -> Result<Self> {
        let acting = Monoid::cyclic(k);
        let mut maps = Vec::with_capacity(k);
        let mut current: Vec<usize> = on.elements().collect();
        for _ in 0..k {
            maps.push(current.clone());
            current = current.iter().map(|&n| generator.get(n).copied().unwrap_or(usize::MAX)).collect();
        }
        if current.iter().any(|&n| n >= on.size()) {
            return Err(Error::malformed("monoid action", "generator map has the wrong shape"));
        }
        Self::new(acting, on, maps)
    }

    pub fn acting(&self) -> &Monoid {
        &self.acting
    }

    pub fn on(&self) -> &Monoid {
        &self.on
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn apply(&self, m: usize, n: usize) -> usize {
        self.maps[m][n]
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(|map| map.iter().enumerate().all(|(i, &v)| i == v))
    }

    /// Every element acts by a surjective endomorphism.
    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|map| {
            let mut hit = vec![false; self.on.size()];
            map.iter().for_each(|&v| hit[v] = true);
            hit.into_iter().all(|h| h)
        })
    }
}

/// `N ⋊ M` with product `(n', m')·(n, m) = (n'·φ_{m'}(n), m'm)`.
///
/// The pair `(n, m)` is encoded as `n + |N|·m`.
pub fn semidirect_product(action: &MonoidAction) -> Result<Monoid> {
    let n_mon = action.on();
    let m_mon = action.acting();
    if !n_mon.is_commutative() {
        return Err(Error::precondition("semidirect product needs a commutative normal factor"));
    }
    let k = n_mon.size();
    Monoid::from_fn(k * m_mon.size(), n_mon.unit() + k * m_mon.unit(), |a, b| {
        let (n2, m2) = (a % k, a / k);
        let (n1, m1) = (b % k, b / k);
        n_mon.mul(n2, action.apply(m2, n1)) + k * m_mon.mul(m2, m1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inversion(n: usize) -> Vec<usize> {
        (0..n).map(|a| (n - a) % n).collect()
    }

    #[test]
    fn cyclic_groups_are_commutative_groups() {
        for n in 1..6 {
            let z = Monoid::cyclic(n);
            assert!(z.is_commutative());
            assert!(z.is_group());
        }
    }

    #[test]
    fn broken_associativity_is_named() {
        // Z_3 with one product corrupted
        let mut table: Vec<usize> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
        table[4] = 0;
        let err = Monoid::new(3, 0, table).unwrap_err();
        assert!(matches!(err.law(), Some("associativity") | Some("left unit") | Some("right unit")));
    }

    #[test]
    fn boolean_monoid_is_not_a_group() {
        let b = Monoid::boolean();
        assert!(!b.is_group());
        assert_eq!(b.unit(), 1);
    }

    #[test]
    fn automorphisms_of_small_cyclic_groups() {
        assert_eq!(Monoid::cyclic(3).automorphisms().len(), 2);
        assert_eq!(Monoid::cyclic(4).automorphisms().len(), 2);
        assert_eq!(Monoid::cyclic(5).automorphisms().len(), 4);
        // End(Z_4) = multiplication by 0..4
        assert_eq!(Monoid::cyclic(4).endomorphisms().len(), 4);
    }

    #[test]
    fn endomorphisms_of_non_group_monoid() {
        // {0,1} under multiplication: identity and the constant-at-unit map
        let b = Monoid::boolean();
        let ends = b.endomorphisms();
        assert!(ends.contains(&vec![0, 1]));
        assert!(ends.contains(&vec![1, 1]));
        assert_eq!(ends.len(), 2);
    }

    #[test]
    fn semidirect_z3_z2_inversion_is_nonabelian_order_six() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), inversion(3)).unwrap();
        let d6 = semidirect_product(&act).unwrap();
        assert_eq!(d6.size(), 6);
        assert!(d6.is_group());
        assert!(!d6.is_commutative());
    }

    #[test]
    fn dihedral_of_order_eight_has_center_of_order_two() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(4), inversion(4)).unwrap();
        let d8 = semidirect_product(&act).unwrap();
        // brute-force center over the full 8x8 table
        let center: Vec<usize> = (0..8)
            .filter(|&x| (0..8).all(|y| d8.table()[x * 8 + y] == d8.table()[y * 8 + x]))
            .collect();
        assert_eq!(center.len(), 2);
        assert_eq!(d8.center(), center);
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let n = Monoid::cyclic(3);
        let m = Monoid::cyclic(2);
        let sd = semidirect_product(&MonoidAction::trivial(m.clone(), n.clone())).unwrap();
        assert_eq!(sd, n.direct_product(&m));
        assert!(sd.is_commutative());
        let sd_b = semidirect_product(&MonoidAction::trivial(Monoid::boolean(), n.clone())).unwrap();
        assert!(sd_b.is_commutative());
    }

    #[test]
    fn non_commutative_normal_factor_is_rejected() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), inversion(3)).unwrap();
        let d6 = semidirect_product(&act).unwrap();
        let bad = MonoidAction::trivial(Monoid::cyclic(2), d6);
        assert!(matches!(semidirect_product(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_functorial_action_is_rejected() {
        // the generator of Z_3 cannot act by inversion on Z_3: (−1)^3 ≠ 1
        let err = MonoidAction::cyclic(3, Monoid::cyclic(3), inversion(3)).unwrap_err();
        assert_eq!(err.law(), Some("functoriality"));
        // an element acting by a non-endomorphism
        let err = MonoidAction::new(
            Monoid::cyclic(2),
            Monoid::cyclic(3),
            vec![vec![0, 1, 2], vec![1, 2, 0]],
        )
        .unwrap_err();
        assert_eq!(err.law(), Some("action by endomorphisms"));
    }

    #[test]
    fn monoid_morphism_rejects_non_multiplicative_maps() {
        let z4 = Monoid::cyclic(4);
        let z2 = Monoid::cyclic(2);
        assert!(MonoidMorphism::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).is_ok());
        let err = MonoidMorphism::new(z4, z2, vec![0, 1, 1, 0]).unwrap_err();
        assert_eq!(err.law(), Some("multiplicativity"));
    }
}
