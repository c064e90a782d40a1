//! Finite strict 2-categories and decorated bicategories.

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::fincat::{FiniteCategory, Monoid, StrictMonoidalCategory};
use crate::laws::LawReport;

/// Raw tables of a strict 2-category, as read from or written to files.
///
/// `vcomp` triples are `[ψ, φ, ψ∘φ]` with `φ` on top. `hcomp1` and `hcomp2`
/// triples are `[left, right, left⊛right]` where `left` ends where `right` starts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BicategoryData {
    pub cells0: usize,
    pub cells1: Vec<(usize, usize)>,
    pub cells2: Vec<(usize, usize)>,
    pub id1: Vec<usize>,
    pub id2: Vec<usize>,
    pub vcomp: Vec<(usize, usize, usize)>,
    pub hcomp1: Vec<(usize, usize, usize)>,
    pub hcomp2: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictBicategory {
    cells0: usize,
    cells1: Vec<(usize, usize)>,
    cells2: Vec<(usize, usize)>,
    id1: Vec<usize>,
    id2: Vec<usize>,
    vcomp: Vec<Option<usize>>,
    hcomp1: Vec<Option<usize>>,
    hcomp2: Vec<Option<usize>>,
}

fn fill(n: usize, triples: &[(usize, usize, usize)], what: &str) -> Result<Vec<Option<usize>>> {
    let mut t = vec![None; n * n];
    for &(a, b, c) in triples {
        if a >= n || b >= n || c >= n {
            return Err(Error::malformed("bicategory", format!("{what} entry [{a}, {b}, {c}] out of range")));
        }
        if t[a * n + b].replace(c).is_some() {
            return Err(Error::malformed("bicategory", format!("{what} of ({a}, {b}) given twice")));
        }
    }
    Ok(t)
}

fn triples(n: usize, t: &[Option<usize>]) -> Vec<(usize, usize, usize)> {
    (0..n * n).filter_map(|i| t[i].map(|c| (i / n, i % n, c))).collect()
}

impl StrictBicategory {
    pub fn new(data: BicategoryData) -> Result<Self> {
        let b = Self::from_data_unchecked(data)?;
        b.laws(Strategy::default()).into_result()?;
        Ok(b)
    }

    pub fn from_data_unchecked(d: BicategoryData) -> Result<Self> {
        let (n0, n1, n2) = (d.cells0, d.cells1.len(), d.cells2.len());
        if d.cells1.iter().any(|&(a, b)| a >= n0 || b >= n0) {
            return Err(Error::malformed("bicategory", "1-cell endpoint out of range"));
        }
        if d.cells2.iter().any(|&(a, b)| a >= n1 || b >= n1) {
            return Err(Error::malformed("bicategory", "2-cell boundary out of range"));
        }
        if d.id1.len() != n0 || d.id1.iter().any(|&i| i >= n1) {
            return Err(Error::malformed("bicategory", "one identity 1-cell per 0-cell required"));
        }
        if d.id2.len() != n1 || d.id2.iter().any(|&i| i >= n2) {
            return Err(Error::malformed("bicategory", "one identity 2-cell per 1-cell required"));
        }
        if let Some((i, _)) = d.cells2.iter().enumerate().find(|(_, &(s, t))| d.cells1[s] != d.cells1[t]) {
            return Err(Error::malformed("bicategory", format!("2-cell {i} joins non-parallel 1-cells")));
        }
        Ok(StrictBicategory {
            vcomp: fill(n2, &d.vcomp, "vcomp")?,
            hcomp1: fill(n1, &d.hcomp1, "hcomp1")?,
            hcomp2: fill(n2, &d.hcomp2, "hcomp2")?,
            cells0: n0,
            cells1: d.cells1,
            cells2: d.cells2,
            id1: d.id1,
            id2: d.id2,
        })
    }

    /// Fills the composition tables from closures evaluated on composable pairs only.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_fns(
        cells0: usize,
        cells1: Vec<(usize, usize)>,
        cells2: Vec<(usize, usize)>,
        id1: Vec<usize>,
        id2: Vec<usize>,
        vcomp: impl Fn(usize, usize) -> usize,
        hcomp1: impl Fn(usize, usize) -> usize,
        hcomp2: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let (n1, n2) = (cells1.len(), cells2.len());
        let vt = (0..n2 * n2)
            .map(|i| {
                let (p, q) = (i / n2, i % n2);
                (cells2[q].1 == cells2[p].0).then(|| vcomp(p, q))
            })
            .collect();
        let h1 = (0..n1 * n1)
            .map(|i| {
                let (l, r) = (i / n1, i % n1);
                (cells1[l].1 == cells1[r].0).then(|| hcomp1(l, r))
            })
            .collect();
        let h2 = (0..n2 * n2)
            .map(|i| {
                let (l, r) = (i / n2, i % n2);
                (cells1[cells2[l].0].1 == cells1[cells2[r].0].0).then(|| hcomp2(l, r))
            })
            .collect();
        StrictBicategory { cells0, cells1, cells2, id1, id2, vcomp: vt, hcomp1: h1, hcomp2: h2 }
    }

    pub fn to_data(&self) -> BicategoryData {
        BicategoryData {
            cells0: self.cells0,
            cells1: self.cells1.clone(),
            cells2: self.cells2.clone(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            vcomp: triples(self.num2(), &self.vcomp),
            hcomp1: triples(self.num1(), &self.hcomp1),
            hcomp2: triples(self.num2(), &self.hcomp2),
        }
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let (n0, n1, n2) = (self.cells0, self.num1(), self.num2());
        let mut r = LawReport::new("bicategory");
        let shape = (0..n0).find(|&a| self.cells1[self.id1[a]] != (a, a)).map(|a| vec![a]);
        r.push("identity 1-cell shape", shape);
        r.absorb("vertical", self.vertical_category().laws(strategy));
        if !r.all_passed() {
            return r;
        }

        let h1_def = (0..n1 * n1)
            .find(|&i| self.hcomp1[i].is_some() != (self.cod0(i / n1) == self.dom0(i % n1)))
            .map(|i| vec![i / n1, i % n1]);
        r.push("1-cell composability", h1_def);
        let h1_bd = (0..n1 * n1)
            .find(|&i| match self.hcomp1[i] {
                Some(c) => self.cells1[c] != (self.dom0(i / n1), self.cod0(i % n1)),
                None => false,
            })
            .map(|i| vec![i / n1, i % n1]);
        r.push("1-cell composite boundary", h1_bd);
        let h2_def = exec::find_first(strategy, n2, |p| {
            (0..n2)
                .find(|&q| self.hcomp2[p * n2 + q].is_some() != (self.cod0(self.src1(p)) == self.dom0(self.src1(q))))
                .map(|q| vec![p, q])
        });
        r.push("2-cell composability", h2_def);
        if !r.all_passed() {
            return r;
        }
        let h2_bd = exec::find_first(strategy, n2, |p| {
            (0..n2)
                .find(|&q| match self.hcomp2[p * n2 + q] {
                    Some(c) => {
                        Some(self.cells2[c].0) != self.hcomp1(self.src1(p), self.src1(q))
                            || Some(self.cells2[c].1) != self.hcomp1(self.tgt1(p), self.tgt1(q))
                    }
                    None => false,
                })
                .map(|q| vec![p, q])
        });
        r.push("2-cell composite boundary", h2_bd);
        if !r.all_passed() {
            return r;
        }

        let unit1 = (0..n1)
            .find(|&x| {
                self.hcomp1(self.id1[self.dom0(x)], x) != Some(x) || self.hcomp1(x, self.id1[self.cod0(x)]) != Some(x)
            })
            .map(|x| vec![x]);
        r.push("1-cell unit", unit1);
        let assoc1 = (0..n1 * n1)
            .find_map(|i| {
                let (x, y) = (i / n1, i % n1);
                let xy = self.hcomp1(x, y)?;
                (0..n1).find(|&z| match self.hcomp1(y, z) {
                    Some(yz) => self.hcomp1(xy, z) != self.hcomp1(x, yz),
                    None => false,
                })
                .map(|z| vec![x, y, z])
            });
        r.push("1-cell associativity", assoc1);
        let unit2 = (0..n2)
            .find(|&p| {
                let l = self.id2[self.id1[self.dom0(self.src1(p))]];
                let rt = self.id2[self.id1[self.cod0(self.src1(p))]];
                self.hcomp2(l, p) != Some(p) || self.hcomp2(p, rt) != Some(p)
            })
            .map(|p| vec![p]);
        r.push("2-cell unit", unit2);
        let assoc2 = exec::find_first(strategy, n2, |p| {
            for q in 0..n2 {
                let Some(pq) = self.hcomp2(p, q) else { continue };
                for s in 0..n2 {
                    if let Some(qs) = self.hcomp2(q, s) {
                        if self.hcomp2(pq, s) != self.hcomp2(p, qs) {
                            return Some(vec![p, q, s]);
                        }
                    }
                }
            }
            None
        });
        r.push("2-cell associativity", assoc2);
        let ids = (0..n1 * n1)
            .find(|&i| {
                let (x, y) = (i / n1, i % n1);
                match self.hcomp1(x, y) {
                    Some(xy) => self.hcomp2(self.id2[x], self.id2[y]) != Some(self.id2[xy]),
                    None => false,
                }
            })
            .map(|i| vec![i / n1, i % n1]);
        r.push("composite of identities", ids);
        let v = self.vertical_category();
        let by_dom = v.arrows_by_dom();
        let interchange = exec::find_first(strategy, n2, |p| {
            for &p2 in &by_dom[self.tgt1(p)] {
                for q in 0..n2 {
                    let Some(pq) = self.hcomp2(p, q) else { continue };
                    for &q2 in &by_dom[self.tgt1(q)] {
                        let Some(top) = self.hcomp2(p2, q2) else { continue };
                        let lhs = self.vcomp(top, pq);
                        let rhs = match (self.vcomp(p2, p), self.vcomp(q2, q)) {
                            (Some(a), Some(b)) => self.hcomp2(a, b),
                            _ => None,
                        };
                        if lhs != rhs {
                            return Some(vec![p2, q2, p, q]);
                        }
                    }
                }
            }
            None
        });
        r.push("interchange", interchange);
        r
    }

    pub fn num0(&self) -> usize {
        self.cells0
    }

    pub fn num1(&self) -> usize {
        self.cells1.len()
    }

    pub fn num2(&self) -> usize {
        self.cells2.len()
    }

    pub fn cell1(&self, x: usize) -> (usize, usize) {
        self.cells1[x]
    }

    pub fn dom0(&self, x: usize) -> usize {
        self.cells1[x].0
    }

    pub fn cod0(&self, x: usize) -> usize {
        self.cells1[x].1
    }

    pub fn cell2(&self, p: usize) -> (usize, usize) {
        self.cells2[p]
    }

    /// Upper boundary 1-cell of a 2-cell.
    pub fn src1(&self, p: usize) -> usize {
        self.cells2[p].0
    }

    pub fn tgt1(&self, p: usize) -> usize {
        self.cells2[p].1
    }

    pub fn id1(&self, a: usize) -> usize {
        self.id1[a]
    }

    pub fn id2(&self, x: usize) -> usize {
        self.id2[x]
    }

    pub fn is_endo(&self, x: usize) -> bool {
        self.cells1[x].0 == self.cells1[x].1
    }

    /// `q ∘ p`, `p` on top.
    #[inline]
    pub fn vcomp(&self, q: usize, p: usize) -> Option<usize> {
        self.vcomp[q * self.num2() + p]
    }

    #[inline]
    pub fn hcomp1(&self, left: usize, right: usize) -> Option<usize> {
        self.hcomp1[left * self.num1() + right]
    }

    #[inline]
    pub fn hcomp2(&self, left: usize, right: usize) -> Option<usize> {
        self.hcomp2[left * self.num2() + right]
    }

    /// 1-cells and 2-cells under vertical composition.
    pub fn vertical_category(&self) -> FiniteCategory {
        let n2 = self.num2();
        let t = triples(n2, &self.vcomp);
        FiniteCategory::from_parts_unchecked(self.num1(), self.cells2.clone(), self.id2.clone(), t)
            .expect("bicategory shapes were validated")
    }

    /// One 0-cell; 1-cells and 2-cells are the objects and morphisms of `d`.
    pub fn suspend(d: &StrictMonoidalCategory) -> StrictBicategory {
        let c = d.base();
        Self::from_fns(
            1,
            vec![(0, 0); c.num_objects()],
            c.arrows().to_vec(),
            vec![d.unit()],
            c.identities().to_vec(),
            |q, p| c.compose(q, p).expect("composable"),
            |x, y| d.tensor_objects(x, y),
            |p, q| d.tensor(p, q),
        )
    }

    /// The locally discrete 2-category on a category: only identity 2-cells.
    pub fn locally_discrete(x: &FiniteCategory) -> StrictBicategory {
        Self::scalar_extension(x, &Monoid::trivial()).expect("trivial monoid is commutative")
    }

    /// 1-cells are the morphisms of `x` (composed left to right), each carrying
    /// the commutative monoid `a` of endo-2-cells.
    ///
    /// The 2-cell `(f, s)` has id `f·|a| + s`.
    pub fn scalar_extension(x: &FiniteCategory, a: &Monoid) -> Result<StrictBicategory> {
        if !a.is_commutative() {
            return Err(Error::precondition("scalar extension needs a commutative monoid"));
        }
        let k = a.size();
        let n1 = x.num_morphisms();
        let cells2 = (0..n1 * k).map(|i| (i / k, i / k)).collect();
        let id2 = (0..n1).map(|f| f * k + a.unit()).collect();
        Ok(Self::from_fns(
            x.num_objects(),
            x.arrows().to_vec(),
            cells2,
            x.identities().to_vec(),
            id2,
            |q, p| (p / k) * k + a.mul(q % k, p % k),
            |f, g| x.compose(g, f).expect("composable"),
            |p, q| x.compose(q / k, p / k).expect("composable") * k + a.mul(p % k, q % k),
        ))
    }
}

/// Endomorphism category of a 0-cell, with new-to-old cell maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndCategory {
    pub category: StrictMonoidalCategory,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// Endo-1-cells of `a` and the 2-cells among them, relabeled in increasing id order.
///
/// Tensor is `⊛` and composition is vertical.
pub fn end_category(b: &StrictBicategory, a: usize) -> Result<EndCategory> {
    if a >= b.num0() {
        return Err(Error::precondition(format!("unknown 0-cell {a}")));
    }
    let cells1: Vec<usize> = (0..b.num1()).filter(|&x| b.cell1(x) == (a, a)).collect();
    let cells2: Vec<usize> = (0..b.num2()).filter(|&p| b.cell1(b.src1(p)) == (a, a)).collect();
    let mut new1 = vec![usize::MAX; b.num1()];
    cells1.iter().enumerate().for_each(|(i, &x)| new1[x] = i);
    let mut new2 = vec![usize::MAX; b.num2()];
    cells2.iter().enumerate().for_each(|(i, &p)| new2[p] = i);
    let arrows = cells2.iter().map(|&p| (new1[b.src1(p)], new1[b.tgt1(p)])).collect();
    let ids = cells1.iter().map(|&x| new2[b.id2(x)]).collect();
    let mut comp = Vec::new();
    for &q in &cells2 {
        for &p in &cells2 {
            if let Some(r) = b.vcomp(q, p) {
                comp.push((new2[q], new2[p], new2[r]));
            }
        }
    }
    let base = FiniteCategory::from_parts_unchecked(cells1.len(), arrows, ids, comp)?;
    let to = cells1
        .iter()
        .flat_map(|&x| cells1.iter().map(move |&y| (x, y)))
        .map(|(x, y)| new1[b.hcomp1(x, y).expect("endo 1-cells compose")])
        .collect();
    let tm = cells2
        .iter()
        .flat_map(|&p| cells2.iter().map(move |&q| (p, q)))
        .map(|(p, q)| new2[b.hcomp2(p, q).expect("endo 2-cells compose")])
        .collect();
    let category = StrictMonoidalCategory::from_parts_unchecked(base, to, tm, new1[b.id1(a)])?;
    Ok(EndCategory { category, cells1, cells2 })
}

/// A full sub-2-category of 1- and 2-cells under vertical composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPart {
    pub category: FiniteCategory,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// Endo-1-cells and non-endo 1-cells, each with the 2-cells among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSplit {
    pub endo_part: CellPart,
    pub rest_part: CellPart,
}

pub fn split_cells(b: &StrictBicategory) -> CellSplit {
    let v = b.vertical_category();
    let part = |endo: bool| {
        let keep: Vec<bool> = (0..b.num2()).map(|p| b.is_endo(b.src1(p)) == endo).collect();
        let r = v.restrict(&keep).expect("vertical composition preserves endpoints");
        CellPart { category: r.category, cells1: r.objects, cells2: r.morphisms }
    };
    CellSplit { endo_part: part(true), rest_part: part(false) }
}

/// A category sharing its objects with the 0-cells of a strict 2-category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedBicategory {
    decoration: FiniteCategory,
    bicat: StrictBicategory,
}

impl DecoratedBicategory {
    /// Both components must already be valid; only the shared object set is checked here.
    pub fn new(decoration: FiniteCategory, bicat: StrictBicategory) -> Result<Self> {
        if decoration.num_objects() != bicat.num0() {
            return Err(Error::malformed(
                "decorated bicategory",
                format!(
                    "decoration has {} objects but the bicategory has {} 0-cells",
                    decoration.num_objects(),
                    bicat.num0()
                ),
            ));
        }
        Ok(DecoratedBicategory { decoration, bicat })
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let mut r = LawReport::new("decorated bicategory");
        r.absorb("decoration", self.decoration.laws(strategy));
        r.absorb("bicategory", self.bicat.laws(strategy));
        r
    }

    pub fn decoration(&self) -> &FiniteCategory {
        &self.decoration
    }

    pub fn bicat(&self) -> &StrictBicategory {
        &self.bicat
    }
}

pub fn decorate(decoration: FiniteCategory, bicat: StrictBicategory) -> Result<DecoratedBicategory> {
    DecoratedBicategory::new(decoration, bicat)
}
