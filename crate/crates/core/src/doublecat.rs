//! Strict double categories, double functors, and horizontalization.

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::fincat::{FiniteCategory, FunctorData};
use crate::laws::LawReport;
use crate::twocat::{DecoratedBicategory, StrictBicategory};

/// A strict double category.
///
/// Objects of `c1` are horizontal 1-cells, morphisms of `c1` are squares and
/// composition in `c1` is vertical (`q ⊡ p`, `p` on top). `hcomp(left, right)`
/// is horizontal composition, defined when `tgt(left) = src(right)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleCategory {
    c0: FiniteCategory,
    c1: FiniteCategory,
    src: FunctorData,
    tgt: FunctorData,
    hid: FunctorData,
    hcomp_cells: Vec<Option<usize>>,
    hcomp_squares: Vec<Option<usize>>,
}

fn dense(n: usize, triples: &[(usize, usize, usize)], what: &str) -> Result<Vec<Option<usize>>> {
    let mut t = vec![None; n * n];
    for &(a, b, c) in triples {
        if a >= n || b >= n || c >= n {
            return Err(Error::malformed("double category", format!("{what} entry [{a}, {b}, {c}] out of range")));
        }
        if t[a * n + b].replace(c).is_some() {
            return Err(Error::malformed("double category", format!("{what} of ({a}, {b}) given twice")));
        }
    }
    Ok(t)
}

fn sparse(n: usize, t: &[Option<usize>]) -> Vec<(usize, usize, usize)> {
    (0..n * n).filter_map(|i| t[i].map(|c| (i / n, i % n, c))).collect()
}

impl DoubleCategory {
    pub fn new(
        c0: FiniteCategory,
        c1: FiniteCategory,
        src: FunctorData,
        tgt: FunctorData,
        hid: FunctorData,
        hcomp_cells: &[(usize, usize, usize)],
        hcomp_squares: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let d = Self::from_parts_unchecked(c0, c1, src, tgt, hid, hcomp_cells, hcomp_squares)?;
        d.laws(Strategy::default()).into_result()?;
        Ok(d)
    }

    /// Checks only table shapes; run [`DoubleCategory::laws`] for the axioms.
    pub fn from_parts_unchecked(
        c0: FiniteCategory,
        c1: FiniteCategory,
        src: FunctorData,
        tgt: FunctorData,
        hid: FunctorData,
        hcomp_cells: &[(usize, usize, usize)],
        hcomp_squares: &[(usize, usize, usize)],
    ) -> Result<Self> {
        for (name, f, s, t) in [("src", &src, &c1, &c0), ("tgt", &tgt, &c1, &c0), ("hid", &hid, &c0, &c1)] {
            if f.object_map.len() != s.num_objects()
                || f.morphism_map.len() != s.num_morphisms()
                || f.object_map.iter().any(|&x| x >= t.num_objects())
                || f.morphism_map.iter().any(|&x| x >= t.num_morphisms())
            {
                return Err(Error::malformed("double category", format!("{name} has the wrong shape")));
            }
        }
        Ok(DoubleCategory {
            hcomp_cells: dense(c1.num_objects(), hcomp_cells, "hcomp_cells")?,
            hcomp_squares: dense(c1.num_morphisms(), hcomp_squares, "hcomp_squares")?,
            c0,
            c1,
            src,
            tgt,
            hid,
        })
    }

    pub(crate) fn from_dense(
        c0: FiniteCategory,
        c1: FiniteCategory,
        src: FunctorData,
        tgt: FunctorData,
        hid: FunctorData,
        hcomp_cells: Vec<Option<usize>>,
        hcomp_squares: Vec<Option<usize>>,
    ) -> Self {
        DoubleCategory { c0, c1, src, tgt, hid, hcomp_cells, hcomp_squares }
    }

    /// The full axiom suite, one entry per law.
    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let (c0, c1) = (&self.c0, &self.c1);
        let mut r = LawReport::new("double category");
        r.absorb("objects", c0.laws(strategy));
        r.absorb("morphisms", c1.laws(strategy));
        if !r.all_passed() {
            return r;
        }
        r.absorb("source", self.src.laws(c1, c0));
        r.absorb("target", self.tgt.laws(c1, c0));
        r.absorb("horizontal identity", self.hid.laws(c0, c1));
        if !r.all_passed() {
            return r;
        }
        let src_hid = self.src.after(&self.hid);
        let tgt_hid = self.tgt.after(&self.hid);
        let bad = c0.morphisms().find(|&f| src_hid.mor(f) != f || tgt_hid.mor(f) != f).map(|f| vec![f]);
        let bad = bad.or_else(|| {
            (0..c0.num_objects())
                .find(|&x| src_hid.obj(x) != x || tgt_hid.obj(x) != x)
                .map(|x| vec![x])
        });
        r.push("boundary of horizontal identities", bad);

        let (no, nm) = (c1.num_objects(), c1.num_morphisms());
        let cells_def = (0..no * no)
            .find(|&i| self.hcomp_cells[i].is_some() != (self.tgt.obj(i / no) == self.src.obj(i % no)))
            .map(|i| vec![i / no, i % no]);
        r.push("cell composability", cells_def);
        let cells_bd = (0..no * no)
            .find(|&i| match self.hcomp_cells[i] {
                Some(c) => self.src.obj(c) != self.src.obj(i / no) || self.tgt.obj(c) != self.tgt.obj(i % no),
                None => false,
            })
            .map(|i| vec![i / no, i % no]);
        r.push("cell composite boundary", cells_bd);
        let sq_def = exec::find_first(strategy, nm, |p| {
            (0..nm)
                .find(|&q| self.hcomp_squares[p * nm + q].is_some() != (self.tgt.mor(p) == self.src.mor(q)))
                .map(|q| vec![p, q])
        });
        r.push("square composability", sq_def);
        if !r.all_passed() {
            return r;
        }
        let sq_bd = exec::find_first(strategy, nm, |p| {
            (0..nm)
                .find(|&q| match self.hcomp_squares[p * nm + q] {
                    Some(c) => {
                        self.src.mor(c) != self.src.mor(p)
                            || self.tgt.mor(c) != self.tgt.mor(q)
                            || Some(c1.dom(c)) != self.hcomp_cell(c1.dom(p), c1.dom(q))
                            || Some(c1.cod(c)) != self.hcomp_cell(c1.cod(p), c1.cod(q))
                    }
                    None => false,
                })
                .map(|q| vec![p, q])
        });
        r.push("square composite boundary", sq_bd);
        if !r.all_passed() {
            return r;
        }

        let cell_unit = (0..no)
            .find(|&x| {
                self.hcomp_cell(self.hid.obj(self.src.obj(x)), x) != Some(x)
                    || self.hcomp_cell(x, self.hid.obj(self.tgt.obj(x))) != Some(x)
            })
            .map(|x| vec![x]);
        r.push("cell unit", cell_unit);
        let cell_assoc = (0..no * no).find_map(|i| {
            let (x, y) = (i / no, i % no);
            let xy = self.hcomp_cell(x, y)?;
            (0..no)
                .find(|&z| match self.hcomp_cell(y, z) {
                    Some(yz) => self.hcomp_cell(xy, z) != self.hcomp_cell(x, yz),
                    None => false,
                })
                .map(|z| vec![x, y, z])
        });
        r.push("cell associativity", cell_assoc);
        let sq_unit = (0..nm)
            .find(|&p| {
                self.hcomp_square(self.hid.mor(self.src.mor(p)), p) != Some(p)
                    || self.hcomp_square(p, self.hid.mor(self.tgt.mor(p))) != Some(p)
            })
            .map(|p| vec![p]);
        r.push("square unit", sq_unit);
        let sq_assoc = exec::find_first(strategy, nm, |p| {
            for q in 0..nm {
                let Some(pq) = self.hcomp_square(p, q) else { continue };
                for s in 0..nm {
                    if let Some(qs) = self.hcomp_square(q, s) {
                        if self.hcomp_square(pq, s) != self.hcomp_square(p, qs) {
                            return Some(vec![p, q, s]);
                        }
                    }
                }
            }
            None
        });
        r.push("square associativity", sq_assoc);
        let ids = (0..no * no)
            .find(|&i| {
                let (x, y) = (i / no, i % no);
                match self.hcomp_cell(x, y) {
                    Some(xy) => self.hcomp_square(c1.identity(x), c1.identity(y)) != Some(c1.identity(xy)),
                    None => false,
                }
            })
            .map(|i| vec![i / no, i % no]);
        r.push("horizontal composite of identities", ids);
        let by_dom = c1.arrows_by_dom();
        let interchange = exec::find_first(strategy, nm, |p| {
            for &p2 in &by_dom[c1.cod(p)] {
                for q in 0..nm {
                    let Some(pq) = self.hcomp_square(p, q) else { continue };
                    for &q2 in &by_dom[c1.cod(q)] {
                        let Some(top) = self.hcomp_square(p2, q2) else { continue };
                        let lhs = c1.compose(top, pq);
                        let rhs = match (c1.compose(p2, p), c1.compose(q2, q)) {
                            (Some(a), Some(b)) => self.hcomp_square(a, b),
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

    pub fn c0(&self) -> &FiniteCategory {
        &self.c0
    }

    pub fn c1(&self) -> &FiniteCategory {
        &self.c1
    }

    pub fn src(&self) -> &FunctorData {
        &self.src
    }

    pub fn tgt(&self) -> &FunctorData {
        &self.tgt
    }

    pub fn hid(&self) -> &FunctorData {
        &self.hid
    }

    pub fn num_squares(&self) -> usize {
        self.c1.num_morphisms()
    }

    /// `q ⊡ p` with `p` on top.
    #[inline]
    pub fn vcomp(&self, q: usize, p: usize) -> Option<usize> {
        self.c1.compose(q, p)
    }

    #[inline]
    pub fn hcomp_cell(&self, left: usize, right: usize) -> Option<usize> {
        self.hcomp_cells[left * self.c1.num_objects() + right]
    }

    #[inline]
    pub fn hcomp_square(&self, left: usize, right: usize) -> Option<usize> {
        self.hcomp_squares[left * self.c1.num_morphisms() + right]
    }

    pub fn hcomp_cell_triples(&self) -> Vec<(usize, usize, usize)> {
        sparse(self.c1.num_objects(), &self.hcomp_cells)
    }

    pub fn hcomp_square_triples(&self) -> Vec<(usize, usize, usize)> {
        sparse(self.c1.num_morphisms(), &self.hcomp_squares)
    }

    pub fn is_globular(&self, p: usize) -> bool {
        self.c0.is_identity(self.src.mor(p)) && self.c0.is_identity(self.tgt.mor(p))
    }

    /// Squares whose vertical sides are identities, in increasing id order.
    pub fn globular_squares(&self) -> Vec<usize> {
        (0..self.num_squares()).filter(|&p| self.is_globular(p)).collect()
    }

    /// The trivial double category on a 2-category: `c0` is discrete and every square is globular.
    pub fn from_bicategory(b: &StrictBicategory) -> DoubleCategory {
        let c0 = FiniteCategory::discrete(b.num0());
        let c1 = b.vertical_category();
        let src = FunctorData {
            object_map: (0..b.num1()).map(|x| b.dom0(x)).collect(),
            morphism_map: (0..b.num2()).map(|p| b.dom0(b.src1(p))).collect(),
        };
        let tgt = FunctorData {
            object_map: (0..b.num1()).map(|x| b.cod0(x)).collect(),
            morphism_map: (0..b.num2()).map(|p| b.cod0(b.src1(p))).collect(),
        };
        let hid = FunctorData {
            object_map: (0..b.num0()).map(|a| b.id1(a)).collect(),
            morphism_map: (0..b.num0()).map(|a| b.id2(b.id1(a))).collect(),
        };
        let (n1, n2) = (b.num1(), b.num2());
        let cells = (0..n1 * n1).map(|i| b.hcomp1(i / n1, i % n1)).collect();
        let squares = (0..n2 * n2).map(|i| b.hcomp2(i / n2, i % n2)).collect();
        DoubleCategory::from_dense(c0, c1, src, tgt, hid, cells, squares)
    }

    /// Same double category with square `p` renamed `perm[p]`.
    pub fn permute_squares(&self, perm: &[usize]) -> Result<DoubleCategory> {
        let nm = self.num_squares();
        let mut seen = vec![false; nm];
        if perm.len() != nm || perm.iter().any(|&q| q >= nm || std::mem::replace(&mut seen[q], true)) {
            return Err(Error::malformed("double category", "square relabeling is not a permutation"));
        }
        let mut arrows = vec![(0, 0); nm];
        let mut src = vec![0; nm];
        let mut tgt = vec![0; nm];
        for p in 0..nm {
            arrows[perm[p]] = self.c1.arrows()[p];
            src[perm[p]] = self.src.mor(p);
            tgt[perm[p]] = self.tgt.mor(p);
        }
        let ids = self.c1.identities().iter().map(|&i| perm[i]).collect();
        let comp: Vec<_> = self.c1.compose_triples().into_iter().map(|(g, f, h)| (perm[g], perm[f], perm[h])).collect();
        let c1 = FiniteCategory::from_parts_unchecked(self.c1.num_objects(), arrows, ids, comp)?;
        let hid = FunctorData {
            object_map: self.hid.object_map.clone(),
            morphism_map: self.hid.morphism_map.iter().map(|&p| perm[p]).collect(),
        };
        let squares: Vec<_> =
            self.hcomp_square_triples().into_iter().map(|(a, b, c)| (perm[a], perm[b], perm[c])).collect();
        DoubleCategory::from_parts_unchecked(
            self.c0.clone(),
            c1,
            FunctorData { object_map: self.src.object_map.clone(), morphism_map: src },
            FunctorData { object_map: self.tgt.object_map.clone(), morphism_map: tgt },
            hid,
            &self.hcomp_cell_triples(),
            &squares,
        )
    }
}

/// A square as a triple `(source, target, payload)` with its horizontal boundary.
///
/// `source` and `target` are the vertical sides. If neither is an identity they coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Square {
    pub source: usize,
    pub target: usize,
    pub payload: usize,
    pub top: usize,
    pub bottom: usize,
}

impl Square {
    pub fn new(c0: &FiniteCategory, source: usize, target: usize, payload: usize, top: usize, bottom: usize) -> Result<Self> {
        if !c0.is_identity(source) && !c0.is_identity(target) && source != target {
            return Err(Error::malformed(
                "square",
                format!("vertical sides {source} and {target} are distinct non-identities"),
            ));
        }
        Ok(Square { source, target, payload, top, bottom })
    }
}

/// Horizontalization with the map from its 2-cells back to squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Horizontalization {
    pub bicat: StrictBicategory,
    pub squares: Vec<usize>,
}

/// 0-, 1- and 2-cells are objects, horizontal 1-cells and globular squares.
///
/// 1-cell ids are kept; globular squares are numbered in increasing id order.
pub fn horizontalization(c: &DoubleCategory) -> Horizontalization {
    let glob = c.globular_squares();
    let mut new = vec![usize::MAX; c.num_squares()];
    glob.iter().enumerate().for_each(|(i, &p)| new[p] = i);
    let c1 = c.c1();
    let cells1 = (0..c1.num_objects()).map(|x| (c.src.obj(x), c.tgt.obj(x))).collect();
    let cells2 = glob.iter().map(|&p| c1.arrows()[p]).collect();
    let id1 = (0..c.c0.num_objects()).map(|a| c.hid.obj(a)).collect();
    let id2 = (0..c1.num_objects()).map(|x| new[c1.identity(x)]).collect();
    let bicat = StrictBicategory::from_fns(
        c.c0.num_objects(),
        cells1,
        cells2,
        id1,
        id2,
        |q, p| new[c1.compose(glob[q], glob[p]).expect("composable globulars")],
        |x, y| c.hcomp_cell(x, y).expect("composable cells"),
        |p, q| new[c.hcomp_square(glob[p], glob[q]).expect("composable globulars")],
    );
    Horizontalization { bicat, squares: glob }
}

pub fn decorated_horizontalization(c: &DoubleCategory) -> DecoratedBicategory {
    DecoratedBicategory::new(c.c0.clone(), horizontalization(c).bicat).expect("0-cells are the objects of c0")
}

/// A pair of functors on objects and squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleFunctor {
    pub f0: FunctorData,
    pub f1: FunctorData,
}

impl DoubleFunctor {
    pub fn identity(c: &DoubleCategory) -> Self {
        DoubleFunctor { f0: FunctorData::identity(&c.c0), f1: FunctorData::identity(&c.c1) }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &DoubleFunctor) -> DoubleFunctor {
        DoubleFunctor { f0: self.f0.after(&first.f0), f1: self.f1.after(&first.f1) }
    }

    pub fn laws(&self, from: &DoubleCategory, to: &DoubleCategory) -> LawReport {
        let mut r = LawReport::new("double functor");
        r.absorb("objects", self.f0.laws(&from.c0, &to.c0));
        r.absorb("morphisms", self.f1.laws(&from.c1, &to.c1));
        if !r.all_passed() {
            return r;
        }
        for (name, a, b) in [("source", &from.src, &to.src), ("target", &from.tgt, &to.tgt)] {
            let lhs = b.after(&self.f1);
            let rhs = self.f0.after(a);
            let bad = from.c1.morphisms().find(|&p| lhs.mor(p) != rhs.mor(p)).map(|p| vec![p]);
            let bad = bad.or_else(|| (0..from.c1.num_objects()).find(|&x| lhs.obj(x) != rhs.obj(x)).map(|x| vec![x]));
            r.push(format!("commutes with {name}"), bad);
        }
        let lhs = self.f1.after(&from.hid);
        let rhs = to.hid.after(&self.f0);
        let bad = from.c0.morphisms().find(|&f| lhs.mor(f) != rhs.mor(f)).map(|f| vec![f]);
        let bad = bad.or_else(|| (0..from.c0.num_objects()).find(|&x| lhs.obj(x) != rhs.obj(x)).map(|x| vec![x]));
        r.push("commutes with horizontal identity", bad);
        let no = from.c1.num_objects();
        let cells = (0..no * no)
            .find(|&i| {
                let (x, y) = (i / no, i % no);
                match from.hcomp_cell(x, y) {
                    Some(xy) => to.hcomp_cell(self.f1.obj(x), self.f1.obj(y)) != Some(self.f1.obj(xy)),
                    None => false,
                }
            })
            .map(|i| vec![i / no, i % no]);
        r.push("preserves horizontal composition of cells", cells);
        let nm = from.c1.num_morphisms();
        let squares = (0..nm * nm)
            .find(|&i| {
                let (p, q) = (i / nm, i % nm);
                match from.hcomp_square(p, q) {
                    Some(pq) => to.hcomp_square(self.f1.mor(p), self.f1.mor(q)) != Some(self.f1.mor(pq)),
                    None => false,
                }
            })
            .map(|i| vec![i / nm, i % nm]);
        r.push("preserves horizontal composition of squares", squares);
        r
    }

    /// Restriction to horizontalizations: identity iff `f0` is the identity and
    /// `f1` fixes every 1-cell and every globular square.
    pub fn horizontalization_is_identity(&self, from: &DoubleCategory) -> bool {
        self.f0.is_identity()
            && self.f1.object_map.iter().enumerate().all(|(i, &x)| i == x)
            && from.globular_squares().into_iter().all(|p| self.f1.mor(p) == p)
    }
}

/// Quotient by the congruence generated by identifying the given square pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub double: DoubleCategory,
    /// Square to its class id; classes are numbered by smallest member.
    pub class_of: Vec<usize>,
}

pub fn quotient(c: &DoubleCategory, pairs: &[(usize, usize)]) -> Result<Quotient> {
    let nm = c.num_squares();
    let mut parent: Vec<usize> = (0..nm).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    fn union(parent: &mut [usize], a: usize, b: usize) -> bool {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
        true
    }
    for &(a, b) in pairs {
        if a >= nm || b >= nm {
            return Err(Error::malformed("quotient", "square id out of range"));
        }
        union(&mut parent, a, b);
    }
    // close under both compositions until stable
    loop {
        let mut changed = false;
        let classes: Vec<usize> = (0..nm).map(|p| find(&mut parent, p)).collect();
        let mut rep_v = std::collections::HashMap::new();
        let mut rep_h = std::collections::HashMap::new();
        for q in 0..nm {
            for p in 0..nm {
                if let Some(r) = c.vcomp(q, p) {
                    if let Some(&r0) = rep_v.get(&(classes[q], classes[p])) {
                        changed |= union(&mut parent, r, r0);
                    } else {
                        rep_v.insert((classes[q], classes[p]), r);
                    }
                }
                if let Some(r) = c.hcomp_square(q, p) {
                    if let Some(&r0) = rep_h.get(&(classes[q], classes[p])) {
                        changed |= union(&mut parent, r, r0);
                    } else {
                        rep_h.insert((classes[q], classes[p]), r);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: Vec<usize> = (0..nm).map(|p| find(&mut parent, p)).collect();
    let mut class_id = vec![usize::MAX; nm];
    let mut reps = Vec::new();
    for p in 0..nm {
        if roots[p] == p {
            class_id[p] = reps.len();
            reps.push(p);
        }
    }
    let class_of: Vec<usize> = roots.iter().map(|&r| class_id[r]).collect();
    for p in 0..nm {
        let r = reps[class_of[p]];
        if c.c1.arrows()[p] != c.c1.arrows()[r] || c.src.mor(p) != c.src.mor(r) || c.tgt.mor(p) != c.tgt.mor(r) {
            return Err(Error::precondition(format!(
                "generated congruence identifies squares {r} and {p} with different boundaries"
            )));
        }
    }
    let k = reps.len();
    let arrows = reps.iter().map(|&p| c.c1.arrows()[p]).collect();
    let ids = c.c1.identities().iter().map(|&i| class_of[i]).collect();
    let mut comp = Vec::new();
    let mut hsq = Vec::new();
    for &q in &reps {
        for &p in &reps {
            if let Some(r) = c.vcomp(q, p) {
                comp.push((class_of[q], class_of[p], class_of[r]));
            }
            if let Some(r) = c.hcomp_square(q, p) {
                hsq.push((class_of[q], class_of[p], class_of[r]));
            }
        }
    }
    let c1 = FiniteCategory::from_parts_unchecked(c.c1.num_objects(), arrows, ids, comp)?;
    let src = FunctorData {
        object_map: c.src.object_map.clone(),
        morphism_map: reps.iter().map(|&p| c.src.mor(p)).collect(),
    };
    let tgt = FunctorData {
        object_map: c.tgt.object_map.clone(),
        morphism_map: reps.iter().map(|&p| c.tgt.mor(p)).collect(),
    };
    let hid = FunctorData {
        object_map: c.hid.object_map.clone(),
        morphism_map: c.hid.morphism_map.iter().map(|&p| class_of[p]).collect(),
    };
    debug_assert_eq!(k, c1.num_morphisms());
    let double = DoubleCategory::from_parts_unchecked(c.c0.clone(), c1, src, tgt, hid, &c.hcomp_cell_triples(), &hsq)?;
    Ok(Quotient { double, class_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{monoidal_delooping, Monoid};

    fn z3_suspension() -> StrictBicategory {
        StrictBicategory::suspend(&monoidal_delooping(&Monoid::cyclic(3)).unwrap())
    }

    #[test]
    fn trivial_double_category_passes() {
        let d = DoubleCategory::from_bicategory(&z3_suspension());
        assert!(d.laws(Strategy::Sequential).all_passed());
        assert_eq!(d.globular_squares(), vec![0, 1, 2]);
        let one = DoubleCategory::from_bicategory(&StrictBicategory::suspend(
            &monoidal_delooping(&Monoid::trivial()).unwrap(),
        ));
        assert!(one.laws(Strategy::Sequential).all_passed());
    }

    #[test]
    fn horizontalization_of_trivial_is_the_bicategory() {
        let b = z3_suspension();
        let d = DoubleCategory::from_bicategory(&b);
        assert_eq!(horizontalization(&d).bicat, b);
        // idempotent through the embedding
        let again = DoubleCategory::from_bicategory(&horizontalization(&d).bicat);
        assert_eq!(again, d);
    }

    #[test]
    fn corrupted_horizontal_composite_is_reported() {
        let d = DoubleCategory::from_bicategory(&z3_suspension());
        let mut sq = d.hcomp_square_triples();
        let e = sq.iter_mut().find(|t| (t.0, t.1) == (1, 2)).unwrap();
        e.2 = 1;
        let bad = DoubleCategory::from_parts_unchecked(
            d.c0().clone(),
            d.c1().clone(),
            d.src().clone(),
            d.tgt().clone(),
            d.hid().clone(),
            &d.hcomp_cell_triples(),
            &sq,
        )
        .unwrap();
        let rep = bad.laws(Strategy::Sequential);
        assert!(!rep.all_passed());
    }

    #[test]
    fn permuting_squares_breaks_identifier_equality_only() {
        let z4 = StrictBicategory::suspend(&monoidal_delooping(&Monoid::cyclic(4)).unwrap());
        let d = DoubleCategory::from_bicategory(&z4);
        // swapping 1 and 2 is not an automorphism of Z_4
        let p = d.permute_squares(&[0, 2, 1, 3]).unwrap();
        assert!(p.laws(Strategy::Sequential).all_passed());
        assert_ne!(decorated_horizontalization(&p), decorated_horizontalization(&d));
    }

    #[test]
    fn quotient_collapses_to_the_congruence() {
        let d = DoubleCategory::from_bicategory(&z3_suspension());
        let q = quotient(&d, &[(0, 1)]).unwrap();
        // in Z_3 identifying 0 with 1 identifies everything
        assert_eq!(q.double.num_squares(), 1);
        assert!(q.double.laws(Strategy::Sequential).all_passed());
        let same = quotient(&d, &[]).unwrap();
        assert_eq!(same.double, d);
    }
}
