use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::laws::LawReport;

/// A finite category with dense object and morphism identifiers.
///
/// `compose(g, f)` is `g ∘ f` ("`f` first"), defined iff `cod f = dom g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCategory {
    objects: usize,
    arrows: Vec<(usize, usize)>,
    identities: Vec<usize>,
    table: Vec<Option<usize>>,
}

impl FiniteCategory {
    /// `compose` lists triples `(g, f, g∘f)`.
    pub fn new(
        objects: usize,
        arrows: Vec<(usize, usize)>,
        identities: Vec<usize>,
        compose: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let c = Self::from_parts_unchecked(objects, arrows, identities, compose)?;
        c.laws(Strategy::default()).into_result()?;
        Ok(c)
    }

    pub fn from_parts_unchecked(
        objects: usize,
        arrows: Vec<(usize, usize)>,
        identities: Vec<usize>,
        compose: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let n = arrows.len();
        if let Some(&(d, c)) = arrows.iter().find(|&&(d, c)| d >= objects || c >= objects) {
            return Err(Error::malformed("category", format!("arrow endpoint ({d}, {c}) out of range")));
        }
        if identities.len() != objects {
            return Err(Error::malformed("category", "one identity per object required"));
        }
        if identities.iter().any(|&i| i >= n) {
            return Err(Error::malformed("category", "identity arrow out of range"));
        }
        let mut table = vec![None; n * n];
        for (g, f, h) in compose {
            if g >= n || f >= n || h >= n {
                return Err(Error::malformed("category", format!("composite [{g}, {f}, {h}] out of range")));
            }
            let slot = &mut table[g * n + f];
            if slot.is_some() {
                return Err(Error::malformed("category", format!("composite of ({g}, {f}) given twice")));
            }
            *slot = Some(h);
        }
        Ok(FiniteCategory { objects, arrows, identities, table })
    }

    /// Builds the table by evaluating `f` on every composable pair.
    pub fn from_fn(
        objects: usize,
        arrows: Vec<(usize, usize)>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let triples: Vec<_> = composable_pairs(&arrows).map(|(g, f)| (g, f, compose(g, f))).collect();
        Self::new(objects, arrows, identities, triples)
    }

    pub(crate) fn from_fn_unchecked(
        objects: usize,
        arrows: Vec<(usize, usize)>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let triples: Vec<_> = composable_pairs(&arrows).map(|(g, f)| (g, f, compose(g, f))).collect();
        Self::from_parts_unchecked(objects, arrows, identities, triples).expect("well-shaped table")
    }

    pub fn discrete(objects: usize) -> Self {
        let arrows = (0..objects).map(|x| (x, x)).collect();
        Self::from_fn_unchecked(objects, arrows, (0..objects).collect(), |g, _| g)
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let n = self.arrows.len();
        let mut report = LawReport::new("category");
        let shape = (0..self.objects)
            .find(|&x| self.arrows[self.identities[x]] != (x, x))
            .map(|x| vec![x]);
        report.push("identity shape", shape);
        let defined = exec::find_first(strategy, n, |g| {
            (0..n)
                .find(|&f| self.table[g * n + f].is_some() != (self.cod(f) == self.dom(g)))
                .map(|f| vec![g, f])
        });
        report.push("composability", defined);
        let boundary = exec::find_first(strategy, n, |g| {
            (0..n)
                .find(|&f| match self.table[g * n + f] {
                    Some(h) => self.arrows[h] != (self.dom(f), self.cod(g)),
                    None => false,
                })
                .map(|f| vec![g, f])
        });
        report.push("composite boundary", boundary);
        if !(report.all_passed()) {
            return report;
        }
        let left = (0..n)
            .find(|&f| self.compose(self.identities[self.cod(f)], f) != Some(f))
            .map(|f| vec![self.identities[self.cod(f)], f]);
        report.push("left unit", left);
        let right = (0..n)
            .find(|&f| self.compose(f, self.identities[self.dom(f)]) != Some(f))
            .map(|f| vec![f, self.identities[self.dom(f)]]);
        report.push("right unit", right);
        let by_dom = self.arrows_by_dom();
        let assoc = exec::find_first(strategy, n, |f| {
            for &g in &by_dom[self.cod(f)] {
                let gf = self.table[g * n + f]?;
                for &h in &by_dom[self.cod(g)] {
                    let hg = self.table[h * n + g]?;
                    if self.table[h * n + gf] != self.table[hg * n + f] {
                        return Some(vec![h, g, f]);
                    }
                }
            }
            None
        });
        report.push("associativity", assoc);
        report
    }

    pub fn num_objects(&self) -> usize {
        self.objects
    }

    pub fn num_morphisms(&self) -> usize {
        self.arrows.len()
    }

    pub fn morphisms(&self) -> std::ops::Range<usize> {
        0..self.arrows.len()
    }

    pub fn dom(&self, f: usize) -> usize {
        self.arrows[f].0
    }

    pub fn cod(&self, f: usize) -> usize {
        self.arrows[f].1
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        let (d, c) = self.arrows[f];
        d == c && self.identities[d] == f
    }

    #[inline]
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g * self.arrows.len() + f]
    }

    /// All defined composites as `(g, f, g∘f)`, lexicographically sorted.
    pub fn compose_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows.len();
        (0..n * n)
            .filter_map(|i| self.table[i].map(|h| (i / n, i % n, h)))
            .collect()
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.morphisms().filter(|&f| self.arrows[f] == (x, y)).collect()
    }

    pub fn arrows_by_dom(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects];
        for (f, &(d, _)) in self.arrows.iter().enumerate() {
            out[d].push(f);
        }
        out
    }

    /// Full subcategory-style restriction to a set of morphisms closed under
    /// composition and containing the identities of their endpoints.
    ///
    /// Objects are kept (relabeled densely among those touched); returns the
    /// new category with the old-to-new object and morphism maps.
    pub fn restrict(&self, keep: &[bool]) -> Result<Restriction> {
        let mut obj_new = vec![None; self.objects];
        let mut objects_kept = Vec::new();
        for f in self.morphisms().filter(|&f| keep[f]) {
            for x in [self.dom(f), self.cod(f)] {
                if obj_new[x].is_none() {
                    obj_new[x] = Some(usize::MAX);
                }
            }
        }
        for (x, slot) in obj_new.iter_mut().enumerate() {
            if slot.is_some() {
                *slot = Some(objects_kept.len());
                objects_kept.push(x);
            }
        }
        let mor_kept: Vec<usize> = self.morphisms().filter(|&f| keep[f]).collect();
        let mut mor_new = vec![None; self.arrows.len()];
        for (i, &f) in mor_kept.iter().enumerate() {
            mor_new[f] = Some(i);
        }
        let arrows = mor_kept
            .iter()
            .map(|&f| (obj_new[self.dom(f)].unwrap(), obj_new[self.cod(f)].unwrap()))
            .collect();
        let mut identities = Vec::with_capacity(objects_kept.len());
        for &x in &objects_kept {
            match mor_new[self.identities[x]] {
                Some(i) => identities.push(i),
                None => return Err(Error::malformed("subcategory", format!("identity of object {x} missing"))),
            }
        }
        let mut triples = Vec::new();
        for &g in &mor_kept {
            for &f in &mor_kept {
                if let Some(h) = self.compose(g, f) {
                    match mor_new[h] {
                        Some(h2) => triples.push((mor_new[g].unwrap(), mor_new[f].unwrap(), h2)),
                        None => {
                            return Err(Error::malformed("subcategory", format!("composite of ({g}, {f}) escapes")))
                        }
                    }
                }
            }
        }
        let category = Self::from_parts_unchecked(objects_kept.len(), arrows, identities, triples)?;
        Ok(Restriction { category, objects: objects_kept, morphisms: mor_kept })
    }

    /// Disjoint union; the second summand's ids are shifted past the first's.
    pub fn disjoint_union(&self, other: &FiniteCategory) -> FiniteCategory {
        let (no, nm) = (self.objects, self.arrows.len());
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|&(d, c)| (d + no, c + no)));
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|&i| i + nm));
        let mut triples = self.compose_triples();
        triples.extend(other.compose_triples().into_iter().map(|(g, f, h)| (g + nm, f + nm, h + nm)));
        Self::from_parts_unchecked(no + other.objects, arrows, identities, triples).expect("shifted tables fit")
    }
}

/// A subcategory together with the ids it was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub category: FiniteCategory,
    /// New object id to old.
    pub objects: Vec<usize>,
    /// New morphism id to old.
    pub morphisms: Vec<usize>,
}

fn composable_pairs(arrows: &[(usize, usize)]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = arrows.len();
    (0..n).flat_map(move |g| (0..n).filter(move |&f| arrows[f].1 == arrows[g].0).map(move |f| (g, f)))
}
