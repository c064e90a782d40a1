use super::{FiniteCategory, FunctorData, Monoid};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::laws::LawReport;

/// A strict monoidal structure on a finite category; `tensor(x, y)` is `x ⊗ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictMonoidalCategory {
    base: FiniteCategory,
    tensor_obj: Vec<usize>,
    tensor_mor: Vec<usize>,
    unit: usize,
}

impl StrictMonoidalCategory {
    pub fn new(base: FiniteCategory, tensor_obj: Vec<usize>, tensor_mor: Vec<usize>, unit: usize) -> Result<Self> {
        let m = Self::from_parts_unchecked(base, tensor_obj, tensor_mor, unit)?;
        m.laws(Strategy::default()).into_result()?;
        Ok(m)
    }

    pub fn from_parts_unchecked(
        base: FiniteCategory,
        tensor_obj: Vec<usize>,
        tensor_mor: Vec<usize>,
        unit: usize,
    ) -> Result<Self> {
        let (no, nm) = (base.num_objects(), base.num_morphisms());
        if unit >= no {
            return Err(Error::malformed("monoidal category", "unit object out of range"));
        }
        if tensor_obj.len() != no * no || tensor_obj.iter().any(|&x| x >= no) {
            return Err(Error::malformed("monoidal category", "object tensor table has the wrong shape"));
        }
        if tensor_mor.len() != nm * nm || tensor_mor.iter().any(|&f| f >= nm) {
            return Err(Error::malformed("monoidal category", "morphism tensor table has the wrong shape"));
        }
        Ok(StrictMonoidalCategory { base, tensor_obj, tensor_mor, unit })
    }

    pub fn from_fn(
        base: FiniteCategory,
        unit: usize,
        tensor_obj: impl Fn(usize, usize) -> usize,
        tensor_mor: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let (no, nm) = (base.num_objects(), base.num_morphisms());
        let to = (0..no * no).map(|i| tensor_obj(i / no, i % no)).collect();
        let tm = (0..nm * nm).map(|i| tensor_mor(i / nm, i % nm)).collect();
        Self::new(base, to, tm, unit)
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let c = &self.base;
        let (no, nm) = (c.num_objects(), c.num_morphisms());
        let mut report = LawReport::new("monoidal category");
        report.absorb("base", c.laws(strategy));
        if !report.all_passed() {
            return report;
        }
        let boundary = exec::find_first(strategy, nm, |f| {
            (0..nm)
                .find(|&g| {
                    let t = self.tensor(f, g);
                    c.dom(t) != self.tensor_objects(c.dom(f), c.dom(g))
                        || c.cod(t) != self.tensor_objects(c.cod(f), c.cod(g))
                })
                .map(|g| vec![f, g])
        });
        report.push("tensor boundary", boundary);
        let obj_unit = (0..no)
            .find(|&x| self.tensor_objects(self.unit, x) != x || self.tensor_objects(x, self.unit) != x)
            .map(|x| vec![x]);
        report.push("object unit", obj_unit);
        let obj_assoc = exec::find_first(strategy, no, |x| {
            for y in 0..no {
                for z in 0..no {
                    let l = self.tensor_objects(self.tensor_objects(x, y), z);
                    let r = self.tensor_objects(x, self.tensor_objects(y, z));
                    if l != r {
                        return Some(vec![x, y, z]);
                    }
                }
            }
            None
        });
        report.push("object associativity", obj_assoc);
        let iu = c.identity(self.unit);
        let mor_unit = c
            .morphisms()
            .find(|&f| self.tensor(iu, f) != f || self.tensor(f, iu) != f)
            .map(|f| vec![f]);
        report.push("tensor unit", mor_unit);
        let mor_assoc = exec::find_first(strategy, nm, |f| {
            for g in 0..nm {
                let fg = self.tensor(f, g);
                for h in 0..nm {
                    if self.tensor(fg, h) != self.tensor(f, self.tensor(g, h)) {
                        return Some(vec![f, g, h]);
                    }
                }
            }
            None
        });
        report.push("tensor associativity", mor_assoc);
        let ids = (0..no * no)
            .find(|&i| {
                let (x, y) = (i / no, i % no);
                self.tensor(c.identity(x), c.identity(y)) != c.identity(self.tensor_objects(x, y))
            })
            .map(|i| vec![i / no, i % no]);
        report.push("tensor of identities", ids);
        let by_dom = c.arrows_by_dom();
        let interchange = exec::find_first(strategy, nm, |f| {
            for f2 in 0..nm {
                for &g in &by_dom[c.cod(f)] {
                    for &g2 in &by_dom[c.cod(f2)] {
                        let lhs = c.compose(self.tensor(g, g2), self.tensor(f, f2));
                        let rhs = match (c.compose(g, f), c.compose(g2, f2)) {
                            (Some(a), Some(b)) => Some(self.tensor(a, b)),
                            _ => None,
                        };
                        if lhs != rhs {
                            return Some(vec![g, g2, f, f2]);
                        }
                    }
                }
            }
            None
        });
        report.push("interchange", interchange);
        report
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn tensor_objects(&self, x: usize, y: usize) -> usize {
        self.tensor_obj[x * self.base.num_objects() + y]
    }

    #[inline]
    pub fn tensor(&self, f: usize, g: usize) -> usize {
        self.tensor_mor[f * self.base.num_morphisms() + g]
    }

    pub fn tensor_obj_table(&self) -> &[usize] {
        &self.tensor_obj
    }

    pub fn tensor_mor_table(&self) -> &[usize] {
        &self.tensor_mor
    }

    /// Functor laws plus strict preservation of unit and tensor.
    pub fn functor_laws(&self, target: &StrictMonoidalCategory, f: &FunctorData) -> LawReport {
        let mut report = LawReport::new("monoidal functor");
        report.absorb("underlying", f.laws(&self.base, &target.base));
        if !report.all_passed() {
            return report;
        }
        report.push("unit preservation", (f.obj(self.unit) != target.unit).then(|| vec![self.unit]));
        let no = self.base.num_objects();
        let objs = (0..no * no)
            .find(|&i| {
                let (x, y) = (i / no, i % no);
                f.obj(self.tensor_objects(x, y)) != target.tensor_objects(f.obj(x), f.obj(y))
            })
            .map(|i| vec![i / no, i % no]);
        report.push("object tensor preservation", objs);
        let nm = self.base.num_morphisms();
        let mors = (0..nm * nm)
            .find(|&i| {
                let (a, b) = (i / nm, i % nm);
                f.mor(self.tensor(a, b)) != target.tensor(f.mor(a), f.mor(b))
            })
            .map(|i| vec![i / nm, i % nm]);
        report.push("tensor preservation", mors);
        report
    }
}

/// The one-object category of a monoid.
pub fn delooping(m: &Monoid) -> FiniteCategory {
    FiniteCategory::from_fn_unchecked(1, vec![(0, 0); m.size()], vec![m.unit()], |g, f| m.mul(g, f))
}

/// Delooping with tensor given by the product; requires commutativity.
pub fn monoidal_delooping(m: &Monoid) -> Result<StrictMonoidalCategory> {
    if !m.is_commutative() {
        return Err(Error::precondition("only a commutative monoid has a monoidal delooping"));
    }
    let n = m.size();
    let tm = (0..n * n).map(|i| m.mul(i / n, i % n)).collect();
    StrictMonoidalCategory::from_parts_unchecked(delooping(m), vec![0], tm, 0)
}

/// Endomorphisms of `x` as a monoid, with the new-to-old morphism map.
pub fn endomorphism_monoid(c: &FiniteCategory, x: usize) -> (Monoid, Vec<usize>) {
    let ends = c.hom(x, x);
    let mut pos = vec![usize::MAX; c.num_morphisms()];
    for (i, &f) in ends.iter().enumerate() {
        pos[f] = i;
    }
    let k = ends.len();
    let table = (0..k * k)
        .map(|i| pos[c.compose(ends[i / k], ends[i % k]).expect("endomorphisms compose")])
        .collect();
    let m = Monoid::from_parts_unchecked(k, pos[c.identity(x)], table).expect("endomorphism table has monoid shape");
    (m, ends)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delooping_of_z2_composes_by_addition() {
        let c = delooping(&Monoid::cyclic(2));
        assert_eq!(c.num_objects(), 1);
        assert_eq!(c.num_morphisms(), 2);
        assert_eq!(c.compose(1, 1), Some(0));
        let t = delooping(&Monoid::trivial());
        assert_eq!((t.num_objects(), t.num_morphisms()), (1, 1));
    }

    #[test]
    fn monoidal_delooping_of_z3_satisfies_interchange() {
        let m = monoidal_delooping(&Monoid::cyclic(3)).unwrap();
        assert!(m.laws(Strategy::Sequential).all_passed());
        // independent 3x3x3x3 interchange sweep on the addition formula
        for g in 0..3 {
            for g2 in 0..3 {
                for f in 0..3 {
                    for f2 in 0..3 {
                        assert_eq!(((g + g2) + (f + f2)) % 3, ((g + f) + (g2 + f2)) % 3);
                        let lhs = m.base().compose(m.tensor(g, g2), m.tensor(f, f2)).unwrap();
                        let rhs = m.tensor(m.base().compose(g, f).unwrap(), m.base().compose(g2, f2).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn non_commutative_monoid_has_no_monoidal_delooping() {
        let act = crate::fincat::MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let d6 = crate::fincat::semidirect_product(&act).unwrap();
        assert!(monoidal_delooping(&d6).is_err());
        // the tensor-by-product table fails interchange
        let c = delooping(&d6);
        let tm = (0..36).map(|i| d6.mul(i / 6, i % 6)).collect();
        let raw = StrictMonoidalCategory::from_parts_unchecked(c, vec![0], tm, 0).unwrap();
        assert_eq!(raw.laws(Strategy::Sequential).first_failure().unwrap().law, "interchange");
    }

    #[test]
    fn endomorphism_monoid_inverts_delooping() {
        let m = Monoid::cyclic(4).direct_product(&Monoid::boolean());
        let (back, ids) = endomorphism_monoid(&delooping(&m), 0);
        assert_eq!(back, m);
        assert_eq!(ids, (0..8).collect::<Vec<_>>());
    }
}
