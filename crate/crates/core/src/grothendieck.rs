//! Pre-cosheaves and their total categories.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fincat::{delooping, monoidal_delooping, FiniteCategory, FunctorData, MonoidAction, StrictMonoidalCategory};
use crate::laws::LawReport;
use crate::twocat::{end_category, split_cells, DecoratedBicategory, EndCategory};

/// A functor from a base category to strict monoidal categories and strict monoidal functors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Precosheaf {
    base: FiniteCategory,
    at: Vec<StrictMonoidalCategory>,
    action: Vec<FunctorData>,
}

impl Precosheaf {
    pub fn new(base: FiniteCategory, at: Vec<StrictMonoidalCategory>, action: Vec<FunctorData>) -> Result<Self> {
        let p = Self::from_parts_unchecked(base, at, action)?;
        p.laws(Strategy::default()).into_result()?;
        Ok(p)
    }

    pub fn from_parts_unchecked(
        base: FiniteCategory,
        at: Vec<StrictMonoidalCategory>,
        action: Vec<FunctorData>,
    ) -> Result<Self> {
        if at.len() != base.num_objects() {
            return Err(Error::malformed("precosheaf", "one fiber per base object required"));
        }
        if action.len() != base.num_morphisms() {
            return Err(Error::malformed("precosheaf", "one functor per base morphism required"));
        }
        Ok(Precosheaf { base, at, action })
    }

    /// Single-object base `ΩM` acting on the monoidal delooping of a commutative `N`.
    pub fn from_monoid_action(action: &MonoidAction) -> Result<Self> {
        let fiber = monoidal_delooping(action.on())?;
        let functors = action
            .maps()
            .iter()
            .map(|m| FunctorData { object_map: vec![0], morphism_map: m.clone() })
            .collect();
        Self::new(delooping(action.acting()), vec![fiber], functors)
    }

    /// Identities act as identities; every other morphism collapses its fiber
    /// onto the unit object and its identity.
    ///
    /// Functorial only when no composite of non-identity morphisms is an
    /// identity; otherwise the functoriality law is reported.
    pub fn constant(dec: &DecoratedBicategory) -> Result<Self> {
        let base = dec.decoration().clone();
        let at: Vec<StrictMonoidalCategory> = (0..base.num_objects())
            .map(|a| end_category(dec.bicat(), a).map(|e| e.category))
            .collect::<Result<_>>()?;
        let action = base
            .morphisms()
            .map(|f| {
                let (src, tgt) = (&at[base.dom(f)], &at[base.cod(f)]);
                if base.is_identity(f) {
                    FunctorData::identity(src.base())
                } else {
                    let u = tgt.unit();
                    FunctorData {
                        object_map: vec![u; src.base().num_objects()],
                        morphism_map: vec![tgt.base().identity(u); src.base().num_morphisms()],
                    }
                }
            })
            .collect();
        Self::new(base, at, action)
    }

    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let b = &self.base;
        let mut r = LawReport::new("precosheaf");
        for (x, fiber) in self.at.iter().enumerate() {
            r.absorb(&format!("fiber {x}"), fiber.laws(strategy));
        }
        for f in b.morphisms() {
            let rep = self.at[b.dom(f)].functor_laws(&self.at[b.cod(f)], &self.action[f]);
            r.absorb(&format!("action {f}"), rep);
        }
        if !r.all_passed() {
            return r;
        }
        let ids = (0..b.num_objects())
            .find(|&x| !self.action[b.identity(x)].is_identity())
            .map(|x| vec![x]);
        r.push("action of identities", ids);
        let comp = b
            .compose_triples()
            .into_iter()
            .find(|&(g, f, h)| self.action[g].after(&self.action[f]) != self.action[h])
            .map(|(g, f, _)| vec![g, f]);
        r.push("functoriality", comp);
        r
    }

    /// Fiber-by-fiber equality with the endomorphism categories of `dec`.
    pub fn attachment_laws(&self, dec: &DecoratedBicategory) -> LawReport {
        let mut r = LawReport::new("precosheaf attachment");
        let base_ok = self.base == *dec.decoration();
        r.push("base is the decoration", (!base_ok).then(Vec::new));
        if base_ok {
            let bad = (0..self.base.num_objects())
                .find(|&a| end_category(dec.bicat(), a).map(|e| e.category) != Ok(self.at[a].clone()))
                .map(|a| vec![a]);
            r.push("fiber is the endomorphism category", bad);
        }
        r
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn fiber(&self, x: usize) -> &StrictMonoidalCategory {
        &self.at[x]
    }

    pub fn fibers(&self) -> &[StrictMonoidalCategory] {
        &self.at
    }

    pub fn action(&self, f: usize) -> &FunctorData {
        &self.action[f]
    }

    pub fn actions(&self) -> &[FunctorData] {
        &self.action
    }
}

/// Componentwise strict monoidal functors between two pre-cosheaves on the same base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalTransformation {
    pub components: Vec<FunctorData>,
}

impl NaturalTransformation {
    pub fn identity(phi: &Precosheaf) -> Self {
        NaturalTransformation { components: phi.at.iter().map(|d| FunctorData::identity(d.base())).collect() }
    }

    pub fn laws(&self, phi: &Precosheaf, psi: &Precosheaf) -> LawReport {
        let mut r = LawReport::new("natural transformation");
        let same = phi.base == psi.base && self.components.len() == phi.base.num_objects();
        r.push("shared base", (!same).then(Vec::new));
        if !same {
            return r;
        }
        for (x, c) in self.components.iter().enumerate() {
            r.absorb(&format!("component {x}"), phi.at[x].functor_laws(&psi.at[x], c));
        }
        if !r.all_passed() {
            return r;
        }
        let b = &phi.base;
        let nat = b
            .morphisms()
            .find(|&f| {
                let lhs = self.components[b.cod(f)].after(&phi.action[f]);
                let rhs = psi.action[f].after(&self.components[b.dom(f)]);
                lhs != rhs
            })
            .map(|f| vec![f]);
        r.push("naturality", nat);
        r
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &NaturalTransformation) -> NaturalTransformation {
        NaturalTransformation {
            components: self.components.iter().zip(&first.components).map(|(a, b)| a.after(b)).collect(),
        }
    }
}

/// The Grothendieck total category with provenance of its ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalCategory {
    pub category: FiniteCategory,
    /// `(x, a)`: base object and fiber object.
    pub objects: Vec<(usize, usize)>,
    /// `(α, a, β)`: base morphism, source fiber object, and `β: Φ_α(a) → a'`.
    pub morphisms: Vec<(usize, usize, usize)>,
}

/// Composition `(α', β')(α, β) = (α'α, β' ∘ Φ_{α'}(β))`.
pub fn total_category(phi: &Precosheaf) -> TotalCategory {
    let b = &phi.base;
    let mut objects = Vec::new();
    let mut obj_id = HashMap::new();
    for x in 0..b.num_objects() {
        for a in 0..phi.at[x].base().num_objects() {
            obj_id.insert((x, a), objects.len());
            objects.push((x, a));
        }
    }
    let mut morphisms = Vec::new();
    for alpha in b.morphisms() {
        let (x, y) = (b.dom(alpha), b.cod(alpha));
        let fy = phi.at[y].base();
        for a in 0..phi.at[x].base().num_objects() {
            let img = phi.action[alpha].obj(a);
            for beta in fy.morphisms().filter(|&p| fy.dom(p) == img) {
                morphisms.push((alpha, a, beta));
            }
        }
    }
    let mor_id: HashMap<(usize, usize, usize), usize> =
        morphisms.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let arrows = morphisms
        .iter()
        .map(|&(alpha, a, beta)| {
            let y = b.cod(alpha);
            (obj_id[&(b.dom(alpha), a)], obj_id[&(y, phi.at[y].base().cod(beta))])
        })
        .collect();
    let identities = objects
        .iter()
        .map(|&(x, a)| mor_id[&(b.identity(x), a, phi.at[x].base().identity(a))])
        .collect();
    let category = FiniteCategory::from_fn_unchecked(objects.len(), arrows, identities, |g, f| {
        let (alpha2, _, beta2) = morphisms[g];
        let (alpha, a, beta) = morphisms[f];
        let z = b.cod(alpha2);
        let twisted = phi.action[alpha2].mor(beta);
        let payload = phi.at[z].base().compose(beta2, twisted).expect("fiber composite is defined");
        mor_id[&(b.compose(alpha2, alpha).expect("base composite"), a, payload)]
    });
    TotalCategory { category, objects, morphisms }
}

/// Where a morphism of the extended total category came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `(f, φ)` with `φ` a 2-cell of `B` from `Φ_f(source)` to an endo-1-cell; `source` is a 1-cell id of `B`.
    Pair { base: usize, source: usize, payload: usize },
    /// A 2-cell between non-endo 1-cells.
    Rest(usize),
}

/// The total category extended by the non-endo part, with objects numbered as
/// the 1-cells of `B`.
///
/// Morphisms `0..|B₂|` are the 2-cells of `B` with the same ids (a 2-cell
/// between endo-1-cells is the pair over an identity); the pairs over
/// non-identity base morphisms follow in the order of [`total_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedTotal {
    pub category: FiniteCategory,
    pub provenance: Vec<Provenance>,
}

pub(crate) fn ends(dec: &DecoratedBicategory) -> Vec<EndCategory> {
    (0..dec.bicat().num0())
        .map(|a| end_category(dec.bicat(), a).expect("0-cell in range"))
        .collect()
}

pub fn extended_total(dec: &DecoratedBicategory, phi: &Precosheaf) -> Result<ExtendedTotal> {
    phi.attachment_laws(dec).into_result()?;
    let b = dec.bicat();
    let base = dec.decoration();
    let ends = ends(dec);
    let total = total_category(phi);
    let n2 = b.num2();
    let mut new_id = vec![0; total.morphisms.len()];
    let mut provenance: Vec<Provenance> = (0..n2)
        .map(|p| {
            if b.is_endo(b.src1(p)) {
                let x = b.dom0(b.src1(p));
                Provenance::Pair { base: base.identity(x), source: b.src1(p), payload: p }
            } else {
                Provenance::Rest(p)
            }
        })
        .collect();
    for (i, &(alpha, a, beta)) in total.morphisms.iter().enumerate() {
        let (x, y) = (base.dom(alpha), base.cod(alpha));
        let payload = ends[y].cells2[beta];
        if base.is_identity(alpha) {
            new_id[i] = payload;
        } else {
            new_id[i] = provenance.len();
            provenance.push(Provenance::Pair { base: alpha, source: ends[x].cells1[a], payload });
        }
    }
    let obj_b = |o: usize| {
        let (x, a) = total.objects[o];
        ends[x].cells1[a]
    };
    let rest = split_cells(b).rest_part;
    let mut arrows = vec![(0, 0); provenance.len()];
    for (p, arrow) in arrows.iter_mut().enumerate().take(n2) {
        *arrow = b.cell2(p);
    }
    let tc = &total.category;
    for f in tc.morphisms() {
        arrows[new_id[f]] = (obj_b(tc.dom(f)), obj_b(tc.cod(f)));
    }
    let identities: Vec<usize> = (0..b.num1()).map(|x| b.id2(x)).collect();
    let mut triples: Vec<(usize, usize, usize)> =
        tc.compose_triples().into_iter().map(|(g, f, h)| (new_id[g], new_id[f], new_id[h])).collect();
    for (g, f, h) in rest.category.compose_triples() {
        triples.push((rest.cells2[g], rest.cells2[f], rest.cells2[h]));
    }
    let category = FiniteCategory::from_parts_unchecked(b.num1(), arrows, identities, triples)?;
    Ok(ExtendedTotal { category, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{semidirect_product, Monoid};

    fn inversion_z3() -> MonoidAction {
        MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap()
    }

    #[test]
    fn total_category_of_inversion_is_the_semidirect_product() {
        let act = inversion_z3();
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let t = total_category(&phi);
        assert!(t.category.laws(Strategy::Sequential).all_passed());
        assert_eq!(t.category.num_objects(), 1);
        let sd = semidirect_product(&act).unwrap();
        // morphism (m, 0, n) sits at m*3 + n, the same encoding as the semidirect product
        for (i, &(m, _, n)) in t.morphisms.iter().enumerate() {
            assert_eq!(i, n + 3 * m);
        }
        for g in 0..6 {
            for f in 0..6 {
                assert_eq!(t.category.compose(g, f), Some(sd.mul(g, f)));
            }
        }
    }

    #[test]
    fn twisted_composite_example() {
        // (−1, 2) then (−1, 1) is (1, 1 + Φ_{−1}(2)) = (1, 2)
        let phi = Precosheaf::from_monoid_action(&inversion_z3()).unwrap();
        let t = total_category(&phi);
        let id = |m: usize, n: usize| t.morphisms.iter().position(|&(a, _, b)| (a, b) == (m, n)).unwrap();
        assert_eq!(t.category.compose(id(1, 1), id(1, 2)), Some(id(0, 2)));
        // permutation representation of the order-6 group: (n, m) acts on Z_3 by x ↦ n + (−1)^m x
        let perm = |n: usize, m: usize| -> Vec<usize> { (0..3).map(|x| (n + if m == 1 { 3 - x } else { x }) % 3).collect() };
        let comp: Vec<usize> = perm(2, 1).iter().map(|&y| perm(1, 1)[y]).collect();
        // composite of permutations as maps: apply (1,1) last
        let g = t.morphisms[t.category.compose(id(1, 1), id(1, 2)).unwrap()];
        assert_eq!(perm(g.2, g.0), comp);
    }

    #[test]
    fn trivial_base_total_is_the_fiber() {
        let act = MonoidAction::trivial(Monoid::trivial(), Monoid::cyclic(4));
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let t = total_category(&phi);
        assert_eq!(t.category, *phi.fiber(0).base());
    }

    #[test]
    fn action_must_be_functorial() {
        let phi = Precosheaf::from_monoid_action(&inversion_z3()).unwrap();
        let mut bad = phi.actions().to_vec();
        bad[0] = bad[1].clone();
        let raw = Precosheaf::from_parts_unchecked(phi.base().clone(), phi.fibers().to_vec(), bad).unwrap();
        assert_eq!(raw.laws(Strategy::Sequential).first_failure().unwrap().law, "action of identities");
    }

    #[test]
    fn naturality_is_checked() {
        let phi = Precosheaf::from_monoid_action(&inversion_z3()).unwrap();
        let id = NaturalTransformation::identity(&phi);
        assert!(id.laws(&phi, &phi).all_passed());
        let triv = Precosheaf::from_monoid_action(&MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(3))).unwrap();
        let r = id.laws(&phi, &triv);
        assert_eq!(r.first_failure().unwrap().law, "naturality");
    }
}
