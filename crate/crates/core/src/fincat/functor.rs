use super::FiniteCategory;
use crate::error::Result;
use crate::laws::LawReport;

/// Object and morphism maps of a functor; source and target are passed to the checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctorData {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl FunctorData {
    pub fn new(
        source: &FiniteCategory,
        target: &FiniteCategory,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        let f = FunctorData { object_map, morphism_map };
        f.laws(source, target).into_result()?;
        Ok(f)
    }

    pub fn identity(c: &FiniteCategory) -> Self {
        FunctorData {
            object_map: (0..c.num_objects()).collect(),
            morphism_map: c.morphisms().collect(),
        }
    }

    pub fn laws(&self, source: &FiniteCategory, target: &FiniteCategory) -> LawReport {
        let mut report = LawReport::new("functor");
        let shape_ok = self.object_map.len() == source.num_objects()
            && self.morphism_map.len() == source.num_morphisms()
            && self.object_map.iter().all(|&x| x < target.num_objects())
            && self.morphism_map.iter().all(|&f| f < target.num_morphisms());
        report.push("map shape", (!shape_ok).then(Vec::new));
        if !shape_ok {
            return report;
        }
        let boundary = source
            .morphisms()
            .find(|&f| {
                let g = self.morphism_map[f];
                target.dom(g) != self.object_map[source.dom(f)]
                    || target.cod(g) != self.object_map[source.cod(f)]
            })
            .map(|f| vec![f]);
        report.push("functor boundary", boundary);
        let ids = (0..source.num_objects())
            .find(|&x| self.morphism_map[source.identity(x)] != target.identity(self.object_map[x]))
            .map(|x| vec![x]);
        report.push("functor identities", ids);
        let comp = source
            .compose_triples()
            .into_iter()
            .find(|&(g, f, h)| {
                target.compose(self.morphism_map[g], self.morphism_map[f]) != Some(self.morphism_map[h])
            })
            .map(|(g, f, _)| vec![g, f]);
        report.push("functor composition", comp);
        report
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FunctorData) -> FunctorData {
        FunctorData {
            object_map: first.object_map.iter().map(|&x| self.object_map[x]).collect(),
            morphism_map: first.morphism_map.iter().map(|&f| self.morphism_map[f]).collect(),
        }
    }

    pub fn obj(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn mor(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    pub fn is_identity(&self) -> bool {
        self.object_map.iter().enumerate().all(|(i, &x)| i == x)
            && self.morphism_map.iter().enumerate().all(|(i, &f)| i == f)
    }

    pub fn is_injective_on_morphisms(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.morphism_map.iter().all(|f| seen.insert(*f))
    }

    /// Surjective on every hom-set between image objects.
    pub fn is_full(&self, source: &FiniteCategory, target: &FiniteCategory) -> bool {
        let n = source.num_objects();
        for x in 0..n {
            for y in 0..n {
                let (fx, fy) = (self.object_map[x], self.object_map[y]);
                let image: std::collections::HashSet<usize> =
                    source.hom(x, y).into_iter().map(|f| self.morphism_map[f]).collect();
                if target.hom(fx, fy).iter().any(|g| !image.contains(g)) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delooping, Monoid};

    #[test]
    fn homomorphisms_are_functors_between_deloopings() {
        let z4 = delooping(&Monoid::cyclic(4));
        let z2 = delooping(&Monoid::cyclic(2));
        assert!(FunctorData::new(&z4, &z2, vec![0], vec![0, 1, 0, 1]).is_ok());
        let err = FunctorData::new(&z4, &z2, vec![0], vec![0, 1, 1, 0]).unwrap_err();
        assert_eq!(err.law(), Some("functor composition"));
        let err = FunctorData::new(&z4, &z2, vec![0], vec![1, 1, 0, 1]).unwrap_err();
        assert_eq!(err.law(), Some("functor identities"));
    }

    #[test]
    fn composition_of_functors() {
        let z4 = delooping(&Monoid::cyclic(4));
        let double = FunctorData { object_map: vec![0], morphism_map: vec![0, 2, 0, 2] };
        let twice = double.after(&double);
        assert_eq!(twice.morphism_map, vec![0, 0, 0, 0]);
        assert!(twice.laws(&z4, &z4).all_passed());
        assert!(FunctorData::identity(&z4).after(&double) == double);
        assert!(!double.is_full(&z4, &z4));
        assert!(FunctorData::identity(&z4).is_full(&z4, &z4));
    }
}
