//! Globular generation, vertical length, V¹ membership and foldings.

mod chain;
pub mod folding;

pub use chain::{gamma, is_gg, vertical_chain, vertical_length, Gamma, VerticalChain, VerticalLength};
pub use folding::{find_cofolding, find_folding, framed, validate as validate_family, Family, FamilyKind, SearchOutcome, DEFAULT_SEARCH_LIMIT};

use crate::error::{Error, Result};
use crate::grothendieck::{Precosheaf, Provenance};
use crate::lift::Lift;

/// How a square was shown to lie in `V¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum V1Witness {
    /// Over an identity vertical morphism.
    Globular,
    /// `φ = η ∘ Φ_f(ψ)` with `ψ: α → i_a` and `η: i_b → β`, as 2-cells of `B`.
    Factorization { psi: usize, eta: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct V1Membership {
    pub square: usize,
    pub witness: Option<V1Witness>,
}

impl V1Membership {
    pub fn member(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides whether the pair square `p` of a lift factors through the
/// horizontal identity over its vertical side.
pub fn v1_membership(l: &Lift, p: usize) -> Result<V1Membership> {
    let Provenance::Pair { base: f, source: alpha, payload: phi } = l.provenance(p) else {
        return Err(Error::precondition(format!("square {p} is not a pair square")));
    };
    let dec = l.dec();
    let (c0, b) = (dec.decoration(), dec.bicat());
    if c0.is_identity(f) {
        return Ok(V1Membership { square: p, witness: Some(V1Witness::Globular) });
    }
    let (a, bb) = c0.arrows()[f];
    let (ia, ib) = (b.id1(a), b.id1(bb));
    let beta = b.tgt1(phi);
    let d = l.double();
    let hid_f = d.hid().mor(f);
    for psi in (0..b.num2()).filter(|&q| b.cell2(q) == (alpha, ia)) {
        // (f, id_{i_b}) ⊡ (1, ψ) = (f, Φ_f(ψ))
        let Some(lower) = d.vcomp(hid_f, psi) else { continue };
        for eta in (0..b.num2()).filter(|&q| b.cell2(q) == (ib, beta)) {
            if d.vcomp(eta, lower) == Some(p) {
                return Ok(V1Membership { square: p, witness: Some(V1Witness::Factorization { psi, eta }) });
            }
        }
    }
    Ok(V1Membership { square: p, witness: None })
}

/// Every action map of a single-object pre-cosheaf with a single-object fiber
/// is surjective on morphisms.
pub fn gg_criterion_surjective(phi: &Precosheaf) -> Result<bool> {
    if phi.base().num_objects() != 1 || phi.fiber(0).base().num_objects() != 1 {
        return Err(Error::precondition("surjectivity criterion needs one base object and a one-object fiber"));
    }
    let n = phi.fiber(0).base().num_morphisms();
    Ok(phi.actions().iter().all(|f| {
        let mut hit = vec![false; n];
        f.morphism_map.iter().for_each(|&x| hit[x] = true);
        hit.into_iter().all(|h| h)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::DoubleCategory;
    use crate::fincat::{delooping, monoidal_delooping, Monoid, MonoidAction};
    use crate::lift::lift;
    use crate::twocat::{DecoratedBicategory, StrictBicategory};

    fn lift_of(act: &MonoidAction) -> Lift {
        let dec = DecoratedBicategory::new(
            delooping(act.acting()),
            StrictBicategory::suspend(&monoidal_delooping(act.on()).unwrap()),
        )
        .unwrap();
        lift(&dec, &Precosheaf::from_monoid_action(act).unwrap()).unwrap()
    }

    #[test]
    fn inversion_lift_is_gg_with_length_one() {
        let l = lift_of(&MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap());
        assert!(is_gg(l.double()));
        assert_eq!(vertical_length(l.double()), VerticalLength::Finite(1));
        for p in l.pair_squares() {
            assert!(v1_membership(&l, p).unwrap().member());
        }
    }

    #[test]
    fn trivial_double_category_is_gg() {
        let b = StrictBicategory::suspend(&monoidal_delooping(&Monoid::cyclic(2)).unwrap());
        let d = DoubleCategory::from_bicategory(&b);
        assert!(is_gg(&d));
        assert_eq!(vertical_length(&d), VerticalLength::Finite(1));
    }

    #[test]
    fn zero_action_is_gg_without_surjectivity() {
        // the absorbing element of {1, 0} acts by zero; (0, n) = (1, n) ⊡ (0, 0) is still generated
        let maps = vec![vec![0, 0, 0], vec![0, 1, 2]];
        let act = MonoidAction::new(Monoid::boolean(), Monoid::cyclic(3), maps).unwrap();
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        assert!(!gg_criterion_surjective(&phi).unwrap());
        let l = lift_of(&act);
        assert!(is_gg(l.double()));
        let chain = vertical_chain(l.double());
        assert_eq!(chain.length, VerticalLength::Finite(1));
        for p in l.pair_squares() {
            assert_eq!(v1_membership(&l, p).unwrap().member(), chain.in_v1(p));
        }
    }
}
