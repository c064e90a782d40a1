use crate::error::{Error, Result};
use crate::fincat::{delooping, endomorphism_monoid, monoidal_delooping, semidirect_product, Monoid, MonoidAction};
use crate::grothendieck::Precosheaf;
use crate::lift::{lift, Lift};
use crate::twocat::{DecoratedBicategory, StrictBicategory};

/// `ΩM` acting on the suspension of `ΩN`.
pub fn single_object_dec(acting: &Monoid, on: &Monoid) -> Result<DecoratedBicategory> {
    DecoratedBicategory::new(delooping(acting), StrictBicategory::suspend(&monoidal_delooping(on)?))
}

#[derive(Debug, Clone)]
pub struct SemidirectFixture {
    pub lift: Lift,
    /// Endomorphisms of the horizontal identity, in square ids.
    pub endo: Monoid,
    pub semidirect: Monoid,
    /// `n + |N|·m` to the square `(m, n)`.
    pub encoding: Vec<usize>,
}

pub fn build_semidirect_fixture(action: &MonoidAction) -> Result<SemidirectFixture> {
    let dec = single_object_dec(action.acting(), action.on())?;
    let phi = Precosheaf::from_monoid_action(action)?;
    let l = lift(&dec, &phi)?;
    let semidirect = semidirect_product(action)?;
    let (endo, ids) = endomorphism_monoid(l.double().c1(), 0);
    let k = action.on().size();
    let encoding: Vec<usize> = (0..semidirect.size())
        .map(|i| l.pair(i / k, 0, i % k).expect("every pair is a square"))
        .collect();
    debug_assert_eq!(ids, (0..endo.size()).collect::<Vec<_>>());
    let agrees = (0..semidirect.size()).all(|x| {
        (0..semidirect.size()).all(|y| encoding[semidirect.mul(x, y)] == endo.mul(encoding[x], encoding[y]))
    });
    if !agrees {
        return Err(Error::Law {
            structure: "semidirect fixture".into(),
            law: "endomorphisms of the horizontal identity form the semidirect product".into(),
            witness: vec![],
        });
    }
    Ok(SemidirectFixture { lift: l, endo, semidirect, encoding })
}

/// `x ↦ −x` on `Z_n`.
pub fn inversion(n: usize) -> Vec<usize> {
    (0..n).map(|a| (n - a) % n).collect()
}

/// `Z_m` acting on `Z_n` by inversion of the generator, or trivially.
pub fn cyclic_action(n: usize, m: usize, invert: bool) -> Result<MonoidAction> {
    if invert {
        MonoidAction::cyclic(m, Monoid::cyclic(n), inversion(n))
    } else {
        Ok(MonoidAction::trivial(Monoid::cyclic(m), Monoid::cyclic(n)))
    }
}

/// Every action of `Z_g` on `a`, one per endomorphism `φ` with `φ^g = id`.
pub fn all_cyclic_actions(g: usize, a: &Monoid) -> Vec<MonoidAction> {
    a.endomorphisms()
        .into_iter()
        .filter_map(|gen| MonoidAction::cyclic(g, a.clone(), gen).ok())
        .collect()
}
