//! Recovering a pre-cosheaf from a double category over a group, and the
//! unit/counit checks relating that recovery to the lift.

use crate::analysis::{is_gg, vertical_length, VerticalLength};
use crate::doublecat::{decorated_horizontalization, horizontalization, DoubleCategory, DoubleFunctor};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fincat::{endomorphism_monoid, FunctorData, Monoid};
use crate::grothendieck::{NaturalTransformation, Precosheaf, Provenance};
use crate::laws::LawReport;
use crate::lift::{lift, lift_functor, Lift};
use crate::twocat::{end_category, DecoratedBicategory};

fn check_shape(c: &DoubleCategory) -> Result<Monoid> {
    if c.c0().num_objects() != 1 {
        return Err(Error::precondition("object category must have a single object"));
    }
    let (g, _) = endomorphism_monoid(c.c0(), 0);
    if !g.is_group() {
        return Err(Error::precondition("vertical morphisms must form a group"));
    }
    if c.c1().num_objects() != 1 {
        return Err(Error::precondition("there must be a single horizontal 1-cell"));
    }
    let glob = c.globular_squares();
    let commutative = glob
        .iter()
        .all(|&p| glob.iter().all(|&q| c.vcomp(p, q) == c.vcomp(q, p)));
    if !commutative {
        return Err(Error::precondition("globular squares must commute"));
    }
    if !is_gg(c) {
        return Err(Error::precondition("double category is not globularly generated"));
    }
    if vertical_length(c) != VerticalLength::Finite(1) {
        return Err(Error::precondition("vertical length is not 1"));
    }
    Ok(g)
}

/// `Φ_g(a) = i_g ⊡ a ⊡ i_{g⁻¹}`, with `i_{g⁻¹}` on top.
pub fn extract_phi(c: &DoubleCategory) -> Result<Precosheaf> {
    let g = check_shape(c)?;
    let h = horizontalization(c);
    let end = end_category(&h.bicat, 0)?;
    let glob = &h.squares;
    let local = |sq: usize| glob.iter().position(|&p| p == sq);
    let c0 = c.c0();
    let actions = c0
        .morphisms()
        .map(|m| {
            let inv = g.inverse(m).expect("group element");
            let (im, iinv) = (c.hid().mor(m), c.hid().mor(inv));
            let morphism_map = glob
                .iter()
                .map(|&a| {
                    let r = c.vcomp(a, iinv).and_then(|x| c.vcomp(im, x));
                    r.and_then(local).ok_or_else(|| Error::precondition("conjugate of a globular square is not globular"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(FunctorData { object_map: vec![0], morphism_map })
        })
        .collect::<Result<Vec<_>>>()?;
    Precosheaf::new(c0.clone(), vec![end.category], actions)
}

/// The comparison functor from the lift of the recovered data to `c`.
#[derive(Debug, Clone)]
pub struct PiFunctor {
    pub lift: Lift,
    pub functor: DoubleFunctor,
    pub full: bool,
    pub injective: bool,
    /// The induced map on decorated horizontalizations is the identity.
    pub horizontal_identity: bool,
}

/// `(g, a) ↦ a ⊡ i_g`, with `i_g` on top.
pub fn pi_functor(c: &DoubleCategory) -> Result<PiFunctor> {
    let phi = extract_phi(c)?;
    let dec = decorated_horizontalization(c);
    let l = lift(&dec, &phi)?;
    let glob = horizontalization(c).squares;
    let morphism_map = (0..l.double().num_squares())
        .map(|p| match l.provenance(p) {
            Provenance::Pair { base, payload, .. } => c
                .vcomp(glob[payload], c.hid().mor(base))
                .ok_or_else(|| Error::precondition("composite with a horizontal identity is undefined")),
            Provenance::Rest(_) => Err(Error::precondition("single 1-cell shapes have no non-endo cells")),
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = DoubleFunctor {
        f0: FunctorData::identity(c.c0()),
        f1: FunctorData { object_map: (0..c.c1().num_objects()).collect(), morphism_map },
    };
    functor.laws(l.double(), c).into_result()?;
    let full = functor.f1.is_full(l.double().c1(), c.c1());
    let injective = functor.f1.is_injective_on_morphisms();
    let horizontal_identity = functor.f0.is_identity()
        && l.double().globular_squares().iter().zip(&glob).all(|(&p, &q)| functor.f1.mor(p) == q);
    Ok(PiFunctor { lift: l, functor, full, injective, horizontal_identity })
}

/// Restriction of a double functor to globular squares, as a transformation
/// between the recovered pre-cosheaves.
pub fn phi_of_double_functor(f: &DoubleFunctor, from: &DoubleCategory, to: &DoubleCategory) -> Result<NaturalTransformation> {
    if !f.f0.is_identity() {
        return Err(Error::precondition("functor on objects must be the identity"));
    }
    f.laws(from, to).into_result()?;
    let (pf, pt) = (extract_phi(from)?, extract_phi(to)?);
    let (gf, gt) = (horizontalization(from).squares, horizontalization(to).squares);
    let morphism_map = gf
        .iter()
        .map(|&a| {
            let img = f.f1.mor(a);
            gt.iter().position(|&q| q == img).ok_or_else(|| Error::precondition("globular square sent off the globulars"))
        })
        .collect::<Result<Vec<_>>>()?;
    let eta = NaturalTransformation { components: vec![FunctorData { object_map: vec![0], morphism_map }] };
    eta.laws(&pf, &pt).into_result()?;
    Ok(eta)
}

/// All transformations between two pre-cosheaves with one base object and a one-object fiber.
pub fn natural_transformations(phi: &Precosheaf, psi: &Precosheaf) -> Vec<NaturalTransformation> {
    let (a, _) = endomorphism_monoid(phi.fiber(0).base(), 0);
    a.endomorphisms()
        .into_iter()
        .map(|m| NaturalTransformation { components: vec![FunctorData { object_map: vec![0], morphism_map: m }] })
        .filter(|eta| eta.laws(phi, psi).all_passed())
        .collect()
}

/// Objects and morphisms on which the unit and counit are checked.
#[derive(Debug, Clone)]
pub struct AdjunctionFixtures {
    pub dec: DecoratedBicategory,
    pub precosheaves: Vec<Precosheaf>,
    pub doubles: Vec<DoubleCategory>,
    /// `(from, to, F)` indexing into `doubles`.
    pub morphisms: Vec<(usize, usize, DoubleFunctor)>,
}

/// Lifts of every given pre-cosheaf, one relabeled copy of each lift (so the
/// counit is a non-identity isomorphism), and as morphisms every induced
/// functor between lifts plus the relabelings.
pub fn standard_fixtures(dec: &DecoratedBicategory, precosheaves: &[Precosheaf]) -> Result<AdjunctionFixtures> {
    let lifts: Vec<Lift> = precosheaves.iter().map(|p| lift(dec, p)).collect::<Result<_>>()?;
    let mut doubles: Vec<DoubleCategory> = lifts.iter().map(|l| l.double().clone()).collect();
    let mut morphisms = Vec::new();
    for (i, li) in lifts.iter().enumerate() {
        for (j, lj) in lifts.iter().enumerate() {
            for eta in natural_transformations(li.phi(), lj.phi()) {
                morphisms.push((i, j, lift_functor(&eta, li, lj)?));
            }
        }
    }
    let k = lifts.len();
    for (i, l) in lifts.iter().enumerate() {
        let d = l.double();
        let n = d.num_squares();
        let glob = d.globular_squares().len();
        // reverse the non-globular squares
        let perm: Vec<usize> = (0..n).map(|p| if p < glob { p } else { n - 1 - (p - glob) }).collect();
        let relabeled = d.permute_squares(&perm)?;
        relabeled.laws(Strategy::default()).into_result()?;
        doubles.push(relabeled);
        let iso = DoubleFunctor {
            f0: FunctorData::identity(d.c0()),
            f1: FunctorData { object_map: (0..d.c1().num_objects()).collect(), morphism_map: perm },
        };
        morphisms.push((i, k + i, iso));
    }
    Ok(AdjunctionFixtures { dec: dec.clone(), precosheaves: precosheaves.to_vec(), doubles, morphisms })
}

/// Unit round trip, both triangle identities, and naturality of the counit.
pub fn check_triangle_identities(fx: &AdjunctionFixtures) -> Result<LawReport> {
    let mut r = LawReport::new("adjunction");
    for (i, phi) in fx.precosheaves.iter().enumerate() {
        let l = lift(&fx.dec, phi)?;
        let back = extract_phi(l.double())?;
        r.push(format!("round trip of precosheaf {i}"), (back != *phi).then(|| vec![i]));
        let pi = pi_functor(l.double())?;
        let is_id = pi.functor.f1.is_identity() && pi.functor.f0.is_identity() && pi.lift.double() == l.double();
        r.push(format!("counit on lift {i} is the identity"), (!is_id).then(|| vec![i]));
    }
    let mut pis = Vec::with_capacity(fx.doubles.len());
    for (j, c) in fx.doubles.iter().enumerate() {
        let pi = pi_functor(c)?;
        let eta = phi_of_double_functor(&pi.functor, pi.lift.double(), c)?;
        let ident = eta == NaturalTransformation::identity(pi.lift.phi());
        r.push(format!("recovered counit on double {j} is the identity"), (!ident).then(|| vec![j]));
        r.push(format!("counit on double {j} is full"), (!pi.full).then(|| vec![j]));
        r.push(format!("counit on double {j} fixes horizontalization"), (!pi.horizontal_identity).then(|| vec![j]));
        pis.push(pi);
    }
    for (k, (from, to, f)) in fx.morphisms.iter().enumerate() {
        let (c, c2) = (&fx.doubles[*from], &fx.doubles[*to]);
        let eta = phi_of_double_functor(f, c, c2)?;
        let induced = lift_functor(&eta, &pis[*from].lift, &pis[*to].lift)?;
        let lhs = pis[*to].functor.after(&induced);
        let rhs = f.after(&pis[*from].functor);
        r.push(format!("counit naturality along morphism {k}"), (lhs != rhs).then(|| vec![*from, *to]));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::quotient;
    use crate::fincat::{delooping, monoidal_delooping, MonoidAction};
    use crate::twocat::StrictBicategory;

    fn dec(g: &Monoid, a: &Monoid) -> DecoratedBicategory {
        DecoratedBicategory::new(delooping(g), StrictBicategory::suspend(&monoidal_delooping(a).unwrap())).unwrap()
    }

    #[test]
    fn inversion_round_trips() {
        for n in [3, 4] {
            let inv: Vec<usize> = (0..n).map(|a| (n - a) % n).collect();
            let act = MonoidAction::cyclic(2, Monoid::cyclic(n), inv).unwrap();
            let phi = Precosheaf::from_monoid_action(&act).unwrap();
            let l = lift(&dec(&Monoid::cyclic(2), &Monoid::cyclic(n)), &phi).unwrap();
            assert_eq!(extract_phi(l.double()).unwrap(), phi);
        }
    }

    #[test]
    fn pi_of_lift_is_identity() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let l = lift(&dec(&Monoid::cyclic(2), &Monoid::cyclic(3)), &phi).unwrap();
        let pi = pi_functor(l.double()).unwrap();
        assert!(pi.functor.f1.is_identity());
        assert!(pi.full && pi.injective && pi.horizontal_identity);
    }

    #[test]
    fn non_group_decoration_is_rejected() {
        let act = MonoidAction::trivial(Monoid::boolean(), Monoid::cyclic(3));
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let l = lift(&dec(&Monoid::boolean(), &Monoid::cyclic(3)), &phi).unwrap();
        assert!(matches!(extract_phi(l.double()), Err(Error::Precondition(_))));
    }

    #[test]
    fn quotients_of_group_lifts_collapse_globulars() {
        // identifying two non-globular squares forces a globular identification
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let l = lift(&dec(&Monoid::cyclic(2), &Monoid::cyclic(3)), &phi).unwrap();
        let q = quotient(l.double(), &[(3, 4)]).unwrap();
        assert!(q.double.globular_squares().len() < 3);
    }

    #[test]
    fn triangle_identities_for_z2_on_z3() {
        let g = Monoid::cyclic(2);
        let a = Monoid::cyclic(3);
        let d = dec(&g, &a);
        let phis = vec![
            Precosheaf::from_monoid_action(&MonoidAction::trivial(g.clone(), a.clone())).unwrap(),
            Precosheaf::from_monoid_action(&MonoidAction::cyclic(2, a.clone(), vec![0, 2, 1]).unwrap()).unwrap(),
        ];
        let fx = standard_fixtures(&d, &phis).unwrap();
        let r = check_triangle_identities(&fx).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
