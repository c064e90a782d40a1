//! The double category lifted from a decorated bicategory and a pre-cosheaf.

use std::collections::HashMap;

use crate::doublecat::{decorated_horizontalization, DoubleCategory, DoubleFunctor, Square};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::fincat::FunctorData;
use crate::grothendieck::{ends, extended_total, NaturalTransformation, Precosheaf, Provenance};
use crate::laws::LawReport;
use crate::twocat::{DecoratedBicategory, EndCategory};

/// A lifted double category together with its inputs and square provenance.
///
/// Horizontal 1-cells are the 1-cells of `B` with the same ids. Squares
/// `0..|B₂|` are the 2-cells of `B` (these are exactly the globular squares);
/// the remaining squares are pairs `(f, φ)` over non-identity vertical morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    dec: DecoratedBicategory,
    phi: Precosheaf,
    double: DoubleCategory,
    squares: Vec<Square>,
    provenance: Vec<Provenance>,
    cells: Vec<usize>,
    index: HashMap<(usize, usize, usize), usize>,
}

impl Lift {
    pub fn dec(&self) -> &DecoratedBicategory {
        &self.dec
    }

    pub fn phi(&self) -> &Precosheaf {
        &self.phi
    }

    pub fn double(&self) -> &DoubleCategory {
        &self.double
    }

    pub fn into_double(self) -> DoubleCategory {
        self.double
    }

    pub fn square(&self, p: usize) -> Square {
        self.squares[p]
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn provenance(&self, p: usize) -> Provenance {
        self.provenance[p]
    }

    /// Horizontal 1-cell of the lift to 1-cell of `B`.
    pub fn cell_identification(&self) -> &[usize] {
        &self.cells
    }

    /// Square id of the pair `(f, φ)` whose upper 1-cell is `source`.
    pub fn pair(&self, f: usize, source: usize, payload: usize) -> Option<usize> {
        self.index.get(&(f, source, payload)).copied()
    }

    /// Squares that are pairs over a vertical morphism (globular endo-squares included).
    pub fn pair_squares(&self) -> Vec<usize> {
        (0..self.squares.len())
            .filter(|&p| matches!(self.provenance[p], Provenance::Pair { .. }))
            .collect()
    }

    /// Double-category axioms plus identifier-exact recovery of the input.
    pub fn laws(&self, strategy: Strategy) -> LawReport {
        let mut r = LawReport::new("lift");
        r.absorb("double", self.double.laws(strategy));
        let recovered = decorated_horizontalization(&self.double) == self.dec;
        r.push("decorated horizontalization recovers the input", (!recovered).then(Vec::new));
        r
    }
}

/// Builds the lift and checks it against the full axiom suite.
pub fn lift(dec: &DecoratedBicategory, phi: &Precosheaf) -> Result<Lift> {
    let l = lift_unchecked(dec, phi)?;
    l.laws(Strategy::default()).into_result()?;
    Ok(l)
}

/// Builds the lift without running the axiom suite on the result.
///
/// The input pre-cosheaf must already be valid and attached to `dec`.
pub fn lift_unchecked(dec: &DecoratedBicategory, phi: &Precosheaf) -> Result<Lift> {
    let ext = extended_total(dec, phi)?;
    let b = dec.bicat();
    let c0 = dec.decoration().clone();
    let c1 = ext.category;
    let n2 = b.num2();
    let nm = c1.num_morphisms();

    let mut squares = Vec::with_capacity(nm);
    let mut index = HashMap::new();
    for (p, prov) in ext.provenance.iter().enumerate() {
        let sq = match *prov {
            Provenance::Pair { base, source, payload } => {
                index.insert((base, source, payload), p);
                Square { source: base, target: base, payload, top: source, bottom: b.tgt1(payload) }
            }
            Provenance::Rest(q) => {
                let (x, y) = b.cell1(b.src1(q));
                Square {
                    source: c0.identity(x),
                    target: c0.identity(y),
                    payload: q,
                    top: b.src1(q),
                    bottom: b.tgt1(q),
                }
            }
        };
        squares.push(sq);
    }

    let src = FunctorData {
        object_map: (0..b.num1()).map(|x| b.dom0(x)).collect(),
        morphism_map: squares.iter().map(|s| s.source).collect(),
    };
    let tgt = FunctorData {
        object_map: (0..b.num1()).map(|x| b.cod0(x)).collect(),
        morphism_map: squares.iter().map(|s| s.target).collect(),
    };
    let hid_mor = c0
        .morphisms()
        .map(|f| {
            let (a, bb) = c0.arrows()[f];
            index
                .get(&(f, b.id1(a), b.id2(b.id1(bb))))
                .copied()
                .ok_or_else(|| Error::precondition(format!("action of {f} does not preserve the unit 1-cell")))
        })
        .collect::<Result<Vec<_>>>()?;
    let hid = FunctorData { object_map: (0..c0.num_objects()).map(|a| b.id1(a)).collect(), morphism_map: hid_mor };

    let n1 = b.num1();
    let cells: Vec<Option<usize>> = (0..n1 * n1).map(|i| b.hcomp1(i / n1, i % n1)).collect();
    let hsq = exec::map_collect(Strategy::default(), nm * nm, |i| {
        let (p, q) = (i / nm, i % nm);
        if p < n2 && q < n2 {
            return b.hcomp2(p, q);
        }
        if p < n2 || q < n2 || squares[p].source != squares[q].source {
            return None;
        }
        let top = b.hcomp1(squares[p].top, squares[q].top)?;
        let payload = b.hcomp2(squares[p].payload, squares[q].payload)?;
        index.get(&(squares[p].source, top, payload)).copied()
    });
    let double = DoubleCategory::from_dense(c0, c1, src, tgt, hid, cells, hsq);
    Ok(Lift {
        dec: dec.clone(),
        phi: phi.clone(),
        double,
        squares,
        provenance: ext.provenance,
        cells: (0..n1).collect(),
        index,
    })
}

/// Identities act as identities, everything else collapses onto the unit.
pub fn constant_precosheaf(dec: &DecoratedBicategory) -> Result<Precosheaf> {
    Precosheaf::constant(dec)
}

/// Fiber-level form of the interchange law for pair squares:
/// `(φ'⊛ψ') ∘ Φ_{f'}(φ⊛ψ) = [φ' ∘ Φ_{f'}φ] ⊛ [ψ' ∘ Φ_{f'}ψ]`,
/// over every base morphism `f'` and every quadruple where the composites typecheck.
///
/// Returns the report and the number of quadruples checked.
pub fn interchange_sweep(phi: &Precosheaf, strategy: Strategy) -> (LawReport, u64) {
    let base = phi.base();
    let per_f: Vec<(Option<Vec<usize>>, u64)> = exec::map_collect(strategy, base.num_morphisms(), |f2| {
        let src = phi.fiber(base.dom(f2));
        let tgt = phi.fiber(base.cod(f2));
        let act = phi.action(f2);
        let (cs, ct) = (src.base(), tgt.base());
        let by_dom = ct.arrows_by_dom();
        let mut count = 0;
        for p in cs.morphisms() {
            for q in cs.morphisms() {
                let pq = src.tensor(p, q);
                for &p2 in &by_dom[act.obj(cs.cod(p))] {
                    for &q2 in &by_dom[act.obj(cs.cod(q))] {
                        count += 1;
                        let lhs = ct.compose(tgt.tensor(p2, q2), act.mor(pq));
                        let rhs = match (ct.compose(p2, act.mor(p)), ct.compose(q2, act.mor(q))) {
                            (Some(a), Some(b)) => Some(tgt.tensor(a, b)),
                            _ => None,
                        };
                        if lhs.is_none() || lhs != rhs {
                            return (Some(vec![f2, p2, q2, p, q]), count);
                        }
                    }
                }
            }
        }
        (None, count)
    });
    let mut r = LawReport::new("fiber interchange");
    let total = per_f.iter().map(|x| x.1).sum();
    r.push("twisted interchange", per_f.into_iter().find_map(|x| x.0));
    (r, total)
}

fn component_on(ends: &[EndCategory], eta: &NaturalTransformation, x: usize, cell2: usize) -> usize {
    let e = &ends[x];
    let local = e.cells2.iter().position(|&q| q == cell2).expect("2-cell lies in the fiber");
    e.cells2[eta.components[x].mor(local)]
}

fn component_on_cell(ends: &[EndCategory], eta: &NaturalTransformation, x: usize, cell1: usize) -> usize {
    let e = &ends[x];
    let local = e.cells1.iter().position(|&q| q == cell1).expect("1-cell lies in the fiber");
    e.cells1[eta.components[x].obj(local)]
}

/// Double functor between two lifts over the same decorated bicategory
/// induced by a natural transformation of their pre-cosheaves.
pub fn lift_functor(eta: &NaturalTransformation, from: &Lift, to: &Lift) -> Result<DoubleFunctor> {
    if from.dec != to.dec {
        return Err(Error::precondition("lifts over different decorated bicategories"));
    }
    eta.laws(&from.phi, &to.phi).into_result()?;
    let dec = &from.dec;
    let b = dec.bicat();
    let ends = ends(dec);
    let object_map = (0..b.num1())
        .map(|x| if b.is_endo(x) { component_on_cell(&ends, eta, b.dom0(x), x) } else { x })
        .collect();
    let morphism_map = (0..from.squares.len())
        .map(|p| match from.provenance[p] {
            Provenance::Rest(_) => Ok(p),
            Provenance::Pair { base, source, payload } => {
                let c0 = dec.decoration();
                let new_source = component_on_cell(&ends, eta, c0.dom(base), source);
                let new_payload = component_on_cell_2(&ends, eta, c0.cod(base), payload);
                to.pair(base, new_source, new_payload)
                    .ok_or_else(|| Error::precondition(format!("image of square {p} is not a square of the target")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let f = DoubleFunctor { f0: FunctorData::identity(dec.decoration()), f1: FunctorData { object_map, morphism_map } };
    f.laws(&from.double, &to.double).into_result()?;
    Ok(f)
}

fn component_on_cell_2(ends: &[EndCategory], eta: &NaturalTransformation, x: usize, cell2: usize) -> usize {
    component_on(ends, eta, x, cell2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delooping, monoidal_delooping, semidirect_product, Monoid, MonoidAction};
    use crate::twocat::StrictBicategory;

    fn fixture(act: &MonoidAction) -> (DecoratedBicategory, Precosheaf) {
        let dec = DecoratedBicategory::new(
            delooping(act.acting()),
            StrictBicategory::suspend(&monoidal_delooping(act.on()).unwrap()),
        )
        .unwrap();
        (dec, Precosheaf::from_monoid_action(act).unwrap())
    }

    #[test]
    fn inversion_lift_has_semidirect_squares() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let (dec, phi) = fixture(&act);
        let l = lift(&dec, &phi).unwrap();
        let d = l.double();
        assert_eq!(d.num_squares(), 6);
        assert_eq!(d.globular_squares(), vec![0, 1, 2]);
        let sd = semidirect_product(&act).unwrap();
        for q in 0..6 {
            for p in 0..6 {
                assert_eq!(d.vcomp(q, p), Some(sd.mul(q, p)));
            }
        }
        // (m, n) ⊟ (m, n') = (m, n + n')
        for p in 0..6 {
            for q in 0..6 {
                let expect = (p / 3 == q / 3).then(|| (p / 3) * 3 + (p % 3 + q % 3) % 3);
                assert_eq!(d.hcomp_square(p, q), expect);
            }
        }
    }

    #[test]
    fn trivial_decoration_gives_the_trivial_double_category() {
        let act = MonoidAction::trivial(Monoid::trivial(), Monoid::cyclic(3));
        let (dec, phi) = fixture(&act);
        let l = lift(&dec, &phi).unwrap();
        assert_eq!(*l.double(), DoubleCategory::from_bicategory(dec.bicat()));
    }

    #[test]
    fn detached_precosheaf_is_rejected() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let (_, phi) = fixture(&act);
        let (dec4, _) = fixture(&MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(4)));
        assert!(lift(&dec4, &phi).is_err());
    }

    #[test]
    fn constant_precosheaf_needs_conical_decoration() {
        let (dec, _) = fixture(&MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(3)));
        let err = constant_precosheaf(&dec).unwrap_err();
        assert_eq!(err.law(), Some("functoriality"));
        let (dec_b, _) = fixture(&MonoidAction::trivial(Monoid::boolean(), Monoid::cyclic(3)));
        let phi = constant_precosheaf(&dec_b).unwrap();
        let l = lift(&dec_b, &phi).unwrap();
        // (m', n') ⊡ (m, n) = (m'm, n' + [m' = 1] n)
        let d = l.double();
        let b = Monoid::boolean();
        for q in 0..6 {
            for p in 0..6 {
                let (sq, sp) = (l.square(q), l.square(p));
                let n = (sq.payload + if sq.source == b.unit() { sp.payload } else { 0 }) % 3;
                assert_eq!(d.vcomp(q, p), l.pair(b.mul(sq.source, sp.source), 0, n));
            }
        }
    }

    #[test]
    fn interchange_sweep_counts_quadruples() {
        let act = MonoidAction::cyclic(2, Monoid::cyclic(3), vec![0, 2, 1]).unwrap();
        let phi = Precosheaf::from_monoid_action(&act).unwrap();
        let (r, n) = interchange_sweep(&phi, Strategy::Sequential);
        assert!(r.all_passed());
        assert_eq!(n, 2 * 81);
    }
}
