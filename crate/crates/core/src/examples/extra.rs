//! Fixtures outside the single-object group shape.

use crate::doublecat::DoubleCategory;
use crate::error::Result;
use crate::fincat::{delooping, FiniteCategory, FunctorData, Monoid, MonoidAction, StrictMonoidalCategory};
use crate::grothendieck::Precosheaf;
use crate::lift::{lift, Lift};
use crate::twocat::{end_category, DecoratedBicategory, StrictBicategory};

/// `0 → 1`.
pub fn arrow_category() -> FiniteCategory {
    FiniteCategory::from_fn(2, vec![(0, 0), (1, 1), (0, 1)], vec![0, 1], |g, f| if g < 2 { f } else { g })
        .expect("arrow category")
}

/// `Z₂` as a discrete monoidal category `{1, x}` with `x ⊗ x = 1`.
pub fn discrete_z2() -> StrictMonoidalCategory {
    StrictMonoidalCategory::from_fn(FiniteCategory::discrete(2), 0, |x, y| (x + y) % 2, |f, g| (f + g) % 2)
        .expect("discrete Z2")
}

/// `ΩZ₂` acting trivially on the suspension of the discrete `Z₂`.
///
/// The square over the generator with upper 1-cell `x` does not factor
/// through the unit 1-cell, so the lift is not globularily generated.
pub fn discrete_z2_lift() -> Result<Lift> {
    let d = discrete_z2();
    let dec = DecoratedBicategory::new(delooping(&Monoid::cyclic(2)), StrictBicategory::suspend(&d))?;
    let id = FunctorData::identity(d.base());
    let phi = Precosheaf::new(delooping(&Monoid::cyclic(2)), vec![d], vec![id.clone(), id])?;
    lift(&dec, &phi)
}

/// The arrow category with `A`-valued 2-cells on every 1-cell.
pub fn arrow_dec(a: &Monoid) -> Result<DecoratedBicategory> {
    let x = arrow_category();
    DecoratedBicategory::new(x.clone(), StrictBicategory::scalar_extension(&x, a)?)
}

/// The arrow acts on the endomorphism scalars by the identity, or by collapsing to the unit.
pub fn arrow_lift(a: &Monoid, collapse: bool) -> Result<Lift> {
    let dec = arrow_dec(a)?;
    let at: Vec<StrictMonoidalCategory> =
        (0..2).map(|x| end_category(dec.bicat(), x).map(|e| e.category)).collect::<Result<_>>()?;
    let n = at[0].base().num_morphisms();
    let arrow = if collapse {
        let u = at[1].unit();
        FunctorData { object_map: vec![u], morphism_map: vec![at[1].base().identity(u); n] }
    } else {
        FunctorData { object_map: vec![0], morphism_map: (0..n).collect() }
    };
    let action = vec![FunctorData::identity(at[0].base()), FunctorData::identity(at[1].base()), arrow];
    let phi = Precosheaf::new(dec.decoration().clone(), at, action)?;
    lift(&dec, &phi)
}

/// The boolean monoid acting on `Z_n` with `0` collapsing to the unit.
pub fn collapsing_action(n: usize) -> Result<MonoidAction> {
    let b = Monoid::boolean();
    let maps = b.elements().map(|x| if x == b.unit() { (0..n).collect() } else { vec![0; n] }).collect();
    MonoidAction::new(b, Monoid::cyclic(n), maps)
}

/// A one-object, one-1-cell double category with vertical length 2.
///
/// Vertical morphisms form `M = {e, u, v, z, 0}` with `uv = vu = z` and every
/// other product of non-units equal to `0`. Squares over `f` are `Z₂`-valued
/// functions on the factorizations `f = s·p`, with everything over `0`
/// identified. Stacking relabels positions, putting side by side adds.
/// The composite of `u` and `v` placements cancels at `(u, v)`, so a single
/// round of stacking misses a quarter of the squares over `z`.
pub fn length_two() -> Result<DoubleCategory> {
    const E: usize = 0;
    const ZERO: usize = 4;
    let mul = |s: usize, p: usize| -> usize {
        match (s, p) {
            (E, x) | (x, E) => x,
            (1, 2) | (2, 1) => 3,
            _ => ZERO,
        }
    };
    let m = Monoid::from_fn(5, E, mul)?;
    // positions[f] lists (p, s) with s·p = f.
    let positions: Vec<Vec<(usize, usize)>> = (0..5)
        .map(|f| {
            if f == ZERO {
                return vec![];
            }
            (0..5).flat_map(|p| (0..5).map(move |s| (p, s))).filter(|&(p, s)| mul(s, p) == f).collect()
        })
        .collect();
    let mut offset = [0; 6];
    for f in 0..5 {
        offset[f + 1] = offset[f] + (1usize << positions[f].len());
    }
    let total = offset[5];
    let base_of = |sq: usize| (0..5).rfind(|&f| offset[f] <= sq).expect("square in range");
    let pos_index = |f: usize, ps: (usize, usize)| positions[f].iter().position(|&q| q == ps).expect("position");
    // Bit mask of the placements in `sq`, keyed by position.
    let placements = |sq: usize| -> Vec<(usize, usize)> {
        let f = base_of(sq);
        let bits = sq - offset[f];
        positions[f].iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, &ps)| ps).collect()
    };
    let build = |f: usize, items: Vec<(usize, usize)>| -> usize {
        if f == ZERO {
            return offset[ZERO];
        }
        offset[f] + items.into_iter().fold(0usize, |acc, ps| acc ^ (1 << pos_index(f, ps)))
    };
    // vcomp(y, x): x on top over f, y below over g.
    let vcomp = |y: usize, x: usize| -> usize {
        let (f, g) = (base_of(x), base_of(y));
        let h = mul(g, f);
        let mut items: Vec<(usize, usize)> = placements(x).into_iter().map(|(p, s)| (p, mul(g, s))).collect();
        items.extend(placements(y).into_iter().map(|(p, s)| (mul(p, f), s)));
        build(h, items)
    };
    let hcomp = |a: usize, b: usize| -> Option<usize> {
        let f = base_of(a);
        (base_of(b) == f).then(|| offset[f] + ((a - offset[f]) ^ (b - offset[f])))
    };
    let c0 = delooping(&m);
    let c1 = FiniteCategory::from_fn(1, vec![(0, 0); total], vec![offset[E]], vcomp)?;
    let src = FunctorData { object_map: vec![0], morphism_map: (0..total).map(base_of).collect() };
    let hid = FunctorData { object_map: vec![0], morphism_map: (0..5).map(|f| offset[f]).collect() };
    let squares: Vec<_> =
        (0..total).flat_map(|a| (0..total).filter_map(move |b| hcomp(a, b).map(|r| (a, b, r)))).collect();
    DoubleCategory::new(c0, c1, src.clone(), src, hid, &[(0, 0, 0)], &squares)
}
