use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fincat::iso::monoidal_isomorphism;
use crate::fincat::{delooping, FiniteCategory, FunctorData, Monoid, MonoidAction, StrictMonoidalCategory};
use crate::grothendieck::Precosheaf;
use crate::lift::{lift, Lift};
use crate::twocat::{DecoratedBicategory, StrictBicategory};

/// Objects `δ_g`, endomorphisms `H` at each, tensor `δ_g ⊗ δ_g' = δ_{gg'}`.
///
/// With `twist`, `(δ_{g'}, h') ⊗ (δ_g, h) = (δ_{g'g}, h' + Φ_{g'}(h))`.
/// The morphism `(g, h)` has id `g·|H| + h`.
pub fn graded_category(g: &Monoid, h: &Monoid, twist: Option<&MonoidAction>) -> Result<StrictMonoidalCategory> {
    let k = h.size();
    let arrows = (0..g.size() * k).map(|i| (i / k, i / k)).collect();
    let ids = g.elements().map(|x| x * k + h.unit()).collect();
    let base = FiniteCategory::from_fn(g.size(), arrows, ids, |q, p| (p / k) * k + h.mul(q % k, p % k))?;
    StrictMonoidalCategory::from_fn(
        base,
        g.unit(),
        |x, y| g.mul(x, y),
        |q, p| {
            let (g2, h2, g1, h1) = (q / k, q % k, p / k, p % k);
            let moved = twist.map_or(h1, |t| t.apply(g2, h1));
            g.mul(g2, g1) * k + h.mul(h2, moved)
        },
    )
}

#[derive(Debug, Clone)]
pub struct GradedFixture {
    pub lift: Lift,
    /// Squares on the unit 1-cell: objects are vertical morphisms, composition is `⊟`, tensor is `⊡`.
    pub vertical: StrictMonoidalCategory,
    /// Vertical-category morphism id to square id.
    pub vertical_squares: Vec<usize>,
    pub twisted: StrictMonoidalCategory,
    /// Monoidal isomorphism from `vertical` to `twisted`.
    pub witness: FunctorData,
    pub nodes: u64,
}

pub fn build_graded_fixture(action: &MonoidAction) -> Result<GradedFixture> {
    let (g, h) = (action.acting(), action.on());
    if !g.is_group() || !h.is_group() {
        return Err(Error::precondition("graded fixture needs groups"));
    }
    if !h.is_commutative() {
        return Err(Error::precondition("graded fixture needs an abelian coefficient group"));
    }
    let plain = graded_category(g, h, None)?;
    let k = h.size();
    let b = StrictBicategory::suspend(&plain);
    let dec = DecoratedBicategory::new(delooping(g), b)?;
    let actions = action
        .maps()
        .iter()
        .map(|m| FunctorData {
            object_map: g.elements().collect(),
            morphism_map: (0..g.size() * k).map(|i| (i / k) * k + m[i % k]).collect(),
        })
        .collect();
    let phi = Precosheaf::new(delooping(g), vec![plain.clone()], actions)?;
    let l = lift(&dec, &phi)?;

    let d = l.double();
    let e = g.unit();
    let squares: Vec<usize> = (0..g.size() * k)
        .map(|i| l.pair(i / k, e, e * k + i % k).expect("square on the unit 1-cell"))
        .collect();
    let pos = |sq: usize| squares.iter().position(|&s| s == sq);
    let arrows = (0..g.size() * k).map(|i| (i / k, i / k)).collect();
    let ids = g.elements().map(|x| pos(d.hid().mor(x)).expect("horizontal identity on the unit 1-cell")).collect();
    let mut comp = Vec::new();
    for x in 0..squares.len() {
        for y in 0..squares.len() {
            if let Some(r) = d.hcomp_square(squares[y], squares[x]) {
                comp.push((x, y, pos(r).ok_or_else(|| Error::precondition("horizontal composite leaves the unit 1-cell"))?));
            }
        }
    }
    let base = FiniteCategory::new(g.size(), arrows, ids, comp)?;
    let n = squares.len();
    let tm = (0..n * n)
        .map(|i| d.vcomp(squares[i / n], squares[i % n]).and_then(pos))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::precondition("vertical composite leaves the unit 1-cell"))?;
    let to = (0..g.size() * g.size()).map(|i| g.mul(i / g.size(), i % g.size())).collect();
    let vertical = StrictMonoidalCategory::from_parts_unchecked(base, to, tm, e)?;
    vertical.laws(Strategy::default()).into_result()?;
    let twisted = graded_category(g, h, Some(action))?;
    let search = monoidal_isomorphism(&vertical, &twisted);
    let witness = search
        .witness
        .ok_or_else(|| Error::precondition("no monoidal isomorphism to the twisted graded category"))?;
    Ok(GradedFixture { lift: l, vertical, vertical_squares: squares, twisted, witness, nodes: search.nodes })
}
