use crate::doublecat::DoubleCategory;
use crate::fincat::FunctorData;

/// The globularly generated piece with the map from its squares back to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma {
    pub double: DoubleCategory,
    /// New square id to old, increasing.
    pub squares: Vec<usize>,
}

impl Gamma {
    pub fn is_everything(&self, c: &DoubleCategory) -> bool {
        self.squares.len() == c.num_squares()
    }
}

// worklist closure of `seed` under the enabled compositions
fn close(c: &DoubleCategory, seed: &[bool], vertical: bool, horizontal: bool) -> Vec<bool> {
    let mut member = seed.to_vec();
    let mut members: Vec<usize> = (0..member.len()).filter(|&p| member[p]).collect();
    let mut queue = members.clone();
    while let Some(x) = queue.pop() {
        let mut found = Vec::new();
        for &y in &members {
            for (a, b) in [(x, y), (y, x)] {
                if vertical {
                    if let Some(r) = c.vcomp(a, b) {
                        found.push(r);
                    }
                }
                if horizontal {
                    if let Some(r) = c.hcomp_square(a, b) {
                        found.push(r);
                    }
                }
            }
        }
        for r in found {
            if !member[r] {
                member[r] = true;
                members.push(r);
                queue.push(r);
                // self-composites of the new member are picked up when it is popped
            }
        }
    }
    member
}

fn generators(c: &DoubleCategory) -> Vec<bool> {
    let mut seed = vec![false; c.num_squares()];
    for p in c.globular_squares() {
        seed[p] = true;
    }
    for &p in &c.hid().morphism_map {
        seed[p] = true;
    }
    seed
}

/// Least sub-double category containing the globular squares and horizontal identities.
pub fn gamma(c: &DoubleCategory) -> Gamma {
    let keep = close(c, &generators(c), true, true);
    let squares: Vec<usize> = (0..keep.len()).filter(|&p| keep[p]).collect();
    let mut new = vec![usize::MAX; keep.len()];
    squares.iter().enumerate().for_each(|(i, &p)| new[p] = i);
    let r = c.c1().restrict(&keep).expect("closure contains all identities and is closed");
    debug_assert_eq!(r.objects, (0..c.c1().num_objects()).collect::<Vec<_>>());
    let sub = |f: &FunctorData| FunctorData {
        object_map: f.object_map.clone(),
        morphism_map: squares.iter().map(|&p| f.mor(p)).collect(),
    };
    let hid = FunctorData {
        object_map: c.hid().object_map.clone(),
        morphism_map: c.hid().morphism_map.iter().map(|&p| new[p]).collect(),
    };
    let nm = squares.len();
    let hsq = (0..nm * nm)
        .map(|i| c.hcomp_square(squares[i / nm], squares[i % nm]).map(|r| new[r]))
        .collect();
    let no = c.c1().num_objects();
    let cells = (0..no * no).map(|i| c.hcomp_cell(i / no, i % no)).collect();
    let double = DoubleCategory::from_dense(c.c0().clone(), r.category, sub(c.src()), sub(c.tgt()), hid, cells, hsq);
    Gamma { double, squares }
}

/// Generated by its globular squares: `γC = C` on the nose.
pub fn is_gg(c: &DoubleCategory) -> bool {
    gamma(c).double == *c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerticalLength {
    Finite(usize),
    /// The chain stabilized below the whole category.
    Infinite,
}

/// `V¹ ⊆ V² ⊆ …` inside `γC`, as membership masks over the squares of `γC`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalChain {
    pub gamma: Gamma,
    pub levels: Vec<Vec<bool>>,
    pub length: VerticalLength,
}

impl VerticalChain {
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.iter().filter(|&&b| b).count()).collect()
    }

    /// Whether the square `p` of the input lies in `V¹`.
    pub fn in_v1(&self, p: usize) -> bool {
        match self.gamma.squares.binary_search(&p) {
            Ok(i) => self.levels[0][i],
            Err(_) => false,
        }
    }
}

/// `V¹` is the vertical closure of the generators; `V^k` is the vertical
/// closure of the horizontal composites of pairs from `V^{k-1}`.
pub fn vertical_chain(c: &DoubleCategory) -> VerticalChain {
    let g = gamma(c);
    let d = &g.double;
    let n = d.num_squares();
    let mut levels = vec![close(d, &generators(d), true, false)];
    let length = loop {
        let last = levels.last().expect("nonempty");
        if last.iter().all(|&b| b) {
            break VerticalLength::Finite(levels.len());
        }
        let mut seed = last.clone();
        for p in (0..n).filter(|&p| last[p]) {
            for q in (0..n).filter(|&q| last[q]) {
                if let Some(r) = d.hcomp_square(p, q) {
                    seed[r] = true;
                }
            }
        }
        let next = close(d, &seed, true, false);
        if next == *last {
            break VerticalLength::Infinite;
        }
        levels.push(next);
    };
    VerticalChain { gamma: g, levels, length }
}

pub fn vertical_length(c: &DoubleCategory) -> VerticalLength {
    vertical_chain(c).length
}
