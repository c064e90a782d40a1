//! Named fixtures.
//!
//! Names are colon-separated: `semidirect:zN:zM:inv`, `graded:zG:zH:inv`,
//! `constant:bool:zN`, `constant:arrow:zN`, `arrow:zN:id`, `arrow:zN:zero`,
//! `collapse:zN`, `discrete:z2`, `length2` and `mat:N`. In the first two,
//! the second group acts on the first (semidirect) or the first on the
//! second (graded); `triv` selects the trivial action.

mod extra;
mod graded;
mod mat;
mod semidirect;

pub use extra::{
    arrow_category, arrow_dec, arrow_lift, collapsing_action, discrete_z2, discrete_z2_lift, length_two,
};
pub use graded::{build_graded_fixture, graded_category, GradedFixture};
pub use mat::{build_mat_fixture, MatMembership, MatReport, MatSlice, QMatrix};
pub use semidirect::{
    all_cyclic_actions, build_semidirect_fixture, cyclic_action, inversion, single_object_dec, SemidirectFixture,
};

use crate::doublecat::DoubleCategory;
use crate::error::{Error, Result};
use crate::fincat::Monoid;
use crate::grothendieck::Precosheaf;
use crate::lift::{lift, Lift};

/// Lift fixtures exercised by the test suites, one per shape.
pub const LIFT_FIXTURES: &[&str] = &[
    "semidirect:z1:z1:triv",
    "semidirect:z3:z2:inv",
    "semidirect:z3:z2:triv",
    "semidirect:z4:z2:inv",
    "semidirect:z5:z2:inv",
    "semidirect:z3:z3:triv",
    "graded:z2:z3:inv",
    "graded:z2:z3:triv",
    "graded:z2:z4:inv",
    "constant:bool:z3",
    "constant:arrow:z2",
    "arrow:z2:id",
    "arrow:z3:zero",
    "collapse:z3",
    "discrete:z2",
];

#[derive(Debug, Clone)]
pub enum Fixture {
    Semidirect(Box<SemidirectFixture>),
    Graded(Box<GradedFixture>),
    Lift(Box<Lift>),
    Double(Box<DoubleCategory>),
    Mat(MatReport),
}

impl Fixture {
    pub fn lift(&self) -> Option<&Lift> {
        match self {
            Fixture::Semidirect(s) => Some(&s.lift),
            Fixture::Graded(g) => Some(&g.lift),
            Fixture::Lift(l) => Some(l),
            _ => None,
        }
    }

    pub fn double(&self) -> Option<&DoubleCategory> {
        match self {
            Fixture::Double(d) => Some(d),
            _ => self.lift().map(Lift::double),
        }
    }
}

fn unknown(name: &str) -> Error {
    Error::precondition(format!("unknown fixture `{name}`"))
}

fn cyclic_order(tok: &str, name: &str) -> Result<usize> {
    tok.strip_prefix('z').and_then(|n| n.parse().ok()).filter(|&n| n > 0).ok_or_else(|| unknown(name))
}

fn twist(tok: &str, name: &str) -> Result<bool> {
    match tok {
        "inv" => Ok(true),
        "triv" => Ok(false),
        _ => Err(unknown(name)),
    }
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["semidirect", n, m, t] => {
            let action = cyclic_action(cyclic_order(n, name)?, cyclic_order(m, name)?, twist(t, name)?)?;
            Ok(Fixture::Semidirect(Box::new(build_semidirect_fixture(&action)?)))
        }
        ["graded", g, h, t] => {
            let action = cyclic_action(cyclic_order(h, name)?, cyclic_order(g, name)?, twist(t, name)?)?;
            Ok(Fixture::Graded(Box::new(build_graded_fixture(&action)?)))
        }
        ["constant", "bool", n] => {
            let dec = single_object_dec(&Monoid::boolean(), &Monoid::cyclic(cyclic_order(n, name)?))?;
            let phi = Precosheaf::constant(&dec)?;
            Ok(Fixture::Lift(Box::new(lift(&dec, &phi)?)))
        }
        ["constant", "arrow", n] => {
            let dec = arrow_dec(&Monoid::cyclic(cyclic_order(n, name)?))?;
            let phi = Precosheaf::constant(&dec)?;
            Ok(Fixture::Lift(Box::new(lift(&dec, &phi)?)))
        }
        ["arrow", n, mode] => {
            let collapse = match *mode {
                "id" => false,
                "zero" => true,
                _ => return Err(unknown(name)),
            };
            Ok(Fixture::Lift(Box::new(arrow_lift(&Monoid::cyclic(cyclic_order(n, name)?), collapse)?)))
        }
        ["collapse", n] => {
            let action = collapsing_action(cyclic_order(n, name)?)?;
            let dec = single_object_dec(action.acting(), action.on())?;
            Ok(Fixture::Lift(Box::new(lift(&dec, &Precosheaf::from_monoid_action(&action)?)?)))
        }
        ["discrete", "z2"] => Ok(Fixture::Lift(Box::new(discrete_z2_lift()?))),
        ["length2"] => Ok(Fixture::Double(Box::new(length_two()?))),
        ["mat", n] => Ok(Fixture::Mat(build_mat_fixture(n.parse().map_err(|_| unknown(name))?)?)),
        _ => Err(unknown(name)),
    }
}

pub fn lift_fixture(name: &str) -> Result<Lift> {
    match fixture(name)? {
        Fixture::Semidirect(s) => Ok(s.lift),
        Fixture::Graded(g) => Ok(g.lift),
        Fixture::Lift(l) => Ok(*l),
        _ => Err(Error::precondition(format!("`{name}` is not a lift"))),
    }
}

#[cfg(test)]
mod tests;
