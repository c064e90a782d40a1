//! Finite double categories lifted from decorated bicategories.
//!
//! Every structure in this crate is finite and table-backed. Identifiers are
//! dense integers starting at zero, and every constructor validates the full
//! set of algebraic laws eagerly, so a value that exists is a value that
//! satisfies its axioms.
//!
//! The central construction is [`lift::lift`]: given a decorated bicategory
//! `(B*, B)` and a pre-cosheaf `Φ: B* → Cat⊗` whose fibers are the
//! endomorphism categories of `B`, it builds a double category whose decorated
//! horizontalization is `(B*, B)` on the nose. The [`analysis`] module computes
//! the globularly generated piece, vertical length, and folding structures of
//! such double categories; [`adjoint`] inverts the construction for group
//! decorations.

pub mod adjoint;
pub mod analysis;
pub mod doublecat;
pub mod error;
pub mod examples;
pub mod exec;
pub mod fincat;
pub mod grothendieck;
pub mod laws;
pub mod lift;
pub mod twocat;

pub use doublecat::{DoubleCategory, DoubleFunctor};
pub use error::{Error, Result};
pub use fincat::{FiniteCategory, FunctorData, Monoid, MonoidAction, MonoidMorphism, StrictMonoidalCategory};
pub use grothendieck::Precosheaf;
pub use laws::{LawCheck, LawReport};
pub use lift::Lift;
pub use twocat::{DecoratedBicategory, StrictBicategory};
