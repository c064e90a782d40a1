//! Finite monoids, categories, functors and strict monoidal categories.

mod category;
mod functor;
pub mod iso;
mod monoid;
mod monoidal;

pub use category::FiniteCategory;
pub use functor::FunctorData;
pub use monoid::{semidirect_product, Monoid, MonoidAction, MonoidMorphism};
pub use monoidal::{delooping, endomorphism_monoid, monoidal_delooping, StrictMonoidalCategory};
