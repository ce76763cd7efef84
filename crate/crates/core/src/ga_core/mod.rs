//! Multivector arithmetic for the four real Clifford algebras over three generators.

mod iso;
mod multivector;
mod signature;
mod tolerance;

pub use iso::isomorphism_cl30_cl12;
pub use multivector::{dot_wedge_split, geometric_product, Blade, GradeView, Multivector};
pub use signature::Signature;
pub use tolerance::{Tolerance, TOLERANCE_ENV};
