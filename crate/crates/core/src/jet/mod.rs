//! Graded differential polynomial ring over a jet space.

mod index;
mod poly;
mod space;

pub use index::{BackgroundId, FieldId, Generator, MultiIndex, MAX_BASE_DIM};
pub use poly::{JetPolynomial, Monomial};
pub use space::{BackgroundDecl, FieldDecl, JetSpace};
