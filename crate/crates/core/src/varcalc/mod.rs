//! Horizontal forms and the variational bicomplex operations on them.

mod field;
mod form;
mod lagrangian;

pub use field::VerticalField;
pub use form::BasicForm;
pub use lagrangian::{noether_current, LagrangianDensity, Momentum, NoetherCurrent};
