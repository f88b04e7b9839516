//! Gauge-theory data: Lie algebras, gamma matrices, the Yang–Mills/BRST
//! field system and its identities.

mod brst;
mod curvature;
mod dirac;
mod gamma;
pub mod identities;
mod lie;
mod matrix;
mod model;

pub use brst::{form_witness, witness, BrstTransformation};
pub use curvature::{curvature_like, curvature_shift_residual};
pub use dirac::{dirac_projectors, on_shell_momenta, DiracProjectors};
pub use gamma::GammaAlgebra;
pub use lie::LieAlgebraData;
pub use matrix::{determinant, Matrix};
pub use model::{FieldModel, GaugeSystem, MetricMode, Sectors};
