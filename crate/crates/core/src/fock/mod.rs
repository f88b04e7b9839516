//! Finite multi-particle (Fock) algebra over a set of modes.

mod charge;
mod lattice;
mod modes;
mod operator;
mod state;

pub use charge::{charge_commutator_check, ChargeModel};
pub use lattice::{cyclotomic, free_field_check, FreeLatticeField, LatticeContext, LatticeScalar};
pub use modes::{Mode, ModeLabel, ModeSet, Sector, Statistics};
pub use operator::{normal_order, FockOperator, Ladder, OrderingRule};
pub use state::{FockSpace, FockState, Occupation, DEFAULT_N_MAX};
