//! Bound states of the N-dimensional Kratzer potential
//!
//! ```text
//! V(r) = D_e ((r − r_e)/r)² + η,   η ∈ {0, −D_e}
//! ```
//!
//! computed three ways: the closed form ([`kratzer`]), the Asymptotic
//! Iteration Method in exact arithmetic ([`aim`]) and a finite-difference
//! eigenvalue oracle ([`oracle`]). [`specfun`] provides Kummer functions and
//! normalized radial wavefunctions; [`spectro`] builds vibration–rotation
//! bands and compares them with measured band centres.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod aim;
pub mod constants;
pub mod error;
pub mod kratzer;
pub mod molecule;
pub mod oracle;
pub mod specfun;
pub mod spectro;
pub mod table;

pub use error::{Error, Result};
pub use kratzer::{
    binding_energy, compute_beta, compute_gamma, compute_kappa, energy_from_beta, energy_level,
    potential_value, DimensionlessParams,
};
pub use molecule::{EtaMode, MoleculeFile, MoleculeParams, QuantumState};
pub use table::{emit_table, Cell, Format, Table};
