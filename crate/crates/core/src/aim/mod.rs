//! Asymptotic Iteration Method over exact rational-function arithmetic.

mod dyadic;
mod polynomial;
mod rational;
mod solver;

pub use dyadic::Dyadic;
pub use polynomial::{Coefficient, Polynomial};
pub use rational::{rf_derivative, RationalFunction};
pub use solver::{aim_iterate, aim_solve, comparison_table, AimOptions, AimProblem, AimResult};
