//! Special functions for the Kummer problem and the radial wavefunction.

mod kummer;
mod laguerre;
pub mod quadrature;
mod radial;

pub use kummer::{kummer_m, pochhammer, KummerParams, KummerPolynomial, SERIES_CAP, SERIES_RTOL};
pub use laguerre::laguerre_from_kummer;
pub use radial::{radial_wavefunction, RadialFunction};
