//! Bound-state spectrum and thermodynamics of a spherical quantum pseudodot.
//!
//! The confinement is a pseudoharmonic radial well `V0 (r/r0 - r0/r)^2` plus an
//! axial oscillator `K z^2`, with a uniform magnetic field `B`, an
//! Aharonov-Bohm flux `Phi_AB` and an electric field `eps` along `z`.
//!
//! * [`spectrum`] holds the analytic energy levels and radial wavefunctions.
//! * [`specfun`] is the special-function kernel (Hurwitz zeta, Kummer 1F1).
//! * [`oracle`] provides independent numerical ground truth: a shooting
//!   eigensolver, exact truncated partition sums and finite differences.
//! * [`thermo`] evaluates the closed-form characteristic function, its
//!   thermodynamics and the field responses (current, magnetization,
//!   susceptibility) on three backends.
//! * [`sweep`], [`figures`] and [`verify`] back the `qpdot` command line tool.

pub mod error;
pub mod figures;
pub mod oracle;
pub mod specfun;
pub mod spectrum;
pub mod sweep;
pub mod thermo;
pub mod verify;

pub use error::{Error, Result};
pub use spectrum::{
    Constants, DerivedParams, FieldConfig, LandauMode, PotentialParams, Pseudodot, QuantumNumbers,
};
pub use thermo::{Backend, LadderSpectrum, ThermoPoint};
