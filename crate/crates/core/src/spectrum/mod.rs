//! Analytic bound-state spectrum of the pseudodot.
//!
//! The radial problem in the `xy` plane is
//!
//! ```text
//! f'' + f'/r - gamma^2/r^2 f - omega^2 r^2 f + eta f = 0
//! ```
//!
//! and the axial problem is a shifted harmonic oscillator. All functions are
//! pure; the [`Pseudodot`] value carries the constants, potential and fields.

mod wavefunction;

pub use wavefunction::RadialState;

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::thermo::LadderSpectrum;

/// Physical constants. Natural units (everything 1) are the default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub c: f64,
    pub e: f64,
    pub kb: f64,
    /// Effective mass of the carrier.
    pub mu: f64,
}

impl Constants {
    pub const NATURAL: Constants = Constants {
        hbar: 1.0,
        c: 1.0,
        e: 1.0,
        kb: 1.0,
        mu: 1.0,
    };

    pub fn new(hbar: f64, c: f64, e: f64, kb: f64, mu: f64) -> Result<Self> {
        let consts = Constants { hbar, c, e, kb, mu };
        for (name, v) in [("hbar", hbar), ("c", c), ("e", e), ("kB", kb), ("mu", mu)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(consts)
    }

    /// Flux quantum `h c / e` with `h = 2 pi hbar`.
    pub fn flux_quantum(&self) -> f64 {
        2.0 * PI * self.hbar * self.c / self.e
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::NATURAL
    }
}

/// Confinement `V0 (r/r0 - r0/r)^2 + K z^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// Height of the pseudoharmonic well. Zero switches the well off.
    pub v0: f64,
    /// Zero point of the well (the pseudodot size).
    pub r0: f64,
    /// Axial oscillator constant `K`.
    pub k_osc: f64,
}

impl PotentialParams {
    pub fn new(v0: f64, r0: f64, k_osc: f64) -> Result<Self> {
        if !(v0.is_finite() && v0 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "V0 must be >= 0, got {v0}"
            )));
        }
        if !(r0.is_finite() && r0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "r0 must be positive, got {r0}"
            )));
        }
        if !(k_osc.is_finite() && k_osc > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "K must be positive, got {k_osc}"
            )));
        }
        Ok(PotentialParams { v0, r0, k_osc })
    }
}

impl Default for PotentialParams {
    fn default() -> Self {
        PotentialParams {
            v0: 5.0,
            r0: 1.0,
            k_osc: 1.0,
        }
    }
}

/// External fields: magnetic field along `z`, Aharonov-Bohm flux and
/// electric field along `z`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldConfig {
    pub b: f64,
    pub phi_ab: f64,
    pub eps: f64,
}

impl FieldConfig {
    pub fn new(b: f64, phi_ab: f64, eps: f64) -> Result<Self> {
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::InvalidParameter(format!("B must be >= 0, got {b}")));
        }
        if !(phi_ab.is_finite() && phi_ab >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Phi_AB must be >= 0, got {phi_ab}"
            )));
        }
        if !eps.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "eps must be finite, got {eps}"
            )));
        }
        Ok(FieldConfig { b, phi_ab, eps })
    }
}

/// Quantum numbers of a bound state. `n_z` counts from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub n_z: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, n_z: u32, m: i32) -> Result<Self> {
        if n_z < 1 {
            return Err(Error::InvalidParameter("n_z starts at 1".into()));
        }
        Ok(QuantumNumbers { n_r, n_z, m })
    }
}

/// Field-dependent parameters of the radial equation for one `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub omega_c: f64,
    pub xi: f64,
    /// Positive root of `gamma^2 = 2 mu V0 r0^2 / hbar^2 + (m + xi)^2`.
    pub gamma: f64,
    /// Radial frequency parameter, `omega^2 = 2 mu V0 / (hbar r0)^2 + (e B / 2 hbar c)^2`.
    pub omega: f64,
    pub phi0: f64,
}

/// Which closed form to use for the field-only (`V0 = 0`) spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LandauMode {
    /// `V0 -> 0` limit of the radial spectrum: coefficient 1 on `(m + xi)`.
    #[default]
    Derived,
    /// Published form with coefficient 1/2 on `(m + xi)`.
    Paper,
}

/// A pseudodot: constants, confinement and applied fields.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Pseudodot {
    pub consts: Constants,
    pub potential: PotentialParams,
    pub fields: FieldConfig,
}

impl Pseudodot {
    pub fn new(consts: Constants, potential: PotentialParams, fields: FieldConfig) -> Self {
        Pseudodot {
            consts,
            potential,
            fields,
        }
    }

    pub fn with_fields(mut self, fields: FieldConfig) -> Self {
        self.fields = fields;
        self
    }

    pub fn with_potential(mut self, potential: PotentialParams) -> Self {
        self.potential = potential;
        self
    }

    /// `omega_c = e B / (mu c)`.
    pub fn cyclotron_frequency(&self) -> f64 {
        let k = &self.consts;
        k.e * self.fields.b / (k.mu * k.c)
    }

    /// `xi = Phi_AB / Phi_0`.
    pub fn flux_ratio(&self) -> f64 {
        self.fields.phi_ab / self.consts.flux_quantum()
    }

    pub fn derived(&self, m: i32) -> DerivedParams {
        let k = &self.consts;
        let p = &self.potential;
        let xi = self.flux_ratio();
        let mx = m as f64 + xi;
        let gamma2 = 2.0 * k.mu * p.v0 * p.r0 * p.r0 / (k.hbar * k.hbar) + mx * mx;
        let omega2 = 2.0 * k.mu * p.v0 / (k.hbar * k.hbar * p.r0 * p.r0)
            + (k.e * self.fields.b / (2.0 * k.hbar * k.c)).powi(2);
        DerivedParams {
            omega_c: self.cyclotron_frequency(),
            xi,
            gamma: gamma2.sqrt(),
            omega: omega2.sqrt(),
            phi0: k.flux_quantum(),
        }
    }

    /// Spectral parameter of the radial equation for energy `energy`:
    /// `eta = 2 mu (E + 2 V0) / hbar^2 - e B (m + xi) / (hbar c)`.
    pub fn eta_of_energy(&self, energy: f64, m: i32) -> f64 {
        let k = &self.consts;
        let mx = m as f64 + self.flux_ratio();
        2.0 * k.mu * (energy + 2.0 * self.potential.v0) / (k.hbar * k.hbar)
            - k.e * self.fields.b * mx / (k.hbar * k.c)
    }

    /// Inverse of [`Pseudodot::eta_of_energy`].
    pub fn energy_of_eta(&self, eta: f64, m: i32) -> f64 {
        let k = &self.consts;
        let mx = m as f64 + self.flux_ratio();
        k.hbar * k.hbar / (2.0 * k.mu) * (eta + k.e * self.fields.b * mx / (k.hbar * k.c))
            - 2.0 * self.potential.v0
    }

    /// `sqrt(hbar^2 omega_c^2 + 8 V0 hbar^2 / (r0^2 mu))`, the radial level spacing.
    pub fn radial_spacing(&self) -> f64 {
        let k = &self.consts;
        let p = &self.potential;
        let wc = self.cyclotron_frequency();
        (k.hbar * k.hbar * wc * wc + 8.0 * p.v0 * k.hbar * k.hbar / (p.r0 * p.r0 * k.mu)).sqrt()
    }

    /// Radial energy `E_r(n_r, m)`.
    pub fn radial_energy(&self, n_r: u32, m: i32) -> Result<f64> {
        let d = self.derived(m);
        if d.omega == 0.0 {
            return Err(Error::InvalidParameter(
                "no bound radial states with V0 = 0 and B = 0".into(),
            ));
        }
        let k = &self.consts;
        let mx = m as f64 + d.xi;
        Ok(k.hbar * d.omega_c / 2.0 * mx - 2.0 * self.potential.v0
            + self.radial_spacing() * (n_r as f64 + 0.5 + 0.5 * d.gamma))
    }

    /// Stark shift of the axial levels, `-hbar^2 e^2 eps^2 / (4 K)`.
    pub fn stark_shift(&self) -> f64 {
        let k = &self.consts;
        -(k.hbar * k.e * self.fields.eps).powi(2) / (4.0 * self.potential.k_osc)
    }

    /// Axial energy `E_z(n_z) = (hbar/2) sqrt(K/mu) (n_z + 1) + Stark shift`.
    pub fn axial_energy(&self, n_z: u32) -> Result<f64> {
        if n_z < 1 {
            return Err(Error::InvalidParameter("n_z starts at 1".into()));
        }
        Ok(self.axial_quantum() * (n_z as f64 + 1.0) + self.stark_shift())
    }

    /// `(hbar/2) sqrt(K/mu)`, the axial level spacing.
    pub fn axial_quantum(&self) -> f64 {
        self.consts.hbar / 2.0 * (self.potential.k_osc / self.consts.mu).sqrt()
    }

    pub fn total_energy(&self, q: QuantumNumbers) -> Result<f64> {
        Ok(self.radial_energy(q.n_r, q.m)? + self.axial_energy(q.n_z)?)
    }

    /// Offset `a` of the collapsed ladder `E_n = n hbar + a`.
    pub fn offset(&self, m: i32) -> f64 {
        let k = &self.consts;
        let p = &self.potential;
        let mx = m as f64 + k.e * self.fields.phi_ab / (2.0 * PI * k.hbar * k.c);
        let root = (mx * mx + 2.0 * k.mu * p.v0 * p.r0 * p.r0 / (k.hbar * k.hbar)).sqrt();
        0.5 * self.radial_spacing() * (1.0 + root)
            + k.hbar * k.e * self.fields.b / (2.0 * k.mu * k.c) * mx
            - 2.0 * p.v0
            + self.stark_shift()
            + self.axial_quantum()
    }

    /// Ladder spectrum used by the thermodynamics: offset `a`, `Xi = 2a/hbar`, `Omega = 1`.
    pub fn ladder(&self, m: i32) -> LadderSpectrum {
        LadderSpectrum::from_offset(self.offset(m), self.consts.hbar)
    }

    /// Spectrum without the confinement (`V0 = 0`).
    pub fn landau_limit_energy(&self, n: u32, m: i32, mode: LandauMode) -> f64 {
        let wc = self.cyclotron_frequency();
        let mx = m as f64 + self.flux_ratio();
        let linear = match mode {
            LandauMode::Derived => mx,
            LandauMode::Paper => 0.5 * mx,
        };
        self.consts.hbar * wc / 2.0 * (2.0 * n as f64 + 1.0 + mx.abs() + linear)
    }

    /// Unnormalized radial wavefunction of state `(n_r, m)` at radius `r`.
    pub fn radial_wavefunction(&self, n_r: u32, m: i32, r: f64) -> Result<f64> {
        self.radial_state(n_r, m)?.value(r)
    }

    pub fn radial_state(&self, n_r: u32, m: i32) -> Result<RadialState> {
        RadialState::new(self, n_r, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(v0: f64, b: f64, phi: f64, eps: f64) -> Pseudodot {
        Pseudodot {
            consts: Constants::NATURAL,
            potential: PotentialParams {
                v0,
                r0: 1.0,
                k_osc: 1.0,
            },
            fields: FieldConfig {
                b,
                phi_ab: phi,
                eps,
            },
        }
    }

    #[test]
    fn cyclotron_and_flux() {
        assert_eq!(dot(5.0, 0.0, 0.0, 0.0).cyclotron_frequency(), 0.0);
        assert_eq!(dot(5.0, 2.0, 0.0, 0.0).cyclotron_frequency(), 2.0);
        let mut heavy = dot(5.0, 5.0, 0.0, 0.0);
        heavy.consts.mu = 2.0;
        assert_eq!(heavy.cyclotron_frequency(), 2.5);

        assert_eq!(dot(5.0, 0.0, 0.0, 0.0).flux_ratio(), 0.0);
        assert!((dot(5.0, 0.0, 2.0 * PI, 0.0).flux_ratio() - 1.0).abs() < 1e-15);
        assert!((dot(5.0, 0.0, 5.0, 0.0).flux_ratio() - 0.795_774_715_459_476_7).abs() < 1e-15);
    }

    #[test]
    fn eta_examples() {
        let s = dot(5.0, 0.0, 0.0, 0.0);
        let e = 10f64.sqrt();
        assert!((s.eta_of_energy(e, 0) - 26.324_555_320_336_76).abs() < 1e-12);
        assert_eq!(s.eta_of_energy(-10.0, 0), 0.0);
        assert_eq!(dot(5.0, 2.0, 0.0, 0.0).eta_of_energy(0.0, 0), 20.0);
        let s = dot(5.0, 2.0, 5.0, 0.0);
        assert!((s.energy_of_eta(s.eta_of_energy(3.3, 2), 2) - 3.3).abs() < 1e-14);
    }

    #[test]
    fn radial_examples() {
        let e = dot(5.0, 0.0, 0.0, 0.0).radial_energy(0, 0).unwrap();
        assert!((e - 10f64.sqrt()).abs() < 1e-14);
        let e = dot(0.0, 2.0, 0.0, 0.0).radial_energy(0, 0).unwrap();
        assert!((e - 1.0).abs() < 1e-15);
        let e = dot(5.0, 2.0, 5.0, 0.0).radial_energy(1, 1).unwrap();
        assert!((e - 13.806_862_753_297_325).abs() < 1e-12);
        assert!(dot(0.0, 0.0, 0.0, 0.0).radial_energy(0, 0).is_err());
    }

    #[test]
    fn axial_examples() {
        assert_eq!(dot(5.0, 0.0, 0.0, 0.0).axial_energy(1).unwrap(), 1.0);
        assert_eq!(dot(5.0, 0.0, 0.0, 0.0).axial_energy(3).unwrap(), 2.0);
        assert_eq!(dot(5.0, 0.0, 0.0, 5.0).axial_energy(1).unwrap(), -5.25);
        assert!(dot(5.0, 0.0, 0.0, 0.0).axial_energy(0).is_err());
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
    }

    #[test]
    fn total_is_sum() {
        let s = dot(5.0, 2.0, 5.0, 5.0);
        let q = QuantumNumbers::new(1, 1, 1).unwrap();
        assert!((s.total_energy(q).unwrap() - 8.556_862_753_297_325).abs() < 1e-12);

        let lo = dot(5.0, 2.0, 5.0, 1.0).total_energy(q).unwrap();
        let hi = dot(5.0, 2.0, 5.0, 2.0).total_energy(q).unwrap();
        assert!((lo - hi - 3.0 / 4.0).abs() < 1e-13);
    }

    #[test]
    fn offset_examples() {
        let ladder = dot(0.0, 0.0, 0.0, 0.0).ladder(3);
        assert_eq!(ladder.a, 0.5);
        assert_eq!(ladder.xi, 1.0);
        assert_eq!(ladder.omega, 1.0);

        let ladder = dot(5.0, 2.0, 5.0, 5.0).ladder(1);
        assert!((ladder.a - 1.423_613_172_586_525_6).abs() < 1e-12);
        assert!((ladder.xi - 2.847_226_345_173_051).abs() < 1e-12);

        let shift = dot(5.0, 2.0, 5.0, 2.0).offset(1) - dot(5.0, 2.0, 5.0, 0.0).offset(1);
        assert!((shift + 1.0).abs() < 1e-13);
    }

    #[test]
    fn offset_is_ground_level() {
        // a is the n_r = 0 radial level plus the axial zero point with n_z = 0
        let s = dot(5.0, 2.0, 5.0, 5.0);
        for m in -2..3 {
            let want = s.radial_energy(0, m).unwrap() + s.axial_quantum() + s.stark_shift();
            assert!((s.offset(m) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn landau_examples() {
        let s = dot(0.0, 2.0, 0.0, 0.0);
        assert_eq!(s.landau_limit_energy(1, 0, LandauMode::Derived), 3.0);
        assert_eq!(s.landau_limit_energy(2, -3, LandauMode::Derived), 5.0);
        let s = dot(0.0, 2.0, 2.0 * PI, 0.0);
        assert!((s.landau_limit_energy(0, 0, LandauMode::Derived) - 3.0).abs() < 1e-15);
        assert!((s.landau_limit_energy(0, 0, LandauMode::Paper) - 2.5).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(Constants::new(1.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(0.0, 1.0, 1.0).is_ok());
        assert!(PotentialParams::new(1.0, 0.0, 1.0).is_err());
        assert!(FieldConfig::new(-0.1, 0.0, 0.0).is_err());
        assert!(FieldConfig::new(0.0, -1.0, 0.0).is_err());
        assert!(FieldConfig::new(0.0, 0.0, -3.0).is_ok());
    }
}
