use super::Pseudodot;
use crate::error::{Error, Result};
use crate::oracle::integrate_adaptive;
use crate::specfun::kummer_1f1;

/// Relative peak fraction at which the normalization integral is cut off.
const ENVELOPE_CUTOFF: f64 = 1e-14;

/// Radial eigenstate `f(zeta) = e^{-zeta/2} zeta^{gamma/2} 1F1(-n_r; gamma + 1; zeta)`
/// with `zeta = omega r^2`. Values are unnormalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialState {
    pub n_r: u32,
    pub m: i32,
    pub gamma: f64,
    pub omega: f64,
    /// Spectral parameter of the state, `eta = 4 omega (n_r + (gamma + 1)/2)`.
    pub eta: f64,
}

impl RadialState {
    pub fn new(system: &Pseudodot, n_r: u32, m: i32) -> Result<Self> {
        let d = system.derived(m);
        if d.omega == 0.0 {
            return Err(Error::InvalidParameter(
                "no bound radial states with V0 = 0 and B = 0".into(),
            ));
        }
        let energy = system.radial_energy(n_r, m)?;
        Ok(RadialState {
            n_r,
            m,
            gamma: d.gamma,
            omega: d.omega,
            eta: system.eta_of_energy(energy, m),
        })
    }

    fn prefactor(&self, zeta: f64) -> f64 {
        (-0.5 * zeta).exp() * zeta.powf(0.5 * self.gamma)
    }

    fn kummer(&self, shift: f64, zeta: f64) -> Result<f64> {
        kummer_1f1(-(self.n_r as f64) + shift, self.gamma + 1.0 + shift, zeta)
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::Domain(format!("radius must be >= 0, got {r}")));
        }
        let zeta = self.omega * r * r;
        Ok(self.prefactor(zeta) * self.kummer(0.0, zeta)?)
    }

    /// `(f, df/dr, d2f/dr2)` at `r > 0`, from the analytic derivatives of 1F1.
    pub fn derivatives(&self, r: f64) -> Result<(f64, f64, f64)> {
        if r <= 0.0 {
            return Err(Error::Domain(format!("derivatives need r > 0, got {r}")));
        }
        let zeta = self.omega * r * r;
        let a = -(self.n_r as f64);
        let b = self.gamma + 1.0;
        let f0 = self.kummer(0.0, zeta)?;
        let f1 = a / b * self.kummer(1.0, zeta)?;
        let f2 = a * (a + 1.0) / (b * (b + 1.0)) * self.kummer(2.0, zeta)?;

        let p = 0.5 * self.gamma;
        let lead = p / zeta - 0.5;
        let pre = self.prefactor(zeta);
        let g0 = pre * f0;
        let g1 = pre * (lead * f0 + f1);
        let g2 = pre * ((lead * lead - p / (zeta * zeta)) * f0 + 2.0 * lead * f1 + f2);

        let dz = 2.0 * self.omega * r;
        Ok((g0, g1 * dz, g2 * dz * dz + g1 * 2.0 * self.omega))
    }

    /// Residual of the radial equation at `r`, relative to the largest term.
    pub fn ode_residual(&self, r: f64) -> Result<f64> {
        let (f, df, d2f) = self.derivatives(r)?;
        let terms = [
            d2f,
            df / r,
            -self.gamma * self.gamma / (r * r) * f,
            -self.omega * self.omega * r * r * f,
            self.eta * f,
        ];
        let scale = terms.iter().fold(0.0f64, |acc, t| acc.max(t.abs()));
        let sum: f64 = terms.iter().sum();
        Ok(if scale == 0.0 { 0.0 } else { sum.abs() / scale })
    }

    /// Radius beyond which the envelope `e^{-zeta/2} zeta^{gamma/2 + n_r}` stays
    /// below `1e-14` of its peak.
    pub fn cutoff_radius(&self) -> f64 {
        let p = 0.5 * self.gamma + self.n_r as f64;
        let log_env = |z: f64| {
            if z > 0.0 {
                -0.5 * z + p * z.ln()
            } else {
                f64::NEG_INFINITY
            }
        };
        let z_peak = 2.0 * p;
        let target = if z_peak > 0.0 { log_env(z_peak) } else { 0.0 } + ENVELOPE_CUTOFF.ln();
        let mut lo = z_peak.max(0.0);
        let mut hi = lo + 1.0;
        while log_env(hi) > target {
            hi = 2.0 * hi + 1.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if log_env(mid) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (hi / self.omega).sqrt()
    }

    /// Constant `N` such that `int_0^inf (N f)^2 r dr = 1`.
    pub fn normalization(&self) -> Result<f64> {
        let r_max = self.cutoff_radius();
        let mut failure = None;
        let norm2 = integrate_adaptive(
            |r| match self.value(r) {
                Ok(f) => f * f * r,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            },
            0.0,
            r_max,
            1e-13,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        if !(norm2.is_finite() && norm2 > 0.0) {
            return Err(Error::Singular("radial normalization integral"));
        }
        Ok(norm2.sqrt().recip())
    }

    pub fn normalized_value(&self, r: f64) -> Result<f64> {
        Ok(self.normalization()? * self.value(r)?)
    }
}
