//! Published closed forms, evaluated exactly as printed.
//!
//! These keep their printed signs and prefactors, including the ones that
//! disagree with the closed-form characteristic function they are meant to
//! follow from. They exist for figure reproduction and for the errata
//! diagnostics; nothing else is derived from them.

use std::f64::consts::PI;

use super::{characteristic_closed, Backend, FieldResponse, ThermoPoint};
use crate::error::{Error, Result};
use crate::specfun::ZETA_3;
use crate::spectrum::Pseudodot;

/// Printed `U`, `C_V`, `F` and `S` at offset `a` and temperature `t`; `X` is
/// the closed-form characteristic function. The unreadable symbol in the
/// last denominator of the printed mean energy is taken as 1.
pub fn paper_thermo(a: f64, t: f64, consts: &crate::spectrum::Constants) -> Result<ThermoPoint> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive, got {t}"
        )));
    }
    let tau = consts.kb * t;
    let lead = 0.5 - a / consts.hbar;
    let pi2 = PI * PI;

    let u = lead * (tau - 0.5 - (pi2 / 4.0 - 2.0) * pi2 * tau * tau) - tau + 11.0 / 48.0
        - pi2 * tau * tau / 6.0;
    let cv = lead * (-3.0 + 2.0 / tau + 2.0 * pi2 / 3.0 * (pi2 / 4.0 - 2.0) * tau)
        + 1.0
        + 5.0 / (12.0 * tau)
        - pi2 / 3.0 * tau;
    let f = lead * (-2.0 / (tau * tau) + 2.0 * pi2 / 3.0 * (2.0 - pi2 / 4.0) * tau)
        - 5.0 / (12.0 * tau * tau)
        + pi2 / 3.0;
    let s = 4.0 * lead / tau.powi(3) - 5.0 / (6.0 * tau.powi(3));

    Ok(ThermoPoint {
        t,
        x: characteristic_closed(a, 1.0 / tau, consts),
        f,
        u,
        s,
        cv,
        current: None,
        magnetization: None,
        susceptibility: None,
        backend: Backend::Paper,
    })
}

/// Printed `dX/d(delta)` after expanding the generalized zeta function to
/// second order in `Xi - 1`, prefactor `pi / (94 delta^2)` as printed.
/// Diagnostic only.
pub fn dx_ddelta_paper(delta: f64, xi: f64) -> f64 {
    let d = xi - 1.0;
    let bracket = 0.25 - (PI * PI - 8.0) * d + (7.0 * ZETA_3 - 8.0) * d * d;
    -PI / (94.0 * delta * delta) * bracket - PI / 12.0 * (3.0 * xi * (xi + 2.0) + 2.0)
        + (xi + 1.0) / (2.0 * delta)
}

struct PrintedTerms {
    prefactor: f64,
    /// `hbar^2 e^2 B^2/(mu c)^2 + 8 V0 hbar^2/(r0^2 mu)`
    d: f64,
    /// `1 + sqrt((m + xi)^2 + 2 mu V0 r0^2/hbar^2)`
    one_plus_root: f64,
    mx: f64,
}

fn printed_terms(system: &Pseudodot, m: i32, t: f64) -> Result<PrintedTerms> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive, got {t}"
        )));
    }
    let k = &system.consts;
    let p = &system.potential;
    let tau = k.kb * t;
    let mx = m as f64 + k.e * system.fields.phi_ab / (2.0 * PI * k.hbar * k.c);
    let b = system.fields.b;
    Ok(PrintedTerms {
        prefactor: 2.0 / (tau * tau) - 2.0 * PI * PI / 3.0 * (2.0 - PI * PI / 4.0),
        d: (k.hbar * k.e * b / (k.mu * k.c)).powi(2)
            + 8.0 * p.v0 * k.hbar * k.hbar / (p.r0 * p.r0 * k.mu),
        one_plus_root: 1.0 + (mx * mx + 2.0 * k.mu * p.v0 * p.r0 * p.r0 / (k.hbar * k.hbar)).sqrt(),
        mx,
    })
}

/// Printed persistent current.
pub fn paper_current(system: &Pseudodot, m: i32, t: f64) -> Result<f64> {
    let w = printed_terms(system, m, t)?;
    let k = &system.consts;
    let b = system.fields.b;
    Ok(w.prefactor
        * (w.d.sqrt() * w.mx * PI * k.e / (k.hbar * k.hbar * k.c)
            + k.e * k.e * b * PI / (k.hbar * k.c)))
}

/// Printed magnetization; singular when `V0 = 0` and `B = 0`.
pub fn paper_magnetization(system: &Pseudodot, m: i32, t: f64) -> Result<f64> {
    let w = printed_terms(system, m, t)?;
    if w.d == 0.0 {
        return Err(Error::Singular("printed magnetization at V0 = 0, B = 0"));
    }
    let k = &system.consts;
    let b = system.fields.b;
    let mc = k.mu * k.c;
    Ok(w.prefactor
        * (k.hbar * k.e * k.e * b * w.one_plus_root * k.e * w.mx / (2.0 * mc * mc * w.d.sqrt())
            + k.e * w.mx / (2.0 * k.hbar * k.c)))
}

/// Printed magnetic susceptibility; singular when `V0 = 0` and `B = 0`.
pub fn paper_susceptibility(system: &Pseudodot, m: i32, t: f64) -> Result<f64> {
    let w = printed_terms(system, m, t)?;
    if w.d == 0.0 {
        return Err(Error::Singular("printed susceptibility at V0 = 0, B = 0"));
    }
    let k = &system.consts;
    let b = system.fields.b;
    let mc = k.mu * k.c;
    let first = 3.0 * k.hbar.powi(3) * k.e.powi(4) * b * w.one_plus_root
        / (2.0 * mc.powi(4) * w.d.powf(1.5));
    let second = 3.0 * k.hbar.powi(5) * k.e.powi(6) * b.powi(3) * w.one_plus_root
        / (2.0 * mc.powi(6) * w.d.powf(2.5));
    Ok(w.prefactor * (first + second))
}

pub fn paper_field_response(system: &Pseudodot, m: i32, t: f64) -> Result<FieldResponse> {
    Ok(FieldResponse {
        current: paper_current(system, m, t)?,
        magnetization: paper_magnetization(system, m, t)?,
        susceptibility: paper_susceptibility(system, m, t)?,
    })
}
