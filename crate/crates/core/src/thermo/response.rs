//! Field responses: persistent current `I = -dF/dPhi_AB`, magnetization
//! `M = -dF/dB` and susceptibility `chi = dM/dB`.
//!
//! The free energy depends on the fields only through the ladder offset `a`,
//! so the closed backend factors every response as `(-dF/da)` times an
//! analytic derivative of `a`. The exact backend differentiates the exact
//! free energy numerically over the fields instead.

use std::cell::RefCell;
use std::f64::consts::PI;

use super::{
    dx_da_closed, paper_field_response, paper_thermo, thermo_closed, Backend, ThermoPoint,
};
use crate::error::{Error, Result};
use crate::oracle::{
    central_difference, occupation_sum, thermo_exact, DiffOrder, TruncationPolicy,
};
use crate::spectrum::Pseudodot;

/// Analytic field derivatives of the ladder offset `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffsetDerivatives {
    pub da_db: f64,
    pub da_dphi: f64,
    pub d2a_db2: f64,
}

pub fn offset_derivatives(system: &Pseudodot, m: i32) -> Result<OffsetDerivatives> {
    let k = &system.consts;
    let p = &system.potential;
    let b = system.fields.b;
    let mx = m as f64 + k.e * system.fields.phi_ab / (2.0 * PI * k.hbar * k.c);
    let field = (k.hbar * k.e / (k.mu * k.c)).powi(2);
    let confine = 8.0 * p.v0 * k.hbar * k.hbar / (p.r0 * p.r0 * k.mu);
    let d = field * b * b + confine;
    let root = (mx * mx + 2.0 * k.mu * p.v0 * p.r0 * p.r0 / (k.hbar * k.hbar)).sqrt();
    let linear = k.hbar * k.e / (2.0 * k.mu * k.c);

    let (da_db, d2a_db2) = if d == 0.0 {
        // B -> 0+ limit of sqrt(field) * |B|
        (0.5 * (1.0 + root) * field.sqrt() + linear * mx, 0.0)
    } else {
        (
            0.5 * (1.0 + root) * field * b / d.sqrt() + linear * mx,
            0.5 * (1.0 + root) * field * confine / d.powf(1.5),
        )
    };
    if root == 0.0 {
        return Err(Error::Singular(
            "offset derivative at m + xi = 0 without confinement",
        ));
    }
    let dxi_dphi = k.e / (2.0 * PI * k.hbar * k.c);
    let da_dphi = dxi_dphi * (0.5 * d.sqrt() * mx / root + linear * b);
    Ok(OffsetDerivatives {
        da_db,
        da_dphi,
        d2a_db2,
    })
}

/// Free energy of the ladder for azimuthal number `m` on `backend`.
pub fn free_energy(system: &Pseudodot, m: i32, t: f64, backend: Backend) -> Result<f64> {
    Ok(thermo_state(system, m, t, backend)?.f)
}

/// `dF/da` at fixed temperature, analytic for the exact and closed backends.
pub fn dfree_da(system: &Pseudodot, m: i32, t: f64, backend: Backend) -> Result<f64> {
    let k = &system.consts;
    let tau = k.kb * t;
    match backend {
        Backend::Closed => Ok(-tau * dx_da_closed(1.0 / tau, k)),
        Backend::Exact => {
            let ladder = system.ladder(m);
            let beta = 1.0 / tau;
            let occ = occupation_sum(ladder.xi, ladder.omega, beta, &TruncationPolicy::default())?;
            // dX/da = (2/hbar)(-beta Omega / 2) sum nbar
            let dx_da = -beta * ladder.omega * occ.value / k.hbar;
            Ok(-tau * dx_da)
        }
        Backend::Paper => Err(Error::InvalidParameter(
            "printed formulas have no free-energy derivative in a".into(),
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldResponse {
    pub current: f64,
    pub magnetization: f64,
    pub susceptibility: f64,
}

pub fn field_response(
    system: &Pseudodot,
    m: i32,
    t: f64,
    backend: Backend,
) -> Result<FieldResponse> {
    match backend {
        Backend::Closed => {
            let dfa = dfree_da(system, m, t, backend)?;
            let da = offset_derivatives(system, m)?;
            Ok(FieldResponse {
                current: -dfa * da.da_dphi,
                magnetization: -dfa * da.da_db,
                susceptibility: -dfa * da.d2a_db2,
            })
        }
        Backend::Exact => exact_response(system, m, t),
        Backend::Paper => paper_field_response(system, m, t),
    }
}

fn exact_response(system: &Pseudodot, m: i32, t: f64) -> Result<FieldResponse> {
    let failure = RefCell::new(None);
    let free = |s: Pseudodot| match free_energy(&s, m, t, Backend::Exact) {
        Ok(f) => f,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            f64::NAN
        }
    };
    let at_phi = |phi: f64| {
        let mut s = *system;
        s.fields.phi_ab = phi;
        free(s)
    };
    let at_b = |b: f64| {
        let mut s = *system;
        s.fields.b = b;
        free(s)
    };
    let dphi = central_difference(at_phi, system.fields.phi_ab, DiffOrder::First);
    let db = central_difference(at_b, system.fields.b, DiffOrder::First);
    let d2b = central_difference(at_b, system.fields.b, DiffOrder::Second);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(FieldResponse {
        current: -dphi?,
        magnetization: -db?,
        susceptibility: -d2b?,
    })
}

/// Thermodynamics of the ladder for azimuthal number `m`, without field responses.
pub fn thermo_state(system: &Pseudodot, m: i32, t: f64, backend: Backend) -> Result<ThermoPoint> {
    let k = &system.consts;
    let ladder = system.ladder(m);
    match backend {
        Backend::Exact => {
            let mut p = thermo_exact(
                ladder.xi,
                ladder.omega,
                k.kb * t,
                &TruncationPolicy::default(),
            )?;
            p.t = t;
            Ok(p)
        }
        Backend::Closed => thermo_closed(ladder.a, t, k),
        Backend::Paper => paper_thermo(ladder.a, t, k),
    }
}

/// Thermodynamics for azimuthal number `m`, with the field responses filled
/// in where they are defined.
pub fn thermo_point(system: &Pseudodot, m: i32, t: f64, backend: Backend) -> Result<ThermoPoint> {
    let point = thermo_state(system, m, t, backend)?;
    Ok(match field_response(system, m, t, backend) {
        Ok(r) => point.with_response(r),
        Err(_) => point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{Constants, FieldConfig, PotentialParams};

    fn dot(b: f64, phi: f64) -> Pseudodot {
        Pseudodot::new(
            Constants::NATURAL,
            PotentialParams {
                v0: 5.0,
                r0: 1.0,
                k_osc: 1.0,
            },
            FieldConfig {
                b,
                phi_ab: phi,
                eps: 5.0,
            },
        )
    }

    #[test]
    fn zero_field_derivative() {
        // only the linear Zeeman-like term survives at B = 0
        let s = dot(0.0, 5.0);
        let d = offset_derivatives(&s, 1).unwrap();
        let mx = 1.0 + 5.0 / (2.0 * PI);
        assert!((d.da_db - 0.5 * mx).abs() < 1e-15);
        assert_eq!(offset_derivatives(&dot(0.0, 0.0), 0).unwrap().da_db, 0.0);
    }

    #[test]
    fn derivatives_match_differences() {
        for (b, phi, m) in [(2.0, 5.0, 1), (0.5, 12.0, -2), (4.0, 0.0, 3)] {
            let s = dot(b, phi);
            let d = offset_derivatives(&s, m).unwrap();
            let a_phi = |x: f64| {
                s.with_fields(FieldConfig {
                    phi_ab: x,
                    ..s.fields
                })
                .offset(m)
            };
            let a_b = |x: f64| s.with_fields(FieldConfig { b: x, ..s.fields }).offset(m);
            let fd_phi = central_difference(a_phi, phi, DiffOrder::First).unwrap();
            let fd_b = central_difference(a_b, b, DiffOrder::First).unwrap();
            let fd_bb = central_difference(a_b, b, DiffOrder::Second).unwrap();
            assert!((d.da_dphi - fd_phi).abs() < 1e-6 * fd_phi.abs().max(1e-12));
            assert!((d.da_db - fd_b).abs() < 1e-6 * fd_b.abs());
            assert!((d.d2a_db2 - fd_bb).abs() < 1e-6 * fd_bb.abs());
        }
    }

    #[test]
    fn symmetric_point_has_no_magnetization() {
        let s = dot(0.0, 0.0);
        let r = field_response(&s, 0, 1.0, Backend::Closed).unwrap();
        assert_eq!(r.magnetization, 0.0);
    }

    #[test]
    fn exact_response_factorizes_through_offset() {
        let s = dot(2.0, 5.0);
        let t = 2.0;
        let r = field_response(&s, 1, t, Backend::Exact).unwrap();
        let dfa = dfree_da(&s, 1, t, Backend::Exact).unwrap();
        let d = offset_derivatives(&s, 1).unwrap();
        let i = -dfa * d.da_dphi;
        let mag = -dfa * d.da_db;
        assert!((r.current - i).abs() < 1e-5 * i.abs());
        assert!((r.magnetization - mag).abs() < 1e-5 * mag.abs());
    }

    #[test]
    fn thermo_point_fills_responses() {
        let p = thermo_point(&dot(2.0, 5.0), 1, 1.0, Backend::Closed).unwrap();
        assert!(p.current.is_some() && p.magnetization.is_some() && p.susceptibility.is_some());
        let p = thermo_point(&dot(2.0, 5.0), 1, 1.0, Backend::Paper).unwrap();
        assert_eq!(p.backend, Backend::Paper);
        assert!(dfree_da(&dot(2.0, 5.0), 1, 1.0, Backend::Paper).is_err());
    }
}
