use std::f64::consts::PI;

use super::{Backend, ThermoPoint};
use crate::error::{Error, Result};
use crate::spectrum::Constants;

/// `(2 - pi^2/4) pi^2 / 3`
fn curvature() -> f64 {
    (2.0 - PI * PI / 4.0) * PI * PI / 3.0
}

/// Bracket multiplying `A = 1/2 - a/hbar` in the closed form.
fn bracket(beta: f64) -> f64 {
    (4.0 * PI / beta).ln() + 0.5 * beta - curvature() / beta
}

/// Closed-form characteristic function, first order in `A = 1/2 - a/hbar`:
///
/// ```text
/// X = A [ln(4 pi/beta) + beta/2 - (2 - pi^2/4) pi^2/(3 beta)]
///     - ln(4 pi/beta) - 11 beta/48 + pi^2/(6 beta)
/// ```
pub fn characteristic_closed(a: f64, beta: f64, consts: &Constants) -> f64 {
    closed_derivatives(a, beta, consts).x
}

/// `X` and its first two `beta` derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedDerivatives {
    pub x: f64,
    pub dx_dbeta: f64,
    pub d2x_dbeta2: f64,
}

pub fn closed_derivatives(a: f64, beta: f64, consts: &Constants) -> ClosedDerivatives {
    let lead = 0.5 - a / consts.hbar;
    let c = curvature();
    let log = (4.0 * PI / beta).ln();
    let b2 = beta * beta;
    ClosedDerivatives {
        x: lead * bracket(beta) - log - 11.0 * beta / 48.0 + PI * PI / (6.0 * beta),
        dx_dbeta: lead * (-1.0 / beta + 0.5 + c / b2) + 1.0 / beta
            - 11.0 / 48.0
            - PI * PI / (6.0 * b2),
        d2x_dbeta2: lead * (1.0 / b2 - 2.0 * c / (b2 * beta)) - 1.0 / b2
            + PI * PI / (3.0 * b2 * beta),
    }
}

/// `dX/da` at fixed `beta`; the closed form is affine in `a`.
pub fn dx_da_closed(beta: f64, consts: &Constants) -> f64 {
    -bracket(beta) / consts.hbar
}

/// Thermodynamics from the closed form: `F = -X/beta`, `U = -dX/dbeta`,
/// `S = k_B (X + beta U)`, `C_V = k_B beta^2 d2X/dbeta2`.
pub fn thermo_closed(a: f64, t: f64, consts: &Constants) -> Result<ThermoPoint> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive, got {t}"
        )));
    }
    let beta = 1.0 / (consts.kb * t);
    let d = closed_derivatives(a, beta, consts);
    let u = -d.dx_dbeta;
    Ok(ThermoPoint {
        t,
        x: d.x,
        f: -d.x / beta,
        u,
        s: consts.kb * (d.x + beta * u),
        cv: consts.kb * beta * beta * d.d2x_dbeta2,
        current: None,
        magnetization: None,
        susceptibility: None,
        backend: Backend::Closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{central_difference, DiffOrder};

    const K: Constants = Constants::NATURAL;

    #[test]
    fn evaluated_values() {
        let x = characteristic_closed(0.5, 1.0, &K);
        assert!((x + 1.115_256_846_787_731).abs() < 1e-12);
        let x = characteristic_closed(0.5, 0.1, &K);
        assert!((x - 11.592_814_661_852_259).abs() < 1e-11);
    }

    #[test]
    fn vanishing_lead_drops_bracket() {
        for beta in [0.05, 0.3, 1.0, 7.0] {
            let x = characteristic_closed(0.5, beta, &K);
            let tail = -(4.0 * PI / beta).ln() - 11.0 * beta / 48.0 + PI * PI / (6.0 * beta);
            assert!((x - tail).abs() < 1e-13 * tail.abs().max(1.0));
        }
    }

    #[test]
    fn symmetric_point() {
        let p = thermo_closed(0.5, 1.0, &K).unwrap();
        assert!((p.u - 0.874_100_733_514_893_1).abs() < 1e-12);
        assert!((p.f - 1.115_256_846_787_731).abs() < 1e-12);
        assert!((p.f - (p.u - p.t * p.s)).abs() < 1e-12);
        assert_eq!(p.backend, Backend::Closed);
        assert!(thermo_closed(0.5, -1.0, &K).is_err());
    }

    #[test]
    fn derivatives_match_differences() {
        for a in [-0.5, 0.5, 1.4, 3.0] {
            for beta in [0.1, 0.6, 2.0] {
                let d = closed_derivatives(a, beta, &K);
                let fd1 =
                    central_difference(|b| characteristic_closed(a, b, &K), beta, DiffOrder::First)
                        .unwrap();
                let fd2 = central_difference(
                    |b| characteristic_closed(a, b, &K),
                    beta,
                    DiffOrder::Second,
                )
                .unwrap();
                assert!((d.dx_dbeta - fd1).abs() < 1e-7 * d.dx_dbeta.abs().max(1.0));
                assert!((d.d2x_dbeta2 - fd2).abs() < 1e-6 * d.d2x_dbeta2.abs().max(1.0));
                let fda = central_difference(
                    |aa| characteristic_closed(aa, beta, &K),
                    a,
                    DiffOrder::First,
                )
                .unwrap();
                assert!((dx_da_closed(beta, &K) - fda).abs() < 1e-8 * fda.abs().max(1.0));
            }
        }
    }
}
