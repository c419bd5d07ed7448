use crate::error::{Error, Result};
use crate::spectrum::Pseudodot;

const DEFAULT_STEPS: usize = 20_000;
const BRACKET_DOUBLINGS: usize = 64;
const BISECTION_BUDGET: usize = 200;

/// Integration domain and tolerances of the shooting eigensolver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Numerov steps on the logarithmic grid `x = ln r`.
    pub steps: usize,
    /// Number of interior nodes of the wanted eigenfunction.
    pub node_target: u32,
    /// Absolute energy tolerance.
    pub tol: f64,
}

impl ShootingConfig {
    /// Domain `[1e-6 r0, r_turn + 10/sqrt(omega)]`, where `r_turn` is the outer
    /// classical turning point at an energy bracketing the wanted level from
    /// above.
    pub fn auto(system: &Pseudodot, n_r: u32, m: i32) -> Result<Self> {
        let ode = RadialOde::new(system, m)?;
        let r_min = 1e-6 * system.potential.r0;
        let mut lo = ode.eta_floor();
        let mut step = 4.0 * ode.omega;
        for _ in 0..BRACKET_DOUBLINGS {
            let hi = lo + step;
            let grid = Grid::new(r_min, ode.outer_radius(hi), DEFAULT_STEPS);
            if ode.count_nodes(hi, &grid) > n_r {
                return Ok(ShootingConfig {
                    r_min,
                    r_max: grid.r_max,
                    steps: DEFAULT_STEPS,
                    node_target: n_r,
                    tol: 1e-10,
                });
            }
            lo = hi;
            step *= 2.0;
        }
        Err(Error::NoConvergence {
            lo: system.energy_of_eta(ode.eta_floor(), m),
            hi: system.energy_of_eta(lo, m),
        })
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_min < self.r_max && self.r_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "shooting domain needs 0 < r_min < r_max, got [{}, {}]",
                self.r_min, self.r_max
            )));
        }
        if self.steps < 1000 {
            return Err(Error::InvalidParameter(format!(
                "shooting needs at least 1000 steps, got {}",
                self.steps
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// Eigenvalue of the radial equation with `n_r` nodes, found by integrating
/// outward from `f ~ r^gamma` and bisecting on the node count until the
/// bracket is narrower than `cfg.tol`.
pub fn shoot_radial_eigenvalue(
    system: &Pseudodot,
    n_r: u32,
    m: i32,
    cfg: &ShootingConfig,
) -> Result<f64> {
    cfg.validate()?;
    if cfg.node_target != n_r {
        return Err(Error::InvalidParameter(format!(
            "config targets {} nodes but n_r = {n_r}",
            cfg.node_target
        )));
    }
    let ode = RadialOde::new(system, m)?;
    let grid = Grid::new(cfg.r_min, cfg.r_max, cfg.steps);
    let to_energy = |eta: f64| system.energy_of_eta(eta, m);

    let mut lo = ode.eta_floor();
    if ode.count_nodes(lo, &grid) > n_r {
        return Err(Error::NoConvergence {
            lo: to_energy(lo),
            hi: to_energy(lo),
        });
    }
    let mut step = 4.0 * ode.omega;
    let mut hi = lo + step;
    let mut found = false;
    for _ in 0..BRACKET_DOUBLINGS {
        if ode.count_nodes(hi, &grid) > n_r {
            found = true;
            break;
        }
        lo = hi;
        step *= 2.0;
        hi = lo + step;
    }
    if !found {
        return Err(Error::NoConvergence {
            lo: to_energy(lo),
            hi: to_energy(hi),
        });
    }

    for _ in 0..BISECTION_BUDGET {
        if (to_energy(hi) - to_energy(lo)).abs() <= cfg.tol {
            return Ok(to_energy(0.5 * (lo + hi)));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ode.count_nodes(mid, &grid) > n_r {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::NoConvergence {
        lo: to_energy(lo),
        hi: to_energy(hi),
    })
}

struct Grid {
    x0: f64,
    h: f64,
    steps: usize,
    r_max: f64,
}

impl Grid {
    fn new(r_min: f64, r_max: f64, steps: usize) -> Self {
        let x0 = r_min.ln();
        Grid {
            x0,
            h: (r_max.ln() - x0) / steps as f64,
            steps,
            r_max,
        }
    }
}

/// Radial equation in `x = ln r`: `f_xx + k(x) f = 0` with
/// `k = (eta - omega^2 r^2) r^2 - gamma^2`.
struct RadialOde {
    gamma: f64,
    omega: f64,
}

impl RadialOde {
    fn new(system: &Pseudodot, m: i32) -> Result<Self> {
        let d = system.derived(m);
        if d.omega == 0.0 {
            return Err(Error::InvalidParameter(
                "no bound radial states with V0 = 0 and B = 0".into(),
            ));
        }
        Ok(RadialOde {
            gamma: d.gamma,
            omega: d.omega,
        })
    }

    /// Below the minimum `2 omega gamma` of the effective potential.
    fn eta_floor(&self) -> f64 {
        2.0 * self.omega * self.gamma - self.omega
    }

    fn outer_radius(&self, eta: f64) -> f64 {
        let w2 = self.omega * self.omega;
        let disc = (eta * eta - 4.0 * w2 * self.gamma * self.gamma).max(0.0);
        let r_turn = ((eta.max(0.0) + disc.sqrt()) / (2.0 * w2)).sqrt();
        r_turn + 10.0 / self.omega.sqrt()
    }

    fn k(&self, x: f64, eta: f64) -> f64 {
        let r2 = (2.0 * x).exp();
        (eta - self.omega * self.omega * r2) * r2 - self.gamma * self.gamma
    }

    fn count_nodes(&self, eta: f64, grid: &Grid) -> u32 {
        let h = grid.h;
        let h12 = h * h / 12.0;
        let series = |x: f64| 1.0 - eta / (4.0 * (self.gamma + 1.0)) * (2.0 * x).exp();

        let mut x = grid.x0;
        let mut prev = series(x);
        let mut curr = (self.gamma * h).exp() * series(x + h);
        let mut k_prev = self.k(x, eta);
        let mut k_curr = self.k(x + h, eta);
        x += h;

        let mut nodes = u32::from(prev * curr < 0.0);
        for _ in 1..grid.steps {
            let k_next = self.k(x + h, eta);
            let next = (2.0 * curr * (1.0 - 5.0 * h12 * k_curr) - prev * (1.0 + h12 * k_prev))
                / (1.0 + h12 * k_next);
            if next * curr < 0.0 {
                nodes += 1;
            }
            prev = curr;
            curr = next;
            k_prev = k_curr;
            k_curr = k_next;
            x += h;
            if curr.abs() > 1e150 {
                prev *= 1e-150;
                curr *= 1e-150;
            }
        }
        nodes
    }
}
