use crate::error::{Error, Result};
use crate::thermo::{Backend, ThermoPoint};

/// When to stop the mode sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Stop once the tail bound is below this fraction of the partial sum.
    pub rel_term_floor: f64,
    pub max_terms: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy {
            rel_term_floor: 1e-16,
            max_terms: 100_000,
        }
    }
}

/// A truncated sum together with a rigorous bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionSum {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

fn check_ladder(xi: f64, omega: f64, beta: f64, policy: &TruncationPolicy) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!(
            "Omega must be positive, got {omega}"
        )));
    }
    if !(xi.is_finite() && xi > -2.0) {
        return Err(Error::Domain(format!(
            "lowest mode is not positive for Xi = {xi}"
        )));
    }
    if !(policy.rel_term_floor > 0.0 && policy.rel_term_floor < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "rel_term_floor must lie in (0, 1), got {}",
            policy.rel_term_floor
        )));
    }
    Ok(())
}

/// `X = -sum_{n >= 1} ln(1 - exp(-beta omega_n))` with
/// `omega_n = (Omega/2)(2n + Xi)`.
///
/// Each dropped term obeys `-ln(1 - x) <= x / (1 - x)` and the `x_n` fall off
/// geometrically with ratio `q = exp(-beta Omega)`, so after `N` terms the tail
/// is at most `x_{N+1} / ((1 - x_{N+1})(1 - q))`.
pub fn characteristic_exact(
    xi: f64,
    omega: f64,
    beta: f64,
    policy: &TruncationPolicy,
) -> Result<PartitionSum> {
    check_ladder(xi, omega, beta, policy)?;
    let one_minus_q = -(-beta * omega).exp_m1();
    let mode = |n: usize| 0.5 * omega * (2.0 * n as f64 + xi);

    let mut value = 0.0;
    for n in 1..=policy.max_terms {
        let x = (-beta * mode(n)).exp();
        value += -(-x).ln_1p();
        let next = (-beta * mode(n + 1)).exp();
        let tail = next / ((1.0 - next) * one_minus_q);
        if tail <= policy.rel_term_floor * value || tail == 0.0 {
            return Ok(PartitionSum {
                value,
                tail_bound: tail,
                terms: n,
            });
        }
    }
    Err(Error::SeriesLimit {
        terms: policy.max_terms,
    })
}

/// Total occupation `sum_{n >= 1} 1/(exp(beta omega_n) - 1)`, so that
/// `dX/dXi = -(beta Omega / 2)` times this sum.
pub fn occupation_sum(
    xi: f64,
    omega: f64,
    beta: f64,
    policy: &TruncationPolicy,
) -> Result<PartitionSum> {
    check_ladder(xi, omega, beta, policy)?;
    let one_minus_q = -(-beta * omega).exp_m1();
    let mode = |n: usize| 0.5 * omega * (2.0 * n as f64 + xi);

    let mut value = 0.0;
    for n in 1..=policy.max_terms {
        let x = (-beta * mode(n)).exp();
        value += x / (1.0 - x);
        let next = (-beta * mode(n + 1)).exp();
        let tail = next / ((1.0 - next) * one_minus_q);
        if tail <= policy.rel_term_floor * value || tail == 0.0 {
            return Ok(PartitionSum {
                value,
                tail_bound: tail,
                terms: n,
            });
        }
    }
    Err(Error::SeriesLimit {
        terms: policy.max_terms,
    })
}

/// Thermodynamics of the ladder from the exact mode sums (`k_B = 1`,
/// `beta = 1/T`): `F = -T X`, `U = sum omega_n nbar_n`, `S = X + beta U` and
/// `C_V = beta^2 sum omega_n^2 nbar_n (1 + nbar_n)`.
///
/// These are the term-by-term temperature derivatives of the same truncated
/// sum, each carried until its own geometric tail bound is negligible.
pub fn thermo_exact(xi: f64, omega: f64, t: f64, policy: &TruncationPolicy) -> Result<ThermoPoint> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive, got {t}"
        )));
    }
    let beta = 1.0 / t;
    check_ladder(xi, omega, beta, policy)?;
    let q = (-beta * omega).exp();
    let one_minus_q = -(-beta * omega).exp_m1();
    let mode = |n: usize| 0.5 * omega * (2.0 * n as f64 + xi);

    let (mut x_sum, mut u_sum, mut c_sum) = (0.0, 0.0, 0.0);
    let mut converged = false;
    for n in 1..=policy.max_terms {
        let w = mode(n);
        let x = (-beta * w).exp();
        let occ = x / (1.0 - x);
        x_sum += -(-x).ln_1p();
        u_sum += w * occ;
        c_sum += w * w * occ * (1.0 + occ);

        let w1 = mode(n + 1);
        let x1 = (-beta * w1).exp();
        let g = x1 / (1.0 - x1);
        let g1 = 1.0 / one_minus_q;
        let g2 = q / (one_minus_q * one_minus_q);
        let g3 = q * (1.0 + q) / (one_minus_q * one_minus_q * one_minus_q);
        let x_tail = g * g1;
        let u_tail = g * (w1 * g1 + omega * g2);
        let c_tail = g / (1.0 - x1) * (w1 * w1 * g1 + 2.0 * w1 * omega * g2 + omega * omega * g3);
        let floor = policy.rel_term_floor;
        let small = |tail: f64, acc: f64| tail == 0.0 || tail <= floor * acc;
        if small(x_tail, x_sum) && small(u_tail, u_sum) && small(c_tail, c_sum) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::SeriesLimit {
            terms: policy.max_terms,
        });
    }

    Ok(ThermoPoint {
        t,
        x: x_sum,
        f: -t * x_sum,
        u: u_sum,
        s: x_sum + beta * u_sum,
        cv: beta * beta * c_sum,
        current: None,
        magnetization: None,
        susceptibility: None,
        backend: Backend::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(xi: f64, beta: f64) -> PartitionSum {
        characteristic_exact(xi, 1.0, beta, &TruncationPolicy::default()).unwrap()
    }

    /// Plain 50-term sum with its own tail estimate.
    fn brute(xi: f64, beta: f64) -> f64 {
        (1..=50)
            .map(|n| -(1.0 - (-beta * (n as f64 + 0.5 * xi)).exp()).ln())
            .sum()
    }

    #[test]
    fn pinned_values() {
        assert!((x(1.0, 1.0).value - 0.38648).abs() < 1e-4);
        assert!((x(3.0, 1.0).value - 0.13397).abs() < 1e-4);
        assert!(x(1.0, 50.0).value.abs() < 1e-30);
        for (xi, beta) in [(1.0f64, 1.0f64), (3.0, 1.0), (2.0, 0.7)] {
            let tail50 = (-beta * (51.0 + 0.5 * xi)).exp() / (1.0 - (-beta).exp());
            assert!(tail50 < 1e-10);
            assert!((x(xi, beta).value - brute(xi, beta)).abs() < 1e-10);
        }
    }

    #[test]
    fn domain_errors() {
        let p = TruncationPolicy::default();
        assert!(matches!(
            characteristic_exact(-2.0, 1.0, 1.0, &p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            characteristic_exact(1.0, 0.0, 1.0, &p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            characteristic_exact(1.0, 1.0, -1.0, &p),
            Err(Error::Domain(_))
        ));
        let short = TruncationPolicy { max_terms: 10, ..p };
        assert_eq!(
            characteristic_exact(1.0, 1.0, 0.01, &short),
            Err(Error::SeriesLimit { terms: 10 })
        );
        assert!(thermo_exact(1.0, 1.0, 0.0, &p).is_err());
    }

    #[test]
    fn thermo_reference_values() {
        // 30-digit mode sums: (Xi, T, X, U, C_V)
        let table = [
            (
                1.0,
                1.0,
                0.386_441_680_334_398_54,
                0.853_353_692_246_494_24,
                2.310_443_611_438_251_3,
            ),
            (
                1.0,
                10.0,
                13.084_222_302_478_248,
                154.720_490_104_956_37,
                31.898_889_644_258_779,
            ),
            (
                2.8472,
                0.5,
                0.009_110_593_861_715_231,
                0.023_579_502_397_010_4,
                0.251_370_512_407_880_9,
            ),
            (
                2.8472,
                50.0,
                74.016_960_392_009_321,
                4_017.055_705_919_970_6,
                162.569_880_425_129_16,
            ),
        ];
        for (xi, t, xv, u, cv) in table {
            let p = thermo_exact(xi, 1.0, t, &TruncationPolicy::default()).unwrap();
            assert!((p.x - xv).abs() < 1e-12 * xv, "X at {xi}, {t}");
            assert!((p.u - u).abs() < 1e-12 * u, "U at {xi}, {t}");
            assert!((p.cv - cv).abs() < 1e-12 * cv, "Cv at {xi}, {t}");
            assert_eq!(p.backend, Backend::Exact);
        }
    }

    #[test]
    fn third_law() {
        let p = thermo_exact(1.0, 1.0, 0.02, &TruncationPolicy::default()).unwrap();
        assert!(p.s.abs() < 1e-10);
        let p = thermo_exact(1.0, 1.0, 1.0, &TruncationPolicy::default()).unwrap();
        assert!((p.f + 0.38648).abs() < 1e-4);
    }
}
