use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffOrder {
    First,
    Second,
}

/// Default step: `max(|x|, 1) eps^{1/3}` for first derivatives and
/// `max(|x|, 1) eps^{1/6}` for second derivatives, where the `1/h^2`
/// amplification of rounding error dominates.
pub fn default_step(x: f64, order: DiffOrder) -> f64 {
    let scale = x.abs().max(1.0);
    match order {
        DiffOrder::First => scale * f64::EPSILON.cbrt(),
        DiffOrder::Second => scale * f64::EPSILON.powf(1.0 / 6.0),
    }
}

/// Central difference of `f` at `x` with one level of Richardson
/// extrapolation, using [`default_step`].
pub fn central_difference<F>(f: F, x: f64, order: DiffOrder) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    central_difference_with_step(f, x, order, default_step(x, order))
}

pub fn central_difference_with_step<F>(f: F, x: f64, order: DiffOrder, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "step must be positive, got {h}"
        )));
    }
    let eval = |t: f64| {
        let v = f(t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(t))
        }
    };
    let stencil = |h: f64| -> Result<f64> {
        // keep x +- h exactly representable so the step cancels cleanly
        let h = (x + h) - x;
        match order {
            DiffOrder::First => Ok((eval(x + h)? - eval(x - h)?) / (2.0 * h)),
            DiffOrder::Second => Ok((eval(x + h)? - 2.0 * eval(x)? + eval(x - h)?) / (h * h)),
        }
    };
    let coarse = stencil(h)?;
    let fine = stencil(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}
