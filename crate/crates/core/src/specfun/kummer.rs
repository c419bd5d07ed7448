use crate::error::{Error, Result};

const MAX_SERIES_TERMS: usize = 100_000;
const TERM_RATIO_STOP: f64 = 1e-16;

/// Kummer's confluent hypergeometric function `1F1(a; b; x)` for real
/// arguments.
///
/// When `a` is a non-positive integer the series terminates and the finite
/// polynomial is summed exactly. Otherwise the power series is summed until
/// the term ratio drops below `1e-16`; negative `x` goes through Kummer's
/// transformation `1F1(a; b; x) = e^x 1F1(b - a; b; -x)` to avoid
/// cancellation.
pub fn kummer_1f1(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && x.is_finite()) {
        return Err(Error::Domain("1F1 needs finite arguments".into()));
    }
    if b <= 0.0 && b.fract() == 0.0 {
        return Err(Error::Domain(format!("1F1 undefined for b = {b}")));
    }
    if a <= 0.0 && a.fract() == 0.0 {
        return polynomial(-a as u64, b, x);
    }
    if x < 0.0 {
        let inner = series(b - a, b, -x)?;
        let value = x.exp() * inner;
        return if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Overflow("1F1"))
        };
    }
    series(a, b, x)
}

fn polynomial(n: u64, b: f64, x: f64) -> Result<f64> {
    let a = -(n as f64);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let k = k as f64;
        term *= (a + k) / (b + k) * x / (k + 1.0);
        sum += term;
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::Overflow("1F1 polynomial"))
    }
}

fn series(a: f64, b: f64, x: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_SERIES_TERMS {
        let k = k as f64;
        let ratio = (a + k) / (b + k) * x / (k + 1.0);
        term *= ratio;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow("1F1 series"));
        }
        if ratio.abs() < 1.0 && term.abs() <= TERM_RATIO_STOP * sum.abs() {
            return Ok(sum);
        }
        if term == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::SeriesLimit {
        terms: MAX_SERIES_TERMS,
    })
}
