#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// `ln Γ(x)` without domain checks (libm's `lgamma_r`).
#[inline]
pub(crate) fn lgamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `ln Γ(x+a) − ln Γ(x)` for `x > 0`, `a ≥ 0`, without the cancellation of
/// the plain difference when `x` is large.
pub(crate) fn lgamma_diff(x: f64, a: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    if x < 1e3 {
        return lgamma(x + a) - lgamma(x);
    }
    // Stirling series difference.
    let y = x + a;
    let series = |z: f64| {
        let r = 1.0 / (z * z);
        (1.0 / 12.0 - r * (1.0 / 360.0 - r / 1260.0)) / z
    };
    (y - 0.5) * (a / x).ln_1p() + a * x.ln() - a + (series(y) - series(x))
}

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_gamma requires a finite positive argument"));
    }
    Ok(lgamma(x))
}

pub fn ln_beta(a: f64, b: f64) -> Result<f64> {
    Ok(ln_gamma(a)? + ln_gamma(b)? - ln_gamma(a + b)?)
}

/// Rising factorial `(b)_k = b (b+1) ··· (b+k−1)`.
pub fn pochhammer(b: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (b + j as f64))
}

/// `P(a, x) = γ(a, x) / Γ(a)`.
pub fn reg_lower_inc_gamma(a: f64, x: f64) -> Result<f64> {
    inc_gamma_pq(a, x).map(|(p, _)| p)
}

/// `Q(a, x) = 1 − P(a, x)`, computed without cancellation in the upper tail.
pub fn reg_upper_inc_gamma(a: f64, x: f64) -> Result<f64> {
    inc_gamma_pq(a, x).map(|(_, q)| q)
}

const MAX_ITER: usize = 100_000;

/// Returns `(P(a,x), Q(a,x))`: power series below `x = a + 1`, Lentz's
/// continued fraction above.
pub(crate) fn inc_gamma_pq(a: f64, x: f64) -> Result<(f64, f64)> {
    if !(a > 0.0) || !a.is_finite() || x.is_nan() || x < 0.0 {
        return Err(Error::domain("incomplete gamma requires a > 0 and x >= 0"));
    }
    if x == 0.0 {
        return Ok((0.0, 1.0));
    }
    if x.is_infinite() {
        return Ok((1.0, 0.0));
    }
    let ln_prefactor = a * x.ln() - x - lgamma(a);

    if x < a + 1.0 {
        let mut ap = a;
        let mut del = 1.0 / a;
        let mut sum = del;
        for _ in 0..MAX_ITER {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if del.abs() < sum.abs() * f64::EPSILON {
                let p = (sum.ln() + ln_prefactor).exp().min(1.0);
                return Ok((p, 1.0 - p));
            }
        }
        Err(Error::SeriesDivergence { terms: MAX_ITER })
    } else {
        const TINY: f64 = 1e-300;
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < f64::EPSILON {
                let q = (h.ln() + ln_prefactor).exp().min(1.0);
                return Ok((1.0 - q, q));
            }
        }
        Err(Error::SeriesDivergence { terms: MAX_ITER })
    }
}
