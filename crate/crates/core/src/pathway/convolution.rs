use crate::numerics::{IntegralResult, Quadrature};
use crate::{Error, Result};

fn quad() -> Quadrature {
    Quadrature::default()
}

fn zero() -> IntegralResult {
    IntegralResult {
        value: 0.0,
        abs_error_estimate: 0.0,
        evaluations: 0,
    }
}

fn check_u(u: f64) -> Result<()> {
    if u.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(alloc::format!("convolution argument must be finite, got {u}")))
    }
}

/// Density of `x + y` for independent positive `x ~ f1`, `y ~ f2`:
/// `∫₀ᵘ f1(u−t) f2(t) dt`.
pub fn conv_sum_density<F1, F2>(f1: F1, f2: F2, u: f64) -> Result<IntegralResult>
where
    F1: Fn(f64) -> f64,
    F2: Fn(f64) -> f64,
{
    check_u(u)?;
    if u <= 0.0 {
        return Ok(zero());
    }
    quad().integrate(|t| f1(u - t) * f2(t), 0.0, u)
}

/// Density of `x − y` at `u`: `∫ f1(u+y) f2(y) dy` over `y > max(0, −u)`.
pub fn conv_diff_density<F1, F2>(f1: F1, f2: F2, u: f64) -> Result<IntegralResult>
where
    F1: Fn(f64) -> f64,
    F2: Fn(f64) -> f64,
{
    check_u(u)?;
    let lo = (-u).max(0.0);
    let r = quad()
        .integrate(|y| f1(u + y) * f2(y), lo, f64::INFINITY)
        .map_err(|e| match e {
            Error::NonConvergence { value, .. } => Error::TailTooHeavy { tail: value },
            Error::NonFiniteIntegrand { .. } => Error::TailTooHeavy { tail: f64::INFINITY },
            other => other,
        })?;
    if !r.value.is_finite() {
        return Err(Error::TailTooHeavy { tail: r.value });
    }
    Ok(r)
}

/// Density of `x + a(1−q) y`: `∫₀^{u/(a(1−q))} f1(u − a(1−q)t) f2(t) dt`.
pub fn conv_pathway_density<F1, F2>(f1: F1, f2: F2, a: f64, q: f64, u: f64) -> Result<IntegralResult>
where
    F1: Fn(f64) -> f64,
    F2: Fn(f64) -> f64,
{
    check_u(u)?;
    if !(a > 0.0) || !a.is_finite() || !(q < 1.0) || !q.is_finite() {
        return Err(Error::domain("pathway convolution needs a > 0 and q < 1"));
    }
    if u <= 0.0 {
        return Ok(zero());
    }
    let c = a * (1.0 - q);
    quad().integrate(|t| f1(u - c * t) * f2(t), 0.0, u / c)
}
