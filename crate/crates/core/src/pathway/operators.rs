#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::{IntegralResult, Quadrature};
use crate::specfun::ln_gamma;
use crate::{Error, Result};

/// Real order `α > 0` of a Riemann–Liouville integral.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha.is_finite() {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::domain(alloc::format!("fractional order must be positive, got {alpha}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

fn quad() -> Quadrature {
    Quadrature::default()
}

/// `(1/Γ(α)) ∫₀ˣ (x−t)^{α−1} f(t) dt`.
///
/// For `α < 1` the kernel singularity at `t = x` is removed with
/// `s = (x−t)^α`, leaving `(1/Γ(α+1)) ∫₀^{x^α} f(x − s^{1/α}) ds`.
pub fn rl_left<F>(f: F, alpha: FractionalOrder, x: f64) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
{
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(alloc::format!("rl_left needs x > 0, got {x}")));
    }
    let a = alpha.get();
    if a < 1.0 {
        let inv = 1.0 / a;
        let r = quad().integrate(|s| f(x - s.powf(inv)), 0.0, x.powf(a))?;
        Ok(r.scaled((-ln_gamma(a + 1.0)?).exp()))
    } else {
        let r = quad().integrate(|t| (x - t).powf(a - 1.0) * f(t), 0.0, x)?;
        Ok(r.scaled((-ln_gamma(a)?).exp()))
    }
}

/// `(1/Γ(α)) ∫ₓ^∞ (t−x)^{α−1} f(t) dt`, evaluated as a main part on
/// `[x, cutoff]` plus a tail beyond `cutoff`.
///
/// The tail is integrated as well and must stay below the quadrature
/// tolerance relative to the main part; otherwise the cutoff was too short
/// for this `f` and [`Error::TailTooHeavy`] is returned.
pub fn rl_right<F>(f: F, alpha: FractionalOrder, x: f64, cutoff: f64) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
{
    if !x.is_finite() || !(cutoff > x) || !cutoff.is_finite() {
        return Err(Error::domain(alloc::format!(
            "rl_right needs finite x < cutoff, got x = {x}, cutoff = {cutoff}"
        )));
    }
    let a = alpha.get();
    let q = quad();
    let norm = (-ln_gamma(a)?).exp();
    let main = if a < 1.0 {
        let inv = 1.0 / a;
        q.integrate(|s| f(x + s.powf(inv)), 0.0, (cutoff - x).powf(a))?
            .scaled((-ln_gamma(a + 1.0)?).exp())
    } else {
        q.integrate(|t| (t - x).powf(a - 1.0) * f(t), x, cutoff)?
            .scaled(norm)
    };
    let tail = q
        .with_tail_scale(cutoff - x)
        .integrate(|t| (t - x).powf(a - 1.0) * f(t), cutoff, f64::INFINITY)
        .map_err(|e| match e {
            Error::NonConvergence { value, .. } => Error::TailTooHeavy { tail: value * norm },
            Error::NonFiniteIntegrand { .. } => Error::TailTooHeavy { tail: f64::INFINITY },
            other => other,
        })?
        .scaled(norm);
    if !tail.value.is_finite() || tail.value.abs() > q.abs_tol.max(q.rel_tol * main.value.abs()) {
        return Err(Error::TailTooHeavy { tail: tail.value });
    }
    Ok(main.plus(tail))
}

/// Pathway fractional integral
/// `x^{η−1} ∫₀^{L} [1 − a(1−q)t/x]^{η/(1−q)−1} f(t) dt` with `L = x/(a(1−q))`.
///
/// `η` here is the order of the operator, unrelated to the `η` field of
/// [`PathwayParams`](super::PathwayParams).
pub fn pathway_integral<F>(f: F, eta: f64, q: f64, a: f64, x: f64) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
{
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(Error::domain(alloc::format!("pathway order eta must be positive, got {eta}")));
    }
    if !(q < 1.0) || !q.is_finite() {
        return Err(Error::domain(alloc::format!("pathway integral needs q < 1, got {q}")));
    }
    if !(a > 0.0) || !a.is_finite() || !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("pathway integral needs a > 0 and x > 0"));
    }
    let kappa = eta / (1.0 - q);
    let len = x / (a * (1.0 - q));
    if !len.is_finite() {
        return Err(Error::domain("pathway integral support overflows"));
    }
    let r = if kappa < 1.0 {
        // s = (1 − t/L)^κ absorbs the endpoint singularity.
        quad()
            .integrate(|s| f(-len * (s.ln() / kappa).exp_m1()), 0.0, 1.0)?
            .scaled(len / kappa)
    } else {
        // Near q = 1 the weight behaves like exp(−t/σ) on a much longer support.
        let sigma = x / (a * eta);
        let mut breaks = alloc::vec::Vec::new();
        let mut b = sigma / 16.0;
        while b < len && breaks.len() < 200 {
            breaks.push(b);
            b *= 2.0;
        }
        quad().integrate_with_breaks(
            |t| ((kappa - 1.0) * (-t / len).ln_1p()).exp() * f(t),
            0.0,
            len,
            &breaks,
        )?
    };
    Ok(r.scaled(x.powf(eta - 1.0)))
}
