#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use rand_distr::{Distribution, Gamma, Poisson};

use super::scan::geometric_scan;
use crate::numerics::{Quadrature, RandomStream};
use crate::specfun::{hyp0f1, inc_gamma_pq, lgamma, ln_hyp0f1, SeriesControl};
use crate::{Error, Result};

/// Cumulative Poisson weight at which mixture sums stop.
const MIXTURE_MASS: f64 = 1.0 - 1e-14;

/// Parameters `(β, b, δ)` of `g(t) = C t^{β−1} e^{−bt} 0F1(;β;δt)` with
/// `C = b^β / (Γ(β) e^{δ/b})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaBesselParams {
    pub beta: f64,
    pub b: f64,
    pub delta: f64,
}

impl GammaBesselParams {
    pub fn new(beta: f64, b: f64, delta: f64) -> Result<Self> {
        let p = GammaBesselParams { beta, b, delta };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(Error::params(alloc::format!("beta must be positive, got {}", self.beta)));
        }
        if !(self.b > 0.0) || !self.b.is_finite() {
            return Err(Error::params(alloc::format!("b must be positive, got {}", self.b)));
        }
        if !self.delta.is_finite() {
            return Err(Error::params("delta must be finite"));
        }
        Ok(())
    }

    /// `ln C`.
    pub fn ln_norm(&self) -> f64 {
        self.beta * self.b.ln() - lgamma(self.beta) - self.delta / self.b
    }

    /// Signed density formula, without the δ < 0 validity check.
    pub(crate) fn signed_pdf(&self, t: f64) -> f64 {
        if self.delta >= 0.0 {
            return self.ln_pdf_nonneg(t).exp();
        }
        if !(t > 0.0) {
            return self.ln_pdf_nonneg(t).exp();
        }
        let ln_env = self.ln_norm() + (self.beta - 1.0) * t.ln() - self.b * t;
        match hyp0f1(self.beta, self.delta * t, &SeriesControl::default()) {
            Ok(h) => ln_env.exp() * h,
            // The envelope is far below any representable density here.
            Err(_) if ln_env < -745.0 => 0.0,
            Err(_) => f64::NAN,
        }
    }

    /// Log of the signed density; NaN where it is negative.
    pub(crate) fn ln_pdf_unchecked(&self, t: f64) -> f64 {
        if self.delta >= 0.0 || !(t > 0.0) {
            self.ln_pdf_nonneg(t)
        } else {
            self.signed_pdf(t).ln()
        }
    }

    /// Log density for `δ ≥ 0`, or at `t ≤ 0` for any `δ`.
    fn ln_pdf_nonneg(&self, t: f64) -> f64 {
        if t < 0.0 {
            return f64::NEG_INFINITY;
        }
        if t == 0.0 {
            return if self.beta < 1.0 {
                f64::INFINITY
            } else if self.beta == 1.0 {
                self.ln_norm()
            } else {
                f64::NEG_INFINITY
            };
        }
        if t.is_infinite() {
            return f64::NEG_INFINITY;
        }
        let h = ln_hyp0f1(self.beta, self.delta * t).unwrap_or(f64::NAN);
        self.ln_norm() + (self.beta - 1.0) * t.ln() - self.b * t + h
    }

    /// `E[t] = β/b + δ/b²`.
    pub fn mean(&self) -> f64 {
        self.beta / self.b + self.delta / (self.b * self.b)
    }

    /// `Var[t] = β/b² + 2δ/b³`.
    pub fn variance(&self) -> f64 {
        self.beta / (self.b * self.b) + 2.0 * self.delta / (self.b * self.b * self.b)
    }

    /// `M(s) = (b/(b−s))^β exp(δ/(b−s) − δ/b)` for `s < b`.
    pub fn mgf(&self, s: f64) -> Result<f64> {
        if !(s < self.b) {
            return Err(Error::domain(alloc::format!("mgf needs s < b = {}, got {s}", self.b)));
        }
        let ln = self.beta * (self.b / (self.b - s)).ln() + self.delta / (self.b - s)
            - self.delta / self.b;
        Ok(ln.exp())
    }

    fn scale_breaks(&self) -> [f64; 4] {
        let m = self.mean().abs().max(1.0 / self.b);
        let sd = self.variance().abs().sqrt();
        [0.25 * m, m, m + 4.0 * sd, m + 16.0 * sd]
    }
}

/// Outcome of the δ < 0 sign scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    pub valid: bool,
    /// First grid point where the signed density fell below `−1e−12`.
    pub first_negative: Option<f64>,
    /// Smallest signed density value seen on the grid.
    pub min_value: f64,
    pub scan_lower: f64,
    pub scan_upper: f64,
    pub points: usize,
}

/// Checks whether `(β, b, δ)` defines a nonnegative density.
///
/// For `δ ≥ 0` every series term is positive and the answer is immediate.
/// For `δ < 0`, `0F1(;β;δt)` oscillates like a Bessel J function, so the
/// signed density is scanned on a geometric grid (ratio 1.001) until the
/// gamma envelope `C t^{β−1} e^{−bt}` drops below `1e−16` past its mode.
pub fn gb_validate(p: &GammaBesselParams) -> ValidityReport {
    if p.check().is_err() {
        return ValidityReport {
            valid: false,
            first_negative: None,
            min_value: f64::NAN,
            scan_lower: 0.0,
            scan_upper: 0.0,
            points: 0,
        };
    }
    if p.delta >= 0.0 {
        return ValidityReport {
            valid: true,
            first_negative: None,
            min_value: 0.0,
            scan_lower: 0.0,
            scan_upper: 0.0,
            points: 0,
        };
    }
    let ln_env = |t: f64| p.ln_norm() + (p.beta - 1.0) * t.ln() - p.b * t;
    let mode = ((p.beta - 1.0) / p.b).max(1.0 / p.b);
    let mut hi = mode;
    while ln_env(hi) >= (1e-16f64).ln() && hi < 1e12 / p.b {
        hi *= 1.25;
    }
    geometric_scan(|t| p.signed_pdf(t), 1e-6 / p.b, hi, 1.001)
}

/// A gamma Bessel density whose parameters passed [`gb_validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaBessel {
    params: GammaBesselParams,
}

impl GammaBessel {
    pub fn new(params: GammaBesselParams) -> Result<Self> {
        params.check()?;
        if params.delta < 0.0 {
            let report = gb_validate(&params);
            if !report.valid {
                return Err(Error::params(alloc::format!(
                    "delta = {} gives a negative density near t = {:?}",
                    params.delta,
                    report.first_negative
                )));
            }
        }
        Ok(GammaBessel { params })
    }

    pub fn params(&self) -> &GammaBesselParams {
        &self.params
    }

    pub fn ln_pdf(&self, t: f64) -> f64 {
        if self.params.delta >= 0.0 || !(t > 0.0) {
            self.params.ln_pdf_nonneg(t)
        } else {
            self.pdf(t).ln()
        }
    }

    pub fn pdf(&self, t: f64) -> f64 {
        if self.params.delta >= 0.0 {
            self.params.ln_pdf_nonneg(t).exp()
        } else {
            self.params.signed_pdf(t).max(0.0)
        }
    }

    /// Poisson mixing weights `(k, w_k)`, `w_k = e^{−λ} λ^k / k!`, `λ = δ/b`,
    /// visited outward from the mode until their sum reaches `1 − 1e−14`.
    fn mixture_weights(&self) -> Vec<(usize, f64)> {
        let lambda = self.params.delta / self.params.b;
        if lambda == 0.0 {
            return alloc::vec![(0, 1.0)];
        }
        let ln_w = |k: usize| -lambda + k as f64 * lambda.ln() - lgamma(k as f64 + 1.0);
        let mode = lambda.floor() as usize;
        let mut out = alloc::vec![(mode, ln_w(mode).exp())];
        let mut mass = out[0].1;
        let (mut lo, mut hi) = (mode, mode);
        while mass < MIXTURE_MASS {
            let down = if lo > 0 { ln_w(lo - 1).exp() } else { 0.0 };
            let up = ln_w(hi + 1).exp();
            if down == 0.0 && up == 0.0 {
                break;
            }
            if down >= up {
                lo -= 1;
                out.push((lo, down));
                mass += down;
            } else {
                hi += 1;
                out.push((hi, up));
                mass += up;
            }
        }
        out
    }

    /// Mixture pieces `(P, Q)` summed over the Poisson weights.
    fn mixture_pq(&self, t: f64) -> Result<(f64, f64)> {
        let p = &self.params;
        let mut lower = 0.0;
        let mut upper = 0.0;
        for (k, w) in self.mixture_weights() {
            let (pk, qk) = inc_gamma_pq(p.beta + k as f64, p.b * t)?;
            lower += w * pk;
            upper += w * qk;
        }
        Ok((lower, upper))
    }

    fn quad(&self) -> Quadrature {
        Quadrature::new(1e-11, 1e-15).with_tail_scale(self.params.mean().abs().max(1.0 / self.params.b))
    }

    pub fn cdf(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return if t.is_nan() { Err(Error::domain("cdf argument is NaN")) } else { Ok(0.0) };
        }
        if t.is_infinite() {
            return Ok(1.0);
        }
        if self.params.delta >= 0.0 {
            let (lower, upper) = self.mixture_pq(t)?;
            return Ok(lower / (lower + upper));
        }
        if t <= self.params.mean() {
            let r = self.quad().integrate_with_breaks(|x| self.pdf(x), 0.0, t, &self.params.scale_breaks())?;
            Ok(r.value.clamp(0.0, 1.0))
        } else {
            Ok((1.0 - self.sf_quad(t)?).clamp(0.0, 1.0))
        }
    }

    /// Survival function `1 − F(t)`, accurate in the far right tail.
    pub fn sf(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return if t.is_nan() { Err(Error::domain("sf argument is NaN")) } else { Ok(1.0) };
        }
        if t.is_infinite() {
            return Ok(0.0);
        }
        if self.params.delta >= 0.0 {
            let (lower, upper) = self.mixture_pq(t)?;
            return Ok(upper / (lower + upper));
        }
        if t <= self.params.mean() {
            Ok((1.0 - self.cdf(t)?).clamp(0.0, 1.0))
        } else {
            Ok(self.sf_quad(t)?.clamp(0.0, 1.0))
        }
    }

    fn sf_quad(&self, t: f64) -> Result<f64> {
        Ok(self
            .quad()
            .integrate_with_breaks(|x| self.pdf(x), t, f64::INFINITY, &self.params.scale_breaks())?
            .value)
    }

    pub fn mgf(&self, s: f64) -> Result<f64> {
        self.params.mgf(s)
    }

    /// Draws `n` values as `K ~ Poisson(δ/b)`, then `Gamma(β + K, rate b)`.
    pub fn sample(&self, n: usize, rng: &mut RandomStream) -> Result<Vec<f64>> {
        let p = &self.params;
        if p.delta < 0.0 {
            return Err(Error::params("sampling needs delta >= 0"));
        }
        let lambda = p.delta / p.b;
        let poisson = if lambda > 0.0 {
            Some(Poisson::new(lambda).map_err(|e| Error::params(alloc::format!("{e}")))?)
        } else {
            None
        };
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let k = match &poisson {
                Some(d) => d.sample(rng),
                None => 0.0,
            };
            let g = Gamma::new(p.beta + k, 1.0 / p.b).map_err(|e| Error::params(alloc::format!("{e}")))?;
            out.push(g.sample(rng));
        }
        Ok(out)
    }
}

pub fn gb_pdf(p: &GammaBesselParams, t: f64) -> Result<f64> {
    Ok(GammaBessel::new(*p)?.pdf(t))
}

pub fn gb_cdf(p: &GammaBesselParams, t: f64) -> Result<f64> {
    GammaBessel::new(*p)?.cdf(t)
}

pub fn gb_mgf(p: &GammaBesselParams, s: f64) -> Result<f64> {
    p.check()?;
    p.mgf(s)
}

pub fn gb_sample(p: &GammaBesselParams, n: usize, rng: &mut RandomStream) -> Result<Vec<f64>> {
    GammaBessel::new(*p)?.sample(n, rng)
}
