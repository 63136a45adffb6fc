#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::Quadrature;
use crate::specfun::{hyp0f1, lgamma, ln_hyp0f1, ln_hyp0f1_scaled, ln_kratzel_i11, ln_kratzel_i11_scaled, SeriesControl};
use crate::{Error, Result};

/// Distance to an integer `γ/ρ + η` below which the series form is refused.
const POLE_GUARD: f64 = 1e-3;

/// Parameters of the superstatistics density: a conditional
/// `k₁ x^{γ−1} e^{−a x^ρ} 0F1(;γ/ρ;δx^ρ)` mixed over `a ~ Gamma(η, rate λ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperstatParams {
    pub gamma: f64,
    pub rho: f64,
    pub delta: f64,
    pub lambda: f64,
    pub eta: f64,
}

impl SuperstatParams {
    pub fn new(gamma: f64, rho: f64, delta: f64, lambda: f64, eta: f64) -> Result<Self> {
        let p = SuperstatParams {
            gamma,
            rho,
            delta,
            lambda,
            eta,
        };
        for (name, v) in [("gamma", gamma), ("rho", rho), ("lambda", lambda), ("eta", eta)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::params(alloc::format!("{name} must be positive, got {v}")));
            }
        }
        if !(delta >= 0.0) || !delta.is_finite() {
            return Err(Error::params(alloc::format!("delta must be nonnegative, got {delta}")));
        }
        Ok(p)
    }

    /// `ν = γ/ρ + η`, the order of the Krätzel factor.
    pub fn nu(&self) -> f64 {
        self.gamma / self.rho + self.eta
    }

    fn ln_prefactor(&self) -> f64 {
        self.rho.ln() + self.eta * self.lambda.ln() - lgamma(self.gamma / self.rho) - lgamma(self.eta)
    }
}

/// Superstatistics density evaluated through the Bessel-K form of the
/// Meijer G factor:
/// `f(x) = ρλ^η/(Γ(γ/ρ)Γ(η)) x^{γ−1} 0F1(;γ/ρ;δx^ρ) I(ν, λ+x^ρ, δ)` with
/// `I(ν, s, δ) = ∫₀^∞ a^{ν−1} e^{−sa−δ/a} da`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Superstat {
    params: SuperstatParams,
    ln_pre: f64,
}

impl Superstat {
    pub fn new(params: SuperstatParams) -> Result<Self> {
        let params = SuperstatParams::new(params.gamma, params.rho, params.delta, params.lambda, params.eta)?;
        Ok(Superstat {
            params,
            ln_pre: params.ln_prefactor(),
        })
    }

    pub fn params(&self) -> &SuperstatParams {
        &self.params
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        let p = &self.params;
        if x < 0.0 || x.is_nan() {
            return f64::NEG_INFINITY;
        }
        let kr = |s: f64| ln_kratzel_i11(p.nu(), s, p.delta).unwrap_or(f64::NAN);
        if x == 0.0 {
            return if p.gamma < 1.0 {
                f64::INFINITY
            } else if p.gamma == 1.0 {
                self.ln_pre + kr(p.lambda)
            } else {
                f64::NEG_INFINITY
            };
        }
        if x.is_infinite() {
            return f64::NEG_INFINITY;
        }
        let xr = x.powf(p.rho);
        let s = p.lambda + xr;
        if !(p.delta * s).is_finite() {
            return f64::NEG_INFINITY;
        }
        let ln_x = (p.gamma - 1.0) * x.ln();
        if p.delta == 0.0 {
            return self.ln_pre + ln_x + kr(s);
        }
        // ln 0F1 grows like 2√(δx^ρ) and ln I₁₁ falls like −2√(δs); their
        // difference is taken in closed form.
        let h = ln_hyp0f1_scaled(p.gamma / p.rho, p.delta * xr).unwrap_or(f64::NAN);
        let k = ln_kratzel_i11_scaled(p.nu(), s, p.delta).unwrap_or(f64::NAN);
        let gap = -2.0 * p.delta.sqrt() * p.lambda / (xr.sqrt() + s.sqrt());
        self.ln_pre + ln_x + h + k + gap
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.ln_pdf(x).exp()
    }

    /// `∫₀ˣ pdf` by quadrature.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Ok(0.0);
        }
        if x.is_infinite() {
            return Ok(1.0);
        }
        let scale = self.params.lambda.powf(1.0 / self.params.rho);
        let breaks = [0.25 * scale, scale, 4.0 * scale, 16.0 * scale];
        let r = Quadrature::new(1e-11, 1e-15)
            .with_tail_scale(scale)
            .integrate_with_breaks(|t| self.pdf(t), 0.0, x, &breaks)?;
        Ok(r.value.clamp(0.0, 1.0))
    }

    /// The printed series form
    /// `ρΓ(ν)λ^η/(Γ(γ/ρ)Γ(η)) x^{γ−1} (λ+x^ρ)^{−ν} 0F1(;γ/ρ;δx^ρ) 0F1(;1−ν;δ(λ+x^ρ))`.
    ///
    /// It keeps only the `Γ(ν)` branch of the Bessel-K expansion, so it agrees
    /// with [`Superstat::pdf`] only as `δ → 0`.
    pub fn pdf_series(&self, x: f64) -> Result<f64> {
        let p = &self.params;
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::domain(alloc::format!("series density needs finite x >= 0, got {x}")));
        }
        let nu = p.nu();
        let xr = x.powf(p.rho);
        let s = p.lambda + xr;
        let tail = if p.delta == 0.0 {
            1.0
        } else {
            let distance = (nu - nu.round()).abs();
            if distance < POLE_GUARD {
                return Err(Error::PoleProximity { distance });
            }
            hyp0f1(1.0 - nu, p.delta * s, &SeriesControl::default())?
        };
        let ln_x = if p.gamma == 1.0 { 0.0 } else { (p.gamma - 1.0) * x.ln() };
        let h = ln_hyp0f1(p.gamma / p.rho, p.delta * xr)?;
        Ok((self.ln_pre + lgamma(nu) + ln_x - nu * s.ln() + h).exp() * tail)
    }
}

pub fn superstat_pdf(p: &SuperstatParams, x: f64) -> Result<f64> {
    Ok(Superstat::new(*p)?.pdf(x))
}

pub fn superstat_pdf_series(p: &SuperstatParams, x: f64) -> Result<f64> {
    Superstat::new(*p)?.pdf_series(x)
}
