#[allow(unused_imports)]
use num_traits::Float;

use crate::numerics::Quadrature;
use crate::{Error, Result};

/// Which member of the family a pathway parameter `q` selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `q < 1`: generalized type-1 beta with the right tail cut off.
    TypeOneBeta,
    /// `q > 1`: generalized type-2 beta.
    TypeTwoBeta,
    /// `q = 1`: generalized gamma, the common limit of both.
    GeneralizedGamma,
}

/// Parameters `(a, θ, γ, η, q)` of the scalar pathway model
/// `x^{γ−1} [1 − a(1−q) x^θ]^{η/(1−q)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathwayParams {
    pub a: f64,
    pub theta: f64,
    pub gamma: f64,
    pub eta: f64,
    pub q: f64,
}

impl PathwayParams {
    pub fn new(a: f64, theta: f64, gamma: f64, eta: f64, q: f64) -> Result<Self> {
        let p = PathwayParams {
            a,
            theta,
            gamma,
            eta,
            q,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("a", self.a),
            ("theta", self.theta),
            ("gamma", self.gamma),
            ("eta", self.eta),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::params(alloc::format!("pathway {name} must be positive, got {v}")));
            }
        }
        if !self.q.is_finite() {
            return Err(Error::params("pathway q must be finite"));
        }
        Ok(())
    }

    pub fn branch(&self) -> Branch {
        if self.q < 1.0 {
            Branch::TypeOneBeta
        } else if self.q > 1.0 {
            Branch::TypeTwoBeta
        } else {
            Branch::GeneralizedGamma
        }
    }

    /// Right end of the support: `[a(1−q)]^{−1/θ}` for `q < 1`, else infinity.
    pub fn support_upper(&self) -> f64 {
        match self.branch() {
            Branch::TypeOneBeta => (self.a * (1.0 - self.q)).powf(-1.0 / self.theta),
            _ => f64::INFINITY,
        }
    }

    /// `ln` of the unnormalized kernel; `-inf` outside the support.
    pub fn ln_kernel(&self, x: f64) -> f64 {
        if !(x > 0.0) {
            return if x == 0.0 { self.ln_kernel_at_zero() } else { f64::NEG_INFINITY };
        }
        let ln_pow = (self.gamma - 1.0) * x.ln();
        let xt = x.powf(self.theta);
        let tail = match self.branch() {
            Branch::TypeOneBeta => {
                let c = self.a * (1.0 - self.q);
                if c * xt >= 1.0 {
                    return f64::NEG_INFINITY;
                }
                self.eta / (1.0 - self.q) * (-c * xt).ln_1p()
            }
            Branch::TypeTwoBeta => {
                let c = self.a * (self.q - 1.0);
                -self.eta / (self.q - 1.0) * (c * xt).ln_1p()
            }
            Branch::GeneralizedGamma => -self.a * self.eta * xt,
        };
        ln_pow + tail
    }

    fn ln_kernel_at_zero(&self) -> f64 {
        if self.gamma < 1.0 {
            f64::INFINITY
        } else if self.gamma == 1.0 {
            0.0
        } else {
            f64::NEG_INFINITY
        }
    }
}

/// A pathway density with its normalizing constant resolved.
///
/// The constant is found by adaptive quadrature of the kernel for every
/// branch; closed beta/gamma forms are only used as test oracles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathwayDensity {
    params: PathwayParams,
    ln_norm: f64,
}

impl PathwayDensity {
    pub fn new(params: PathwayParams) -> Result<Self> {
        params.validate()?;
        let p = params;
        if p.branch() == Branch::TypeTwoBeta && !(p.eta / (p.q - 1.0) > p.gamma / p.theta) {
            return Err(Error::NonNormalizable(alloc::format!(
                "type-2 branch needs eta/(q-1) > gamma/theta, got {} <= {}",
                p.eta / (p.q - 1.0),
                p.gamma / p.theta
            )));
        }
        let quad = Quadrature::new(1e-13, f64::MIN_POSITIVE);
        let kernel = |x: f64| p.ln_kernel(x).exp();
        let total = match p.branch() {
            Branch::TypeOneBeta => quad.integrate(kernel, 0.0, p.support_upper())?,
            Branch::TypeTwoBeta => {
                let scale = (p.a * (p.q - 1.0)).powf(-1.0 / p.theta);
                quad.with_tail_scale(scale)
                    .integrate_with_breaks(kernel, 0.0, f64::INFINITY, &scale_breaks(scale))?
            }
            Branch::GeneralizedGamma => {
                let scale = (p.a * p.eta).powf(-1.0 / p.theta);
                quad.with_tail_scale(scale)
                    .integrate_with_breaks(kernel, 0.0, f64::INFINITY, &scale_breaks(scale))?
            }
        };
        if !(total.value > 0.0) || !total.value.is_finite() {
            return Err(Error::NonNormalizable(alloc::format!(
                "kernel integral is {}",
                total.value
            )));
        }
        Ok(PathwayDensity {
            params,
            ln_norm: -total.value.ln(),
        })
    }

    pub fn params(&self) -> &PathwayParams {
        &self.params
    }

    /// The normalizing constant `k₁`, `k₂` or `k₃`.
    pub fn norm_const(&self) -> f64 {
        self.ln_norm.exp()
    }

    pub fn support(&self) -> (f64, f64) {
        (0.0, self.params.support_upper())
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        self.ln_norm + self.params.ln_kernel(x)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.ln_pdf(x).exp()
    }
}

pub(crate) fn scale_breaks(scale: f64) -> [f64; 6] {
    [
        scale / 64.0,
        scale / 8.0,
        scale,
        8.0 * scale,
        64.0 * scale,
        512.0 * scale,
    ]
}

/// One-shot evaluation; prefer [`PathwayDensity`] for repeated use.
pub fn pathway_pdf(p: &PathwayParams, x: f64) -> Result<f64> {
    Ok(PathwayDensity::new(*p)?.pdf(x))
}
