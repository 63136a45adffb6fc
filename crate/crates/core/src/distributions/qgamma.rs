#[allow(unused_imports)]
use num_traits::Float;

use super::gamma_bessel::GammaBesselParams;
use super::gamma_bessel::ValidityReport;
use super::scan::geometric_scan;
use crate::numerics::Quadrature;
use crate::specfun::{hyp0f1, lgamma, lgamma_diff, ln_beta, ln_hyp0f1, SeriesControl};
use crate::{Error, Result};

/// Octaves the q > 1 normalizability probe may visit.
const MAX_OCTAVES: usize = 2000;

/// `(β, b, δ)` plus the pathway parameter `q ≠ 1`.
///
/// The kernel is `t^{β−1} [1 − b(1−q)t]^{1/(1−q)} 0F1(;β;δt)`; for `q > 1`
/// this is `t^{β−1} [1 + b(q−1)t]^{−1/(q−1)} 0F1(;β;δt)` on `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QGammaBesselParams {
    pub base: GammaBesselParams,
    pub q: f64,
}

impl QGammaBesselParams {
    pub fn new(base: GammaBesselParams, q: f64) -> Result<Self> {
        if !q.is_finite() || q == 1.0 {
            return Err(Error::params(alloc::format!("q must be finite and differ from 1, got {q}")));
        }
        let base = GammaBesselParams::new(base.beta, base.b, base.delta)?;
        Ok(QGammaBesselParams { base, q })
    }

    /// `m = 1/|1−q|`.
    fn m(&self) -> f64 {
        1.0 / (1.0 - self.q).abs()
    }

    /// `c = b|1−q|`.
    fn c(&self) -> f64 {
        self.base.b * (1.0 - self.q).abs()
    }

    pub fn support_upper(&self) -> f64 {
        if self.q < 1.0 {
            1.0 / self.c()
        } else {
            f64::INFINITY
        }
    }

    fn ln_power_part(&self, t: f64) -> f64 {
        let ct = self.c() * t;
        if self.q < 1.0 {
            if ct >= 1.0 {
                return f64::NEG_INFINITY;
            }
            (self.base.beta - 1.0) * t.ln() + self.m() * (-ct).ln_1p()
        } else {
            (self.base.beta - 1.0) * t.ln() - self.m() * ct.ln_1p()
        }
    }

    /// `ln` of the kernel; NaN where the kernel is negative.
    pub fn ln_kernel(&self, t: f64) -> f64 {
        if t > 0.0 && self.base.delta >= 0.0 {
            let ln_pow = self.ln_power_part(t);
            if ln_pow == f64::NEG_INFINITY {
                return ln_pow;
            }
            ln_pow + ln_hyp0f1(self.base.beta, self.base.delta * t).unwrap_or(f64::NAN)
        } else {
            self.kernel(t).ln()
        }
    }

    /// Signed unnormalized kernel. `0F1` turns negative for `δ < 0`.
    pub fn kernel(&self, t: f64) -> f64 {
        let beta = self.base.beta;
        if !(t > 0.0) {
            return if t == 0.0 {
                if beta < 1.0 {
                    f64::INFINITY
                } else if beta == 1.0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                0.0
            };
        }
        let ln_pow = self.ln_power_part(t);
        if ln_pow == f64::NEG_INFINITY {
            return 0.0;
        }
        let z = self.base.delta * t;
        if z >= 0.0 {
            match ln_hyp0f1(beta, z) {
                Ok(h) => (ln_pow + h).exp(),
                Err(_) => f64::NAN,
            }
        } else {
            match hyp0f1(beta, z, &SeriesControl::default()) {
                Ok(h) => ln_pow.exp() * h,
                Err(_) if ln_pow < -745.0 => 0.0,
                Err(_) => f64::NAN,
            }
        }
    }
}

/// A q-analogue of the gamma Bessel density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QGammaBessel {
    params: QGammaBesselParams,
    ln_norm: f64,
    normalized: bool,
    upper: f64,
}

impl QGammaBessel {
    /// Normalizes the kernel.
    ///
    /// For `q < 1` the term-wise beta integrals sum to
    /// `K⁻¹ = Γ(β)Γ(m+1) c^{−β} 0F1(;β+m+1;δ/c) / Γ(β+m+1)`.
    /// For `q > 1` and `δ = 0` the integral is `c^{−β} B(β, m−β)`, finite only
    /// when `m > β`. For `q > 1` and `δ ≠ 0` the kernel is integrated over
    /// successive octaves, which must shrink geometrically. For `δ > 0` the
    /// factor `e^{2√(δt)}` in `0F1` eventually outgrows the power tail, so the
    /// density is truncated where the octave sum settled (see [`support`](Self::support)).
    pub fn new(params: QGammaBesselParams) -> Result<Self> {
        Self::build(params, true)
    }

    /// Normalizes without the δ < 0 sign scan; callers check signs themselves.
    pub(crate) fn new_unchecked(params: QGammaBesselParams) -> Result<Self> {
        Self::build(params, false)
    }

    fn build(params: QGammaBesselParams, scan: bool) -> Result<Self> {
        let params = QGammaBesselParams::new(params.base, params.q)?;
        let p = params.base;
        let (m, c) = (params.m(), params.c());
        if scan && p.delta < 0.0 {
            let report = scan_signs(&params)?;
            if !report.valid {
                return Err(Error::params(alloc::format!(
                    "delta = {} gives a negative q-density near t = {:?}",
                    p.delta,
                    report.first_negative
                )));
            }
        }
        let mut upper = params.support_upper();
        let ln_integral = if params.q < 1.0 {
            let x = p.delta / c;
            let b2 = p.beta + m + 1.0;
            let ln_h = if x >= 0.0 {
                ln_hyp0f1(b2, x)?
            } else {
                let h = hyp0f1(b2, x, &SeriesControl::default())?;
                if !(h > 0.0) {
                    return Err(Error::NonNormalizable(alloc::format!("kernel integral is {h}")));
                }
                h.ln()
            };
            lgamma(p.beta) - lgamma_diff(m + 1.0, p.beta) - p.beta * c.ln() + ln_h
        } else if p.delta == 0.0 {
            if !(m > p.beta) {
                return Err(Error::NonNormalizable(alloc::format!(
                    "1/(q-1) = {m} must exceed beta = {}",
                    p.beta
                )));
            }
            -p.beta * c.ln() + ln_beta(p.beta, m - p.beta)?
        } else {
            let (total, hi) = octave_pieces(&params)?;
            upper = hi;
            if !(total > 0.0) {
                return Err(Error::NonNormalizable(alloc::format!("kernel integral is {total}")));
            }
            total.ln()
        };
        Ok(QGammaBessel {
            params,
            ln_norm: -ln_integral,
            normalized: true,
            upper,
        })
    }

    /// Unnormalized kernel evaluation, e.g. for shapes that do not
    /// integrate to a finite value.
    pub fn kernel_only(params: QGammaBesselParams) -> Result<Self> {
        let params = QGammaBesselParams::new(params.base, params.q)?;
        Ok(QGammaBessel {
            params,
            ln_norm: 0.0,
            normalized: false,
            upper: params.support_upper(),
        })
    }

    pub fn params(&self) -> &QGammaBesselParams {
        &self.params
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// The constant `K` (1 for a kernel-only object).
    pub fn norm_const(&self) -> f64 {
        self.ln_norm.exp()
    }

    /// `(0, upper)`; `upper` is finite for `q < 1` and for truncated `q > 1`, `δ ≠ 0` densities.
    pub fn support(&self) -> (f64, f64) {
        (0.0, self.upper)
    }

    pub fn ln_pdf(&self, t: f64) -> f64 {
        if t > self.upper {
            return f64::NEG_INFINITY;
        }
        self.params.ln_kernel(t) + self.ln_norm
    }

    pub fn pdf(&self, t: f64) -> f64 {
        if t > self.upper {
            return 0.0;
        }
        let k = self.params.kernel(t);
        if self.normalized {
            (k * self.norm_const()).max(0.0)
        } else {
            k
        }
    }

    /// `∫₀ᵗ pdf` by quadrature.
    pub fn cdf(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Ok(0.0);
        }
        let hi = self.upper;
        if t >= hi {
            return Ok(1.0);
        }
        let p = &self.params.base;
        let scale = p.mean().abs().max(1.0 / p.b);
        let breaks = [0.25 * scale, scale, 4.0 * scale, 16.0 * scale];
        let r = Quadrature::new(1e-11, 1e-15)
            .with_tail_scale(scale)
            .integrate_with_breaks(|x| self.pdf(x), 0.0, t, &breaks)?;
        Ok(r.value.clamp(0.0, 1.0))
    }
}

/// Kernel integrals over `[0, s]` and then octaves `[s 2^j, s 2^{j+1}]`,
/// stopping once the remaining geometric tail is negligible.
fn octave_pieces(params: &QGammaBesselParams) -> Result<(f64, f64)> {
    let p = &params.base;
    let s = p.mean().abs().max(p.beta / p.b).max(1.0 / p.b);
    let quad = Quadrature::new(1e-12, 1e-300);
    let diverged = |e: Error| match e {
        Error::NonFiniteIntegrand { .. } | Error::Overflow => {
            Error::NonNormalizable("kernel overflows in the tail".into())
        }
        other => other,
    };
    let abs_k = |t: f64| params.kernel(t).abs();
    let mut total = quad.integrate(|t| params.kernel(t), 0.0, s).map_err(diverged)?.value;
    let mut total_abs = quad.integrate(abs_k, 0.0, s).map_err(diverged)?.value;
    let mut prev = f64::INFINITY;
    let mut decreasing = false;
    let mut lo = s;
    for _ in 0..MAX_OCTAVES {
        let hi = 2.0 * lo;
        let piece_abs = quad.integrate(abs_k, lo, hi).map_err(diverged)?.value;
        let piece = quad.integrate(|t| params.kernel(t), lo, hi).map_err(diverged)?.value;
        total += piece;
        total_abs += piece_abs;
        if !total_abs.is_finite() {
            return Err(Error::NonNormalizable("kernel integral overflows".into()));
        }
        if prev.is_finite() && piece_abs < prev {
            decreasing = true;
            let r = piece_abs / prev;
            if piece_abs == 0.0 || (r < 1.0 && piece_abs * r / (1.0 - r) < 1e-14 * total_abs) {
                return Ok((total, hi));
            }
        } else if decreasing && piece_abs > prev {
            return Err(Error::NonNormalizable(alloc::format!(
                "octave integrals grow again beyond t = {lo:e}"
            )));
        }
        prev = piece_abs;
        lo = hi;
    }
    Err(Error::NonNormalizable("octave integrals did not settle".into()))
}

/// Sign scan of the `δ < 0` kernel relative to its power envelope
/// `t^{β−1}[1 ∓ ct]^{±m}`, from `1e−6/b` until the envelope falls below
/// `1e−16` of its peak (or the support or probe edge is reached).
fn scan_signs(params: &QGammaBesselParams) -> Result<ValidityReport> {
    let p = &params.base;
    let mut edge = if params.q < 1.0 { params.support_upper() } else { octave_pieces(params)?.1 };
    let lo = (1e-6 / p.b).min(1e-6 * edge);
    let ln_env = |t: f64| params.ln_power_part(t);
    let mode = if p.beta > 1.0 {
        let m = params.m();
        let denom = if params.q < 1.0 { p.beta - 1.0 + m } else { m - p.beta + 1.0 };
        if denom > 0.0 { ((p.beta - 1.0) / (denom * params.c())).min(0.5 * edge) } else { 0.5 * edge }
    } else {
        lo
    };
    let peak = ln_env(mode);
    let mut t = mode.max(1.0 / p.b).min(edge);
    while t < edge && ln_env(t) - peak >= (1e-16f64).ln() {
        t *= 1.25;
    }
    edge = edge.min(t);
    Ok(geometric_scan(|t| params.kernel(t) * (-peak).exp(), lo, edge, 1.001))
}

pub fn qgb_pdf(p: &QGammaBesselParams, t: f64) -> Result<f64> {
    Ok(QGammaBessel::new(*p)?.pdf(t))
}
