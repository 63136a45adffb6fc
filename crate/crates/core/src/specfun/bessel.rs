use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::lgamma;
use crate::{Error, Result};

/// Taylor coefficients of `1/Γ(1+μ) = Σ_k C[k] μ^k`.
#[allow(clippy::excessive_precision)]
const RGAMMA1P: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_860_606_5,
    -0.655_878_071_520_253_881_077,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_501_7,
    -0.042_197_734_555_544_336_748_21,
    -0.009_621_971_527_876_973_562_115,
    0.007_218_943_246_663_099_542_395,
    -0.001_165_167_591_859_065_112_114,
    -0.000_215_241_674_114_950_972_815_7,
    0.000_128_050_282_388_116_186_153_2,
    -0.000_020_134_854_780_788_238_655_69,
    -0.000_001_250_493_482_142_670_657_345,
    0.000_001_133_027_231_981_695_882_374,
    -2.056_338_416_977_607_103_45e-7,
    6.116_095_104_481_415_817_862e-9,
    5.002_007_644_469_222_930_056e-9,
    -1.181_274_570_487_020_144_588e-9,
    1.043_426_711_691_100_510_492e-10,
    7.782_263_439_905_071_254_05e-12,
    -3.696_805_618_642_205_708_188e-12,
    5.100_370_287_454_475_979_015e-13,
    -2.058_326_053_566_506_783_222e-14,
    -5.348_122_539_423_017_982_37e-15,
    1.226_778_628_238_260_790_159e-15,
    -1.181_259_301_697_458_769_514e-16,
];

/// Temme's auxiliary gammas for |μ| ≤ 1/2:
/// `gam1 = (1/Γ(1−μ) − 1/Γ(1+μ)) / 2μ`, `gam2 = (1/Γ(1−μ) + 1/Γ(1+μ)) / 2`.
fn temme_gammas(mu: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    for k in (0..13).rev() {
        gam2 = gam2 * mu2 + RGAMMA1P[2 * k];
        gam1 = gam1 * mu2 + RGAMMA1P[2 * k + 1];
    }
    (-gam1, gam2)
}

const RESCALE: f64 = 1e250;

/// Order above which the uniform asymptotic expansion replaces recurrence.
const DEBYE_ORDER: f64 = 1000.0;

/// `ln K_ν(x)` for real order and `x > 0`.
///
/// `K_μ`, `K_{μ+1}` with `|μ| ≤ 1/2` come from Temme's series for `x < 2`
/// and Steed's continued fraction otherwise; forward recurrence (stable for
/// `K`) carries them to order `|ν|`, rescaling to stay in range. Orders
/// above 1000 use the uniform (Debye) expansion in `1/ν`.
pub fn ln_bessel_k(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::domain("bessel_k requires x > 0 and finite order"));
    }
    Ok(ln_bessel_k_scaled(nu, x)? - x)
}

/// `ln K_ν(x) + x`, accurate when `x` is too large for the exponential to
/// be split off afterwards.
pub(crate) fn ln_bessel_k_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() || !nu.is_finite() {
        return Err(Error::domain("bessel_k requires x > 0 and finite order"));
    }
    let nu = nu.abs();
    if nu > DEBYE_ORDER {
        return Ok(ln_bessel_k_debye_scaled(nu, x));
    }
    ln_bessel_k_recurrence_scaled(nu, x)
}

fn ln_bessel_k_recurrence_scaled(nu: f64, x: f64) -> Result<f64> {
    let nl = (nu + 0.5).floor();
    let mu = nu - nl;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    // K_μ and K_{μ+1}, both multiplied by e^{log_shift}.
    let (mut k_mu, mut k_mu1, mut log_scale);
    if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < f64::EPSILON { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < f64::EPSILON { 1.0 } else { e.sinh() / e };
        let (gam1, gam2) = temme_gammas(mu);
        let gampl = gam2 - mu * gam1;
        let gammi = gam2 + mu * gam1;
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..10_000 {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= dd / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - fi * ff);
            if del.abs() < sum.abs() * f64::EPSILON {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::SeriesDivergence { terms: 10_000 });
        }
        k_mu = sum;
        k_mu1 = sum1 * xi2;
        log_scale = x;
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - mu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 2..100_000 {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < f64::EPSILON {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::SeriesDivergence { terms: 100_000 });
        }
        h *= a1;
        // Steed's method yields e^{x} K directly.
        k_mu = (PI / (2.0 * x)).sqrt() / s;
        k_mu1 = k_mu * (mu + x + 0.5 - h) * xi;
        log_scale = 0.0;
    }

    let steps = nl as usize;
    for i in 1..=steps {
        let next = (mu + i as f64) * xi2 * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
        if k_mu1.abs() > RESCALE {
            k_mu /= RESCALE;
            k_mu1 /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    Ok(k_mu.ln() + log_scale)
}

/// `K_ν(νz) ≈ √(π/2ν) e^{−νη} (1+z²)^{−1/4} Σ_k (−1)^k u_k(p)/ν^k` with
/// `p = (1+z²)^{−1/2}`, `η = √(1+z²) + ln(z/(1+√(1+z²)))`.
/// Returned with `e^{x}` factored in: `x − νη = −ν²/(x + ν√(1+z²)) − ν ln(z/(1+√(1+z²)))`.
fn ln_bessel_k_debye_scaled(nu: f64, x: f64) -> f64 {
    let z = x / nu;
    let root = (1.0 + z * z).sqrt();
    let lead = -nu * nu / (x + nu * root) - nu * (z.ln() - root.ln_1p());
    let p = 1.0 / root;
    let p2 = p * p;
    let u1 = p * (3.0 - 5.0 * p2) / 24.0;
    let u2 = p2 * (81.0 + p2 * (-462.0 + 385.0 * p2)) / 1152.0;
    let u3 = p * p2 * (30375.0 + p2 * (-369603.0 + p2 * (765765.0 - 425425.0 * p2))) / 414720.0;
    let u4 = p2
        * p2
        * (4465125.0 + p2 * (-94121676.0 + p2 * (349922430.0 + p2 * (-446185740.0 + 185910725.0 * p2))))
        / 39813120.0;
    let inv = 1.0 / nu;
    let series = 1.0 + inv * (-u1 + inv * (u2 + inv * (-u3 + inv * u4)));
    0.5 * (PI / (2.0 * nu)).ln() + lead - 0.25 * (z * z).ln_1p() + series.ln()
}

/// Modified Bessel function of the second kind, `K_ν(x) = K_{−ν}(x)`.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    finite_exp(ln_bessel_k(nu, x)?)
}

fn finite_exp(ln: f64) -> Result<f64> {
    if ln > f64::MAX.ln() {
        Err(Error::Overflow)
    } else if ln < -745.0 {
        Err(Error::Underflow)
    } else {
        Ok(ln.exp())
    }
}

/// `ln G^{2,0}_{0,2}[z | 0, ν] = ln(2 z^{ν/2} K_ν(2√z))`.
pub fn ln_meijer_g_2002(z: f64, nu: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("meijer_g_2002 requires z > 0"));
    }
    Ok(core::f64::consts::LN_2 + 0.5 * nu * z.ln() + ln_bessel_k(nu, 2.0 * z.sqrt())?)
}

/// The Meijer G-function `G^{2,0}_{0,2}[z | 0, ν]`, the only G case the
/// densities need, through its Bessel-K reduction.
pub fn meijer_g_2002(z: f64, nu: f64) -> Result<f64> {
    finite_exp(ln_meijer_g_2002(z, nu)?)
}

/// `ln ∫₀^∞ a^{ν−1} e^{−a s − δ/a} da`.
pub fn ln_kratzel_i11(nu: f64, s: f64, delta: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain("kratzel_i11 requires s > 0"));
    }
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::domain("kratzel_i11 requires delta >= 0"));
    }
    if !nu.is_finite() {
        return Err(Error::domain("kratzel_i11 requires a finite order"));
    }
    if delta == 0.0 {
        if !(nu > 0.0) {
            return Err(Error::domain("kratzel_i11 with delta = 0 requires nu > 0"));
        }
        return Ok(lgamma(nu) - nu * s.ln());
    }
    Ok(core::f64::consts::LN_2
        + 0.5 * nu * (delta / s).ln()
        + ln_bessel_k(nu, 2.0 * (s * delta).sqrt())?)
}

/// `ln I₁₁(ν, s, δ) + 2√(sδ)` for `δ > 0`.
pub(crate) fn ln_kratzel_i11_scaled(nu: f64, s: f64, delta: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() || !(delta > 0.0) || !delta.is_finite() || !nu.is_finite() {
        return Err(Error::domain("scaled kratzel_i11 requires s > 0, delta > 0 and finite order"));
    }
    Ok(core::f64::consts::LN_2 + 0.5 * nu * (delta / s).ln() + ln_bessel_k_scaled(nu, 2.0 * (s * delta).sqrt())?)
}

/// Krätzel-type integral `I₁₁ = ∫₀^∞ a^{ν−1} e^{−a s − δ/a} da`
/// `= 2 (δ/s)^{ν/2} K_ν(2√(sδ))`, or `Γ(ν)/s^ν` when `δ = 0`.
pub fn kratzel_i11(nu: f64, s: f64, delta: f64) -> Result<f64> {
    finite_exp(ln_kratzel_i11(nu, s, delta)?)
}
