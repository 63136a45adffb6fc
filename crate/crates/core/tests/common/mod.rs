//! Reference computations for the integration tests, written independently of
//! the library's quadrature and special-function code.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Tanh-sinh quadrature on `[a, b]`, halving the step until two successive
/// estimates agree to `1e−14` relative.
pub fn de_finite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let eval = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let ch = u.cosh();
        let w = half * FRAC_PI_2 * t.cosh() / (ch * ch);
        // Distance to the nearer endpoint without cancellation.
        let gap = half * 2.0 / ((2.0 * u.abs()).exp() + 1.0);
        let x = if u >= 0.0 { b - gap } else { a + gap };
        if w == 0.0 || gap == 0.0 {
            return 0.0;
        }
        w * f(x)
    };
    de_sum(eval, 4.0)
}

/// Exp-sinh quadrature on `[a, ∞)` with `x = a + s·exp(π/2·sinh t)`.
pub fn de_half_line<F: Fn(f64) -> f64>(f: F, a: f64, s: f64) -> f64 {
    let eval = |t: f64| -> f64 {
        let e = (FRAC_PI_2 * t.sinh()).exp();
        let x = a + s * e;
        let w = s * FRAC_PI_2 * t.cosh() * e;
        if w == 0.0 || !w.is_finite() || x == a {
            return 0.0;
        }
        let v = f(x);
        if v == 0.0 { 0.0 } else { w * v }
    };
    de_sum(eval, 5.0)
}

fn de_sum<G: Fn(f64) -> f64>(g: G, tmax: f64) -> f64 {
    let mut h = 0.5;
    let mut sum = g(0.0);
    let mut k = 1;
    while k as f64 * h <= tmax {
        sum += g(k as f64 * h) + g(-(k as f64) * h);
        k += 1;
    }
    let mut est = sum * h;
    for _ in 0..10 {
        // Add the odd nodes of the halved step.
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= tmax {
            sum += g(k as f64 * h) + g(-(k as f64) * h);
            k += 2;
        }
        let prev = est;
        est = sum * h;
        if (est - prev).abs() <= 1e-14 * est.abs() {
            break;
        }
    }
    est
}

/// `∫₀^∞ f` split at `m` for functions whose mass sits near `m`.
pub fn de_positive<F: Fn(f64) -> f64>(f: F, m: f64) -> f64 {
    de_finite(&f, 0.0, m) + de_half_line(&f, m, m)
}

/// Plain `0F1(;b;z)` series with a generous term budget.
pub fn hyp0f1_series(b: f64, z: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..5000 {
        let kf = k as f64;
        term *= z / ((b + kf - 1.0) * kf);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() && kf > z.abs().sqrt() + b.abs() {
            break;
        }
    }
    sum
}

/// `K_ν(x) = ∫₀^∞ e^{−x cosh t} cosh(νt) dt`.
pub fn bessel_k_integral(nu: f64, x: f64) -> f64 {
    de_half_line(|t| (-x * t.cosh() + nu * t).exp() * 0.5 + (-x * t.cosh() - nu * t).exp() * 0.5, 0.0, 1.0)
}

/// `∫₀^∞ a^{ν−1} e^{−sa−δ/a} da`.
pub fn kratzel_integral(nu: f64, s: f64, delta: f64) -> f64 {
    let m = ((nu - 1.0) + ((nu - 1.0).powi(2) + 4.0 * s * delta).sqrt()) / (2.0 * s);
    let m = m.max(1e-3 / s);
    de_positive(|a| ((nu - 1.0) * a.ln() - s * a - delta / a).exp(), m)
}

pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Gamma density with shape `k` and rate `r`.
pub fn gamma_pdf(t: f64, k: f64, r: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    (k * r.ln() + (k - 1.0) * t.ln() - r * t - ln_gamma(k)).exp()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// `C t^{β−1} e^{−bt} 0F1(;β;δt)` from the plain series.
pub fn gb_oracle(beta: f64, b: f64, delta: f64, t: f64) -> f64 {
    let ln_c = beta * b.ln() - ln_gamma(beta) - delta / b;
    (ln_c + (beta - 1.0) * t.ln() - b * t).exp() * hyp0f1_series(beta, delta * t)
}

/// Poisson(δ/b) mixture of Gamma(β+k, b) densities.
pub fn mixture_oracle(beta: f64, b: f64, delta: f64, t: f64) -> f64 {
    let lam = delta / b;
    let mut sum = 0.0;
    for k in 0..10_000 {
        let w = if lam == 0.0 {
            if k == 0 { 1.0 } else { 0.0 }
        } else {
            (-lam + k as f64 * lam.ln() - ln_gamma(k as f64 + 1.0)).exp()
        };
        let term = w * gamma_pdf(t, beta + k as f64, b);
        sum += term;
        // Terms peak near k ≈ λ and k ≈ bt, and decay monotonically past both.
        if k as f64 > lam.max(b * t) + 1.0 && term <= 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Conditional `k₁ x^{γ−1} e^{−ax^ρ} 0F1(;γ/ρ;δx^ρ)` times the gamma prior on
/// `a`, integrated over `a`.
pub fn superstat_oracle(g: f64, rho: f64, delta: f64, lam: f64, eta: f64, x: f64) -> f64 {
    let xr = x.powf(rho);
    let h = hyp0f1_series(g / rho, delta * xr);
    let integrand = |a: f64| {
        let ln_k1 = rho.ln() + (g / rho) * a.ln() - ln_gamma(g / rho) - delta / a;
        let ln_prior = eta * lam.ln() + (eta - 1.0) * a.ln() - lam * a - ln_gamma(eta);
        (ln_k1 + (g - 1.0) * x.ln() - a * xr + ln_prior).exp() * h
    };
    let m = (g / rho + eta) / (lam + xr);
    de_positive(integrand, m)
}
