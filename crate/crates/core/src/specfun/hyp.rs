use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{lgamma, lgamma_diff};
use crate::{Error, Result};

/// Truncation policy for power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_term_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_term_tol: 1e-16,
            max_terms: 500,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_term_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_term_tol > 0.0) || max_terms == 0 {
            return Err(Error::domain("series control needs rel_term_tol > 0 and max_terms >= 1"));
        }
        Ok(SeriesControl {
            rel_term_tol,
            max_terms,
        })
    }
}

const SERIES_LIMIT: f64 = 100.0;

fn is_nonpositive_integer(b: f64) -> bool {
    b <= 0.0 && b == b.round()
}

/// Confluent hypergeometric limit function `0F1(;b;z) = Σ z^k / ((b)_k k!)`.
///
/// `|z| ≤ 100` is summed directly. For `z > 100` (and `b > 0`) the value
/// comes from [`ln_hyp0f1`]; for `z < −100` the Bessel-J form
/// `Γ(b) y^{(1−b)/2} J_{b−1}(2√y)`, `y = −z`, is evaluated with Hankel's
/// expansion whenever the argument is large against the order.
pub fn hyp0f1(b: f64, z: f64, ctrl: &SeriesControl) -> Result<f64> {
    if !b.is_finite() || is_nonpositive_integer(b) {
        return Err(Error::domain("0F1 requires b not a nonpositive integer"));
    }
    if z.is_nan() {
        return Err(Error::domain("0F1 argument is NaN"));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if b > 0.0 && z > SERIES_LIMIT {
        let v = ln_hyp0f1(b, z)?.exp();
        return if v.is_finite() { Ok(v) } else { Err(Error::Overflow) };
    }
    if b > 0.0 && z < -SERIES_LIMIT {
        if let Some(v) = negative_large(b, -z) {
            return Ok(v);
        }
    }
    series(b, z, ctrl)
}

fn series(b: f64, z: f64, ctrl: &SeriesControl) -> Result<f64> {
    // Neumaier-compensated sum; terms may alternate for z < 0.
    let mut sum = 1.0;
    let mut comp = 0.0;
    let mut term = 1.0;
    // Do not stop before the terms start shrinking for good. For b > 0 the
    // term ratio |z|/((b+k)(k+1)) falls monotonically and drops below one
    // near (b+k)(k+1) = |z|; for b < 0 it also jumps as b+k crosses zero.
    let hump = if b > 0.0 {
        let bm1 = b - 1.0;
        ((-(b + 1.0) + (bm1 * bm1 + 4.0 * z.abs()).sqrt()) / 2.0).max(0.0) + 2.0
    } else {
        b.abs().max(z.abs().sqrt()) + 2.0
    };
    let max_terms = ctrl.max_terms.max(hump as usize + 50);
    for k in 1..=max_terms {
        let kf = k as f64;
        term *= z / ((b + kf - 1.0) * kf);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        if !sum.is_finite() {
            return Err(Error::Overflow);
        }
        if kf > hump && term.abs() <= ctrl.rel_term_tol * (sum + comp).abs() {
            return Ok(sum + comp);
        }
    }
    Err(Error::SeriesDivergence { terms: max_terms })
}

/// `ln 0F1(;b;z)` for `b > 0`, `z ≥ 0`, valid for arbitrarily large `z`.
///
/// All terms are positive, so the sum is accumulated outward from the
/// largest term with every term scaled by it.
pub fn ln_hyp0f1(b: f64, z: f64) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() || !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain("ln_hyp0f1 requires b > 0 and finite z >= 0"));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z > ASYMPTOTIC_Z {
        if let Some(v) = large_z_scaled(b, z) {
            return Ok(v + 2.0 * z.sqrt());
        }
    }
    // Term ratio z/((b+k)(k+1)) crosses one near k(k+b−1) = z.
    let bm1 = b - 1.0;
    let peak = ((-bm1 + (bm1 * bm1 + 4.0 * z).sqrt()) / 2.0).floor().max(0.0);
    let ln_z = z.ln();
    if peak > MAX_PEAK {
        return Err(Error::SeriesDivergence { terms: MAX_STEPS });
    }
    let ln_peak = peak * ln_z - lgamma_diff(b, peak) - lgamma(peak + 1.0);

    const TAIL: f64 = 1e-17;
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut k = peak;
    while k > 0.0 {
        // t_{k-1} = t_k (b+k−1) k / z
        term *= (b + k - 1.0) * k / z;
        sum += term;
        k -= 1.0;
        if term < TAIL * sum {
            break;
        }
    }
    term = 1.0;
    k = peak;
    loop {
        term *= z / ((b + k) * (k + 1.0));
        sum += term;
        k += 1.0;
        if term < TAIL * sum {
            break;
        }
        if k - peak > MAX_STEPS as f64 {
            return Err(Error::SeriesDivergence { terms: MAX_STEPS });
        }
    }
    Ok(ln_peak + sum.ln())
}

/// `ln 0F1(;b;z) − 2√z` for `b > 0`, `z ≥ 0`. Products with a decaying
/// exponential can then cancel the `2√z` growth exactly.
pub(crate) fn ln_hyp0f1_scaled(b: f64, z: f64) -> Result<f64> {
    if z > ASYMPTOTIC_Z && b > 0.0 && b.is_finite() && z.is_finite() {
        if let Some(v) = large_z_scaled(b, z) {
            return Ok(v);
        }
    }
    Ok(ln_hyp0f1(b, z)? - 2.0 * z.sqrt())
}

/// 0F1(;b;z) = Γ(b) z^{(1−b)/2} I_{b−1}(2√z), without the `e^{2√z}` factor.
fn large_z_scaled(b: f64, z: f64) -> Option<f64> {
    let ln_i = ln_bessel_i_large_scaled(b - 1.0, 2.0 * z.sqrt())?;
    Some(lgamma(b) + 0.5 * (1.0 - b) * z.ln() + ln_i)
}

const ASYMPTOTIC_Z: f64 = 1e16;
const MAX_PEAK: f64 = 4.0e15;
const MAX_STEPS: usize = 50_000_000;

/// `ln I_ν(x) − x` from the large-argument expansion, or `None` when the
/// expansion stalls above double precision.
fn ln_bessel_i_large_scaled(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..100 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = -term * (mu - odd * odd) / (kf * 8.0 * x);
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            return Some(-0.5 * (2.0 * PI * x).ln() + sum.ln());
        }
    }
    None
}

fn negative_large(b: f64, y: f64) -> Option<f64> {
    let nu = b - 1.0;
    let x = 2.0 * y.sqrt();
    if x < 25.0f64.max(nu * nu) {
        return None;
    }
    let j = bessel_j_hankel(nu, x)?;
    Some((lgamma(b) + 0.5 * (1.0 - b) * y.ln()).exp() * j)
}

fn bessel_j_hankel(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (kf * 8.0 * x);
        if term.abs() > prev {
            // Asymptotic series started diverging before reaching precision.
            return None;
        }
        prev = term.abs();
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        if term.abs() < 1e-17 * p.abs().max(q.abs()).max(1e-300) || term == 0.0 {
            let chi = x - (0.5 * nu + 0.25) * PI;
            return Some((2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn zero_argument() {
        assert_eq!(hyp0f1(3.7, 0.0, &ctrl()).unwrap(), 1.0);
        assert_eq!(hyp0f1(-2.5, 0.0, &ctrl()).unwrap(), 1.0);
    }

    #[test]
    fn cosh_identity() {
        let v = hyp0f1(0.5, 0.25, &ctrl()).unwrap();
        assert!((v - 1.0f64.cosh()).abs() < 1e-15);
    }

    #[test]
    fn sinc_identity() {
        let v = hyp0f1(1.5, -0.25, &ctrl()).unwrap();
        assert!((v - 1.0f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn sinc_identity_hankel_regime() {
        for &x in &[25.0f64, 40.0, 123.4] {
            let v = hyp0f1(1.5, -x * x / 4.0, &ctrl()).unwrap();
            assert!((v - x.sin() / x).abs() < 1e-13, "x={x} v={v}");
        }
    }

    #[test]
    fn cosh_identity_large_argument() {
        // 0F1(;1/2;x²/4) = cosh x, far past the direct-series limit.
        for &x in &[30.0f64, 100.0, 600.0] {
            let ln = ln_hyp0f1(0.5, x * x / 4.0).unwrap();
            let exact = x + (0.5 * (1.0 + (-2.0 * x).exp())).ln();
            assert!((ln - exact).abs() < 1e-12 * exact, "x={x}");
        }
    }

    #[test]
    fn asymptotic_branch_matches_closed_forms() {
        // 0F1(;1/2;x²/4) = cosh x and 0F1(;3/2;x²/4) = sinh x / x on both sides of the switch.
        for &z in &[ASYMPTOTIC_Z * 0.999, ASYMPTOTIC_Z * 1.001, 1e40, 1e300] {
            let x = 2.0 * z.sqrt();
            let ln_cosh = x - 2f64.ln();
            let ln_sinh_over_x = x - 2f64.ln() - x.ln();
            assert!((ln_hyp0f1(0.5, z).unwrap() - ln_cosh).abs() < 1e-14 * x, "z={z}");
            assert!((ln_hyp0f1(1.5, z).unwrap() - ln_sinh_over_x).abs() < 1e-14 * x, "z={z}");
        }
    }

    #[test]
    fn scaled_form_keeps_digits_at_huge_argument() {
        // 0F1(;1/2;z) = cosh 2√z and 0F1(;3/2;z) = sinh(2√z)/(2√z).
        for &z in &[1e3, 1e20, 1e40, 1e300] {
            let y = 2.0 * f64::sqrt(z);
            let cosh = ln_hyp0f1_scaled(0.5, z).unwrap();
            assert!((cosh - (0.5 * (1.0 + (-2.0 * y).exp())).ln()).abs() < 1e-13, "z={z}");
            let sinh = ln_hyp0f1_scaled(1.5, z).unwrap();
            let exact = (0.5 * (1.0 - (-2.0 * y).exp())).ln() - y.ln();
            assert!((sinh - exact).abs() < 1e-13 * exact.abs().max(1.0), "z={z}");
        }
    }

    #[test]
    fn log_form_matches_series() {
        for &(b, z) in &[(0.7, 3.0), (2.0, 50.0), (5.5, 99.0), (1.0, 1e-6)] {
            let direct = hyp0f1(b, z, &ctrl()).unwrap();
            let via_log = ln_hyp0f1(b, z).unwrap().exp();
            assert!((direct - via_log).abs() < 1e-13 * direct, "b={b} z={z}");
        }
    }

    #[test]
    fn huge_b_negative_z_terminates() {
        // (b)_k ≈ b^k, so 0F1(;b;−cb) ≈ e^{−c}.
        let b = 1e15;
        let v = hyp0f1(b, -0.7 * b, &ctrl()).unwrap();
        assert!((v - (-0.7f64).exp()).abs() < 1e-9);
    }

    #[test]
    fn rejects_poles() {
        assert!(hyp0f1(0.0, 1.0, &ctrl()).is_err());
        assert!(hyp0f1(-3.0, 1.0, &ctrl()).is_err());
    }

    #[test]
    fn negative_noninteger_b() {
        // Direct check against a hand-summed series for b = -1.5, z = 2.
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 0..60 {
            if k > 0 {
                term *= 2.0 / ((-1.5 + k as f64 - 1.0) * k as f64);
            }
            sum += term;
        }
        let v = hyp0f1(-1.5, 2.0, &ctrl()).unwrap();
        assert!((v - sum).abs() < 1e-14 * sum.abs());
    }

    #[test]
    fn term_budget_exhaustion() {
        let tight = SeriesControl::new(1e-300, 1).unwrap();
        assert!(matches!(hyp0f1(1.0, 50.0, &tight), Err(Error::SeriesDivergence { .. })));
    }
}
