use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Outcome of a definite integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

impl IntegralResult {
    pub(crate) fn scaled(self, factor: f64) -> Self {
        IntegralResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            evaluations: self.evaluations,
        }
    }

    pub(crate) fn plus(self, other: IntegralResult) -> Self {
        IntegralResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            evaluations: self.evaluations + other.evaluations,
        }
    }
}

/// Globally adaptive 21-point Gauss–Kronrod quadrature.
///
/// Infinite limits are mapped onto the unit interval with
/// `t = lower + s·u/(1−u)` where `s` is [`Quadrature::tail_scale`]; the
/// integrand is never evaluated at either endpoint, so integrable endpoint
/// singularities are handled by bisection alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
    pub tail_scale: f64,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_evals: 1_000_000,
            tail_scale: 1.0,
        }
    }
}

pub fn integrate_adaptive<F>(
    f: F,
    lower: f64,
    upper: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
{
    Quadrature::new(rel_tol, abs_tol).integrate(f, lower, upper)
}

impl Quadrature {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        Quadrature {
            rel_tol,
            abs_tol,
            ..Quadrature::default()
        }
    }

    pub fn with_tail_scale(mut self, scale: f64) -> Self {
        self.tail_scale = scale;
        self
    }

    pub fn with_max_evals(mut self, max_evals: usize) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn integrate<F>(&self, f: F, lower: f64, upper: f64) -> Result<IntegralResult>
    where
        F: Fn(f64) -> f64,
    {
        self.integrate_with_breaks(f, lower, upper, &[])
    }

    /// Like [`Quadrature::integrate`], but seeds the adaptive partition with
    /// interior break points. Use it when the integrand's mass sits on a
    /// scale the initial panel would not resolve.
    pub fn integrate_with_breaks<F>(
        &self,
        f: F,
        lower: f64,
        upper: f64,
        breaks: &[f64],
    ) -> Result<IntegralResult>
    where
        F: Fn(f64) -> f64,
    {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if lower.is_nan() || upper.is_nan() || lower >= upper {
            return Err(Error::domain("integration requires lower < upper"));
        }
        let s = if self.tail_scale > 0.0 && self.tail_scale.is_finite() {
            self.tail_scale
        } else {
            1.0
        };
        let inside = |lo: f64, hi: f64| {
            let mut pts: Vec<f64> = breaks
                .iter()
                .copied()
                .filter(|b| b.is_finite() && *b > lo && *b < hi)
                .collect();
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            pts
        };

        // t = lo + s·u/(1−u) on [lo, ∞)
        let above = |lo: f64, q: &Quadrature| {
            let mut nodes = vec![0.0];
            nodes.extend(inside(lo, f64::INFINITY).iter().map(|t| (t - lo) / (s + t - lo)));
            nodes.push(1.0);
            q.panels(
                &|u: f64| {
                    let w = 1.0 - u;
                    s * f(lo + s * u / w) / (w * w)
                },
                &nodes,
            )
        };
        // t = hi − s·u/(1−u) on (−∞, hi]
        let below = |hi: f64, q: &Quadrature| {
            let mut nodes = vec![0.0];
            nodes.extend(inside(f64::NEG_INFINITY, hi).iter().rev().map(|t| (hi - t) / (s + hi - t)));
            nodes.push(1.0);
            q.panels(
                &|u: f64| {
                    let w = 1.0 - u;
                    s * f(hi - s * u / w) / (w * w)
                },
                &nodes,
            )
        };
        match (lower.is_finite(), upper.is_finite()) {
            (true, true) => {
                let mut nodes = vec![lower];
                nodes.extend(inside(lower, upper));
                nodes.push(upper);
                self.panels(&f, &nodes)
            }
            (true, false) => above(lower, self),
            (false, true) => below(upper, self),
            (false, false) => {
                // Split at zero; each half carries half of the tolerance budget.
                let half = Quadrature {
                    abs_tol: 0.5 * self.abs_tol,
                    max_evals: self.max_evals / 2,
                    ..*self
                };
                Ok(below(0.0, &half)?.plus(above(0.0, &half)?))
            }
        }
    }

    fn panels<F>(&self, f: &F, nodes: &[f64]) -> Result<IntegralResult>
    where
        F: Fn(f64) -> f64,
    {
        let mut heap = BinaryHeap::new();
        let mut evaluations = 0;
        let mut total = 0.0;
        let mut total_err = 0.0;
        for w in nodes.windows(2) {
            if w[1] > w[0] {
                let p = gk21(f, w[0], w[1])?;
                evaluations += 21;
                total += p.value;
                total_err += p.err;
                heap.push(p);
            }
        }
        // Error mass of panels too narrow to bisect further.
        let mut frozen_err = 0.0;
        let mut frozen_value = 0.0;

        loop {
            let tol = self.abs_tol.max(self.rel_tol * total.abs());
            if total_err <= tol {
                break;
            }
            let worst = match heap.pop() {
                Some(p) => p,
                None => {
                    if frozen_err <= 10.0 * tol {
                        break;
                    }
                    return Err(Error::NonConvergence {
                        value: total,
                        abs_error: total_err,
                        evaluations,
                    });
                }
            };
            if evaluations + 42 > self.max_evals {
                return Err(Error::NonConvergence {
                    value: total,
                    abs_error: total_err,
                    evaluations,
                });
            }
            let mid = 0.5 * (worst.a + worst.b);
            let scale = worst.a.abs().max(worst.b.abs()).max(f64::MIN_POSITIVE);
            if (worst.b - worst.a) <= 64.0 * f64::EPSILON * scale || mid <= worst.a || mid >= worst.b {
                frozen_err += worst.err;
                frozen_value += worst.value;
                continue;
            }
            let left = gk21(f, worst.a, mid)?;
            let right = gk21(f, mid, worst.b)?;
            evaluations += 42;
            total += left.value + right.value - worst.value;
            total_err += left.err + right.err - worst.err;
            heap.push(left);
            heap.push(right);
        }

        // Re-sum to shed accumulated cancellation from the running updates.
        let value: f64 = heap.iter().map(|p| p.value).sum::<f64>() + frozen_value;
        let abs_error_estimate = heap.iter().map(|p| p.err).sum::<f64>() + frozen_err;
        Ok(IntegralResult {
            value,
            abs_error_estimate,
            evaluations,
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

fn gk21<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFiniteIntegrand { at: x })
        }
    };

    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    let fc = eval(center)?;
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    for j in 0..10 {
        let x = half * XGK[j];
        let y1 = eval(center - x)?;
        let y2 = eval(center + x)?;
        fv1[j] = y1;
        fv2[j] = y2;
        res_k += WGK[j] * (y1 + y2);
        res_abs += WGK[j] * (y1.abs() + y2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (y1 + y2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, err })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_on_unit_interval() {
        let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, 1e-10, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
        assert!(r.evaluations >= 1);
        assert!(r.abs_error_estimate >= 0.0);
    }

    #[test]
    fn exponential_on_half_line() {
        let r = integrate_adaptive(|t| (-t).exp(), 0.0, f64::INFINITY, 1e-10, 1e-10).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "{r:?}");
    }

    #[test]
    fn inverse_sqrt_endpoint_singularity() {
        let r = integrate_adaptive(|t| 1.0 / t.sqrt(), 0.0, 1.0, 1e-10, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn gaussian_on_whole_line() {
        let r = integrate_adaptive(|t| (-t * t).exp(), f64::NEG_INFINITY, f64::INFINITY, 1e-12, 1e-14)
            .unwrap();
        assert!((r.value - core::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn left_half_line() {
        let r = integrate_adaptive(|t| t.exp(), f64::NEG_INFINITY, 1.0, 1e-12, 1e-14).unwrap();
        assert!((r.value - core::f64::consts::E).abs() < 1e-11);
    }

    #[test]
    fn break_points_resolve_a_narrow_peak() {
        // Mass concentrated near zero on a long interval.
        let f = |t: f64| (-t).exp();
        let q = Quadrature::new(1e-12, 1e-14);
        let r = q.integrate_with_breaks(f, 0.0, 1e6, &[1.0, 4.0, 16.0, 64.0]).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
        let r = q
            .with_tail_scale(1e4)
            .integrate_with_breaks(f, 0.0, f64::INFINITY, &[1.0, 4.0, 16.0, 64.0])
            .unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
        let r = q
            .with_tail_scale(1e4)
            .integrate_with_breaks(|t: f64| t.exp(), f64::NEG_INFINITY, 0.0, &[-1.0, -8.0, -64.0])
            .unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(matches!(
            integrate_adaptive(|t| t, 1.0, 1.0, 1e-10, 1e-12),
            Err(Error::InvalidDomain(_))
        ));
        assert!(matches!(
            integrate_adaptive(|t| t, 2.0, 1.0, 1e-10, 1e-12),
            Err(Error::InvalidDomain(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let q = Quadrature::new(1e-14, 1e-16).with_max_evals(100);
        let r = q.integrate(|t| (50.0 * t).sin().abs(), 0.0, 10.0);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let r = integrate_adaptive(|t| 1.0 / (t - 0.5), 0.0, 1.0, 1e-10, 1e-12);
        assert!(matches!(r, Err(Error::NonFiniteIntegrand { .. })));
    }
}
