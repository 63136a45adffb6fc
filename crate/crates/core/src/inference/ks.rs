#[allow(unused_imports)]
use num_traits::Float;

use super::Dataset;
use crate::{Error, Result};

const CDF_SLACK: f64 = 1e-12;

/// One-sample two-sided statistic
/// `D = max_i max(i/n − F(x₍ᵢ₎), F(x₍ᵢ₎) − (i−1)/n)`.
pub fn ks_statistic<F>(data: &Dataset, cdf: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let values: alloc::vec::Vec<f64> = data.values().iter().map(|&x| cdf(x)).collect();
    ks_statistic_from_cdf_values(&values)
}

/// Same statistic from `F` already evaluated at the ascending order statistics.
pub fn ks_statistic_from_cdf_values(cdf_values: &[f64]) -> Result<f64> {
    if cdf_values.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let n = cdf_values.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &f) in cdf_values.iter().enumerate() {
        if !(-CDF_SLACK..=1.0 + CDF_SLACK).contains(&f) {
            return Err(Error::InvalidCdf { index: i, value: f });
        }
        let f = f.clamp(0.0, 1.0);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        d = d.max(above).max(below);
    }
    Ok(d.min(1.0))
}

/// Large-sample two-sided critical value `√(−ln(α/2)/2) / √n`.
pub fn asymptotic_critical_value(n: usize, alpha: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyDataset);
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(alloc::format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok((-(alpha / 2.0).ln() / 2.0).sqrt() / (n as f64).sqrt())
}
