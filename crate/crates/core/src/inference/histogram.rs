#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use super::Dataset;
use crate::{Error, Result};

/// Equal-width bins; each bin is right-open except the last, which is closed.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    /// Report `count / (n · width)` instead of raw counts from [`Histogram::heights`].
    pub density_scale: bool,
    /// Size of the dataset, including values outside the range.
    pub n: usize,
}

impl Histogram {
    pub fn density_scaled(mut self) -> Self {
        self.density_scale = true;
        self
    }

    pub fn width(&self) -> f64 {
        self.edges[1] - self.edges[0]
    }

    pub fn densities(&self) -> Vec<f64> {
        let w = self.width();
        self.counts.iter().map(|&c| c as f64 / (self.n as f64 * w)).collect()
    }

    pub fn heights(&self) -> Vec<f64> {
        if self.density_scale {
            self.densities()
        } else {
            self.counts.iter().map(|&c| c as f64).collect()
        }
    }

    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }
}

/// Sturges' rule `⌈log₂ n⌉ + 1`.
pub fn sturges_bins(n: usize) -> usize {
    (n.max(1) as f64).log2().ceil() as usize + 1
}

/// Bins `data` into `m` bins (Sturges' rule when `None`) over `range`
/// (the data range when `None`). Values outside the range are not counted.
pub fn histogram(data: &Dataset, m: Option<usize>, range: Option<(f64, f64)>) -> Result<Histogram> {
    let m = m.unwrap_or_else(|| sturges_bins(data.n()));
    if m == 0 {
        return Err(Error::domain("histogram needs at least one bin"));
    }
    let (lo, hi) = match range {
        Some((lo, hi)) => {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidRange { lo, hi });
            }
            (lo, hi)
        }
        None if data.min() < data.max() => (data.min(), data.max()),
        None => (data.min() - 0.5, data.max() + 0.5),
    };
    let w = (hi - lo) / m as f64;
    let mut edges: Vec<f64> = (0..m).map(|i| lo + i as f64 * w).collect();
    edges.push(hi);
    let mut counts = alloc::vec![0usize; m];
    for &x in data.values() {
        if x < lo || x > hi {
            continue;
        }
        // Index of the last edge ≤ x, with x = hi folded into the last bin.
        let k = edges.partition_point(|&e| e <= x).saturating_sub(1).min(m - 1);
        counts[k] += 1;
    }
    Ok(Histogram {
        edges,
        counts,
        density_scale: false,
        n: data.n(),
    })
}
