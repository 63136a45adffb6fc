//! Maximum-likelihood fitting, Kolmogorov–Smirnov distances, histograms and
//! model comparison for positive-valued data.

mod compare;
mod dataset;
mod histogram;
mod ks;
mod mle;

pub use compare::{compare_models, ComparisonEntry, ComparisonReport};
pub use dataset::Dataset;
pub use histogram::{histogram, sturges_bins, Histogram};
pub use ks::{asymptotic_critical_value, ks_statistic, ks_statistic_from_cdf_values};
pub use mle::{fit_mle, FitOptions, FitReport, FittedModel, Model};
