use alloc::vec::Vec;

use super::{fit_mle, Dataset, FitOptions, FitReport, Model};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry {
    pub model: Model,
    pub outcome: Result<FitReport>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// One entry per requested model, in request order.
    pub entries: Vec<ComparisonEntry>,
    /// Indices into `entries` of successful fits, smallest KS distance first.
    pub ranking: Vec<usize>,
}

impl ComparisonReport {
    pub fn best(&self) -> Option<&FitReport> {
        self.ranking.first().and_then(|&i| self.entries[i].outcome.as_ref().ok())
    }
}

/// Fits every model with default options and ranks the successful fits by
/// their KS distance. A failing model is recorded, not fatal.
pub fn compare_models(data: &Dataset, models: &[Model]) -> Result<ComparisonReport> {
    if models.len() < 2 {
        return Err(Error::InsufficientModels);
    }
    let entries: Vec<ComparisonEntry> = models
        .iter()
        .map(|&model| ComparisonEntry {
            model,
            outcome: fit_mle(data, model, &FitOptions::default()),
        })
        .collect();
    let mut ranking: Vec<usize> = (0..entries.len()).filter(|&i| entries[i].outcome.is_ok()).collect();
    let d = |i: usize| entries[i].outcome.as_ref().map(|r| r.ks_statistic).unwrap_or(f64::INFINITY);
    ranking.sort_by(|&a, &b| d(a).total_cmp(&d(b)).then(a.cmp(&b)));
    Ok(ComparisonReport { entries, ranking })
}
