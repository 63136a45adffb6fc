#[allow(unused_imports)]
use num_traits::Float;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{ks_statistic_from_cdf_values, Dataset};
use crate::distributions::{
    GammaBessel, GammaBesselParams, QGammaBessel, QGammaBesselParams, Superstat, SuperstatParams,
};
use crate::numerics::{Quadrature, Simplex};
use crate::{Error, Result};

/// Models that [`fit_mle`] understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Gamma,
    GammaBessel,
    QGammaBessel,
    Superstat,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Gamma, Model::GammaBessel, Model::QGammaBessel, Model::Superstat];

    pub fn name(self) -> &'static str {
        match self {
            Model::Gamma => "gamma",
            Model::GammaBessel => "gamma_bessel",
            Model::QGammaBessel => "qgb",
            Model::Superstat => "superstat",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Model::Gamma => &["beta", "b"],
            Model::GammaBessel => &["beta", "b", "delta"],
            Model::QGammaBessel => &["beta", "b", "delta", "q"],
            Model::Superstat => &["gamma", "rho", "delta", "lambda", "eta"],
        }
    }

    fn transforms(self, restricted: bool) -> &'static [Transform] {
        use Transform::*;
        match (self, restricted) {
            (Model::Gamma, _) => &[Log, Log],
            (Model::GammaBessel, false) => &[Log, Log, Identity],
            (Model::GammaBessel, true) => &[Log, Log, Square],
            (Model::QGammaBessel, false) => &[Log, Log, Identity, QBelowOne],
            (Model::QGammaBessel, true) => &[Log, Log, Square, QBelowOne],
            (Model::Superstat, _) => &[Log, Log, Square, Log, Log],
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::domain(alloc::format!("unknown model '{s}'")))
    }
}

/// Map from an unconstrained coordinate to a model parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Transform {
    Log,
    Identity,
    Square,
    /// `q = 1 − e^θ`.
    QBelowOne,
}

impl Transform {
    fn forward(self, theta: f64) -> f64 {
        match self {
            Transform::Log => theta.exp(),
            Transform::Identity => theta,
            Transform::Square => theta * theta,
            Transform::QBelowOne => 1.0 - theta.exp(),
        }
    }

    fn inverse(self, value: f64) -> Result<f64> {
        let ok = match self {
            Transform::Log => value > 0.0,
            Transform::Identity => value.is_finite(),
            Transform::Square => value >= 0.0,
            Transform::QBelowOne => value < 1.0,
        };
        if !ok || !value.is_finite() {
            return Err(Error::params(alloc::format!("value {value} outside the parameter's range")));
        }
        Ok(match self {
            Transform::Log => value.ln(),
            Transform::Identity => value,
            Transform::Square => value.sqrt(),
            Transform::QBelowOne => (1.0 - value).ln(),
        })
    }
}

/// A fitted (or user-specified) model ready for evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum FittedModel {
    Gamma(GammaBessel),
    GammaBessel(GammaBessel),
    QGammaBessel(QGammaBessel),
    Superstat(Superstat),
}

impl FittedModel {
    /// Builds the model from parameters ordered as [`Model::param_names`],
    /// running every validity check.
    pub fn new(model: Model, params: &[f64]) -> Result<Self> {
        if params.len() != model.param_names().len() {
            return Err(Error::params(alloc::format!(
                "{model} takes {} parameters, got {}",
                model.param_names().len(),
                params.len()
            )));
        }
        Ok(match model {
            Model::Gamma => FittedModel::Gamma(GammaBessel::new(GammaBesselParams::new(params[0], params[1], 0.0)?)?),
            Model::GammaBessel => FittedModel::GammaBessel(GammaBessel::new(GammaBesselParams::new(
                params[0], params[1], params[2],
            )?)?),
            Model::QGammaBessel => FittedModel::QGammaBessel(QGammaBessel::new(QGammaBesselParams::new(
                GammaBesselParams::new(params[0], params[1], params[2])?,
                params[3],
            )?)?),
            Model::Superstat => FittedModel::Superstat(Superstat::new(SuperstatParams::new(
                params[0], params[1], params[2], params[3], params[4],
            )?)?),
        })
    }

    pub fn model(&self) -> Model {
        match self {
            FittedModel::Gamma(_) => Model::Gamma,
            FittedModel::GammaBessel(_) => Model::GammaBessel,
            FittedModel::QGammaBessel(_) => Model::QGammaBessel,
            FittedModel::Superstat(_) => Model::Superstat,
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match self {
            FittedModel::Gamma(d) => alloc::vec![d.params().beta, d.params().b],
            FittedModel::GammaBessel(d) => alloc::vec![d.params().beta, d.params().b, d.params().delta],
            FittedModel::QGammaBessel(d) => {
                let p = d.params();
                alloc::vec![p.base.beta, p.base.b, p.base.delta, p.q]
            }
            FittedModel::Superstat(d) => {
                let p = d.params();
                alloc::vec![p.gamma, p.rho, p.delta, p.lambda, p.eta]
            }
        }
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        match self {
            FittedModel::Gamma(d) | FittedModel::GammaBessel(d) => d.ln_pdf(x),
            FittedModel::QGammaBessel(d) => {
                let v = d.ln_pdf(x);
                if v.is_nan() { f64::NEG_INFINITY } else { v }
            }
            FittedModel::Superstat(d) => d.ln_pdf(x),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match self {
            FittedModel::Gamma(d) | FittedModel::GammaBessel(d) => d.pdf(x),
            FittedModel::QGammaBessel(d) => d.pdf(x),
            FittedModel::Superstat(d) => d.pdf(x),
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        match self {
            FittedModel::Gamma(d) | FittedModel::GammaBessel(d) => d.cdf(x),
            FittedModel::QGammaBessel(d) => d.cdf(x),
            FittedModel::Superstat(d) => d.cdf(x),
        }
    }

    /// CDF at ascending points. Quadrature-based models integrate only
    /// between consecutive points.
    pub fn cdf_sorted(&self, xs: &[f64]) -> Result<Vec<f64>> {
        let direct = match self {
            FittedModel::Gamma(d) | FittedModel::GammaBessel(d) => d.params().delta >= 0.0,
            _ => false,
        };
        if direct {
            return xs.iter().map(|&x| self.cdf(x)).collect();
        }
        let quad = Quadrature::new(1e-10, 1e-15);
        let mut out = Vec::with_capacity(xs.len());
        let mut prev = 0.0;
        let mut acc = 0.0;
        for &x in xs {
            if x < prev {
                return Err(Error::domain("cdf_sorted needs ascending points"));
            }
            if x > prev {
                if acc == 0.0 {
                    acc = self.cdf(x)?;
                } else {
                    acc += quad.integrate(|t| self.pdf(t), prev, x)?.value;
                }
                prev = x;
            }
            out.push(acc.clamp(0.0, 1.0));
        }
        Ok(out)
    }
}

/// Fitting controls. `fixed` pins named parameters at given values.
#[derive(Debug, Clone, PartialEq)]
pub struct FitOptions {
    pub init: Option<Vec<f64>>,
    pub fixed: Vec<(String, f64)>,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            init: None,
            fixed: Vec::new(),
            tol: 1e-9,
            max_iter: 20_000,
        }
    }
}

impl FitOptions {
    pub fn fix(mut self, name: &str, value: f64) -> Self {
        self.fixed.push((name.into(), value));
        self
    }

    pub fn with_init(mut self, init: Vec<f64>) -> Self {
        self.init = Some(init);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub model: Model,
    pub params: Vec<(&'static str, f64)>,
    pub log_likelihood: f64,
    pub ks_statistic: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl FitReport {
    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn values(&self) -> Vec<f64> {
        self.params.iter().map(|(_, v)| *v).collect()
    }

    pub fn fitted(&self) -> Result<FittedModel> {
        FittedModel::new(self.model, &self.values())
    }
}

/// Largest prior shape the superstatistics search may visit. As `η, λ → ∞`
/// with `η/λ` fixed the model tends to the gamma Bessel one, and the terms
/// `η ln λ`, `ln Γ(η)`, `ln K_ν` cancel to the point where the density is
/// only accurate to `~1e−16·η ln λ`.
const SUPERSTAT_ETA_MAX: f64 = 1e4;

/// Log-likelihood without the δ < 0 validity scans, for use inside the search.
fn quick_log_likelihood(model: Model, p: &[f64], xs: &[f64]) -> f64 {
    let total: f64 = match model {
        Model::Gamma | Model::GammaBessel => {
            let delta = if model == Model::Gamma { 0.0 } else { p[2] };
            match GammaBesselParams::new(p[0], p[1], delta) {
                Ok(g) => xs.iter().map(|&x| g.ln_pdf_unchecked(x)).sum(),
                Err(_) => f64::NAN,
            }
        }
        Model::QGammaBessel => {
            let d = GammaBesselParams::new(p[0], p[1], p[2])
                .and_then(|b| QGammaBesselParams::new(b, p[3]))
                .and_then(QGammaBessel::new_unchecked);
            match d {
                Ok(d) => xs.iter().map(|&x| d.ln_pdf(x)).sum(),
                Err(_) => f64::NAN,
            }
        }
        Model::Superstat if p[4] > SUPERSTAT_ETA_MAX => f64::NAN,
        Model::Superstat => match SuperstatParams::new(p[0], p[1], p[2], p[3], p[4]).and_then(Superstat::new) {
            Ok(d) => xs.iter().map(|&x| d.ln_pdf(x)).sum(),
            Err(_) => f64::NAN,
        },
    };
    if total.is_nan() { f64::NEG_INFINITY } else { total }
}

fn moment_gamma(data: &Dataset) -> Result<(f64, f64)> {
    let (m, v) = (data.mean(), data.variance());
    if !(v > 0.0) {
        return Err(Error::DegenerateData("zero sample variance".into()));
    }
    Ok((m * m / v, m / v))
}

/// Default starting point for `model`, honoring fixed values.
fn default_init(model: Model, data: &Dataset, fixed: &[Option<f64>]) -> Result<Vec<f64>> {
    let gamma_fixed = [fixed[0], fixed[1]];
    let gamma_start = |data: &Dataset| -> Result<(f64, f64)> {
        let (b0, r0) = moment_gamma(data)?;
        let start = [gamma_fixed[0].unwrap_or(b0), gamma_fixed[1].unwrap_or(r0)];
        let fit = optimize(Model::Gamma, data, &start, &gamma_fixed, false, &FitOptions::default())?;
        Ok((fit.0[0], fit.0[1]))
    };
    Ok(match model {
        Model::Gamma => {
            let (b0, r0) = moment_gamma(data)?;
            alloc::vec![b0, r0]
        }
        Model::GammaBessel => {
            let (b, r) = gamma_start(data)?;
            alloc::vec![b, r, 0.0]
        }
        Model::QGammaBessel => {
            let (b, r) = gamma_start(data)?;
            let gap = (0.1f64).min(1.0 / (10.0 * r * data.max()));
            alloc::vec![b, r, 0.0, 1.0 - gap]
        }
        Model::Superstat => {
            let (g, _) = moment_gamma(data)?;
            let eta = 10.0;
            alloc::vec![g, 1.0, 0.0, data.mean() * (eta - 1.0) / g, eta]
        }
    })
}

/// Nelder–Mead over the free coordinates. Returns the parameter vector,
/// the maximized log-likelihood and the simplex outcome.
fn optimize(
    model: Model,
    data: &Dataset,
    start: &[f64],
    fixed: &[Option<f64>],
    restricted: bool,
    opts: &FitOptions,
) -> Result<(Vec<f64>, f64, bool, usize)> {
    let transforms = model.transforms(restricted);
    let free: Vec<usize> = (0..start.len()).filter(|&i| fixed[i].is_none()).collect();
    let assemble = |theta: &[f64]| -> Vec<f64> {
        let mut p: Vec<f64> = (0..start.len()).map(|i| fixed[i].unwrap_or(start[i])).collect();
        for (k, &i) in free.iter().enumerate() {
            p[i] = transforms[i].forward(theta[k]);
        }
        p
    };
    let xs = data.values();
    if free.is_empty() {
        let p = assemble(&[]);
        let ll = quick_log_likelihood(model, &p, xs);
        return Ok((p, ll, true, 0));
    }
    let theta0 = free
        .iter()
        .map(|&i| transforms[i].inverse(start[i]))
        .collect::<Result<Vec<f64>>>()?;
    let scale = (start[0] * start[1]).abs().max(1e-8);
    let steps = free
        .iter()
        .map(|&i| match transforms[i] {
            Transform::Log => 0.1,
            Transform::Identity => 0.1 * scale,
            Transform::Square => (0.1 * scale).sqrt(),
            Transform::QBelowOne => 0.5,
        })
        .collect();
    let simplex = Simplex::new(0.1, opts.tol, opts.max_iter).with_steps(steps);
    let r = simplex.minimize(|theta| -quick_log_likelihood(model, &assemble(theta), xs), &theta0)?;
    Ok((assemble(&r.argmin), -r.objective_value, r.converged, r.iterations))
}

/// Maximum-likelihood fit of `model` to positive data.
///
/// Positive parameters are searched on a log scale and `δ` on the real line
/// (squared for superstatistics). If a negative `δ` fails the validity scan
/// the search restarts from `δ = 0` with `δ ≥ 0` enforced. The default start
/// for the gamma Bessel family is the gamma fit with `δ = 0`, so its
/// likelihood never falls below the gamma one. The superstatistics search
/// keeps `η ≤ 1e4`.
pub fn fit_mle(data: &Dataset, model: Model, opts: &FitOptions) -> Result<FitReport> {
    if data.n() < 2 {
        return Err(Error::DegenerateData("at least two observations are needed".into()));
    }
    if data.min() <= 0.0 {
        return Err(Error::domain("fitting needs strictly positive observations"));
    }
    let names = model.param_names();
    let mut fixed = alloc::vec![None; names.len()];
    for (name, value) in &opts.fixed {
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::params(alloc::format!("{model} has no parameter '{name}'")))?;
        fixed[i] = Some(*value);
    }
    let start = match &opts.init {
        Some(v) if v.len() == names.len() => v.clone(),
        Some(v) => {
            return Err(Error::params(alloc::format!(
                "{model} init needs {} values, got {}",
                names.len(),
                v.len()
            )))
        }
        None => default_init(model, data, &fixed)?,
    };
    let start: Vec<f64> = (0..names.len()).map(|i| fixed[i].unwrap_or(start[i])).collect();

    let (mut params, mut ll, mut converged, mut iterations) = optimize(model, data, &start, &fixed, false, opts)?;
    let fitted = match FittedModel::new(model, &params) {
        Ok(f) => f,
        Err(Error::InvalidParams(_)) if matches!(model, Model::GammaBessel | Model::QGammaBessel) && fixed[2].is_none() => {
            let mut s = start.clone();
            s[2] = 0.0;
            let r = optimize(model, data, &s, &fixed, true, opts)?;
            (params, ll, converged) = (r.0, r.1, r.2);
            iterations += r.3;
            FittedModel::new(model, &params)?
        }
        Err(e) => return Err(e),
    };
    let cdf = fitted.cdf_sorted(data.values())?;
    let ks = ks_statistic_from_cdf_values(&cdf)?;
    Ok(FitReport {
        model,
        params: names.iter().copied().zip(params).collect(),
        log_likelihood: ll,
        ks_statistic: ks,
        converged,
        iterations,
    })
}
