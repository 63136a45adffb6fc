//! Model identifiers and named parameter lists given on the command line.

use crate::error::{CliError, CliResult};
use pathstat_core::distributions::{GammaBesselParams, GenLaplace, GenLaplaceParams, QGammaBessel, QGammaBesselParams};
use pathstat_core::inference::{FittedModel, Model};
use pathstat_core::numerics::RandomStream;
use std::fmt;
use std::str::FromStr;

/// Parameter names of the generalized Laplacian difference model `x − y`.
pub const GLAP_PARAMS: [&str; 6] = ["beta_x", "b_x", "delta_x", "beta_y", "b_y", "delta_y"];

/// Every model the CLI can evaluate: the fittable ones plus the difference model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelId {
    Fit(Model),
    Glap,
}

impl ModelId {
    pub fn name(self) -> &'static str {
        match self {
            ModelId::Fit(m) => m.name(),
            ModelId::Glap => "glap",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            ModelId::Fit(m) => m.param_names(),
            ModelId::Glap => &GLAP_PARAMS,
        }
    }

    pub fn fittable(self) -> CliResult<Model> {
        match self {
            ModelId::Fit(m) => Ok(m),
            ModelId::Glap => Err(CliError::Usage("glap has support on the whole line and cannot be fitted".into())),
        }
    }
}

impl FromStr for ModelId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "glap" {
            return Ok(ModelId::Glap);
        }
        s.parse::<Model>().map(ModelId::Fit).map_err(|_| {
            let names: Vec<&str> = Model::ALL.iter().map(|m| m.name()).chain(["glap"]).collect();
            format!("unknown model '{s}', expected one of {}", names.join(", "))
        })
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `name=value` pairs separated by commas, in the order given.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParamList(pub Vec<(String, f64)>);

impl FromStr for ParamList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out: Vec<(String, f64)> = Vec::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (name, value) = item.split_once('=').ok_or_else(|| format!("'{item}' is not name=value"))?;
            let name = name.trim();
            let value: f64 = value.trim().parse().map_err(|_| format!("'{value}' is not a number"))?;
            if out.iter().any(|(n, _)| n == name) {
                return Err(format!("parameter '{name}' given twice"));
            }
            out.push((name.to_string(), value));
        }
        Ok(ParamList(out))
    }
}

impl ParamList {
    /// Rejects names the model does not have.
    pub fn check_names(&self, model: ModelId) -> CliResult<()> {
        let names = model.param_names();
        match self.0.iter().find(|(n, _)| !names.contains(&n.as_str())) {
            Some((n, _)) => Err(CliError::Usage(format!(
                "{model} has no parameter '{n}' (parameters: {})",
                names.join(", ")
            ))),
            None => Ok(()),
        }
    }

    /// Values in the model's canonical order; every parameter must be present.
    pub fn ordered(&self, model: ModelId) -> CliResult<Vec<f64>> {
        self.check_names(model)?;
        let names = model.param_names();
        let missing: Vec<&str> = names.iter().copied().filter(|n| !self.0.iter().any(|(m, _)| m == n)).collect();
        if !missing.is_empty() {
            return Err(CliError::Usage(format!("{model} needs parameters: {}", missing.join(", "))));
        }
        Ok(names
            .iter()
            .map(|n| self.0.iter().find(|(m, _)| m == n).map(|(_, v)| *v).unwrap())
            .collect())
    }
}

/// A fully constructed model ready for evaluation.
#[derive(Debug, Clone)]
pub enum Evaluator {
    Fitted(FittedModel),
    /// Unnormalized q-analogue kernel.
    Kernel(QGammaBessel),
    Glap(GenLaplace),
}

impl Evaluator {
    pub fn build(model: ModelId, params: &ParamList, kernel_only: bool) -> CliResult<Self> {
        let v = params.ordered(model)?;
        match model {
            ModelId::Fit(Model::QGammaBessel) if kernel_only => {
                let base = GammaBesselParams::new(v[0], v[1], v[2]).map_err(CliError::Params)?;
                let p = QGammaBesselParams::new(base, v[3]).map_err(CliError::Params)?;
                Ok(Evaluator::Kernel(QGammaBessel::kernel_only(p).map_err(CliError::Params)?))
            }
            _ if kernel_only => Err(CliError::Usage("--kernel-only applies to the qgb model only".into())),
            ModelId::Fit(m) => Ok(Evaluator::Fitted(FittedModel::new(m, &v).map_err(param_error)?)),
            ModelId::Glap => {
                let x = GammaBesselParams::new(v[0], v[1], v[2]).map_err(CliError::Params)?;
                let y = GammaBesselParams::new(v[3], v[4], v[5]).map_err(CliError::Params)?;
                let g = GenLaplace::new(GenLaplaceParams { left: y, right: x }).map_err(param_error)?;
                Ok(Evaluator::Glap(g))
            }
        }
    }

    pub fn pdf(&self, x: f64) -> CliResult<f64> {
        Ok(match self {
            Evaluator::Fitted(m) => m.pdf(x),
            Evaluator::Kernel(k) => k.pdf(x),
            Evaluator::Glap(g) => g.pdf(x)?,
        })
    }

    pub fn cdf(&self, x: f64) -> CliResult<f64> {
        match self {
            Evaluator::Fitted(m) => Ok(m.cdf(x)?),
            Evaluator::Kernel(_) => Err(CliError::Usage("an unnormalized kernel has no cdf".into())),
            Evaluator::Glap(g) => Ok(g.cdf(x)?),
        }
    }

    pub fn sample(&self, n: usize, rng: &mut RandomStream) -> CliResult<Vec<f64>> {
        match self {
            Evaluator::Fitted(FittedModel::Gamma(d) | FittedModel::GammaBessel(d)) => Ok(d.sample(n, rng)?),
            Evaluator::Glap(g) => Ok(g.sample(n, rng)?),
            _ => Err(CliError::Usage("sampling supports gamma, gamma_bessel and glap".into())),
        }
    }
}

/// Parameter-construction failures are usage errors; numeric ones (for
/// example a non-normalizable q-analogue) keep their numeric status.
fn param_error(e: pathstat_core::Error) -> CliError {
    if e.is_numeric() {
        CliError::Core(e)
    } else {
        CliError::Params(e)
    }
}
