//! Command execution. Every command produces one artifact as text.

use crate::args::{Cli, Command, Format, Integrand, ModelArgs};
use crate::error::{CliError, CliResult};
use crate::ingest::ingest_csv;
use crate::models::{Evaluator, ModelId};
use crate::table::{fmt_full, CurveTable, Grid};
use pathstat_core::distributions::{gb_validate, GammaBesselParams};
use pathstat_core::inference::{
    asymptotic_critical_value, compare_models, fit_mle, histogram, ks_statistic_from_cdf_values, Dataset, FitOptions,
    FitReport, FittedModel, Model,
};
use pathstat_core::numerics::RandomStream;
use pathstat_core::pathway::pathway_integral;
use serde_json::{json, Map, Value};
use std::time::{SystemTime, UNIX_EPOCH};

pub const SCHEMA_VERSION: u32 = 1;

/// Output of one command before it is written out.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub text: String,
    /// Extra files, e.g. the curve table of `compare --curves`.
    pub side_files: Vec<(std::path::PathBuf, String)>,
}

pub fn execute(cli: &Cli) -> CliResult<Artifact> {
    let g = &cli.global;
    let mut side_files = Vec::new();
    let report = |fields: Value| -> CliResult<String> { render_report(cli.command.name(), fields, g.deterministic, g.format) };
    let text = match &cli.command {
        Command::Fit { input, model, fix, init } => {
            let model = model.fittable()?;
            let (data, prov) = ingest_csv(&input.input, &input.options())?;
            let mut opts = FitOptions::default();
            if let Some(fix) = fix {
                fix.check_names(ModelId::Fit(model))?;
                for (n, v) in &fix.0 {
                    opts = opts.fix(n, *v);
                }
            }
            if let Some(init) = init {
                opts = opts.with_init(init.ordered(ModelId::Fit(model))?);
            }
            let r = fit_mle(&data, model, &opts)?;
            let mut fields = fit_json(&r);
            fields["n"] = json!(data.n());
            fields["ks_critical_value_5pct"] = json!(asymptotic_critical_value(data.n(), 0.05)?);
            fields["data"] = json!(prov);
            report(fields)?
        }
        Command::Compare {
            input,
            models,
            curves,
            bins,
        } => {
            let models: Vec<Model> = models.iter().map(|m| m.fittable()).collect::<CliResult<_>>()?;
            if models.len() < 2 {
                return Err(CliError::Usage("compare needs at least two models".into()));
            }
            let (data, prov) = ingest_csv(&input.input, &input.options())?;
            let cmp = compare_models(&data, &models)?;
            let mut fits = Vec::new();
            for (i, e) in cmp.entries.iter().enumerate() {
                let entry = match &e.outcome {
                    Ok(r) => {
                        let mut v = fit_json(r);
                        v["status"] = json!("ok");
                        v["rank"] = json!(cmp.ranking.iter().position(|&k| k == i).map(|p| p + 1));
                        v
                    }
                    Err(err) => {
                        let err = CliError::from(err.clone());
                        json!({"model": e.model.name(), "status": "error", "error": {"kind": err.kind(), "message": err.to_string()}})
                    }
                };
                fits.push(entry);
            }
            if let Some(path) = curves {
                side_files.push((path.clone(), comparison_curves(&data, &cmp.entries, *bins)?.to_csv()?));
            }
            let ranking: Vec<&str> = cmp.ranking.iter().map(|&i| cmp.entries[i].model.name()).collect();
            report(json!({
                "n": data.n(),
                "ks_critical_value_5pct": asymptotic_critical_value(data.n(), 0.05)?,
                "ranking": ranking,
                "fits": fits,
                "data": prov,
            }))?
        }
        Command::Ks { input, model } => {
            let eval = Evaluator::build(model.model, &model.params, false)?;
            let (data, prov) = ingest_csv(&input.input, &input.options())?;
            let d = ks_against(&eval, &data)?;
            report(json!({
                "model": model.model.name(),
                "params": params_json(model),
                "n": data.n(),
                "ks_statistic": d,
                "ks_critical_value_5pct": asymptotic_critical_value(data.n(), 0.05)?,
                "data": prov,
            }))?
        }
        Command::Pdf {
            model,
            grid,
            kernel_only,
        } => {
            let eval = Evaluator::build(model.model, &model.params, *kernel_only)?;
            let column = if *kernel_only { "kernel" } else { "pdf" };
            curve(cli, model, grid, column, |x| eval.pdf(x))?
        }
        Command::Cdf { model, grid } => {
            let eval = Evaluator::build(model.model, &model.params, false)?;
            curve(cli, model, grid, "cdf", |x| eval.cdf(x))?
        }
        Command::Sample { model, n } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let eval = Evaluator::build(model.model, &model.params, false)?;
            let values = eval.sample(*n, &mut RandomStream::new(g.seed))?;
            match g.format {
                Some(Format::Json) => report(json!({
                    "model": model.model.name(),
                    "params": params_json(model),
                    "seed": g.seed,
                    "n": n,
                    "values": values,
                }))?,
                _ => {
                    let ps: Vec<String> = model
                        .model
                        .param_names()
                        .iter()
                        .zip(model.params.ordered(model.model)?)
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    let mut s = format!("# seed={}\n# model={} {}\n# n={n}\n", g.seed, model.model, ps.join(" "));
                    for v in values {
                        s.push_str(&fmt_full(v));
                        s.push('\n');
                    }
                    s
                }
            }
        }
        Command::PathwayInt {
            integrand,
            c,
            eta,
            q,
            a,
            x,
        } => {
            let c = *c;
            let f = move |t: f64| match integrand {
                Integrand::Const => c,
                Integrand::Power => t.powf(c),
                Integrand::Exp => (-c * t).exp(),
            };
            let r = pathway_integral(f, *eta, *q, *a, *x).map_err(param_or_numeric)?;
            let kind = match integrand {
                Integrand::Const => "const",
                Integrand::Power => "power",
                Integrand::Exp => "exp",
            };
            report(json!({
                "integrand": {"kind": kind, "c": c},
                "eta": eta,
                "q": q,
                "a": a,
                "x": x,
                "value": r.value,
                "abs_error_estimate": r.abs_error_estimate,
                "evaluations": r.evaluations,
            }))?
        }
        Command::Validate { params } => {
            let v = params.ordered(ModelId::Fit(Model::GammaBessel))?;
            let p = GammaBesselParams::new(v[0], v[1], v[2]).map_err(CliError::Params)?;
            let r = gb_validate(&p);
            report(json!({
                "params": {"beta": p.beta, "b": p.b, "delta": p.delta},
                "valid": r.valid,
                "first_negative": r.first_negative,
                "min_value": r.min_value,
                "scan_lower": r.scan_lower,
                "scan_upper": r.scan_upper,
                "points": r.points,
            }))?
        }
    };
    Ok(Artifact { text, side_files })
}

/// Argument-domain failures of a direct evaluation are usage errors.
fn param_or_numeric(e: pathstat_core::Error) -> CliError {
    if e.is_numeric() {
        CliError::Core(e)
    } else {
        CliError::Params(e)
    }
}

fn fit_json(r: &FitReport) -> Value {
    let params: Map<String, Value> = r.params.iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
    json!({
        "model": r.model.name(),
        "params": params,
        "log_likelihood": r.log_likelihood,
        "ks_statistic": r.ks_statistic,
        "converged": r.converged,
        "iterations": r.iterations,
    })
}

fn params_json(m: &ModelArgs) -> Value {
    let map: Map<String, Value> = m.params.0.iter().map(|(n, v)| (n.clone(), json!(v))).collect();
    Value::Object(map)
}

fn ks_against(eval: &Evaluator, data: &Dataset) -> CliResult<f64> {
    let cdf: Vec<f64> = match eval {
        Evaluator::Fitted(m) => m.cdf_sorted(data.values())?,
        _ => data.values().iter().map(|&x| eval.cdf(x)).collect::<CliResult<_>>()?,
    };
    Ok(ks_statistic_from_cdf_values(&cdf)?)
}

fn curve(cli: &Cli, model: &ModelArgs, grid: &Grid, column: &str, f: impl Fn(f64) -> CliResult<f64>) -> CliResult<String> {
    let xs = grid.values();
    let ys = xs.iter().map(|&x| f(x)).collect::<CliResult<Vec<f64>>>()?;
    let mut table = CurveTable::new("x", xs)?;
    table.push(column, ys)?;
    match cli.global.format {
        Some(Format::Json) => render_report(
            cli.command.name(),
            json!({
                "model": model.model.name(),
                "params": params_json(model),
                "columns": table.to_json(),
            }),
            cli.global.deterministic,
            Some(Format::Json),
        ),
        _ => table.to_csv(),
    }
}

/// Histogram densities at bin centres with each successful fit's pdf.
fn comparison_curves(
    data: &Dataset,
    entries: &[pathstat_core::inference::ComparisonEntry],
    bins: Option<usize>,
) -> CliResult<CurveTable> {
    if bins == Some(0) {
        return Err(CliError::Usage("--bins must be at least 1".into()));
    }
    let h = histogram(data, bins, None)?.density_scaled();
    let centers = h.centers();
    let mut table = CurveTable::new("x", centers.clone())?;
    table.push("histogram_density", h.densities())?;
    for e in entries {
        if let Ok(r) = &e.outcome {
            let m = FittedModel::new(r.model, &r.values())?;
            table.push(&format!("{}_pdf", r.model.name()), centers.iter().map(|&x| m.pdf(x)).collect())?;
        }
    }
    Ok(table)
}

/// Wraps command fields in the report envelope and renders it.
fn render_report(command: &str, fields: Value, deterministic: bool, format: Option<Format>) -> CliResult<String> {
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!(command));
    if !deterministic {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        out.insert("generated_unix_seconds".into(), json!(now));
    }
    if let Value::Object(m) = fields {
        out.extend(m);
    }
    let value = Value::Object(out);
    match format {
        Some(Format::Csv) => flat_csv(&value),
        _ => Ok(serde_json::to_string_pretty(&value)? + "\n"),
    }
}

/// `key,value` rows with dotted paths, for reports requested as CSV.
fn flat_csv(v: &Value) -> CliResult<String> {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| walk(&join(k), x, rows)),
            Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| walk(&join(&i.to_string()), x, rows)),
            Value::String(s) => rows.push((prefix.into(), s.clone())),
            Value::Null => rows.push((prefix.into(), String::new())),
            other => rows.push((prefix.into(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["key", "value"])?;
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Data(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

