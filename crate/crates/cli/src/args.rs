use crate::ingest::{Column, HeaderMode, IngestOptions};
use crate::models::{ModelId, ParamList};
use crate::table::Grid;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "pathstat", version, about = "Fit, compare, tabulate and sample gamma Bessel family models")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Output format; reports default to json, curve tables and samples to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Omit the timestamp from reports.
    #[arg(long, global = true)]
    pub deterministic: bool,

    /// Seed for the random stream.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Comma-delimited input file.
    #[arg(long)]
    pub input: PathBuf,

    /// Column header name or 0-based index.
    #[arg(long, default_value = "0")]
    pub column: Column,

    #[arg(long, value_enum, default_value_t = HeaderMode::Auto)]
    pub header: HeaderMode,

    /// Fail on the first rejected row instead of skipping it.
    #[arg(long)]
    pub strict: bool,
}

impl InputArgs {
    pub fn options(&self) -> IngestOptions {
        IngestOptions {
            column: self.column.clone(),
            header: self.header,
            strict: self.strict,
        }
    }
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// gamma, gamma_bessel, qgb, superstat or glap.
    #[arg(long)]
    pub model: ModelId,

    /// Named parameters, e.g. beta=2,b=1,delta=0.
    #[arg(long, allow_hyphen_values = true)]
    pub params: ParamList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Integrand {
    /// f(t) = c
    Const,
    /// f(t) = t^c
    Power,
    /// f(t) = e^{-ct}
    Exp,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum-likelihood fit of one model.
    Fit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        model: ModelId,
        /// Parameters held fixed, e.g. beta=1.
        #[arg(long, allow_hyphen_values = true)]
        fix: Option<ParamList>,
        /// Starting point; must name every parameter.
        #[arg(long, allow_hyphen_values = true)]
        init: Option<ParamList>,
    },
    /// Fit several models and rank them by KS distance.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', default_value = "gamma,gamma_bessel")]
        models: Vec<ModelId>,
        /// Also write the density histogram and fitted pdfs as a CSV curve table.
        #[arg(long)]
        curves: Option<PathBuf>,
        /// Histogram bins for --curves (default: Sturges).
        #[arg(long)]
        bins: Option<usize>,
    },
    /// KS distance between data and a model with given parameters.
    Ks {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Density on a grid.
    Pdf {
        #[command(flatten)]
        model: ModelArgs,
        /// lo:hi:points
        #[arg(long, allow_hyphen_values = true)]
        grid: Grid,
        /// Evaluate the unnormalized q-analogue kernel.
        #[arg(long)]
        kernel_only: bool,
    },
    /// Distribution function on a grid.
    Cdf {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        grid: Grid,
    },
    /// Seeded draws, one value per line.
    Sample {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
    },
    /// Pathway fractional integral of a built-in integrand.
    PathwayInt {
        #[arg(long = "f", value_enum)]
        integrand: Integrand,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c: f64,
        #[arg(long)]
        eta: f64,
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long)]
        x: f64,
    },
    /// Sign scan of a gamma Bessel density (needed when delta < 0).
    Validate {
        /// beta=..,b=..,delta=..
        #[arg(long, allow_hyphen_values = true)]
        params: ParamList,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Fit { .. } => "fit",
            Command::Compare { .. } => "compare",
            Command::Ks { .. } => "ks",
            Command::Pdf { .. } => "pdf",
            Command::Cdf { .. } => "cdf",
            Command::Sample { .. } => "sample",
            Command::PathwayInt { .. } => "pathway-int",
            Command::Validate { .. } => "validate",
        }
    }
}
