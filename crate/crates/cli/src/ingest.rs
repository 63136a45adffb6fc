//! CSV ingestion of a single numeric column.

use crate::error::{CliError, CliResult};
use pathstat_core::inference::Dataset;
use serde::Serialize;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// Column selector: a header name or a 0-based index. A header name wins
/// when a string could be read as both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Column {
    Index(usize),
    Name(String),
}

impl FromStr for Column {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Column::Name(s.to_string()))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Index(i) => write!(f, "{i}"),
            Column::Name(n) => f.write_str(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum HeaderMode {
    /// The first record is a header when any of its fields is not a number.
    #[default]
    Auto,
    Yes,
    No,
}

#[derive(Debug, Clone)]
pub struct IngestOptions {
    pub column: Column,
    pub header: HeaderMode,
    /// Any rejected row becomes a hard error.
    pub strict: bool,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            column: Column::Index(0),
            header: HeaderMode::Auto,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RejectedRow {
    pub line: u64,
    pub content: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub path: String,
    pub column: String,
    pub column_index: usize,
    pub header: bool,
    pub rows_read: usize,
    pub rows_retained: usize,
    pub rejected: Vec<RejectedRow>,
}

fn parse_finite(s: &str) -> Option<f64> {
    s.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Reads one column of a comma-delimited file, one record per line. Lines
/// starting with `#` are comments. Blank lines and rows whose selected cell is empty or not a
/// finite number are rejected with their line number.
pub fn ingest_csv(path: &Path, opts: &IngestOptions) -> CliResult<(Dataset, Provenance)> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(CliError::FileNotFound(path.into())),
        Err(e) => return Err(e.into()),
    };
    let mut rejected = Vec::new();
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        if raw.trim().is_empty() {
            rejected.push(RejectedRow {
                line,
                content: raw.to_string(),
                reason: "blank line".into(),
            });
            continue;
        }
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let rec = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(raw.as_bytes())
            .records()
            .next()
            .transpose()?
            .unwrap_or_default();
        records.push((line, rec));
    }

    let first_is_text = records.first().is_some_and(|(_, r)| r.iter().any(|f| parse_finite(f).is_none()));
    let header = match opts.header {
        HeaderMode::Yes => true,
        HeaderMode::No => false,
        HeaderMode::Auto => first_is_text,
    };
    let names: Vec<String> = match (header, records.first()) {
        (true, Some((_, r))) => r.iter().map(str::to_string).collect(),
        _ => Vec::new(),
    };
    let column_index = match &opts.column {
        Column::Index(i) => *i,
        Column::Name(n) => match names.iter().position(|h| h == n) {
            Some(i) => i,
            None => n
                .parse::<usize>()
                .map_err(|_| CliError::Data(format!("column '{n}' not found in header {names:?}")))?,
        },
    };
    let column = names.get(column_index).cloned().unwrap_or_else(|| column_index.to_string());

    let body = if header { &records[records.len().min(1)..] } else { &records[..] };
    let mut values = Vec::with_capacity(body.len());
    for (line, rec) in body {
        let content = rec.iter().collect::<Vec<_>>().join(",");
        let reason = match rec.get(column_index) {
            None => Some(format!("row has no column {column_index}")),
            Some("") => Some("empty cell".to_string()),
            Some(cell) => match parse_finite(cell) {
                Some(v) => {
                    values.push(v);
                    None
                }
                None => Some(format!("'{cell}' is not a finite number")),
            },
        };
        if let Some(reason) = reason {
            rejected.push(RejectedRow {
                line: *line,
                content,
                reason,
            });
        }
    }
    rejected.sort_by_key(|r| r.line);
    if opts.strict {
        if let Some(r) = rejected.first() {
            return Err(CliError::Parse {
                line: r.line,
                content: r.content.clone(),
                reason: r.reason.clone(),
            });
        }
    }
    let provenance = Provenance {
        path: path.display().to_string(),
        column,
        column_index,
        header,
        rows_read: body.len() + rejected.iter().filter(|r| r.reason == "blank line").count(),
        rows_retained: values.len(),
        rejected,
    };
    let data = Dataset::new(values, provenance.path.clone()).map_err(|e| match e {
        pathstat_core::Error::EmptyDataset => CliError::Data(format!("no numeric values in column '{}'", provenance.column)),
        e => CliError::Core(e),
    })?;
    Ok((data, provenance))
}
