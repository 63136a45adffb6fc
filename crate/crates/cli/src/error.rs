use serde_json::json;
use std::path::PathBuf;

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("line {line}: cannot parse {content:?}: {reason}")]
    Parse { line: u64, content: String, reason: String },

    #[error("{0}")]
    Data(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Core(pathstat_core::Error),

    /// A core error raised while building a model from user parameters.
    #[error("{0}")]
    Params(pathstat_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Params(_) => EXIT_USAGE,
            CliError::FileNotFound(_) | CliError::Parse { .. } | CliError::Data(_) | CliError::Io(_) => EXIT_DATA,
            CliError::Core(e) if e.is_numeric() => EXIT_NUMERIC,
            CliError::Core(_) => EXIT_DATA,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::FileNotFound(_) => "file_not_found",
            CliError::Parse { .. } => "parse_error",
            CliError::Data(_) => "data",
            CliError::Io(_) => "io",
            CliError::Params(_) => "invalid_parameters",
            CliError::Core(e) if e.is_numeric() => "numeric",
            CliError::Core(_) => "data",
        }
    }

    /// The single-line JSON object written to stderr.
    pub fn to_json(&self) -> String {
        let mut err = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Parse { line, content, .. } = self {
            err["line"] = json!(line);
            err["content"] = json!(content);
        }
        json!({ "error": err }).to_string()
    }
}

impl From<pathstat_core::Error> for CliError {
    fn from(e: pathstat_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
