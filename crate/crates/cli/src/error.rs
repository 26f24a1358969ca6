use std::fmt;
use std::path::PathBuf;

use serde_json::json;

#[derive(Debug)]
pub enum CliError {
    Core(ncshuffle_core::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A verification suite ran and found a counterexample.
    Failed(usize),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(..) => "io",
            CliError::Usage(_) => "usage",
            CliError::Failed(_) => "verification_failed",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => f.write_str(m),
            CliError::Failed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

impl From<ncshuffle_core::Error> for CliError {
    fn from(e: ncshuffle_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Core(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;
