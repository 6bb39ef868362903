use quasidom::domination::{CertificateError, LpError, SolveError};
use quasidom::enumerate::EnumerateError;
use quasidom::families::FamilyError;
use quasidom::verify::VerifyError;
use std::fmt;
use std::io;

/// Exit status: 1 refuted claim, 2 bad input, 3 limit exceeded.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    Refuted(usize),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Refuted(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Limit(msg) => write!(f, "limit exceeded: {msg}"),
            CliError::Refuted(n) => write!(f, "{n} claim(s) refuted"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::TimeLimit { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Solve(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Solve(s) => s.into(),
            other => CliError::Limit(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Solve(s) => s.into(),
            VerifyError::Enumerate(s) => s.into(),
            VerifyError::Family(s) => s.into(),
            VerifyError::Limit { .. } => CliError::Limit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CertificateError> for CliError {
    fn from(e: CertificateError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LpError> for CliError {
    fn from(e: LpError) -> Self {
        CliError::Input(e.to_string())
    }
}
