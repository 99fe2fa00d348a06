//! Library half of the `agony` binary: exit-code policy, file formats, and
//! the command bodies, kept out of main.rs so tests can call them directly.

use std::fmt;

pub mod io;
pub mod run;

/// Exit codes: 1 usage, 2 parse, 3 I/O, 4 failed verification. Success is
/// the absence of one of these.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Io(String),
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Io(_) => 3,
            CliError::Verify(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Io(m) | CliError::Verify(m) => {
                f.write_str(m)
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<agony_core::Error> for CliError {
    fn from(err: agony_core::Error) -> Self {
        match err {
            agony_core::Error::Parse { .. } => CliError::Parse(err.to_string()),
            agony_core::Error::Contract(_) => CliError::Verify(err.to_string()),
            agony_core::Error::Budget { .. } => CliError::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}
