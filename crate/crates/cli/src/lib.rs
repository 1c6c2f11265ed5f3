//! Command-line front end for the constacode library.

pub mod commands;
pub mod report;
pub mod spec;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("analysis failed: {0}")]
    Analysis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Construction(_) => exit::CONSTRUCTION,
            CliError::Analysis(_) => exit::INCOMPLETE,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CONSTRUCTION: i32 = 3;
    pub const INCOMPLETE: i32 = 4;
}

/// Text for stdout, optional text for stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: exit::OK }
    }
}
