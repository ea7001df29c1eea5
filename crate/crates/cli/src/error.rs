use std::fmt;
use std::process::ExitCode;

use crate::codefile::ParseError;

/// Process exit status. CI scripts rely on these values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// Bad flags, unreadable or invalid code files, enumeration caps.
    Input = 2,
    /// The solver failed to converge.
    Numerical = 3,
    /// A self-check exceeded its tolerance.
    Verification = 4,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s.code())
    }
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            status: Status::Input,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<uedetect_core::Error> for CliError {
    fn from(e: uedetect_core::Error) -> Self {
        let status = match e {
            uedetect_core::Error::Bracket { .. } => Status::Numerical,
            _ => Status::Input,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        Self::input(e.to_string())
    }
}
