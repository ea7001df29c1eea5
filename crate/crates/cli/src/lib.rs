//! Command-line front end for `uedetect-core`: code files, CSV curves and
//! plain-text reports.

pub mod codefile;
pub mod commands;
pub mod curve;
pub mod error;
pub mod report;

pub use codefile::{CodeFile, ParseError};
pub use commands::{run, Cli, Outcome};
pub use error::{CliError, Status};
