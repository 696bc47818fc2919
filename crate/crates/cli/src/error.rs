use std::fmt;
use std::io;
use std::path::PathBuf;

use latmin::Error;

#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, source: io::Error },
    Core(Error),
}

impl CliError {
    /// One code per error class; 0 and 1 are reserved for success and
    /// verification failure, and clap uses 2 for usage errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Core(e) => match e {
                Error::InvalidParameter(_) => 2,
                Error::Parse(_) | Error::IndexOutOfRange { .. } | Error::DuplicateEdge { .. } => 4,
                Error::Cycle { .. } => 5,
                Error::Size { .. } => 6,
                Error::DimensionMismatch { .. } => 7,
                Error::InfiniteValue { .. } | Error::NonInteger(_) => 8,
                Error::EmptyFamily | Error::NotLattice { .. } | Error::NegativeWeight { .. } => 9,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
