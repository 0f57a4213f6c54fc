//! Support library for the `stabgap` binary: configuration loading, artifact
//! serialization, and the command implementations. Kept as a library so the
//! integration tests can reuse the exact parsers the binary writes for.

pub mod artifacts;
pub mod commands;
pub mod config;

use stabgap::Error;

/// A command failure carrying the process exit code.
///
/// The classes mirror the library's error taxonomy: `Check` is a verification
/// that ran to completion and came out negative, `Config` is anything wrong
/// with the inputs, `Resource` a refused allocation, `Numerical` a
/// computation that lost its guarantees.
#[derive(Debug)]
pub enum Failure {
    Check(String),
    Config(String),
    Resource(String),
    Numerical(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Config(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Numerical(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Check(m)
            | Failure::Config(m)
            | Failure::Resource(m)
            | Failure::Numerical(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::DimensionMismatch(_)
            | Error::InvalidParameter(_)
            | Error::InvalidCode(_) => Failure::Config(e.to_string()),
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            Error::Numerical(_) => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Resource(format!("i/o: {e}"))
    }
}
