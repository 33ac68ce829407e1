use seaweed::spectrum::SpectrumError;
use seaweed::typesym::{SeaweedType, TypeError};
use seaweed::verify::VerifyError;
use seaweed::winding::{UnknownMove, WindingError};
use serde_json::json;
use thiserror::Error;

use crate::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("{0} is not Frobenius")]
    NotFrobenius(SeaweedType),
    #[error(transparent)]
    Winding(#[from] WindingError),
    #[error(transparent)]
    Move(#[from] UnknownMove),
    #[error(transparent)]
    Spectrum(SpectrumError),
    #[error("{0}")]
    Io(String),
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::NotFrobenius(t) => CliError::NotFrobenius(t),
            other => CliError::Spectrum(other),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::NotFrobenius(t) => CliError::NotFrobenius(t),
            VerifyError::Winding(w) => CliError::Winding(w),
            VerifyError::EmptySpectrum => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Type(_) => "parse",
            CliError::NotFrobenius(_) => "not_frobenius",
            CliError::Winding(_) => "winding",
            CliError::Move(_) => "unknown_move",
            CliError::Spectrum(_) => "spectrum",
            CliError::Io(_) => "io",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NotFrobenius(_) => 2,
            _ => 1,
        }
    }

    /// One line on standard error: a JSON object in json mode, plain text
    /// otherwise.
    pub fn report(&self, format: Format) {
        let message = self.to_string();
        if format == Format::Json {
            eprintln!("{}", json!({"error": {"kind": self.kind(), "message": message}}));
        } else {
            eprintln!("error: {}", message.replace('\n', " "));
        }
    }
}
