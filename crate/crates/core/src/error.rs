use thiserror::Error;

/// Errors produced by the library. `Parameter` maps to CLI exit code 2,
/// the numerical variants to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("no eigenstate in energy window [{lo}, {hi}]")]
    EmptyWindow { lo: f64, hi: f64 },

    #[error("ensemble members use different grids or disorder kinds")]
    MixedEnsemble,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
