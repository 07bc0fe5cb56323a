use std::path::PathBuf;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("antenna count must be at least 1")]
    NoAntennas,

    #[error("carrier frequency must be positive and finite, got {0}")]
    InvalidFrequency(f64),

    #[error("element index {index} out of range for a {n_antennas}-element array")]
    IndexOutOfRange { index: usize, n_antennas: usize },

    #[error("{what} must be positive and finite, got {value}")]
    NonPositive { what: &'static str, value: f64 },

    #[error("spatial angle {name} = {value} outside the open interval (-1, 1)")]
    AngleOutOfRange { name: &'static str, value: f64 },

    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error on {}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    /// True for failures caused by the environment rather than bad input.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. } | Error::Csv { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_positive(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { what, value })
    }
}

pub(crate) fn check_angle(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value.abs() < 1.0 {
        Ok(value)
    } else {
        Err(Error::AngleOutOfRange { name, value })
    }
}
