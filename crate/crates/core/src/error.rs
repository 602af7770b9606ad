use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid channel parameters: {0}")]
    InvalidParams(String),

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no pentagons")]
    EmptyUnion,

    #[error("invalid frontier: {0}")]
    InvalidFrontier(String),

    #[error("covariance is not positive semidefinite: {0}")]
    NotPsd(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    check_range(name, value, 0.0, 1.0)
}

pub(crate) fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if value.is_nan() || value < lo || value > hi {
        return Err(Error::OutOfRange { name, value, lo, hi });
    }
    Ok(())
}
