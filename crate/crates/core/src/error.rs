use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tolerance not met: achieved error {achieved:e} exceeds requested {requested:e}")]
    ToleranceNotMet { achieved: f64, requested: f64 },

    #[error("non-integrable singularity near x = {at}")]
    NonIntegrableSingularity { at: f64 },

    #[error("series acceleration did not converge (last difference {last_difference:e})")]
    NoConvergence { last_difference: f64 },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("pole at non-positive integer {0}")]
    PoleAtNonPositiveInteger(f64),

    #[error("pole at s = 1")]
    PoleAtOne,

    #[error("pole at s = 0 or s = 1")]
    PoleAtZeroOrOne,

    #[error("s = {re}{im:+}i lies outside the validity strip of this evaluator")]
    OutsideValidityStrip { re: f64, im: f64 },

    #[error("Re(s) = {re} outside the Mellin strip ({lo}, {hi})")]
    OutOfStrip { re: f64, lo: f64, hi: f64 },

    #[error("function vanishes at the origin; cannot normalize to c(0) = 1")]
    ZeroAtOrigin,

    #[error("lambda = {0} makes the Fox equation singular")]
    LambdaUnit(f64),

    #[error("negative time {0}")]
    NegativeTime(f64),

    #[error("path grid does not cover [{lo}, {hi}]")]
    GridCoverage { lo: f64, hi: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("point {point} outside the validity region of claim {claim}")]
    PointOutOfRegion { claim: String, point: String },

    #[error("oracle failure: {0}")]
    OracleFailure(String),
}
