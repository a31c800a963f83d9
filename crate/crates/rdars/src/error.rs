use thiserror::Error;

/// Errors produced by channel generation, the optimizers and the experiment
/// harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate channel: {0}")]
    DegenerateChannel(String),

    #[error("search space too large: {0}")]
    SearchSpaceExceeded(String),

    #[error("QoS constraint infeasible: {0}")]
    InfeasibleQos(String),

    #[error("no feasible configuration found: {0}")]
    InfeasibleInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
