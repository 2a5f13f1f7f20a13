use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("direction rejected: row {row} has a·k = {dot:e} < -1e-9")]
    DirectionRejected { row: usize, dot: f64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no contour: every grid cell is outside the domain")]
    EmptyContour,
    #[error("arithmetic with nu is undefined")]
    NuArithmetic,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "dimension mismatch: expected {expected}, got {got}"
        )))
    }
}
