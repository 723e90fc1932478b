use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph order {0} exceeds the dense storage cap of {max}", max = crate::graph::MAX_ORDER)]
    TooLarge(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alpha must lie in [0, 1]")]
    AlphaOutOfRange,

    #[error("matrix is not symmetric: |m[{row}][{col}] - m[{col}][{row}]| = {deviation:e}")]
    NotSymmetric { row: usize, col: usize, deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("part {index} is not regular")]
    NotRegular { index: usize },

    #[error("part {index}: top adjacency eigenvalue {top} differs from degree {degree}")]
    RegularityViolation { index: usize, top: f64, degree: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
