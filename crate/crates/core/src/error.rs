use thiserror::Error;

use crate::qmatrix::Level;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QgrError {
    #[error("cannot specialize at q = 0")]
    ZeroSpecialization,
    #[error("row {row} has the wrong length (expected {expected})")]
    RaggedMatrix { row: usize, expected: usize },
    #[error("matrix index ({row}, {col}) outside {rows}x{cols}")]
    MatrixIndex {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid level ({m},{n}): m must be at least 1")]
    InvalidLevel { m: i32, n: i32 },
    #[error("generator a[{row},{col}] is outside level {level}")]
    IndexOutOfRange { row: i32, col: i32, level: Level },
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: Level, right: Level },
    #[error("level {from} does not dominate {to}")]
    NotDominating { from: Level, to: Level },
    #[error("invalid minor: {0}")]
    InvalidMinor(String),
    #[error("invalid Maya diagram: {0}")]
    InvalidMaya(String),
    #[error("level {level} does not dominate the element")]
    LevelTooSmall { level: Level },
    #[error("tower slice at {level} is unavailable")]
    SliceUnavailable { level: Level },
}
