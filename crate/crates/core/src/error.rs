//! Error types shared across the solver.

use std::path::PathBuf;

/// Global cell (or face) location attached to state errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    /// Set when the error arose at a face flux rather than a cell update.
    pub face_axis: Option<crate::mesh::Axis>,
}

impl Location {
    pub fn cell(i: i64, j: i64, k: i64) -> Self {
        Location { i, j, k, face_axis: None }
    }

    pub fn face(i: i64, j: i64, k: i64, axis: crate::mesh::Axis) -> Self {
        Location { i, j, k, face_axis: Some(axis) }
    }
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.face_axis {
            Some(ax) => write!(f, "{:?}-face ({}, {}, {})", ax, self.i, self.j, self.k),
            None => write!(f, "cell ({}, {}, {})", self.i, self.j, self.k),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("invalid state at {location}: {reason}")]
    InvalidState { reason: String, location: Location },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("transport failure (worker {from} -> {to}): {reason}")]
    Transport { from: usize, to: usize, reason: String },

    #[error("step {step} failed at t = {time}: {reason}")]
    StepFailure {
        step: u64,
        time: f64,
        reason: String,
        /// Diagnostic checkpoint written before aborting, when possible.
        snapshot: Option<PathBuf>,
    },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, SolverError>;
