use thiserror::Error;

use crate::isolator::IsolationResult;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("polynomial is not squarefree (gcd with its derivative is nonconstant)")]
    NotSquarefree,

    /// Bisection hit the depth bound before every subinterval was certified.
    /// Carries everything that was certified up to that point.
    #[error("isolation exceeded max depth {max_depth}")]
    DepthExhausted {
        max_depth: u32,
        partial: Box<IsolationResult>,
    },

    #[error("instance generator gave up after {attempts} attempts")]
    GeneratorExhausted { attempts: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
