// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the model, the solvers and the ingestion layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("unknown unit tag `{tag}` in column {column}")]
    Unit { tag: String, column: &'static str },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("quadrature did not converge: achieved error estimate {achieved:e} > tolerance {tolerance:e}")]
    Quadrature { achieved: f64, tolerance: f64 },

    #[error("range error: {what} is not representable (threshold {threshold})")]
    Range { what: String, threshold: f64 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error(
        "box too small: found {found} bound states below zero, {requested} requested; \
         try r_max >= {suggested_r_max:.3}"
    )]
    BoxTooSmall {
        found: usize,
        requested: usize,
        suggested_r_max: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
