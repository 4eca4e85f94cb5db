// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kratzer_core::Error),

    #[error("cannot read {path}: {source}")]
    Input {
        path: String,
        source: std::io::Error,
    },

    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),

    #[error("verification failed")]
    VerificationFailed,
}

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use kratzer_core::Error as E;
        match self {
            Self::Core(E::Usage(_) | E::Parse { .. } | E::Unit { .. }) | Self::Input { .. } => {
                EXIT_USAGE
            }
            Self::Core(E::Domain(_) | E::Range { .. } | E::BoxTooSmall { .. }) => EXIT_DOMAIN,
            _ => EXIT_VERIFY,
        }
    }
}
