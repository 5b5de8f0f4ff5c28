use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the workbench reports. The variants map one-to-one onto
/// the CLI exit codes (see [`Error::exit_code`]).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Malformed group or graph description.
    #[error("configuration error: {0}")]
    Config(String),

    /// Arguments that violate an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),

    /// A ball, memo or support grew past the configured element cap.
    #[error("capacity exceeded: {detail}")]
    Capacity {
        /// The first radius at which the cap was hit, when one applies.
        radius: Option<u32>,
        detail: String,
    },

    /// A vertex triple whose interval intersection is not a singleton,
    /// or a hyperplane class that fails to split the graph in two.
    #[error("median violation at ({}, {}, {}): intersection {{{}}}", triple[0], triple[1], triple[2], intersection.join(", "))]
    MedianViolation {
        triple: [String; 3],
        intersection: Vec<String>,
    },

    /// A numerical or combinatorial check that did not hold.
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub fn capacity_at(radius: u32, detail: impl Into<String>) -> Self {
        Error::Capacity {
            radius: Some(radius),
            detail: detail.into(),
        }
    }

    pub fn capacity(detail: impl Into<String>) -> Self {
        Error::Capacity {
            radius: None,
            detail: detail.into(),
        }
    }

    /// Short machine-readable tag used in one-line CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Config(_) => "config",
            Error::Usage(_) => "usage",
            Error::Capacity { .. } => "capacity",
            Error::MedianViolation { .. } => "median-violation",
            Error::CheckFailed(_) => "check-failed",
        }
    }

    /// 2 usage/config, 3 capacity, 4 failed check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Usage(_) => 2,
            Error::Capacity { .. } => 3,
            Error::MedianViolation { .. } | Error::CheckFailed(_) => 4,
        }
    }
}
